#pragma once

// Seeded draws with a fixed algorithm, so a seed yields the same values on
// every standard library (the std distributions are implementation-defined).

#include <cstdint>
#include <random>
#include <stdexcept>

#include "laytrop/scalar.hpp"

namespace laytrop {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], by rejection on the raw 64-bit output.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return static_cast<std::uint64_t>(uniform(0, den - 1)) < num; }

 private:
  std::mt19937_64 engine_;
};

/// A nonzero scalar with magnitude uniform in [lo, hi] and every nonzero layer
/// equally likely.
template <Scalar S>
S random_nonzero(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const Trop mag(rng.uniform(lo, hi));
  if constexpr (std::same_as<S, Trop>) {
    return mag;
  } else if constexpr (std::same_as<S, Sym>) {
    return Sym(SymLayers::kNonzero[rng.index(SymLayers::kNonzero.size())], mag);
  } else {
    return Sup(SupLayers::kNonzero[rng.index(SupLayers::kNonzero.size())], mag);
  }
}

}  // namespace laytrop
