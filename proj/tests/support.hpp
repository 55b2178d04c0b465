#pragma once

#include <string>
#include <variant>

#include "laytrop/laytrop.hpp"

namespace laytrop::testing {

template <Scalar S>
System<S> load(const std::string& name) {
  return std::get<System<S>>(read_system_file(std::string(LAYTROP_SYSTEMS_DIR) + "/" + name));
}

template <Scalar S>
Vector<S> vec(std::initializer_list<const char*> tokens) {
  Vector<S> v;
  for (const char* t : tokens) v.push_back(parse_token<S>(t));
  return v;
}

inline Vector<Trop> mods(std::initializer_list<const char*> tokens) { return vec<Trop>(tokens); }

/// A scalar that is zero with probability zero_pct/100, otherwise nonzero with
/// magnitude in [lo, hi].
template <Scalar S>
S random_scalar(Rng& rng, std::int64_t lo, std::int64_t hi, unsigned zero_pct) {
  if (rng.chance(zero_pct, 100)) return S::zero();
  return random_nonzero<S>(rng, lo, hi);
}

template <Scalar S>
System<S> random_system(Rng& rng, std::size_t m, std::size_t n, std::int64_t lo, std::int64_t hi, unsigned zero_pct) {
  Matrix<S> a(m, n);
  Vector<S> b(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_scalar<S>(rng, lo, hi, zero_pct);
  for (auto& x : b) x = random_scalar<S>(rng, lo, hi, zero_pct);
  return System<S>(std::move(a), std::move(b));
}

/// Redraws until the system is reduced.
template <Scalar S>
System<S> random_reduced_system(Rng& rng, std::size_t m, std::size_t n, std::int64_t lo, std::int64_t hi,
                                unsigned zero_pct) {
  while (true) {
    auto sys = random_system<S>(rng, m, n, lo, hi, zero_pct);
    if (is_reduced(sys)) return sys;
  }
}

/// A solvable reduced system: b = A ⊗ x for a random x.
template <Scalar S>
System<S> random_consistent_system(Rng& rng, std::size_t m, std::size_t n, std::int64_t lo, std::int64_t hi,
                                   unsigned zero_pct) {
  while (true) {
    auto sys = random_system<S>(rng, m, n, lo, hi, zero_pct);
    Vector<S> x(n);
    for (auto& v : x) v = random_scalar<S>(rng, lo, hi, zero_pct);
    sys.b = sys.a * x;
    if (is_reduced(sys)) return sys;
  }
}

}  // namespace laytrop::testing
