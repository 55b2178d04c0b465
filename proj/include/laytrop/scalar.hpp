#pragma once

// Exact scalars: the tropical semiring Z_max and its two layered extensions,
// the symmetrized semiring B_s ⋉ Z_max and the supertropical semiring N_2 ⋉ Z_max.
//
// A layered scalar is a (layer, magnitude) pair. Addition keeps the operand of
// larger magnitude and combines layers through the layer semiring when the
// magnitudes tie; multiplication multiplies layers and adds magnitudes.

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>

#include "laytrop/error.hpp"

namespace laytrop {

/// Largest admissible finite magnitude. Keeping magnitudes within half of the
/// int64 range leaves room for the differences taken by the solvers; anything
/// leaving this window is reported as MagnitudeOverflow.
inline constexpr std::int64_t kMagnitudeLimit = std::numeric_limits<std::int64_t>::max() / 2;

/// An element of Z_max: an integer or bottom (−∞).
class Trop {
 public:
  constexpr Trop() noexcept = default;
  Trop(std::int64_t value) : v_(checked(value)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Trop zero() noexcept { return Trop(); }
  static Trop one() { return Trop(0); }

  constexpr bool is_zero() const noexcept { return v_ == kBottom; }
  constexpr bool is_finite() const noexcept { return v_ != kBottom; }

  /// The integer value. Bottom has no value.
  std::int64_t value() const {
    if (is_zero()) throw Error("bottom (-inf) has no finite value");
    return v_;
  }

  /// x − 1, the immediate predecessor in Z_max; bottom stays bottom.
  Trop predecessor() const {
    if (is_zero()) return *this;
    return Trop(v_ - 1);
  }

  friend Trop operator+(Trop a, Trop b) noexcept { return a.v_ >= b.v_ ? a : b; }

  friend Trop operator*(Trop a, Trop b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw MagnitudeOverflow("magnitude overflow in multiplication");
    return Trop(r);
  }

  Trop& operator+=(Trop o) noexcept { return *this = *this + o; }
  Trop& operator*=(Trop o) { return *this = *this * o; }

  // Bottom is the int64 minimum, so the default ordering puts −∞ below every integer.
  friend constexpr bool operator==(Trop, Trop) noexcept = default;
  friend constexpr auto operator<=>(Trop, Trop) noexcept = default;

 private:
  static constexpr std::int64_t kBottom = std::numeric_limits<std::int64_t>::min();

  static std::int64_t checked(std::int64_t v) {
    if (v > kMagnitudeLimit || v < -kMagnitudeLimit)
      throw MagnitudeOverflow("magnitude " + std::to_string(v) + " outside the admissible range");
    return v;
  }

  std::int64_t v_ = kBottom;
};

inline Trop modulus(Trop a) noexcept { return a; }
inline bool is_zero(Trop a) noexcept { return a.is_zero(); }

// Layer semirings

/// Elements ε, 0, ⊖0, 0• of the four-element symmetrized Boolean semiring.
enum class SymLayer : std::uint8_t { Zero, Plus, Minus, Balanced };

/// Classes {0}, 1̄ (tangible) and 2̄ (ghost) of N_2.
enum class SupLayer : std::uint8_t { Zero, Tangible, Ghost };

struct SymLayers {
  using Layer = SymLayer;
  static constexpr Layer kZero = SymLayer::Zero;
  static constexpr Layer kOne = SymLayer::Plus;
  static constexpr std::array<Layer, 3> kNonzero{SymLayer::Plus, SymLayer::Minus, SymLayer::Balanced};

  static constexpr Layer add(Layer a, Layer b) noexcept {
    constexpr SymLayer Z = SymLayer::Zero, P = SymLayer::Plus, M = SymLayer::Minus, B = SymLayer::Balanced;
    constexpr Layer table[4][4] = {
        {Z, P, M, B},
        {P, P, B, B},
        {M, B, M, B},
        {B, B, B, B},
    };
    return table[static_cast<int>(a)][static_cast<int>(b)];
  }

  static constexpr Layer mul(Layer a, Layer b) noexcept {
    constexpr SymLayer Z = SymLayer::Zero, P = SymLayer::Plus, M = SymLayer::Minus, B = SymLayer::Balanced;
    constexpr Layer table[4][4] = {
        {Z, Z, Z, Z},
        {Z, P, M, B},
        {Z, M, P, B},
        {Z, B, B, B},
    };
    return table[static_cast<int>(a)][static_cast<int>(b)];
  }
};

struct SupLayers {
  using Layer = SupLayer;
  static constexpr Layer kZero = SupLayer::Zero;
  static constexpr Layer kOne = SupLayer::Tangible;
  static constexpr std::array<Layer, 2> kNonzero{SupLayer::Tangible, SupLayer::Ghost};

  // N_2 is the quotient of the naturals identifying every n ≥ 2.
  static constexpr Layer add(Layer a, Layer b) noexcept {
    int s = static_cast<int>(a) + static_cast<int>(b);
    return static_cast<Layer>(s > 2 ? 2 : s);
  }

  static constexpr Layer mul(Layer a, Layer b) noexcept {
    int p = static_cast<int>(a) * static_cast<int>(b);
    return static_cast<Layer>(p > 2 ? 2 : p);
  }
};

/// An element of T ⋉ Z_max for a finite layer semiring T.
template <class Layers>
class Layered {
 public:
  using Layer = typename Layers::Layer;

  constexpr Layered() noexcept = default;

  /// Throws std::invalid_argument unless (layer is zero) ⇔ (magnitude is bottom).
  Layered(Layer layer, Trop magnitude) : layer_(layer), mag_(magnitude) {
    if ((layer == Layers::kZero) != magnitude.is_zero())
      throw std::invalid_argument("zero layer must pair with bottom magnitude");
  }

  static constexpr Layered zero() noexcept { return Layered(); }
  static Layered one() { return Layered(Layers::kOne, Trop(0)); }

  // Named constructors for the two concrete kinds.
  static Layered plus(std::int64_t v) requires std::same_as<Layers, SymLayers> { return {SymLayer::Plus, Trop(v)}; }
  static Layered minus(std::int64_t v) requires std::same_as<Layers, SymLayers> { return {SymLayer::Minus, Trop(v)}; }
  static Layered balanced(std::int64_t v) requires std::same_as<Layers, SymLayers> {
    return {SymLayer::Balanced, Trop(v)};
  }
  static Layered tangible(std::int64_t v) requires std::same_as<Layers, SupLayers> {
    return {SupLayer::Tangible, Trop(v)};
  }
  static Layered ghost(std::int64_t v) requires std::same_as<Layers, SupLayers> { return {SupLayer::Ghost, Trop(v)}; }

  constexpr Layer layer() const noexcept { return layer_; }
  constexpr Trop magnitude() const noexcept { return mag_; }
  constexpr bool is_zero() const noexcept { return layer_ == Layers::kZero; }

  /// Same layer, magnitude replaced (zero stays zero when the new magnitude is bottom).
  Layered with_magnitude(Trop m) const { return m.is_zero() ? zero() : Layered(layer_, m); }

  friend Layered operator+(const Layered& a, const Layered& b) noexcept {
    if (a.mag_ > b.mag_) return a;
    if (b.mag_ > a.mag_) return b;
    Layered r;
    r.layer_ = Layers::add(a.layer_, b.layer_);
    r.mag_ = a.mag_;
    return r;
  }

  friend Layered operator*(const Layered& a, const Layered& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    Layered r;
    r.layer_ = Layers::mul(a.layer_, b.layer_);
    r.mag_ = a.mag_ * b.mag_;
    return r;
  }

  Layered& operator+=(const Layered& o) noexcept { return *this = *this + o; }
  Layered& operator*=(const Layered& o) { return *this = *this * o; }

  friend constexpr bool operator==(const Layered&, const Layered&) noexcept = default;

 private:
  Layer layer_ = Layers::kZero;
  Trop mag_;
};

using Sym = Layered<SymLayers>;
using Sup = Layered<SupLayers>;

template <class L>
Trop modulus(const Layered<L>& a) noexcept {
  return a.magnitude();
}

template <class L>
bool is_zero(const Layered<L>& a) noexcept {
  return a.is_zero();
}

inline bool is_signed(const Sym& a) noexcept { return a.layer() == SymLayer::Plus || a.layer() == SymLayer::Minus; }
inline bool is_balanced(const Sym& a) noexcept { return a.layer() == SymLayer::Balanced; }
inline bool is_tangible(const Sup& a) noexcept { return a.layer() == SupLayer::Tangible; }
inline bool is_ghost(const Sup& a) noexcept { return a.layer() == SupLayer::Ghost; }

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign opposite(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline Sign sign(const Sym& a) {
  switch (a.layer()) {
    case SymLayer::Plus:
      return Sign::Plus;
    case SymLayer::Minus:
      return Sign::Minus;
    default:
      throw BalancedOrZeroHasNoSign();
  }
}

/// ⊖a, i.e. multiplication by ⊖0.
inline Sym negate(const Sym& a) { return Sym::minus(0) * a; }

/// Signed scalar with the given sign and magnitude.
inline Sym with_sign(Sign s, Trop magnitude) {
  if (magnitude.is_zero()) return Sym::zero();
  return Sym(s == Sign::Plus ? SymLayer::Plus : SymLayer::Minus, magnitude);
}

enum class Kind : std::uint8_t { Tropical, Symmetrized, Supertropical };

template <class S>
inline constexpr Kind kind_of = Kind::Tropical;
template <>
inline constexpr Kind kind_of<Sym> = Kind::Symmetrized;
template <>
inline constexpr Kind kind_of<Sup> = Kind::Supertropical;

inline const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Tropical:
      return "trop";
    case Kind::Symmetrized:
      return "sym";
    case Kind::Supertropical:
      return "sup";
  }
  return "?";
}

/// What the generic algorithms need from a scalar type.
template <class S>
concept Scalar = std::regular<S> && requires(S a, S b) {
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { modulus(a) } -> std::same_as<Trop>;
  { is_zero(a) } -> std::same_as<bool>;
};

static_assert(Scalar<Trop>);
static_assert(Scalar<Sym>);
static_assert(Scalar<Sup>);

}  // namespace laytrop
