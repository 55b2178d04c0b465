#pragma once

// Stickel's key exchange over a commutative semiring, and the attack that
// recovers the key from one solution of a one-sided linear system.
//
// Public: square A, B, W. Alice sends U = p₁(A) ⊗ W ⊗ p₂(B), Bob sends
// V = q₁(A) ⊗ W ⊗ q₂(B); both compute K = p₁(A) ⊗ V ⊗ p₂(B) = q₁(A) ⊗ U ⊗ q₂(B).
//
// Attack: solve ⊕_{α,β} z_{αβ} ⊗ (A^α ⊗ W ⊗ B^β) = U entrywise for the
// (D+1)² unknowns z_{αβ}. Any solution gives K = ⊕ z_{αβ} ⊗ A^α ⊗ V ⊗ B^β,
// because polynomials in A (resp. B) commute.

#include <cstdint>
#include <optional>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/matrix.hpp"
#include "laytrop/preprocess.hpp"
#include "laytrop/random.hpp"
#include "laytrop/supertropical_solver.hpp"
#include "laytrop/symmetrized_solver.hpp"
#include "laytrop/tropical_solver.hpp"

namespace laytrop {

inline constexpr unsigned kMaxAttackDegree = 4;

struct StickelParams {
  Kind kind = Kind::Tropical;
  std::size_t n = 3;
  unsigned degree = 2;  // D
  std::int64_t lo = -10;
  std::int64_t hi = 10;
  std::uint64_t seed = 1;
};

template <Scalar S>
struct Transcript {
  Matrix<S> a, b, w;
  Matrix<S> u, v;
  std::vector<S> alice_left, alice_right;  // p₁, p₂ coefficients, constant term first
  std::vector<S> bob_left, bob_right;      // q₁, q₂
  Matrix<S> key;
};

/// Runs the exchange with the given polynomials and checks both keys agree.
template <Scalar S>
Transcript<S> exchange(Matrix<S> a, Matrix<S> b, Matrix<S> w, std::vector<S> p1, std::vector<S> p2, std::vector<S> q1,
                       std::vector<S> q2) {
  if (!a.is_square() || !b.is_square() || !w.is_square()) throw NotSquare("public matrices must be square");
  if (a.rows() != b.rows() || a.rows() != w.rows()) throw ShapeMismatch("public matrices differ in size");
  Transcript<S> t{std::move(a), std::move(b), std::move(w), {}, {}, std::move(p1), std::move(p2), std::move(q1),
                  std::move(q2), {}};
  const Matrix<S> p1a = poly_eval(t.alice_left, t.a), p2b = poly_eval(t.alice_right, t.b);
  const Matrix<S> q1a = poly_eval(t.bob_left, t.a), q2b = poly_eval(t.bob_right, t.b);
  t.u = p1a * t.w * p2b;
  t.v = q1a * t.w * q2b;
  const Matrix<S> alice_key = p1a * t.v * p2b;
  const Matrix<S> bob_key = q1a * t.u * q2b;
  if (alice_key != bob_key) throw Error("Alice's and Bob's keys differ");
  t.key = alice_key;
  return t;
}

/// Random publics with nonzero entries and random secret polynomials of degree D.
template <Scalar S>
Transcript<S> run_protocol(const StickelParams& p) {
  if (p.kind != kind_of<S>) throw KindMismatch("parameters request a different semiring");
  if (p.n < 1 || p.degree < 1) throw std::invalid_argument("need n >= 1 and D >= 1");
  Rng rng(p.seed);
  auto matrix = [&] {
    Matrix<S> m(p.n, p.n);
    for (std::size_t i = 0; i < p.n; ++i)
      for (std::size_t j = 0; j < p.n; ++j) m(i, j) = random_nonzero<S>(rng, p.lo, p.hi);
    return m;
  };
  auto poly = [&] {
    std::vector<S> c(p.degree + 1);
    for (auto& x : c) x = random_nonzero<S>(rng, p.lo, p.hi);
    return c;
  };
  Matrix<S> a = matrix(), b = matrix(), w = matrix();
  std::vector<S> p1 = poly(), p2 = poly(), q1 = poly(), q2 = poly();
  return exchange(std::move(a), std::move(b), std::move(w), std::move(p1), std::move(p2), std::move(q1), std::move(q2));
}

/// The attack system: row γ·n + δ, column α·(D+1) + β holds (A^α ⊗ W ⊗ B^β)_{γδ};
/// the right-hand side is U flattened row-major.
template <Scalar S>
System<S> attack_system(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& w, const Matrix<S>& u,
                        unsigned degree) {
  if (degree > kMaxAttackDegree) throw std::invalid_argument("attack degree above " + std::to_string(kMaxAttackDegree));
  const std::size_t n = a.rows(), k = degree + 1;
  Matrix<S> coeff(n * n, k * k);
  Vector<S> rhs(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t d = 0; d < n; ++d) rhs[g * n + d] = u(g, d);
  for (unsigned alpha = 0; alpha <= degree; ++alpha) {
    const Matrix<S> left = mat_pow(a, alpha) * w;
    for (unsigned beta = 0; beta <= degree; ++beta) {
      const Matrix<S> term = left * mat_pow(b, beta);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t d = 0; d < n; ++d) coeff(g * n + d, alpha * k + beta) = term(g, d);
    }
  }
  return System<S>(std::move(coeff), std::move(rhs));
}

namespace detail {

template <Scalar S>
std::optional<Vector<S>> any_solution(const System<S>& sys) {
  if constexpr (std::same_as<S, Trop>) {
    const auto x = greatest_solution(sys.a, sys.b);
    if (satisfies(sys, x)) return x;
    return std::nullopt;
  } else if constexpr (std::same_as<S, Sym>) {
    auto x = greatest_modulus_candidate(sys);
    if (satisfies(sys, x)) return x;
    return std::nullopt;
  } else {
    auto x = greatest_modulus_candidate(sys);
    if (satisfies(sys, x)) return x;
    auto rep = minimal_modulus_solutions(sys, MinimalSearchOptions{1});
    if (rep.minimal_solutions.empty()) return std::nullopt;
    return rep.minimal_solutions.front();
  }
}

}  // namespace detail

/// A key candidate from public data alone, or empty when the attack system has
/// no solution.
template <Scalar S>
std::optional<Matrix<S>> attack(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& w, const Matrix<S>& u,
                                const Matrix<S>& v, unsigned degree) {
  const System<S> sys = attack_system(a, b, w, u, degree);
  Vector<S> z;
  try {
    Reduced<S> red = reduce(sys);
    auto x = detail::any_solution(red.system);
    if (!x) return std::nullopt;
    z = expand(*x, red.trace);
  } catch (const EmptyAfterReduction&) {
    z.assign(sys.cols(), S::zero());
  }
  if (!satisfies(sys, z)) return std::nullopt;

  const std::size_t k = degree + 1;
  Matrix<S> key(a.rows(), a.cols());
  for (unsigned alpha = 0; alpha <= degree; ++alpha)
    for (unsigned beta = 0; beta <= degree; ++beta) {
      const S& c = z[alpha * k + beta];
      if (is_zero(c)) continue;
      key = key + c * (mat_pow(a, alpha) * v * mat_pow(b, beta));
    }
  return key;
}

template <Scalar S>
std::optional<Matrix<S>> attack(const Transcript<S>& t, unsigned degree) {
  return attack(t.a, t.b, t.w, t.u, t.v, degree);
}

}  // namespace laytrop
