#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/matrix.hpp"
#include "laytrop/scalar.hpp"

namespace laytrop {

/// Sorted set of 0-based row or column indices.
using IndexSet = std::vector<std::size_t>;

/// The one-sided system A ⊗ x = b.
template <Scalar S>
struct System {
  Matrix<S> a;
  Vector<S> b;

  System() = default;
  System(Matrix<S> a_, Vector<S> b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.rows() != b.size())
      throw ShapeMismatch("matrix has " + std::to_string(a.rows()) + " rows, right-hand side has " +
                          std::to_string(b.size()) + " entries");
  }

  std::size_t rows() const noexcept { return a.rows(); }
  std::size_t cols() const noexcept { return a.cols(); }

  static constexpr Kind kind = kind_of<S>;

  friend bool operator==(const System&, const System&) = default;
};

/// True iff A ⊗ x = b holds exactly.
template <Scalar S>
bool satisfies(const System<S>& sys, const Vector<S>& x) {
  return sys.a * x == sys.b;
}

/// Every b_i nonzero and every column of A with a nonzero entry.
template <Scalar S>
bool is_reduced(const System<S>& sys) {
  for (const auto& bi : sys.b)
    if (is_zero(bi)) return false;
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < sys.rows() && !any; ++i) any = !is_zero(sys.a(i, j));
    if (!any) return false;
  }
  return true;
}

template <Scalar S>
void require_reduced(const System<S>& sys) {
  if (!is_reduced(sys)) throw UnreducedSystem("system has a zero right-hand side entry or an all-zero column");
}

/// Rows i with x_j ⊗ A_ij = b_i, per column j, evaluated on moduli.
template <Scalar S>
std::vector<IndexSet> modulus_support(const System<S>& sys, const Vector<Trop>& x) {
  if (x.size() != sys.cols()) throw ShapeMismatch("support of a vector of the wrong length");
  std::vector<IndexSet> s(sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < sys.rows(); ++i)
      if (x[j] * modulus(sys.a(i, j)) == modulus(sys.b[i])) s[j].push_back(i);
  }
  return s;
}

inline bool contains(const IndexSet& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline IndexSet to_one_based(IndexSet s) {
  for (auto& i : s) ++i;
  return s;
}

}  // namespace laytrop
