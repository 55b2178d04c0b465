#pragma once

// A ⊗ x = b over Z_max: the greatest solution and all minimal solutions.
//
// Every solution lies below x̄, and x solves the system iff x ≤ x̄ and the sets
// S_j(x) cover all rows. Minimal solutions keep x̄_j on a minimal cover of the
// rows by S_j(x̄) and set every other component to −∞.

#include <algorithm>
#include <limits>
#include <vector>

#include "laytrop/cover.hpp"
#include "laytrop/error.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

struct TropSolveReport {
  Vector<Trop> xbar;
  std::vector<IndexSet> support;  // S_j(x̄)
  bool solvable = false;
  std::vector<Vector<Trop>> minimal_solutions;
  std::vector<IndexSet> minimal_covers;  // parallel to minimal_solutions
};

/// x̄_j = −max_i (A_ij − b_i). Requires b finite and a finite entry in every column.
inline Vector<Trop> greatest_solution(const Matrix<Trop>& a, const Vector<Trop>& b) {
  if (a.rows() != b.size()) throw ShapeMismatch("right-hand side length differs from row count");
  for (Trop bi : b)
    if (bi.is_zero()) throw UnreducedSystem("right-hand side has a -inf entry");
  Vector<Trop> x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool any = false;
    std::int64_t worst = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j).is_zero()) continue;
      // Both operands lie within half the int64 range, so the difference fits.
      worst = std::max(worst, a(i, j).value() - b[i].value());
      any = true;
    }
    if (!any) throw UnreducedSystem("column " + std::to_string(j + 1) + " has no finite entry");
    x[j] = Trop(-worst);
  }
  return x;
}

/// S_j(x) = { i : x_j ⊗ A_ij = b_i }.
inline std::vector<IndexSet> support_sets(const Matrix<Trop>& a, const Vector<Trop>& b, const Vector<Trop>& x) {
  if (a.rows() != b.size() || a.cols() != x.size()) throw ShapeMismatch("support sets of mismatched shapes");
  std::vector<IndexSet> s(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (x[j] * a(i, j) == b[i] && !b[i].is_zero()) s[j].push_back(i);
  return s;
}

/// The vector equal to `base` on `keep` and −∞ (zero) elsewhere.
template <Scalar S>
Vector<S> restrict_to(const Vector<S>& base, const IndexSet& keep) {
  Vector<S> d(base.size(), S::zero());
  for (std::size_t j : keep) d[j] = base[j];
  return d;
}

inline TropSolveReport solve(const Matrix<Trop>& a, const Vector<Trop>& b) {
  TropSolveReport r;
  r.xbar = greatest_solution(a, b);
  r.support = support_sets(a, b, r.xbar);
  CoverProblem p{a.rows(), r.support};
  r.solvable = is_cover(p, [&] {
    IndexSet all(a.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    return all;
  }());
  if (!r.solvable) return r;
  r.minimal_covers = all_minimal_covers(p);
  std::sort(r.minimal_covers.begin(), r.minimal_covers.end());
  for (const auto& k : r.minimal_covers) r.minimal_solutions.push_back(restrict_to(r.xbar, k));
  return r;
}

inline TropSolveReport solve(const System<Trop>& sys) { return solve(sys.a, sys.b); }

}  // namespace laytrop
