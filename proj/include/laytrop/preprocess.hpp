#pragma once

// Reduction to systems with a finite right-hand side and no all-zero columns.
//
// A zero b_i forces x_j = zero for every j with A_ij nonzero, so row i and
// those columns go. A column with no nonzero entry leaves x_j unconstrained and
// is deleted as well. Deleting a column never changes b, so one pass over the
// rows followed by one pass over the columns reaches the fixpoint.

#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

struct ReductionTrace {
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;
  IndexSet deleted_rows;
  IndexSet deleted_cols;      // forced_zero_vars ∪ free_vars
  IndexSet forced_zero_vars;  // must be zero in every solution
  IndexSet free_vars;         // arbitrary in every solution; emitted as zero
  IndexSet kept_rows;
  IndexSet kept_cols;

  bool empty() const noexcept { return deleted_rows.empty() && deleted_cols.empty(); }

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

template <Scalar S>
struct Reduced {
  System<S> system;
  ReductionTrace trace;
};

/// Raised by reduce() when no equation survives. The system is then trivially
/// solvable (by the all-zero vector on forced columns, anything on free ones);
/// the trace is carried along.
class EmptyAfterReduction : public Error {
 public:
  explicit EmptyAfterReduction(ReductionTrace t)
      : Error("every equation was removed by reduction; the system is trivially solvable"), trace_(std::move(t)) {}
  const ReductionTrace& trace() const noexcept { return trace_; }

 private:
  ReductionTrace trace_;
};

template <Scalar S>
Reduced<S> reduce(const System<S>& sys) {
  const std::size_t m = sys.rows(), n = sys.cols();
  ReductionTrace t;
  t.original_rows = m;
  t.original_cols = n;

  std::vector<bool> forced(n, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_zero(sys.b[i])) {
      t.kept_rows.push_back(i);
      continue;
    }
    t.deleted_rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(sys.a(i, j))) forced[j] = true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (forced[j]) {
      t.forced_zero_vars.push_back(j);
      t.deleted_cols.push_back(j);
      continue;
    }
    bool any = false;
    for (std::size_t i : t.kept_rows) any = any || !is_zero(sys.a(i, j));
    if (any) {
      t.kept_cols.push_back(j);
    } else {
      t.free_vars.push_back(j);
      t.deleted_cols.push_back(j);
    }
  }

  if (t.kept_rows.empty()) throw EmptyAfterReduction(std::move(t));

  Matrix<S> a(t.kept_rows.size(), t.kept_cols.size());
  Vector<S> b(t.kept_rows.size());
  for (std::size_t r = 0; r < t.kept_rows.size(); ++r) {
    b[r] = sys.b[t.kept_rows[r]];
    for (std::size_t c = 0; c < t.kept_cols.size(); ++c) a(r, c) = sys.a(t.kept_rows[r], t.kept_cols[c]);
  }
  return {System<S>(std::move(a), std::move(b)), std::move(t)};
}

/// Trace of a system that needed no reduction.
template <Scalar S>
ReductionTrace identity_trace(const System<S>& sys) {
  ReductionTrace t;
  t.original_rows = sys.rows();
  t.original_cols = sys.cols();
  for (std::size_t i = 0; i < sys.rows(); ++i) t.kept_rows.push_back(i);
  for (std::size_t j = 0; j < sys.cols(); ++j) t.kept_cols.push_back(j);
  return t;
}

/// Lifts a vector of the reduced system back to the original columns; deleted
/// columns (forced or free) get zero.
template <Scalar S>
Vector<S> expand(const Vector<S>& x, const ReductionTrace& t) {
  if (x.size() != t.kept_cols.size()) throw ShapeMismatch("vector does not match the reduced system");
  Vector<S> full(t.original_cols, S::zero());
  for (std::size_t c = 0; c < t.kept_cols.size(); ++c) full[t.kept_cols[c]] = x[c];
  return full;
}

/// Maps reduced column indices back to original ones.
inline IndexSet expand_columns(const IndexSet& cols, const ReductionTrace& t) {
  IndexSet r;
  r.reserve(cols.size());
  for (std::size_t c : cols) r.push_back(t.kept_cols.at(c));
  return r;
}

/// A′: entries of A outside the per-column support sets replaced by zero.
template <Scalar S>
Matrix<S> restrict_support(const System<S>& sys, const std::vector<IndexSet>& support) {
  if (support.size() != sys.cols()) throw ShapeMismatch("one support set per column expected");
  Matrix<S> r(sys.rows(), sys.cols());
  for (std::size_t j = 0; j < sys.cols(); ++j)
    for (std::size_t i : support[j]) r(i, j) = sys.a(i, j);
  return r;
}

}  // namespace laytrop
