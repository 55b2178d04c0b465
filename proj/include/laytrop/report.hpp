#pragma once

// The solve pipeline behind the command-line tool (reduce, dispatch on the
// semiring, lift back to the original columns) and its report document, with
// JSON and plain-text renderings. Indices are 0-based in memory and 1-based in
// both renderings.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "laytrop/format.hpp"
#include "laytrop/io.hpp"
#include "laytrop/preprocess.hpp"
#include "laytrop/supertropical_solver.hpp"
#include "laytrop/symmetrized_solver.hpp"
#include "laytrop/tropical_solver.hpp"

namespace laytrop {

/// Column sets (K′, K″) of the original system behind one minimal solution.
/// Tropical solutions have an empty K″.
struct CoverPair {
  IndexSet primary;
  IndexSet extension;

  friend bool operator==(const CoverPair&, const CoverPair&) = default;
};

struct SolveReportDocument {
  Kind kind = Kind::Tropical;
  ReductionTrace trace;
  bool solvable = false;
  std::vector<std::string> greatest_candidate;  // tokens, original columns
  bool greatest_is_solution = false;
  std::optional<bool> tangible_condition;  // supertropical only
  std::vector<std::vector<std::string>> minimal_solutions;
  std::vector<CoverPair> covers;  // parallel to minimal_solutions
  std::size_t rejected_candidates = 0;

  friend bool operator==(const SolveReportDocument&, const SolveReportDocument&) = default;
};

namespace detail {

template <Scalar S>
SolveReportDocument trivial_document(const ReductionTrace& t) {
  SolveReportDocument doc;
  doc.kind = kind_of<S>;
  doc.trace = t;
  doc.solvable = true;
  doc.greatest_candidate = to_tokens(Vector<S>(t.original_cols, S::zero()));
  doc.greatest_is_solution = true;
  if constexpr (std::same_as<S, Sup>) doc.tangible_condition = true;
  doc.minimal_solutions.push_back(doc.greatest_candidate);
  doc.covers.push_back({});
  return doc;
}

}  // namespace detail

/// Reduces (unless `reduce_first` is false), solves and lifts the results back
/// to the columns of `sys`. A system whose every equation disappears under
/// reduction is reported solvable by the zero vector.
template <Scalar S>
SolveReportDocument solve_document(const System<S>& sys, bool reduce_first = true) {
  Reduced<S> red;
  if (reduce_first) {
    try {
      red = reduce(sys);
    } catch (const EmptyAfterReduction& e) {
      return detail::trivial_document<S>(e.trace());
    }
  } else {
    red = {sys, identity_trace(sys)};
  }
  const ReductionTrace& t = red.trace;

  SolveReportDocument doc;
  doc.kind = kind_of<S>;
  doc.trace = t;
  auto lift = [&](const Vector<S>& x) { return to_tokens(expand(x, t)); };

  if constexpr (std::same_as<S, Trop>) {
    const TropSolveReport r = solve(red.system);
    doc.solvable = r.solvable;
    doc.greatest_candidate = lift(r.xbar);
    doc.greatest_is_solution = r.solvable;
    for (std::size_t k = 0; k < r.minimal_solutions.size(); ++k) {
      doc.minimal_solutions.push_back(lift(r.minimal_solutions[k]));
      doc.covers.push_back({expand_columns(r.minimal_covers[k], t), {}});
    }
  } else {
    const auto r = minimal_modulus_solutions(red.system);
    if constexpr (std::same_as<S, Sym>) {
      doc.greatest_candidate = lift(r.xbar_sym);
      doc.greatest_is_solution = r.solvable;
    } else {
      doc.greatest_candidate = lift(r.xbar_sup);
      doc.greatest_is_solution = r.xbar_sup_is_solution;
      doc.tangible_condition = r.tangible_condition;
    }
    doc.solvable = r.solvable;
    for (std::size_t k = 0; k < r.minimal_solutions.size(); ++k) {
      doc.minimal_solutions.push_back(lift(r.minimal_solutions[k]));
      doc.covers.push_back({expand_columns(r.trace[k].primary, t), expand_columns(r.trace[k].extension, t)});
    }
    doc.rejected_candidates = r.rejected_candidates.size();
  }
  return doc;
}

inline SolveReportDocument solve_document(const AnySystem& sys, bool reduce_first = true) {
  return std::visit([&](const auto& s) { return solve_document(s, reduce_first); }, sys);
}

// JSON

namespace detail {

inline nlohmann::json one_based(const IndexSet& s) {
  auto j = nlohmann::json::array();
  for (std::size_t i : s) j.push_back(i + 1);
  return j;
}

inline IndexSet zero_based(const nlohmann::json& j) {
  IndexSet s;
  for (const auto& v : j) {
    const auto i = v.get<std::size_t>();
    if (i == 0) throw Error("indices in a report are 1-based");
    s.push_back(i - 1);
  }
  return s;
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const ReductionTrace& t) {
  j = {{"original_rows", t.original_rows},
       {"original_cols", t.original_cols},
       {"deleted_rows", detail::one_based(t.deleted_rows)},
       {"deleted_cols", detail::one_based(t.deleted_cols)},
       {"forced_zero_vars", detail::one_based(t.forced_zero_vars)},
       {"free_vars", detail::one_based(t.free_vars)},
       {"kept_rows", detail::one_based(t.kept_rows)},
       {"kept_cols", detail::one_based(t.kept_cols)}};
}

inline void from_json(const nlohmann::json& j, ReductionTrace& t) {
  t.original_rows = j.at("original_rows").get<std::size_t>();
  t.original_cols = j.at("original_cols").get<std::size_t>();
  t.deleted_rows = detail::zero_based(j.at("deleted_rows"));
  t.deleted_cols = detail::zero_based(j.at("deleted_cols"));
  t.forced_zero_vars = detail::zero_based(j.at("forced_zero_vars"));
  t.free_vars = detail::zero_based(j.at("free_vars"));
  t.kept_rows = detail::zero_based(j.at("kept_rows"));
  t.kept_cols = detail::zero_based(j.at("kept_cols"));
}

inline void to_json(nlohmann::json& j, const SolveReportDocument& d) {
  auto covers = nlohmann::json::array();
  for (const auto& c : d.covers)
    covers.push_back({{"primary", detail::one_based(c.primary)}, {"extension", detail::one_based(c.extension)}});
  j = {{"kind", kind_name(d.kind)},
       {"reduction", d.trace},
       {"solvable", d.solvable},
       {"greatest_candidate", d.greatest_candidate},
       {"greatest_is_solution", d.greatest_is_solution},
       {"tangible_condition", d.tangible_condition ? nlohmann::json(*d.tangible_condition) : nlohmann::json(nullptr)},
       {"minimal_solutions", d.minimal_solutions},
       {"covers", covers},
       {"rejected_candidates", d.rejected_candidates}};
}

inline void from_json(const nlohmann::json& j, SolveReportDocument& d) {
  const auto kind = parse_kind(j.at("kind").get<std::string>());
  if (!kind) throw Error("unknown semiring kind in report");
  d.kind = *kind;
  d.trace = j.at("reduction").get<ReductionTrace>();
  d.solvable = j.at("solvable").get<bool>();
  d.greatest_candidate = j.at("greatest_candidate").get<std::vector<std::string>>();
  d.greatest_is_solution = j.at("greatest_is_solution").get<bool>();
  const auto& tc = j.at("tangible_condition");
  d.tangible_condition = tc.is_null() ? std::nullopt : std::optional<bool>(tc.get<bool>());
  d.minimal_solutions = j.at("minimal_solutions").get<std::vector<std::vector<std::string>>>();
  d.covers.clear();
  for (const auto& c : j.at("covers"))
    d.covers.push_back({detail::zero_based(c.at("primary")), detail::zero_based(c.at("extension"))});
  d.rejected_candidates = j.at("rejected_candidates").get<std::size_t>();
}

// Plain text

namespace detail {

inline std::string pretty_tokens(Kind kind, const std::vector<std::string>& tokens) {
  switch (kind) {
    case Kind::Tropical: {
      Vector<Trop> v;
      for (const auto& t : tokens) v.push_back(parse_token<Trop>(t));
      return to_pretty(v);
    }
    case Kind::Symmetrized: {
      Vector<Sym> v;
      for (const auto& t : tokens) v.push_back(parse_token<Sym>(t));
      return to_pretty(v);
    }
    case Kind::Supertropical: {
      Vector<Sup> v;
      for (const auto& t : tokens) v.push_back(parse_token<Sup>(t));
      return to_pretty(v);
    }
  }
  return {};
}

inline std::string set_text(const IndexSet& s) {
  std::string r = "{";
  for (std::size_t k = 0; k < s.size(); ++k) r += (k ? ", " : "") + std::to_string(s[k] + 1);
  return r + "}";
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::string render_text(const SolveReportDocument& d) {
  std::string out;
  out += std::string("semiring: ") + kind_name(d.kind) + "\n";
  const ReductionTrace& t = d.trace;
  if (t.empty()) {
    out += "reduction: none\n";
  } else {
    out += "reduction: removed rows " + detail::set_text(t.deleted_rows) + ", columns " +
           detail::set_text(t.deleted_cols) + " (forced zero " + detail::set_text(t.forced_zero_vars) + ", free " +
           detail::set_text(t.free_vars) + ")\n";
    if (t.kept_rows.empty()) out += "reduction: no equation left\n";
  }
  out += "greatest candidate: " + detail::pretty_tokens(d.kind, d.greatest_candidate) + "\n";
  out += std::string("greatest candidate solves: ") + detail::yes_no(d.greatest_is_solution) + "\n";
  if (d.tangible_condition) out += std::string("tangible condition: ") + detail::yes_no(*d.tangible_condition) + "\n";
  out += std::string("solvable: ") + detail::yes_no(d.solvable) + "\n";
  out += "minimal solutions: " + std::to_string(d.minimal_solutions.size()) + "\n";
  for (std::size_t k = 0; k < d.minimal_solutions.size(); ++k) {
    out += "  " + detail::pretty_tokens(d.kind, d.minimal_solutions[k]) + "  K' = " +
           detail::set_text(d.covers[k].primary);
    if (d.kind != Kind::Tropical) out += "  K'' = " + detail::set_text(d.covers[k].extension);
    out += "\n";
  }
  if (d.kind != Kind::Tropical) out += "rejected candidates: " + std::to_string(d.rejected_candidates) + "\n";
  return out;
}

}  // namespace laytrop
