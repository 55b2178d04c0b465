// laytrop: solve one-sided systems A ⊗ x = b over Z_max and its symmetrized
// and supertropical extensions, brute-force them on a candidate grid, or run
// the Stickel exchange and its linear-system attack.
//
// Exit codes: 0 solvable / success, 1 unsolvable / attack failed, 2 error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "laytrop/laytrop.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

int run_solve(const std::string& path, const std::string& format, bool no_reduce) {
  const laytrop::AnySystem sys = laytrop::read_system_file(path);
  const laytrop::SolveReportDocument doc = laytrop::solve_document(sys, !no_reduce);
  if (format == "json")
    std::cout << nlohmann::json(doc).dump(2) << "\n";
  else
    std::cout << laytrop::render_text(doc);
  return doc.solvable ? kOk : kNegative;
}

template <laytrop::Scalar S>
int oracle_for(const laytrop::System<S>& sys, std::uint64_t limit) {
  using namespace laytrop;
  std::cout << "semiring: " << kind_name(sys.kind) << "\n";
  Reduced<S> red;
  try {
    red = reduce(sys);
  } catch (const EmptyAfterReduction&) {
    std::cout << "no equation left after reduction; the zero vector solves the system\n";
    return kOk;
  }
  const CandidateGrid<S> grid = default_grid(red.system);
  const auto solutions = enumerate_solutions(red.system, grid, limit);
  std::cout << "grid points: " << grid.size() << "\n";
  std::cout << "solutions on grid: " << solutions.size() << "\n";
  for (const auto& x : solutions) std::cout << "  " << to_pretty(expand(x, red.trace)) << "\n";
  const auto minimal = minimal_modulus_set(solutions);
  std::cout << "minimal moduli: " << minimal.size() << "\n";
  for (const auto& v : minimal) std::cout << "  " << to_pretty(expand(v, red.trace)) << "\n";
  return solutions.empty() ? kNegative : kOk;
}

int run_oracle(const std::string& path, std::uint64_t limit) {
  const laytrop::AnySystem sys = laytrop::read_system_file(path);
  return std::visit([&](const auto& s) { return oracle_for(s, limit); }, sys);
}

template <laytrop::Scalar S>
void print_matrix(const char* name, const laytrop::Matrix<S>& m) {
  std::cout << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << " " << laytrop::to_token(m(i, j));
    std::cout << "\n";
  }
}

template <laytrop::Scalar S>
void print_poly(const char* name, const std::vector<S>& c) {
  std::cout << name << ":";
  for (const auto& x : c) std::cout << " " << laytrop::to_token(x);
  std::cout << "\n";
}

template <laytrop::Scalar S>
int stickel_for(const laytrop::StickelParams& p, bool with_attack) {
  using namespace laytrop;
  const Transcript<S> t = run_protocol<S>(p);
  std::cout << "semiring: " << kind_name(p.kind) << "\n";
  print_matrix("A", t.a);
  print_matrix("B", t.b);
  print_matrix("W", t.w);
  print_poly("alice p1", t.alice_left);
  print_poly("alice p2", t.alice_right);
  print_poly("bob q1", t.bob_left);
  print_poly("bob q2", t.bob_right);
  print_matrix("U", t.u);
  print_matrix("V", t.v);
  print_matrix("key", t.key);
  std::cout << "keys agree\n";
  if (!with_attack) return kOk;
  const auto recovered = attack(t, p.degree);
  if (!recovered) {
    std::cout << "attack: no solution found\n";
    return kNegative;
  }
  if (*recovered != t.key) {
    print_matrix("attack candidate", *recovered);
    std::cout << "attack: candidate differs from the key\n";
    return kNegative;
  }
  std::cout << "attack: recovered the shared key\n";
  return kOk;
}

int run_stickel(const laytrop::StickelParams& p, bool with_attack) {
  switch (p.kind) {
    case laytrop::Kind::Tropical:
      return stickel_for<laytrop::Trop>(p, with_attack);
    case laytrop::Kind::Symmetrized:
      return stickel_for<laytrop::Sym>(p, with_attack);
    case laytrop::Kind::Supertropical:
      return stickel_for<laytrop::Sup>(p, with_attack);
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve one-sided linear systems over tropical, symmetrized and supertropical semirings"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  bool no_reduce = false;
  auto* solve = app.add_subcommand("solve", "Greatest candidate and minimal-modulus solutions");
  solve->add_option("--input", input, "System file")->required();
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--no-reduce", no_reduce, "Skip the removal of zero right-hand sides and empty columns");

  std::uint64_t limit = laytrop::kDefaultGridLimit;
  auto* oracle = app.add_subcommand("oracle", "Brute-force all solutions on the candidate grid");
  oracle->add_option("--input", input, "System file")->required();
  oracle->add_option("--limit", limit, "Largest grid to enumerate");

  laytrop::StickelParams params;
  std::string kind = "trop";
  bool with_attack = false;
  auto* stickel = app.add_subcommand("stickel", "Run the Stickel key exchange");
  stickel->add_option("--kind", kind, "Semiring")->check(CLI::IsMember({"trop", "sym", "sup"}));
  stickel->add_option("--n", params.n, "Matrix size")->check(CLI::PositiveNumber);
  stickel->add_option("--deg", params.degree, "Polynomial degree D")->check(CLI::Range(1u, laytrop::kMaxAttackDegree));
  stickel->add_option("--seed", params.seed, "Random seed");
  stickel->add_option("--lo", params.lo, "Smallest magnitude");
  stickel->add_option("--hi", params.hi, "Largest magnitude");
  stickel->add_flag("--attack", with_attack, "Recover the key from public data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*solve) return run_solve(input, format, no_reduce);
    if (*oracle) return run_oracle(input, limit);
    params.kind = *laytrop::parse_kind(kind);
    return run_stickel(params, with_attack);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
