#pragma once

// Plain-text system files:
//
//   <trop|sym|sup> <m> <n>
//   m lines of n scalar tokens      (the matrix A)
//   one line of m scalar tokens     (the right-hand side b)
//
// Anything after '#' is a comment; blank lines are ignored.

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/format.hpp"
#include "laytrop/system.hpp"

namespace laytrop {

using AnySystem = std::variant<System<Trop>, System<Sym>, System<Sup>>;

inline Kind kind_of_system(const AnySystem& s) {
  return std::visit([](const auto& sys) { return sys.kind; }, s);
}

inline std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "trop") return Kind::Tropical;
  if (name == "sym") return Kind::Symmetrized;
  if (name == "sup") return Kind::Supertropical;
  return std::nullopt;
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) l.tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!l.tokens.empty()) lines.push_back(std::move(l));
    if (text.empty()) break;
  }
  return lines;
}

inline std::size_t parse_dimension(const Token& t, std::size_t line) {
  std::int64_t v = 0;
  if (!parse_integer(t.text, v) || v < 1) throw ParseError(line, t.column, "expected a positive dimension");
  return static_cast<std::size_t>(v);
}

template <Scalar S>
S scalar_at(const Token& t, std::size_t line) {
  try {
    return parse_token<S>(t.text);
  } catch (const KindMismatch& e) {
    throw KindMismatch("line " + std::to_string(line) + ", column " + std::to_string(t.column) + ": " + e.what());
  } catch (const BadToken& e) {
    throw ParseError(line, t.column, e.what());
  } catch (const MagnitudeOverflow& e) {
    throw ParseError(line, t.column, e.what());
  }
}

template <Scalar S>
System<S> parse_body(const std::vector<Line>& lines, std::size_t m, std::size_t n) {
  auto row_line = [&](std::size_t k, std::size_t expected, const char* what) -> const Line& {
    if (k >= lines.size()) {
      const std::size_t last = lines.empty() ? 1 : lines.back().number;
      throw ParseError(last + 1, 1, std::string("missing ") + what);
    }
    const Line& l = lines[k];
    if (l.tokens.size() != expected)
      throw ParseError(l.number, l.tokens.front().column,
                       std::string(what) + " needs " + std::to_string(expected) + " tokens, found " +
                           std::to_string(l.tokens.size()));
    return l;
  };
  Matrix<S> a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const Line& l = row_line(1 + i, n, "matrix row");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = scalar_at<S>(l.tokens[j], l.number);
  }
  Vector<S> b(m);
  const Line& l = row_line(1 + m, m, "right-hand side");
  for (std::size_t i = 0; i < m; ++i) b[i] = scalar_at<S>(l.tokens[i], l.number);
  if (lines.size() > m + 2) {
    const Line& extra = lines[m + 2];
    throw ParseError(extra.number, extra.tokens.front().column, "unexpected content after the right-hand side");
  }
  return System<S>(std::move(a), std::move(b));
}

}  // namespace detail

/// Throws ParseError (with 1-based line and column) for malformed text and
/// KindMismatch for a token of a kind other than the declared one.
inline AnySystem parse_system(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  const auto& header = lines.front();
  if (header.tokens.size() != 3)
    throw ParseError(header.number, header.tokens.front().column, "header must read '<trop|sym|sup> <m> <n>'");
  const auto kind = parse_kind(header.tokens[0].text);
  if (!kind) throw ParseError(header.number, header.tokens[0].column, "unknown semiring kind");
  const std::size_t m = detail::parse_dimension(header.tokens[1], header.number);
  const std::size_t n = detail::parse_dimension(header.tokens[2], header.number);
  switch (*kind) {
    case Kind::Tropical:
      return detail::parse_body<Trop>(lines, m, n);
    case Kind::Symmetrized:
      return detail::parse_body<Sym>(lines, m, n);
    case Kind::Supertropical:
      return detail::parse_body<Sup>(lines, m, n);
  }
  throw Error("unreachable");
}

inline AnySystem read_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

template <Scalar S>
std::string write_system(const System<S>& sys) {
  std::string out = std::string(kind_name(sys.kind)) + " " + std::to_string(sys.rows()) + " " + std::to_string(sys.cols()) + "\n";
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    for (std::size_t j = 0; j < sys.cols(); ++j) {
      if (j) out += ' ';
      out += to_token(sys.a(i, j));
    }
    out += '\n';
  }
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    if (i) out += ' ';
    out += to_token(sys.b[i]);
  }
  return out + '\n';
}

inline std::string write_system(const AnySystem& sys) {
  return std::visit([](const auto& s) { return write_system(s); }, sys);
}

}  // namespace laytrop
