#pragma once

// Textual forms of scalars.
//
// ASCII tokens (files and structured output):
//   z            zero of any kind
//   K            tropical integer / positive signed / tangible
//   n:K  b:K     ⊖K and K• (symmetrized)
//   g:K          K° (supertropical)
// Pretty forms (human output) use the glyphs ⊖, • and °.

#include <charconv>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "laytrop/error.hpp"
#include "laytrop/scalar.hpp"

namespace laytrop {

inline std::string to_token(Trop a) { return a.is_zero() ? "z" : std::to_string(a.value()); }

inline std::string to_token(const Sym& a) {
  switch (a.layer()) {
    case SymLayer::Zero:
      return "z";
    case SymLayer::Plus:
      return std::to_string(a.magnitude().value());
    case SymLayer::Minus:
      return "n:" + std::to_string(a.magnitude().value());
    case SymLayer::Balanced:
      return "b:" + std::to_string(a.magnitude().value());
  }
  return "?";
}

inline std::string to_token(const Sup& a) {
  switch (a.layer()) {
    case SupLayer::Zero:
      return "z";
    case SupLayer::Tangible:
      return std::to_string(a.magnitude().value());
    case SupLayer::Ghost:
      return "g:" + std::to_string(a.magnitude().value());
  }
  return "?";
}

inline std::string to_pretty(Trop a) { return a.is_zero() ? "-∞" : std::to_string(a.value()); }

inline std::string to_pretty(const Sym& a) {
  switch (a.layer()) {
    case SymLayer::Zero:
      return "𝟎";
    case SymLayer::Plus:
      return std::to_string(a.magnitude().value());
    case SymLayer::Minus:
      return "⊖" + std::to_string(a.magnitude().value());
    case SymLayer::Balanced:
      return std::to_string(a.magnitude().value()) + "•";
  }
  return "?";
}

inline std::string to_pretty(const Sup& a) {
  switch (a.layer()) {
    case SupLayer::Zero:
      return "𝟎";
    case SupLayer::Tangible:
      return std::to_string(a.magnitude().value());
    case SupLayer::Ghost:
      return std::to_string(a.magnitude().value()) + "°";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Trop a) { return os << to_pretty(a); }
template <class L>
std::ostream& operator<<(std::ostream& os, const Layered<L>& a) {
  return os << to_pretty(a);
}

namespace detail {

/// Parses a signed decimal integer occupying the whole of `text`.
inline bool parse_integer(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace detail

/// Thrown by parse_token for text that is not a token of any kind.
class BadToken : public Error {
 public:
  using Error::Error;
};

/// Parses one ASCII token as a scalar of kind S. Throws KindMismatch for a
/// well-formed token of another kind, BadToken for malformed text and
/// MagnitudeOverflow for an integer outside the admissible range.
template <class S>
S parse_token(std::string_view tok) {
  if (tok == "z") return S::zero();
  std::string_view prefix;
  std::string_view digits = tok;
  if (tok.size() >= 2 && tok[1] == ':') {
    prefix = tok.substr(0, 1);
    digits = tok.substr(2);
  }
  if (!prefix.empty() && prefix != "n" && prefix != "b" && prefix != "g")
    throw BadToken("unknown token prefix in '" + std::string(tok) + "'");
  std::int64_t v = 0;
  if (!detail::parse_integer(digits, v)) {
    // from_chars reports out-of-range separately; surface it as overflow.
    std::int64_t probe = 0;
    auto d = digits.substr(!digits.empty() && digits[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), probe);
    if (ec == std::errc::result_out_of_range && ptr == d.data() + d.size())
      throw MagnitudeOverflow("integer out of range in '" + std::string(tok) + "'");
    throw BadToken("malformed token '" + std::string(tok) + "'");
  }
  auto mismatch = [&] {
    return KindMismatch("token '" + std::string(tok) + "' is not a " + kind_name(kind_of<S>) + " scalar");
  };
  if constexpr (std::same_as<S, Trop>) {
    if (!prefix.empty()) throw mismatch();
    return Trop(v);
  } else if constexpr (std::same_as<S, Sym>) {
    if (prefix.empty()) return Sym::plus(v);
    if (prefix == "n") return Sym::minus(v);
    if (prefix == "b") return Sym::balanced(v);
    throw mismatch();
  } else {
    static_assert(std::same_as<S, Sup>);
    if (prefix.empty()) return Sup::tangible(v);
    if (prefix == "g") return Sup::ghost(v);
    throw mismatch();
  }
}

template <class S>
std::vector<std::string> to_tokens(const std::vector<S>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_token(x));
  return out;
}

template <class S>
std::string to_pretty(const std::vector<S>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_pretty(v[i]);
  }
  return s + ")";
}

}  // namespace laytrop
