#include <cctype>

#include "klein/polynomial.hpp"

namespace klein::poly::detail {
namespace {

std::uint64_t read_number(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw Error(ErrorCode::ParseError, "expected a number in '" + s + "'");
  }
  std::uint64_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    if (v > kDefaultExponentCap) throw Error(ErrorCode::ParseError, "number too large in '" + s + "'");
    ++pos;
  }
  return v;
}

std::uint64_t read_exponent(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    return read_number(s, pos);
  }
  return 1;
}

ParsedTerm parse_term(const std::string& term, const gf::Field& field, std::size_t arity) {
  ParsedTerm out{field.one(), {}, Monomial(arity)};
  std::size_t pos = 0;
  if (term.empty()) throw Error(ErrorCode::ParseError, "empty term");
  while (pos < term.size()) {
    const char c = term[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = read_number(term, pos);
      if (v >= field.size()) {
        throw Error(ErrorCode::ParseError,
                    "coefficient " + std::to_string(v) + " is not an element encoding");
      }
      out.coef = field.mul(out.coef, field.make(static_cast<std::uint32_t>(v)));
    } else if (c == 'a') {
      ++pos;
      const std::uint64_t index = read_number(term, pos);
      if (index == 0) throw Error(ErrorCode::ParseError, "parameters are numbered from a1");
      const std::uint64_t e = read_exponent(term, pos);
      if (e > 0) out.params.emplace_back(static_cast<unsigned>(index), static_cast<unsigned>(e));
    } else {
      std::size_t var = arity;
      for (std::size_t i = 0; i < arity; ++i) {
        if (variable_name(arity, i)[0] == c) var = i;
      }
      if (var == arity) {
        throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, c) + "' in term '" + term + "'");
      }
      ++pos;
      const std::uint64_t e = read_exponent(term, pos);
      const std::uint64_t total = std::uint64_t{out.mono[var]} + e;
      if (total > kDefaultExponentCap) throw Error(ErrorCode::ExponentOverflow, "exponent above cap");
      out.mono[var] = static_cast<std::uint32_t>(total);
    }
    if (pos < term.size()) {
      if (term[pos] != '*') throw Error(ErrorCode::ParseError, "expected '*' in term '" + term + "'");
      ++pos;
      if (pos == term.size()) throw Error(ErrorCode::ParseError, "trailing '*' in term '" + term + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, const gf::Field& field,
                                    std::size_t arity) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  std::vector<ParsedTerm> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = compact.find('+', start);
    const std::string term =
        compact.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + compact + "'");
    ParsedTerm t = parse_term(term, field, arity);
    if (!t.coef.is_zero()) out.push_back(std::move(t));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

}  // namespace klein::poly::detail
