#include "klein/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "klein/error.hpp"

namespace klein::poly {

Monomial::Monomial(std::size_t arity) : arity_(arity) {
  if (arity > kMaxArity) throw Error(ErrorCode::ArityMismatch, "arity exceeds supported maximum");
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), exps_.begin());
}

Monomial::Monomial(std::span<const std::uint32_t> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), exps_.begin());
}

Monomial Monomial::var(std::size_t arity, std::size_t index, std::uint32_t exp) {
  Monomial m(arity);
  m.exps_[index] = exp;
  return m;
}

bool Monomial::is_one() const noexcept {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] != 0) return false;
  }
  return true;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (arity_ != other.arity_) throw Error(ErrorCode::ArityMismatch, "divisibility test");
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity_ != other.arity_) throw Error(ErrorCode::ArityMismatch, "monomial product");
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    std::uint64_t e = std::uint64_t{exps_[i]} + other.exps_[i];
    if (e > kDefaultExponentCap) {
      throw Error(ErrorCode::ExponentOverflow, "exponent above cap 2^20");
    }
    r.exps_[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = other.exps_[i] - exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (arity_ != other.arity_) throw Error(ErrorCode::ArityMismatch, "monomial lcm");
  Monomial r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

MonomialOrder MonomialOrder::lex(std::size_t arity) {
  MonomialOrder o;
  o.kind_ = OrderKind::lex;
  o.arity_ = arity;
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::uint32_t> weights, std::size_t tiebreak_var) {
  if (weights.empty() || weights.size() > kMaxArity || tiebreak_var >= weights.size()) {
    throw Error(ErrorCode::ArityMismatch, "weighted order needs one weight per variable");
  }
  for (auto w : weights) {
    if (w == 0) throw Error(ErrorCode::DomainMismatch, "weights must be positive");
  }
  MonomialOrder o;
  o.kind_ = OrderKind::weighted_deg_lex;
  o.arity_ = weights.size();
  o.weights_ = std::move(weights);
  o.tiebreak_ = tiebreak_var;
  return o;
}

MonomialOrder MonomialOrder::klein() { return weighted({2, 3}, 1); }

std::uint64_t MonomialOrder::weight(const Monomial& m) const {
  if (kind_ == OrderKind::lex) return m.total_degree();
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < arity_; ++i) w += std::uint64_t{weights_[i]} * m[i];
  return w;
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.arity() != arity_ || v.arity() != arity_) {
    throw Error(ErrorCode::ArityMismatch, "order of arity " + std::to_string(arity_) +
                                              " applied to monomials of arity " +
                                              std::to_string(u.arity()) + "/" +
                                              std::to_string(v.arity()));
  }
  if (kind_ == OrderKind::lex) {
    for (std::size_t i = 0; i < arity_; ++i) {
      if (u[i] != v[i]) return u[i] <=> v[i];
    }
    return std::strong_ordering::equal;
  }
  const std::uint64_t wu = weight(u);
  const std::uint64_t wv = weight(v);
  if (wu != wv) return wu <=> wv;
  if (u[tiebreak_] != v[tiebreak_]) return u[tiebreak_] <=> v[tiebreak_];
  for (std::size_t i = arity_; i-- > 0;) {
    if (i != tiebreak_ && u[i] != v[i]) return u[i] <=> v[i];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  if (kind_ == OrderKind::lex) {
    os << "lex(arity=" << arity_ << ")";
  } else {
    os << "wdeglex(weights=";
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << ", tiebreak=" << variable_name(arity_, tiebreak_) << ")";
  }
  return os.str();
}

std::string variable_name(std::size_t arity, std::size_t index) {
  static constexpr const char* kNames[] = {"X", "Y", "Z", "W"};
  (void)arity;
  return kNames[index];
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(m.arity(), i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t arity) {
  Monomial m(arity);
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "1") return m;
  if (compact.empty()) throw Error(ErrorCode::ParseError, "empty monomial");
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t index = arity;
    for (std::size_t i = 0; i < arity; ++i) {
      if (compact[pos] == variable_name(arity, i)[0]) index = i;
    }
    if (index == arity) {
      throw Error(ErrorCode::ParseError, "unexpected '" + std::string(1, compact[pos]) +
                                             "' in monomial '" + std::string(text) + "'");
    }
    ++pos;
    std::uint64_t e = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      if (pos >= compact.size() || !std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        throw Error(ErrorCode::ParseError, "missing exponent in '" + std::string(text) + "'");
      }
      e = 0;
      while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) {
        e = e * 10 + static_cast<std::uint64_t>(compact[pos] - '0');
        if (e > kDefaultExponentCap) throw Error(ErrorCode::ExponentOverflow, "exponent above cap");
        ++pos;
      }
    }
    m[index] += static_cast<std::uint32_t>(e);
    if (pos < compact.size()) {
      if (compact[pos] != '*') {
        throw Error(ErrorCode::ParseError, "expected '*' in monomial '" + std::string(text) + "'");
      }
      ++pos;
      if (pos == compact.size()) throw Error(ErrorCode::ParseError, "trailing '*'");
    }
  }
  return m;
}

}  // namespace klein::poly
