#include "klein/param.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "klein/rng.hpp"

namespace klein::casebound {

ParamCoeffs::ParamCoeffs(const gf::Field& field, std::size_t params)
    : field_(&field), params_(params), bits_(field.degree()), mask_((1ull << field.degree()) - 1) {
  // Exponents run over 0..q-1, which needs exactly m bits.
  if (params * bits_ > 64) {
    throw Error(ErrorCode::DomainMismatch,
                std::to_string(params) + " parameters do not fit the packed exponent word");
  }
}

ParamCoef ParamCoeffs::constant(Element c) const {
  ParamCoef out;
  if (!c.is_zero()) out.terms.emplace_back(0, c);
  return out;
}

ParamCoef ParamCoeffs::param(std::size_t index) const {
  if (index == 0 || index > params_) {
    throw Error(ErrorCode::DomainMismatch, "parameter a" + std::to_string(index) + " out of range");
  }
  ParamCoef out;
  out.terms.emplace_back(ParamMono{1} << ((index - 1) * bits_), field_->one());
  return out;
}

bool ParamCoeffs::term_less(ParamMono a, ParamMono b) const {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < params_; ++i) {
    da += exponent(a, i);
    db += exponent(b, i);
  }
  if (da != db) return da < db;
  for (std::size_t i = 0; i < params_; ++i) {
    const unsigned ea = exponent(a, i), eb = exponent(b, i);
    if (ea != eb) return ea < eb;
  }
  return false;
}

ParamMono ParamCoeffs::mono_mul(ParamMono a, ParamMono b) const {
  // a^e with e >= q equals a^(e - (q - 1)) on GF(q).
  const unsigned q1 = static_cast<unsigned>(mask_);
  ParamMono out = 0;
  for (std::size_t i = 0; (a | b) >> (i * bits_) != 0 && i < params_; ++i) {
    unsigned e = exponent(a, i) + exponent(b, i);
    if (e > q1) e -= q1;
    out |= ParamMono{e} << (i * bits_);
  }
  return out;
}

ParamCoef ParamCoeffs::normalize(std::vector<std::pair<ParamMono, Element>> terms) const {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  ParamCoef out;
  for (const auto& [m, c] : terms) {
    if (!out.terms.empty() && out.terms.back().first == m) {
      out.terms.back().second = field_->add(out.terms.back().second, c);
      if (out.terms.back().second.is_zero()) out.terms.pop_back();
    } else if (!c.is_zero()) {
      out.terms.emplace_back(m, c);
    }
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [this](const auto& x, const auto& y) { return term_less(y.first, x.first); });
  return out;
}

ParamCoef ParamCoeffs::add(const ParamCoef& a, const ParamCoef& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<std::pair<ParamMono, Element>> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return normalize(std::move(terms));
}

ParamCoef ParamCoeffs::mul(const ParamCoef& a, const ParamCoef& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::pair<ParamMono, Element>> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) terms.emplace_back(mono_mul(ma, mb), field_->mul(ca, cb));
  }
  return normalize(std::move(terms));
}

ParamCoef ParamCoeffs::scale(const ParamCoef& a, Element c) const {
  if (c.is_zero()) return {};
  ParamCoef out = a;
  for (auto& t : out.terms) t.second = field_->mul(t.second, c);
  return out;
}

ParamCoef ParamCoeffs::pow(const ParamCoef& a, unsigned e) const {
  ParamCoef out = one();
  for (unsigned i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

std::optional<ParamCoef> ParamCoeffs::inverse(const ParamCoef& a) const {
  auto c = as_constant(a);
  if (!c || c->is_zero()) return std::nullopt;
  return constant(field_->inv(*c));
}

std::optional<Element> ParamCoeffs::as_constant(const ParamCoef& a) const {
  if (a.is_zero()) return field_->zero();
  if (a.terms.size() == 1 && a.terms.front().first == 0) return a.terms.front().second;
  return std::nullopt;
}

ParamCoef ParamCoeffs::from_factors(Element c,
                                    std::span<const std::pair<unsigned, unsigned>> params) const {
  ParamCoef out = constant(c);
  for (const auto& [index, e] : params) out = mul(out, pow(param(index), e));
  return out;
}

std::uint64_t ParamCoeffs::variables(const ParamCoef& a) const {
  std::uint64_t vars = 0;
  for (const auto& [m, c] : a.terms) {
    for (std::size_t i = 0; m >> (i * bits_) != 0; ++i) {
      if (exponent(m, i) != 0) vars |= 1ull << i;
    }
  }
  return vars;
}

Element ParamCoeffs::eval(const ParamCoef& a, const Assignment& values) const {
  Element acc = field_->zero();
  for (const auto& [m, c] : a.terms) {
    Element v = c;
    for (std::size_t i = 0; m >> (i * bits_) != 0; ++i) {
      const unsigned e = exponent(m, i);
      if (e != 0) v = field_->mul(v, field_->pow(values[i], e));
    }
    acc = field_->add(acc, v);
  }
  return acc;
}

unsigned ParamCoeffs::degree_in(const ParamCoef& a, std::size_t index) const {
  unsigned d = 0;
  for (const auto& [m, c] : a.terms) d = std::max(d, exponent(m, index - 1));
  return d;
}

ParamCoef ParamCoeffs::substitute(const ParamCoef& a, std::size_t index, const ParamCoef& value) const {
  const std::size_t i = index - 1;
  const std::uint64_t bit = 1ull << i;
  if ((variables(a) & bit) == 0) return a;
  std::vector<ParamCoef> powers{one()};
  ParamCoef out;
  for (const auto& [m, c] : a.terms) {
    const unsigned e = exponent(m, i);
    ParamCoef rest;
    rest.terms.emplace_back(m & ~(mask_ << (i * bits_)), c);
    while (powers.size() <= e) powers.push_back(mul(powers.back(), value));
    out = add(out, mul(rest, powers[e]));
  }
  return out;
}

std::vector<std::string> ParamCoeffs::print_parts(const ParamCoef& a) const {
  std::vector<std::string> parts;
  for (const auto& [m, c] : a.terms) {
    std::string s = c.enc == 1 ? "" : std::to_string(c.enc);
    for (std::size_t i = 0; i < params_; ++i) {
      const unsigned e = exponent(m, i);
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += "a" + std::to_string(i + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
    parts.push_back(std::move(s));
  }
  return parts;
}

std::string ParamCoeffs::to_string(const ParamCoef& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& p : print_parts(a)) {
    if (!out.empty()) out += " + ";
    out += p.empty() ? "1" : p;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> bits_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Calls f on every assignment of `vars` (others left at zero) until f returns true.
template <class F>
bool for_each_assignment(const gf::Field& field, std::size_t params, std::uint64_t vars, F&& f) {
  const auto idx = bits_of(vars);
  Assignment a(params, field.zero());
  const std::uint32_t q = field.size();
  std::vector<std::uint32_t> digits(idx.size(), 0);
  while (true) {
    if (f(a)) return true;
    std::size_t k = 0;
    while (k < idx.size()) {
      if (++digits[k] < q) {
        a[idx[k]] = field.make(digits[k]);
        break;
      }
      digits[k] = 0;
      a[idx[k]] = field.zero();
      ++k;
    }
    if (k == idx.size()) return false;
  }
}

}  // namespace

ConstraintStore::ConstraintStore(const ParamCoeffs& coeffs)
    : coeffs_(&coeffs), subs_(coeffs.params()) {}

ParamCoef ConstraintStore::reduce(const ParamCoef& e) const {
  ParamCoef out = e;
  std::uint64_t vars = coeffs_->variables(out);
  for (std::size_t i : bits_of(vars)) {
    if (subs_[i]) out = coeffs_->substitute(out, i + 1, *subs_[i]);
  }
  return out;
}

ParamPoly ConstraintStore::reduce(const ParamPoly& p) const {
  return p.map_coefficients([this](const ParamCoef& c) { return reduce(c); });
}

std::uint64_t ConstraintStore::closure(std::uint64_t vars) const {
  std::vector<std::uint64_t> masks;
  for (const auto& e : nonzeros_) masks.push_back(coeffs_->variables(e));
  for (const auto& e : zeros_) masks.push_back(coeffs_->variables(e));
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto m : masks) {
      if ((m & vars) != 0 && (m & ~vars) != 0) {
        vars |= m;
        grew = true;
      }
    }
  }
  return vars;
}

ConstraintStore::Scan ConstraintStore::scan(const ParamCoef& e) const {
  Scan out;
  const std::uint64_t vars = closure(coeffs_->variables(e));
  if (static_cast<std::size_t>(std::popcount(vars)) > kExhaustiveParams) return out;
  out.known = true;
  std::vector<const ParamCoef*> nz, z;
  for (const auto& c : nonzeros_) {
    if ((coeffs_->variables(c) & ~vars) == 0) nz.push_back(&c);
  }
  for (const auto& c : zeros_) {
    if ((coeffs_->variables(c) & ~vars) == 0) z.push_back(&c);
  }
  for_each_assignment(coeffs_->field(), coeffs_->params(), vars, [&](const Assignment& a) {
    for (const auto* c : nz) {
      if (coeffs_->eval(*c, a).is_zero()) return false;
    }
    for (const auto* c : z) {
      if (!coeffs_->eval(*c, a).is_zero()) return false;
    }
    (coeffs_->eval(e, a).is_zero() ? out.any_zero : out.any_nonzero) = true;
    return out.any_zero && out.any_nonzero;
  });
  return out;
}

bool ConstraintStore::is_zero(const ParamCoef& e) const {
  const ParamCoef r = reduce(e);
  if (r.is_zero()) return true;
  if (coeffs_->as_constant(r)) return false;
  const Scan s = scan(r);
  return s.known && !s.any_nonzero;
}

bool ConstraintStore::certified_nonzero(const ParamCoef& e) const {
  const ParamCoef r = reduce(e);
  if (r.is_zero()) return false;
  if (coeffs_->as_constant(r)) return true;
  if (std::find(nonzeros_.begin(), nonzeros_.end(), r) != nonzeros_.end()) return true;
  const Scan s = scan(r);
  return s.known && !s.any_zero;
}

std::optional<std::pair<std::size_t, ParamCoef>> ConstraintStore::solve_linear(const ParamCoef& e) const {
  const std::uint64_t vars = coeffs_->variables(e);
  for (std::size_t i : bits_of(vars)) {
    // a_i must occur in exactly one term, alone and to the first power.
    const ParamMono alone = ParamMono{1} << (i * coeffs_->field().degree());
    std::size_t hits = 0;
    Element c{};
    bool ok = true;
    for (const auto& [m, k] : e.terms) {
      if (coeffs_->exponent(m, i) == 0) continue;
      ++hits;
      if (m != alone) ok = false;
      c = k;
    }
    if (!ok || hits != 1) continue;
    ParamCoef rest = coeffs_->add(e, coeffs_->scale(coeffs_->param(i + 1), c));
    return std::pair{i, coeffs_->scale(rest, coeffs_->field().inv(c))};
  }
  return std::nullopt;
}

void ConstraintStore::add_substitution(std::size_t i, const ParamCoef& value) {
  for (auto& s : subs_) {
    if (s) s = coeffs_->substitute(*s, i + 1, value);
  }
  subs_[i] = value;
  std::vector<ParamCoef> nonzeros;
  for (const auto& e : nonzeros_) {
    ParamCoef r = coeffs_->substitute(e, i + 1, value);
    if (r.is_zero()) vacuous_ = true;
    if (!coeffs_->as_constant(r) && std::find(nonzeros.begin(), nonzeros.end(), r) == nonzeros.end()) {
      nonzeros.push_back(std::move(r));
    }
  }
  nonzeros_ = std::move(nonzeros);
  std::vector<ParamCoef> zeros = std::move(zeros_);
  zeros_.clear();
  for (const auto& e : zeros) add_zero(coeffs_->substitute(e, i + 1, value));
}

void ConstraintStore::add_zero(const ParamCoef& e) {
  const ParamCoef r = reduce(e);
  if (r.is_zero()) return;
  if (coeffs_->as_constant(r)) {
    vacuous_ = true;
    return;
  }
  if (auto lin = solve_linear(r)) {
    add_substitution(lin->first, lin->second);
  } else if (std::find(zeros_.begin(), zeros_.end(), r) == zeros_.end()) {
    zeros_.push_back(r);
  }
}

std::pair<ConstraintStore, ConstraintStore> ConstraintStore::branch(const ParamCoef& c) const {
  const ParamCoef r = reduce(c);
  ConstraintStore nonzero = *this;
  ConstraintStore zero = *this;
  if (r.is_zero()) {
    nonzero.vacuous_ = true;
  } else if (!coeffs_->as_constant(r) &&
             std::find(nonzeros_.begin(), nonzeros_.end(), r) == nonzeros_.end()) {
    nonzero.nonzeros_.push_back(r);
  }
  zero.add_zero(r);
  if (!nonzero.vacuous_) nonzero.check_satisfiable();
  if (!zero.vacuous_) zero.check_satisfiable();
  return {std::move(nonzero), std::move(zero)};
}

std::optional<Assignment> ConstraintStore::solve_component(std::uint64_t vars, std::uint64_t seed,
                                                           bool& decided) const {
  const gf::Field& f = coeffs_->field();
  std::vector<const ParamCoef*> nz, z;
  for (const auto& c : nonzeros_) {
    if ((coeffs_->variables(c) & vars) != 0) nz.push_back(&c);
  }
  for (const auto& c : zeros_) {
    if ((coeffs_->variables(c) & vars) != 0) z.push_back(&c);
  }
  auto ok = [&](const Assignment& a) {
    for (const auto* c : nz) {
      if (coeffs_->eval(*c, a).is_zero()) return false;
    }
    for (const auto* c : z) {
      if (!coeffs_->eval(*c, a).is_zero()) return false;
    }
    return true;
  };
  const auto idx = bits_of(vars);
  SplitMix64 rng(seed);
  Assignment a(coeffs_->params(), f.zero());
  for (int t = 0; t < 256; ++t) {
    for (std::size_t i : idx) a[i] = f.make(static_cast<std::uint32_t>(rng.below(f.size())));
    if (ok(a)) {
      decided = true;
      return a;
    }
  }
  if (idx.size() > kExhaustiveParams) {
    decided = false;
    return std::nullopt;
  }
  decided = true;
  std::optional<Assignment> found;
  for_each_assignment(f, coeffs_->params(), vars, [&](const Assignment& x) {
    if (!ok(x)) return false;
    found = x;
    return true;
  });
  return found;
}

void ConstraintStore::check_satisfiable() {
  // Unsatisfiable components make the branch vacuous; components too large
  // to decide are kept (the branch then still counts towards the minimum).
  std::uint64_t pending = 0;
  for (const auto& e : nonzeros_) pending |= coeffs_->variables(e);
  for (const auto& e : zeros_) pending |= coeffs_->variables(e);
  while (pending != 0) {
    const std::uint64_t comp = closure(pending & (~pending + 1));
    pending &= ~comp;
    bool decided = false;
    if (!solve_component(comp, comp, decided) && decided) {
      vacuous_ = true;
      return;
    }
  }
}

bool ConstraintStore::satisfied_by(Assignment& values) const {
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    if (subs_[i]) values[i] = coeffs_->eval(*subs_[i], values);
  }
  for (const auto& e : nonzeros_) {
    if (coeffs_->eval(e, values).is_zero()) return false;
  }
  for (const auto& e : zeros_) {
    if (!coeffs_->eval(e, values).is_zero()) return false;
  }
  return true;
}

std::optional<Assignment> ConstraintStore::witness(std::uint64_t seed) const {
  if (vacuous_) return std::nullopt;
  const gf::Field& f = coeffs_->field();
  SplitMix64 rng(seed);
  Assignment a(coeffs_->params(), f.zero());
  for (auto& x : a) x = f.make(static_cast<std::uint32_t>(rng.below(f.size())));
  std::uint64_t pending = 0;
  for (const auto& e : nonzeros_) pending |= coeffs_->variables(e);
  for (const auto& e : zeros_) pending |= coeffs_->variables(e);
  while (pending != 0) {
    const std::uint64_t comp = closure(pending & (~pending + 1));
    pending &= ~comp;
    bool decided = false;
    auto part = solve_component(comp, rng.next(), decided);
    if (!part) return std::nullopt;
    for (std::size_t i : bits_of(comp)) a[i] = (*part)[i];
  }
  if (!satisfied_by(a)) return std::nullopt;
  return a;
}

std::string ConstraintStore::describe() const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    if (subs_[i]) parts.push_back("a" + std::to_string(i + 1) + " = " + coeffs_->to_string(*subs_[i]));
  }
  for (const auto& e : zeros_) parts.push_back(coeffs_->to_string(e) + " = 0");
  for (const auto& e : nonzeros_) parts.push_back(coeffs_->to_string(e) + " != 0");
  if (parts.empty()) return "unconstrained";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace klein::casebound
