#include "klein/gf.hpp"

#include <bit>
#include <sstream>

#include "klein/error.hpp"

namespace klein {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonInvertibleLeadingCoefficient: return "NonInvertibleLeadingCoefficient";
    case ErrorCode::ParametricCoefficients: return "ParametricCoefficients";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InfiniteFootprint: return "InfiniteFootprint";
    case ErrorCode::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::SupportNotBelowM: return "SupportNotBelowM";
    case ErrorCode::NotInFootprint: return "NotInFootprint";
    case ErrorCode::UncertifiedLeadingCoefficient: return "UncertifiedLeadingCoefficient";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::UnjustifiedClaim: return "UnjustifiedClaim";
    case ErrorCode::VacuousEverywhere: return "VacuousEverywhere";
    case ErrorCode::UnsatisfiableLeaf: return "UnsatisfiableLeaf";
  }
  return "Unknown";
}

}  // namespace klein

namespace klein::gf {
namespace {

int degree_of(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = degree_of(m);
  for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
  return a;
}

// Carry-less product reduced modulo `modulus` (degree m).
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << m)) a ^= modulus;
  }
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t poly_bits) {
  const int m = degree_of(poly_bits);
  if (m < 1) return false;
  for (std::uint32_t d = 2; degree_of(d) <= m / 2; ++d) {
    if (poly_mod(poly_bits, d) == 0) return false;
  }
  return true;
}

Field::Field(unsigned m, std::uint32_t modulus_bits) : m_(m), modulus_(modulus_bits) {
  if (m < 1 || m > 16) throw Error(ErrorCode::InvalidField, "extension degree must be in [1,16]");
  if (degree_of(modulus_bits) != static_cast<int>(m)) {
    throw Error(ErrorCode::InvalidField, "modulus must have degree exactly m");
  }
  if (!is_irreducible(modulus_bits)) {
    std::ostringstream os;
    os << "modulus 0x" << std::hex << modulus_bits << " factors over GF(2)";
    throw Error(ErrorCode::ReducibleModulus, os.str());
  }
  q_ = 1u << m;
  const std::uint32_t order = q_ - 1;

  // x is not primitive for every irreducible modulus; search for a generator.
  std::uint32_t gen = 0;
  for (std::uint32_t g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    do {
      x = clmul_mod(x, g, modulus_, m_);
      ++k;
    } while (x != 1);
    if (k == order) {
      gen = g;
      break;
    }
  }

  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    exp_[i + order] = static_cast<std::uint16_t>(x);
    log_[x] = i;
    x = clmul_mod(x, gen, modulus_, m_);
  }

  if (m_ <= 8) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        mul_table_[a * q_ + b] =
            mul(Element{static_cast<std::uint16_t>(a)}, Element{static_cast<std::uint16_t>(b)}).enc;
      }
    }
  }
}

const Field& Field::gf8() {
  static const Field field(3, 0b1011);
  return field;
}

Element Field::make(std::uint32_t enc) const {
  if (enc >= q_) {
    throw Error(ErrorCode::DomainMismatch, "encoding " + std::to_string(enc) + " outside GF(" +
                                               std::to_string(q_) + ")");
  }
  return {static_cast<std::uint16_t>(enc)};
}

Element Field::inv(Element a) const {
  if (a.enc == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return {exp_[(order - log_[a.enc]) % order]};
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.enc == 0) return zero();
  const std::uint64_t order = q_ - 1;
  return {exp_[(log_[a.enc] * (e % order)) % order]};
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back({static_cast<std::uint16_t>(i)});
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ") modulus 0x" << std::hex << modulus_;
  return os.str();
}

}  // namespace klein::gf
