#include "klein/oracle.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "klein/rng.hpp"

namespace klein::oracle {
namespace {

constexpr std::uint64_t kLowBytes = 0x0101010101010101ull;

}  // namespace

AffineScanner::AffineScanner(const gf::Field& field, std::vector<Element> base,
                             std::vector<std::vector<Element>> directions, bool skip_zero)
    : field_(&field), bits_(field.degree()), n_(base.size()), words_((base.size() + 7) / 8),
      dirs_(std::move(directions)), skip_zero_(skip_zero) {
  if (field.degree() > 8) throw Error(ErrorCode::InvalidField, "oracles pack one coordinate per byte");
  for (const auto& d : dirs_) {
    if (d.size() != n_) throw Error(ErrorCode::ArityMismatch, "direction length differs from base");
  }
  base_ = pack(base);
  const std::uint32_t q = field.size();
  scaled_.assign(dirs_.size() * q * words_, 0);
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    for (std::uint32_t c = 0; c < q; ++c) {
      std::vector<Element> v(n_);
      for (std::size_t j = 0; j < n_; ++j) v[j] = field.mul(field.make(c), dirs_[i][j]);
      const auto packed = pack(v);
      std::copy(packed.begin(), packed.end(), scaled_.begin() + static_cast<std::ptrdiff_t>((i * q + c) * words_));
    }
  }
}

std::vector<std::uint64_t> AffineScanner::pack(const std::vector<Element>& v) const {
  std::vector<std::uint64_t> out(words_, 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j / 8] |= std::uint64_t{v[j].enc} << (8 * (j % 8));
  }
  return out;
}

std::uint32_t AffineScanner::weight(const std::uint64_t* w) const {
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t y = w[i] | (w[i] >> 4);
    y |= y >> 2;
    y |= y >> 1;
    total += static_cast<std::uint32_t>(std::popcount(y & kLowBytes));
  }
  return total;
}

std::uint64_t AffineScanner::state_count() const {
  const std::size_t k = dirs_.size();
  if (k * bits_ >= 63) return ~std::uint64_t{0};
  return std::uint64_t{1} << (k * bits_);
}

void AffineScanner::check_enumerable() const {
  if (dirs_.size() * bits_ >= 63) {
    throw Error(ErrorCode::DimensionTooLarge, "state space does not fit in 63 bits");
  }
}

std::vector<Element> AffineScanner::plain_digits(std::uint64_t s) const {
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  std::vector<Element> d(dirs_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i].enc = static_cast<std::uint16_t>((s >> (i * bits_)) & mask);
  return d;
}

// g_i(s) = (s_i - s_{i+1}) mod q for base-q digits s_i.
std::vector<Element> AffineScanner::gray_digits(std::uint64_t s) const {
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  std::vector<Element> d(dirs_.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::uint64_t si = (s >> (i * bits_)) & mask;
    const std::uint64_t next = i + 1 < d.size() ? (s >> ((i + 1) * bits_)) & mask : 0;
    d[i].enc = static_cast<std::uint16_t>((si - next) & mask);
  }
  return d;
}

template <class F>
std::vector<AffineScanner::Chunk> AffineScanner::run_chunks(std::uint64_t total, unsigned jobs,
                                                            F&& f) const {
  jobs = std::max(1u, jobs);
  if (total < 4096) jobs = 1;
  std::vector<Chunk> results(jobs);
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t begin = total / jobs * j + std::min<std::uint64_t>(j, total % jobs);
    const std::uint64_t end = begin + total / jobs + (j < total % jobs ? 1 : 0);
    if (jobs == 1) {
      results[j] = f(begin, end);
    } else {
      threads.emplace_back([&, j, begin, end] { results[j] = f(begin, end); });
    }
  }
  for (auto& t : threads) t.join();
  return results;
}

AffineScanner::Chunk AffineScanner::scan_gray_range(std::uint64_t begin, std::uint64_t end) const {
  Chunk best{~std::uint32_t{0}, ~std::uint64_t{0}};
  if (begin >= end) return best;
  const std::uint32_t q = field_->size();
  const std::uint64_t mask = q - 1;
  std::vector<Element> digits = gray_digits(begin);
  std::vector<std::uint64_t> cur = base_;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::uint64_t* add = &scaled_[(i * q + digits[i].enc) * words_];
    for (std::size_t w = 0; w < words_; ++w) cur[w] ^= add[w];
  }
  std::vector<std::uint16_t> d(digits.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = digits[i].enc;

  auto consider = [&](std::uint64_t s) {
    if (skip_zero_ && s == 0) return;
    const std::uint32_t wt = weight(cur.data());
    if (wt < best.min_weight) best = {wt, s};
  };
  consider(begin);
  for (std::uint64_t s = begin + 1; s < end; ++s) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(s)) / bits_;
    const std::uint16_t old = d[i];
    const std::uint16_t nxt = static_cast<std::uint16_t>((old + 1) & mask);
    d[i] = nxt;
    const std::uint64_t* delta = &scaled_[(i * q + (old ^ nxt)) * words_];
    for (std::size_t w = 0; w < words_; ++w) cur[w] ^= delta[w];
    consider(s);
  }
  return best;
}

AffineScanner::Chunk AffineScanner::scan_plain_range(std::uint64_t begin, std::uint64_t end) const {
  Chunk best{~std::uint32_t{0}, ~std::uint64_t{0}};
  const std::uint32_t q = field_->size();
  std::vector<std::uint64_t> cur(words_);
  for (std::uint64_t s = begin; s < end; ++s) {
    if (skip_zero_ && s == 0) continue;
    cur = base_;
    const auto digits = plain_digits(s);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const std::uint64_t* add = &scaled_[(i * q + digits[i].enc) * words_];
      for (std::size_t w = 0; w < words_; ++w) cur[w] ^= add[w];
    }
    const std::uint32_t wt = weight(cur.data());
    if (wt < best.min_weight) best = {wt, s};
  }
  return best;
}

namespace {

template <class Chunk>
Chunk merge(const std::vector<Chunk>& chunks) {
  Chunk best = chunks.front();
  for (const auto& c : chunks) {
    if (c.min_weight < best.min_weight || (c.min_weight == best.min_weight && c.index < best.index)) best = c;
  }
  return best;
}

}  // namespace

ScanResult AffineScanner::exhaustive(unsigned jobs) const {
  check_enumerable();
  const std::uint64_t total = state_count();
  auto best = merge(run_chunks(total, jobs, [this](std::uint64_t b, std::uint64_t e) {
    return scan_plain_range(b, e);
  }));
  return {best.min_weight, true, total - (skip_zero_ ? 1 : 0), plain_digits(best.index)};
}

ScanResult AffineScanner::gray(unsigned jobs) const {
  check_enumerable();
  const std::uint64_t total = state_count();
  auto best = merge(run_chunks(total, jobs, [this](std::uint64_t b, std::uint64_t e) {
    return scan_gray_range(b, e);
  }));
  return {best.min_weight, true, total - (skip_zero_ ? 1 : 0), gray_digits(best.index)};
}

ScanResult AffineScanner::sample(std::uint64_t seed, std::uint64_t count, unsigned jobs) const {
  const std::uint32_t q = field_->size();
  auto draw = [&](std::uint64_t index) {
    SplitMix64 rng = SplitMix64::stream(seed, index);
    std::vector<Element> digits(dirs_.size());
    for (auto& dgt : digits) dgt.enc = static_cast<std::uint16_t>(rng.below(q));
    return digits;
  };
  auto best = merge(run_chunks(count, jobs, [&](std::uint64_t b, std::uint64_t e) {
    Chunk local{~std::uint32_t{0}, ~std::uint64_t{0}};
    std::vector<std::uint64_t> cur(words_);
    for (std::uint64_t s = b; s < e; ++s) {
      const auto digits = draw(s);
      if (skip_zero_ && std::all_of(digits.begin(), digits.end(), [](Element x) { return x.is_zero(); })) {
        continue;
      }
      cur = base_;
      for (std::size_t i = 0; i < digits.size(); ++i) {
        const std::uint64_t* add = &scaled_[(i * q + digits[i].enc) * words_];
        for (std::size_t w = 0; w < words_; ++w) cur[w] ^= add[w];
      }
      const std::uint32_t wt = weight(cur.data());
      if (wt < local.min_weight) local = {wt, s};
    }
    return local;
  }));
  ScanResult out{best.min_weight, false, count, {}};
  if (best.index != ~std::uint64_t{0}) out.argmin = draw(best.index);
  return out;
}

ScanResult min_distance(const codes::EvaluationCode& code, const Strategy& strategy, unsigned jobs) {
  if (code.k == 0) throw Error(ErrorCode::DimensionTooLarge, "zero code has no nonzero codeword");
  AffineScanner scanner(*code.field, std::vector<Element>(code.n), code.generator, true);
  if (const auto* ex = std::get_if<Exhaustive>(&strategy)) {
    if (code.k > ex->limit_k) {
      throw Error(ErrorCode::DimensionTooLarge, "k = " + std::to_string(code.k) + " exceeds exhaustive limit " +
                                                    std::to_string(ex->limit_k));
    }
    return scanner.gray(jobs);
  }
  if (const auto* gr = std::get_if<Gray>(&strategy)) {
    if (code.k > gr->limit) throw Error(ErrorCode::DimensionTooLarge, "k exceeds gray limit");
    return scanner.gray(jobs);
  }
  const auto& sm = std::get<Sample>(strategy);
  return scanner.sample(sm.seed, sm.count, jobs);
}

std::vector<poly::Monomial> monomials_below(const poly::Monomial& lead, const groebner::Footprint& fp) {
  const std::size_t idx = fp.index_of(lead);
  std::vector<poly::Monomial> out(fp.monomials.begin(), fp.monomials.begin() + static_cast<std::ptrdiff_t>(idx));
  std::reverse(out.begin(), out.end());
  return out;
}

ScanResult coset_min_weight(const poly::Monomial& lead, const std::vector<poly::Monomial>& support,
                            const codes::Variety& v, const poly::FieldPolyRing& ring,
                            const groebner::Footprint& fp, const Strategy& strategy, unsigned jobs) {
  fp.index_of(lead);
  std::vector<std::vector<Element>> dirs;
  for (const auto& m : support) {
    if (!fp.contains(m) || !ring.order().less(m, lead)) {
      throw Error(ErrorCode::SupportNotBelowM,
                  poly::to_string(m) + " is not a footprint monomial below " + poly::to_string(lead));
    }
    dirs.push_back(codes::evaluation_vector(poly::FieldPoly::monomial(ring, m), v));
  }
  AffineScanner scanner(ring.coeffs().field(),
                        codes::evaluation_vector(poly::FieldPoly::monomial(ring, lead), v), std::move(dirs),
                        false);
  if (const auto* ex = std::get_if<Exhaustive>(&strategy)) {
    if (support.size() > ex->limit_k) throw Error(ErrorCode::DimensionTooLarge, "too many free coefficients");
    return scanner.exhaustive(jobs);
  }
  if (const auto* gr = std::get_if<Gray>(&strategy)) {
    if (support.size() > gr->limit) throw Error(ErrorCode::DimensionTooLarge, "too many free coefficients");
    return scanner.gray(jobs);
  }
  const auto& sm = std::get<Sample>(strategy);
  return scanner.sample(sm.seed, sm.count, jobs);
}

}  // namespace klein::oracle
