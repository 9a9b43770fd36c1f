#include <doctest.h>

#include "klein/expected.hpp"
#include "klein/oracle.hpp"
#include "klein/rng.hpp"
#include "klein/setup.hpp"
#include "support.hpp"

using namespace klein;
using codes::Element;
using poly::Monomial;
using test::code_of;
using test::derived;

namespace {

const gf::Field& F8() { return gf::Field::gf8(); }
const AffineSetup& K() { return AffineSetup::klein(); }

oracle::ScanResult coset(const Monomial& lead, const oracle::Strategy& strategy, unsigned jobs = 1) {
  return oracle::coset_min_weight(lead, oracle::monomials_below(lead, K().footprint()), K().variety(), K().ring(),
                                  K().footprint(), strategy, jobs);
}

std::uint32_t delta_of(const Monomial& m) { return expected::kDelta[m[1]][m[0]]; }

std::vector<Element> random_word(SplitMix64& rng, std::size_t n) {
  std::vector<Element> w(n);
  for (auto& e : w) e = F8().make(static_cast<std::uint32_t>(rng.below(8)));
  return w;
}

std::uint32_t brute_min(const std::vector<Element>& base, const std::vector<std::vector<Element>>& dirs,
                        bool skip_zero) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dirs.size(); ++i) total *= 8;
  std::uint32_t best = static_cast<std::uint32_t>(base.size()) + 1;
  for (std::uint64_t s = skip_zero ? 1 : 0; s < total; ++s) {
    std::vector<Element> w = base;
    std::uint64_t rest = s;
    for (const auto& d : dirs) {
      const Element c = F8().make(static_cast<std::uint32_t>(rest % 8));
      rest /= 8;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = F8().add(w[j], F8().mul(c, d[j]));
    }
    best = std::min(best, static_cast<std::uint32_t>(codes::hamming_weight(w)));
  }
  return best;
}

}  // namespace

TEST_CASE("parameter order: footprint monomials below M, descending") {
  const auto below = oracle::monomials_below(Monomial{0, 2}, K().footprint());
  CHECK(below == std::vector<Monomial>{Monomial{3, 0}, Monomial{1, 1}, Monomial{2, 0}, Monomial{0, 1},
                                       Monomial{1, 0}, Monomial{0, 0}});
  CHECK(oracle::monomials_below(Monomial{0, 0}, K().footprint()).empty());
  CHECK(oracle::monomials_below(Monomial{6, 2}, K().footprint()).size() == 21);
}

TEST_CASE("coset minima match the oracle, gray and exhaustive agree") {
  for (const auto& [name, want] : derived()["coset_min"].items()) {
    const Monomial m = poly::parse_monomial(name, 2);
    const auto g = coset(m, oracle::Gray{});
    CHECK(g.exact);
    CHECK(g.min_weight == want.get<std::uint32_t>());
    CHECK(g.min_weight == delta_of(m));
    if (oracle::monomials_below(m, K().footprint()).size() <= 6) {
      const auto e = coset(m, oracle::Exhaustive{});
      CHECK(e.min_weight == g.min_weight);
      CHECK(e.states == g.states);
    }
  }
}

TEST_CASE("the argmin reproduces the minimum") {
  const Monomial m{1, 1};
  const auto below = oracle::monomials_below(m, K().footprint());
  const auto r = coset(m, oracle::Gray{});
  REQUIRE(r.argmin.size() == below.size());
  poly::FieldPoly f = K().monomial(m);
  for (std::size_t i = 0; i < below.size(); ++i) f.add_term(below[i], r.argmin[i]);
  CHECK(codes::hamming_weight(codes::evaluation_vector(f, K().variety())) == r.min_weight);
}

TEST_CASE("results do not depend on the number of jobs") {
  const Monomial m{2, 1};
  const auto one = coset(m, oracle::Gray{}, 1);
  const auto three = coset(m, oracle::Gray{}, 3);
  CHECK(one.min_weight == three.min_weight);
  CHECK(one.states == three.states);
  const auto s1 = coset(m, oracle::Sample{9, 5000}, 1);
  const auto s4 = coset(m, oracle::Sample{9, 5000}, 4);
  CHECK(s1.min_weight == s4.min_weight);
  CHECK(s1.argmin == s4.argmin);
  CHECK_FALSE(s1.exact);
}

TEST_CASE("sampling is deterministic in the seed and bounded by the exact value") {
  const Monomial m{0, 2};
  const auto exact = coset(m, oracle::Exhaustive{}).min_weight;
  const auto a = coset(m, oracle::Sample{1, 20000});
  const auto b = coset(m, oracle::Sample{1, 20000});
  CHECK(a.min_weight == b.min_weight);
  CHECK(a.argmin == b.argmin);
  CHECK(a.min_weight >= exact);
  CHECK(a.states == 20000);
}

TEST_CASE("gray and exhaustive scans agree with brute force, random families") {
  SplitMix64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng.below(12);
    const std::size_t k = rng.below(5);
    const bool skip_zero = rng.below(2);
    const std::vector<Element> base = skip_zero ? std::vector<Element>(n, F8().zero()) : random_word(rng, n);
    std::vector<std::vector<Element>> dirs;
    for (std::size_t j = 0; j < k; ++j) dirs.push_back(random_word(rng, n));
    if (skip_zero && k == 0) continue;
    const oracle::AffineScanner scanner(F8(), base, dirs, skip_zero);
    const auto want = brute_min(base, dirs, skip_zero);
    CHECK(scanner.exhaustive().min_weight == want);
    CHECK(scanner.gray(1 + static_cast<unsigned>(rng.below(3))).min_weight == want);
    CHECK(scanner.sample(i, 100).min_weight >= want);
  }
}

TEST_CASE("the top monomial alone has weight 21") {
  const auto r = oracle::coset_min_weight(Monomial{6, 2}, {}, K().variety(), K().ring(), K().footprint(),
                                          oracle::Exhaustive{});
  CHECK(r.min_weight == derived()["weight_X6Y2"].get<std::uint32_t>());
}

TEST_CASE("oracle errors") {
  CHECK(code_of([] { coset(Monomial{1, 1}, oracle::Exhaustive{2}); }) == ErrorCode::DimensionTooLarge);
  CHECK(code_of([] { coset(Monomial{1, 1}, oracle::Gray{3}); }) == ErrorCode::DimensionTooLarge);
  CHECK(code_of([] {
          oracle::coset_min_weight(Monomial{1, 0}, {Monomial{0, 1}}, K().variety(), K().ring(), K().footprint(),
                                   oracle::Exhaustive{});
        }) == ErrorCode::SupportNotBelowM);
  CHECK(code_of([] {
          oracle::coset_min_weight(Monomial{0, 3}, {}, K().variety(), K().ring(), K().footprint(),
                                   oracle::Exhaustive{});
        }) == ErrorCode::NotInFootprint);
  const auto big = codes::build_code(K().footprint().monomials, K().variety(), K().ring());
  CHECK(code_of([&] { oracle::min_distance(big, oracle::Gray{}); }) == ErrorCode::DimensionTooLarge);
}

TEST_CASE("sampled soundness: no class beats its reference bound") {
  for (const auto& m : K().footprint().monomials) {
    const auto r = coset(m, oracle::Sample{m[0] * 10 + m[1] + 1, 4000});
    CHECK(r.min_weight >= delta_of(m));
  }
}

TEST_CASE("the thresholded code with k = 7 has distance 13") {
  codes::DeltaMap dm(K().order());
  for (const auto& m : K().footprint().monomials) dm.set(m, delta_of(m));
  const auto basis = codes::threshold_basis(dm, 13);
  REQUIRE(basis.size() == 7);
  const auto code = codes::build_code(basis, K().variety(), K().ring());
  const auto r = oracle::min_distance(code, oracle::Gray{}, 2);
  CHECK(r.exact);
  CHECK(r.min_weight == derived()["table_min_distance"]["7"].get<std::uint32_t>());
}
