#include <doctest.h>

#include <vector>

#include "klein/param.hpp"
#include "klein/polynomial.hpp"
#include "klein/rng.hpp"

using namespace klein;
using poly::FieldPoly;
using poly::Monomial;
using poly::MonomialOrder;
using poly::ReductionMode;

namespace {

const gf::Field& F8() { return gf::Field::gf8(); }

const poly::FieldPolyRing& ring() {
  static const poly::FieldPolyRing r(poly::FieldCoeffs(F8()), MonomialOrder::klein());
  return r;
}

FieldPoly P(std::string_view text) { return poly::parse_polynomial(ring(), text); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidField;
}

std::vector<Monomial> grid(std::uint32_t cap) {
  std::vector<Monomial> out;
  for (std::uint32_t a = 0; a <= cap; ++a) {
    for (std::uint32_t b = 0; b <= cap; ++b) out.push_back(Monomial{a, b});
  }
  return out;
}

// Random polynomial with up to `terms` terms and exponents up to `cap`.
FieldPoly random_poly(SplitMix64& rng, std::size_t terms, std::uint32_t cap) {
  FieldPoly p(ring());
  const std::size_t n = rng.below(terms + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Monomial m{static_cast<std::uint32_t>(rng.below(cap + 1)), static_cast<std::uint32_t>(rng.below(cap + 1))};
    p.add_term(m, F8().make(static_cast<std::uint32_t>(1 + rng.below(7))));
  }
  return p;
}

FieldPoly random_nonzero(SplitMix64& rng, std::size_t terms, std::uint32_t cap) {
  for (;;) {
    FieldPoly p = random_poly(rng, terms, cap);
    if (!p.is_zero()) return p;
  }
}

bool divisible_by_any(const Monomial& m, const std::vector<FieldPoly>& ds) {
  for (const auto& d : ds) {
    if (d.leading_monomial().divides(m)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("order comparison examples") {
  const MonomialOrder ord = MonomialOrder::klein();
  CHECK(ord.compare(Monomial{1, 0}, Monomial{0, 1}) < 0);
  CHECK(ord.compare(Monomial{3, 0}, Monomial{0, 2}) < 0);
  CHECK(ord.compare(Monomial{0, 0}, Monomial{1, 0}) < 0);
  CHECK(ord.compare(Monomial{2, 1}, Monomial{2, 1}) == 0);
  CHECK(ord.weight(Monomial{6, 2}) == 18);
  CHECK(code_of([&] { (void)ord.compare(Monomial{1, 0}, Monomial{1, 0, 0}); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("order axioms for the weighted order and lex, exponents up to 8") {
  const auto ms = grid(8);
  for (const MonomialOrder& ord : {MonomialOrder::klein(), MonomialOrder::lex(2)}) {
    for (const auto& u : ms) {
      if (!u.is_one()) CHECK(ord.less(Monomial{0, 0}, u));
      for (const auto& v : ms) {
        const auto c = ord.compare(u, v);
        CHECK((c == 0) == (u == v));
        CHECK(ord.compare(v, u) == (0 <=> c));
        if (c < 0) {
          for (const auto& w : ms) {
            if (w[0] + w[1] > 4) continue;
            CHECK(ord.less(u * w, v * w));
          }
        }
      }
    }
    // transitivity on a sorted sample
    std::vector<Monomial> sorted = ms;
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return ord.less(a, b); });
    for (std::size_t i = 0; i + 2 < sorted.size(); ++i) CHECK(ord.less(sorted[i], sorted[i + 2]));
  }
}

TEST_CASE("monomial exponent cap") {
  const Monomial big{poly::kDefaultExponentCap, 0};
  CHECK(code_of([&] { (void)(big * Monomial{1, 0}); }) == ErrorCode::ExponentOverflow);
}

TEST_CASE("arithmetic examples") {
  CHECK((P("Y + X") + P("Y + X")).is_zero());
  CHECK(P("Y") * P("Y^2") == P("Y^3"));
  CHECK(P("Y^3 + X^3*Y + X").scale(F8().one()) == P("Y^3 + X^3*Y + X"));
  CHECK(P("3*X + 2*X") == P("X"));
  CHECK(P("X + 1").terms().size() == 2);
  CHECK((P("X") - P("X")).terms().empty());
}

TEST_CASE("leading terms") {
  CHECK(poly::to_string(Monomial(P("Y^3 + X^3*Y + X").leading_monomial())) == "Y^3");
  CHECK(poly::to_string(Monomial(P("X^7*Y + Y").leading_monomial())) == "X^7*Y");
  const auto& [m, c] = P("5").leading_term();
  CHECK(m.is_one());
  CHECK(c == F8().make(5));
  CHECK(code_of([] { (void)FieldPoly(ring()).leading_term(); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("division examples") {
  const std::vector<FieldPoly> k{P("Y^3 + X^3*Y + X")};
  const auto r = poly::divide<poly::FieldCoeffs>(P("Y^3"), k, ReductionMode::full);
  CHECK(r.remainder == P("X^3*Y + X"));
  CHECK(r.quotients[0] == P("1"));

  const std::vector<FieldPoly> none;
  const auto r0 = poly::divide<poly::FieldCoeffs>(P("X^2 + Y"), none, ReductionMode::head);
  CHECK(r0.quotients.empty());
  CHECK(r0.remainder == P("X^2 + Y"));

  // head mode stops at the first irreducible term; full mode continues
  const std::vector<FieldPoly> y{P("Y + 1")};
  CHECK(poly::divide<poly::FieldCoeffs>(P("X^3 + Y"), y, ReductionMode::head).remainder == P("X^3 + Y"));
  CHECK(poly::divide<poly::FieldCoeffs>(P("X^3 + Y"), y, ReductionMode::full).remainder == P("X^3 + 1"));

  const std::vector<FieldPoly> zero{FieldPoly(ring())};
  CHECK(code_of([&] { poly::divide<poly::FieldCoeffs>(P("X"), zero, ReductionMode::full); }) ==
        ErrorCode::ZeroPolynomial);
}

TEST_CASE("parametric division: Y^2 * F by the curve, then by F") {
  const casebound::ParamRing pr(casebound::ParamCoeffs(F8(), 2), MonomialOrder::klein());
  const auto f = poly::parse_polynomial(pr, "Y + a1*X + a2");
  const auto k = poly::parse_polynomial(pr, "Y^3 + X^3*Y + X");
  const auto s = f.mul_term(pr.coeffs().one(), Monomial{0, 2});
  const auto step1 = poly::divide<casebound::ParamCoeffs>(s, std::span(&k, 1), ReductionMode::head);
  const auto step2 = poly::divide<casebound::ParamCoeffs>(step1.remainder, std::span(&f, 1), ReductionMode::full);
  CHECK(step2.remainder ==
        poly::parse_polynomial(pr, "a1*X^4 + a1^3*X^3 + a2*X^3 + a1^2*a2*X^2 + a1*a2^2*X + X + a2^3"));
  CHECK(s == step1.quotients[0] * k + step2.quotients[0] * f + step2.remainder);
}

TEST_CASE("division identity, 10000 random instances in both modes") {
  SplitMix64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const FieldPoly s = random_poly(rng, 8, 9);
    std::vector<FieldPoly> ds;
    const std::size_t nd = 1 + rng.below(3);
    for (std::size_t j = 0; j < nd; ++j) ds.push_back(random_nonzero(rng, 3, 4));
    const auto mode = i % 2 ? ReductionMode::full : ReductionMode::head;
    const auto r = poly::divide<poly::FieldCoeffs>(s, ds, mode);
    FieldPoly back = r.remainder;
    for (std::size_t j = 0; j < nd; ++j) back += r.quotients[j] * ds[j];
    REQUIRE(back == s);
    if (mode == ReductionMode::full) {
      for (const auto& [m, c] : r.remainder.terms()) CHECK_FALSE(divisible_by_any(m, ds));
      // head reduction is a prefix of full reduction
      const auto h = poly::divide<poly::FieldCoeffs>(s, ds, ReductionMode::head);
      CHECK(poly::divide<poly::FieldCoeffs>(h.remainder, ds, ReductionMode::full).remainder == r.remainder);
    } else if (!r.remainder.is_zero()) {
      CHECK_FALSE(divisible_by_any(r.remainder.leading_monomial(), ds));
    }
  }
}

TEST_CASE("evaluation") {
  const std::array<gf::Element, 2> origin{F8().zero(), F8().zero()};
  CHECK(poly::eval(P("Y^3 + X^3*Y + X"), origin) == F8().zero());
  CHECK(poly::eval(P("X^7 + 1"), origin) == F8().one());
  for (std::uint32_t x = 1; x < 8; ++x) {
    for (std::uint32_t y = 0; y < 8; ++y) {
      const std::array<gf::Element, 2> pt{F8().make(x), F8().make(y)};
      CHECK(poly::eval(P("X^7 + 1"), pt) == F8().zero());
    }
  }
  const casebound::ParamRing pr(casebound::ParamCoeffs(F8(), 1), MonomialOrder::klein());
  CHECK(code_of([&] { poly::eval(poly::parse_polynomial(pr, "a1*X"), origin); }) ==
        ErrorCode::ParametricCoefficients);
}

TEST_CASE("evaluation is a ring homomorphism at all 64 points") {
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const FieldPoly p = random_poly(rng, 6, 10);
    const FieldPoly q = random_poly(rng, 6, 10);
    const FieldPoly sum = p + q;
    const FieldPoly prod = p * q;
    for (std::uint32_t x = 0; x < 8; ++x) {
      for (std::uint32_t y = 0; y < 8; ++y) {
        const std::array<gf::Element, 2> pt{F8().make(x), F8().make(y)};
        const auto a = poly::eval(p, pt);
        const auto b = poly::eval(q, pt);
        CHECK(poly::eval(sum, pt) == F8().add(a, b));
        CHECK(poly::eval(prod, pt) == F8().mul(a, b));
      }
    }
  }
}

TEST_CASE("text grammar") {
  CHECK(poly::to_string(P("5*X^2*Y")) == "5*X^2*Y");
  CHECK(P(" X ^ 2 * Y+ 1 ") == P("X^2*Y + 1"));
  CHECK(P("X^1*Y^0") == P("X"));
  CHECK(poly::to_string(FieldPoly(ring())) == "0");
  CHECK(poly::to_string(P("Y^3 + X + X^3*Y")) == "Y^3 + X^3*Y + X");
  CHECK(code_of([] { P("X^"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("Z"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("9*X"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { P("a1*X"); }) == ErrorCode::ParametricCoefficients);

  const casebound::ParamRing pr(casebound::ParamCoeffs(F8(), 17), MonomialOrder::klein());
  const auto p = poly::parse_polynomial(pr, "X^7 + a1*X^5*Y + a17 + 3*a2^2*a5*Y");
  CHECK(poly::parse_polynomial(pr, poly::to_string(p)) == p);
}

TEST_CASE("printing round-trips, random polynomials") {
  SplitMix64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const FieldPoly p = random_poly(rng, 10, 12);
    const std::string text = poly::to_string(p);
    const FieldPoly back = P(text);
    CHECK(back == p);
    CHECK(poly::to_string(back) == text);
  }
}
