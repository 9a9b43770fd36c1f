#include <doctest.h>

#include <sstream>

#include "klein/casebound.hpp"
#include "klein/expected.hpp"
#include "klein/rng.hpp"
#include "klein/traces.hpp"
#include "support.hpp"

using namespace klein;
using namespace klein::casebound;
using poly::Monomial;
using poly::ReductionMode;
using test::code_of;

namespace {

const gf::Field& F8() { return gf::Field::gf8(); }
const AffineSetup& K() { return AffineSetup::klein(); }
std::string trace_path(const char* name) { return std::string(KLEIN_SOURCE_DIR) + "/traces/" + name; }

BoundReport run(const Monomial& lead, std::string_view text) {
  const CaseContext ctx(K(), lead);
  return verify_trace(ctx, parse_trace(text));
}

ParamCoef random_coef(const ParamCoeffs& pc, SplitMix64& rng) {
  ParamCoef out = pc.zero();
  const std::size_t terms = rng.below(4);
  for (std::size_t t = 0; t < terms; ++t) {
    ParamCoef term = pc.constant(F8().make(static_cast<std::uint32_t>(1 + rng.below(7))));
    const std::size_t factors = rng.below(4);
    for (std::size_t f = 0; f < factors; ++f) term = pc.mul(term, pc.param(1 + rng.below(pc.params())));
    out = pc.add(out, term);
  }
  return out;
}

Assignment random_assignment(std::size_t params, SplitMix64& rng) {
  Assignment a(params);
  for (auto& e : a) e = F8().make(static_cast<std::uint32_t>(rng.below(8)));
  return a;
}

}  // namespace

TEST_CASE("divisibility baseline") {
  const auto& fp = K().footprint();
  CHECK(divisibility_bound(Monomial{4, 0}, fp) == 10);
  CHECK(divisibility_bound(Monomial{0, 1}, fp) == 14);
  CHECK(divisibility_bound(Monomial{2, 2}, fp) == 5);
  CHECK(divisibility_bound(Monomial{7, 0}, fp) == 1);
  CHECK(divisibility_bound(Monomial{0, 0}, fp) == 22);
  CHECK(upset_in_footprint(Monomial{5, 2}, fp) == std::vector<Monomial>{Monomial{5, 2}, Monomial{6, 2}});
  CHECK(code_of([&] { divisibility_bound(Monomial{0, 3}, fp); }) == ErrorCode::NotInFootprint);
}

TEST_CASE("case context") {
  const CaseContext ctx(K(), Monomial{0, 1});
  CHECK(ctx.params() == 2);
  CHECK(ctx.generic() == ctx.parse("Y + a1*X + a2"));
  CHECK(ctx.divisor("K") == ctx.parse("Y^3 + X^3*Y + X"));
  CHECK(ctx.divisor("FX") == ctx.parse("X^8 + X"));
  CHECK(ctx.divisor("FXY") == ctx.parse("X^7*Y + Y"));
  CHECK(code_of([&] { ctx.divisor("F"); }) == ErrorCode::InvalidStep);
  CHECK(ctx.instantiate({F8().make(2), F8().one()}) == K().parse("Y + 2*X + 1"));
  CHECK(code_of([] { CaseContext(K(), Monomial{8, 0}); }) == ErrorCode::NotInFootprint);
}

TEST_CASE("reduction steps") {
  const CaseContext ctx(K(), Monomial{0, 1});
  const ConstraintStore free(ctx.coeffs());
  const auto r = param_reduce_step(ctx.parse("Y^3"), ctx.divisor("K"), ReductionMode::full, free);
  CHECK(r.remainder == ctx.parse("X^3*Y + X"));
  CHECK(r.scale == ctx.coeffs().one());

  // Y*F head-reduced by K is unchanged: its leading term Y^2 is not divisible by Y^3.
  const auto yf = ctx.generic().mul_term(ctx.coeffs().one(), Monomial{0, 1});
  CHECK(param_reduce_step(yf, ctx.divisor("K"), ReductionMode::head, free).remainder == yf);

  // a leading coefficient a1 needs a certificate, then gives a pseudo-reduction
  const auto d = ctx.parse("a1*X + 1");
  CHECK(code_of([&] { param_reduce_step(ctx.parse("X^2"), d, ReductionMode::full, free); }) ==
        ErrorCode::UncertifiedLeadingCoefficient);
  const auto [nz, z] = free.branch(ctx.coeffs().param(1));
  const auto p = param_reduce_step(ctx.parse("X^2"), d, ReductionMode::full, nz);
  CHECK(p.scale == ctx.coeffs().pow(ctx.coeffs().param(1), 2));
  CHECK(p.remainder == ctx.parse("1"));
  CHECK(code_of([&] { param_reduce_step(ctx.parse("X"), ParamPoly(ctx.ring()), ReductionMode::full, free); }) ==
        ErrorCode::ZeroPolynomial);
}

TEST_CASE("branching on coefficients") {
  const CaseContext ctx(K(), Monomial{1, 1});
  const ParamCoeffs& pc = ctx.coeffs();
  const ConstraintStore root(pc);

  const auto [nz1, z1] = root.branch(pc.add(pc.param(1), pc.one()));
  CHECK(z1.substitutions()[0] == pc.one());
  CHECK(nz1.nonzeros().size() == 1);
  CHECK(nz1.certified_nonzero(pc.add(pc.param(1), pc.one())));

  const auto [nz2, z2] = root.branch(pc.one());
  CHECK_FALSE(nz2.vacuous());
  CHECK(z2.vacuous());

  const auto [nz3, z3] = root.branch(pc.add(pc.param(3), pc.param(4)));
  CHECK(z3.substitutions()[2] == pc.param(4));
  CHECK(z3.is_zero(pc.add(pc.param(3), pc.param(4))));
  CHECK(z3.describe() == "a3 = a4");

  // a1 != 0 together with a1 = 0 is vacuous
  const auto [a1nz, a1z] = root.branch(pc.param(1));
  CHECK(a1nz.branch(pc.param(1)).second.vacuous());
  CHECK(a1z.branch(pc.param(1)).first.vacuous());
  // a1^7 = 1 whenever a1 != 0, by the exhaustive scan
  CHECK(a1nz.is_zero(pc.add(pc.pow(pc.param(1), 7), pc.one())));
  CHECK_FALSE(root.is_zero(pc.add(pc.pow(pc.param(1), 7), pc.one())));
}

TEST_CASE("parametric coefficients: a^8 = a and evaluation is a homomorphism") {
  const ParamCoeffs pc(F8(), 4);
  SplitMix64 rng(41);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(pc.pow(pc.param(i), 8) == pc.param(i));
  for (int i = 0; i < 500; ++i) {
    const ParamCoef a = random_coef(pc, rng);
    const ParamCoef b = random_coef(pc, rng);
    const Assignment v = random_assignment(4, rng);
    CHECK(pc.eval(pc.add(a, b), v) == F8().add(pc.eval(a, v), pc.eval(b, v)));
    CHECK(pc.eval(pc.mul(a, b), v) == F8().mul(pc.eval(a, v), pc.eval(b, v)));
    CHECK(pc.pow(a, 8) == a);
    CHECK(pc.add(a, a).is_zero());
    const ParamCoef s = pc.substitute(a, 2, b);
    Assignment w = v;
    w[1] = pc.eval(b, v);
    CHECK(pc.eval(s, v) == pc.eval(a, w));
  }
}

TEST_CASE("trace grammar") {
  const Trace t = parse_trace("lm Y\n# comment\nmul Y^2\nred K head\nreset\nbranch a1 {\n  claim X^4\n} else {\n}\n");
  CHECK(t.lead == std::optional<std::string>("Y"));
  REQUIRE(t.steps.size() == 4);
  CHECK(t.steps[1].mode == ReductionMode::head);
  CHECK(t.steps[3].nonzero_block.size() == 1);
  CHECK(t.steps[3].zero_block.empty());
  CHECK(code_of([] { parse_trace("red K sideways\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_trace("branch a1 {\n} else {\n}\nclaim X\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_trace("branch a1 {\nclaim X\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_trace("frobnicate\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("replaying the traces for Y and X*Y") {
  const auto y = load_trace(trace_path("s31.trace"), K());
  const CaseContext cy(K(), y.lead);
  const auto ry = verify_trace(cy, y.trace);
  CHECK(ry.baseline == 14);
  CHECK(ry.bound == 18);
  REQUIRE(ry.leaves.size() == 3);
  CHECK(ry.leaves[0].count == 18);
  CHECK(ry.leaves[0].constraints == "a1 != 0");
  CHECK(ry.leaves[1].count == 19);
  CHECK(ry.leaves[2].count == 21);

  const auto xy = load_trace(trace_path("s33.trace"), K());
  const CaseContext cxy(K(), xy.lead);
  const auto rxy = verify_trace(cxy, xy.trace);
  CHECK(rxy.bound == 15);
  CHECK(rxy.leaves.size() == 4);
  CHECK(rxy.leaves[2].claims == std::vector<Monomial>{Monomial{0, 2}, Monomial{5, 0}});

  std::ostringstream log;
  verify_trace(cy, y.trace, &log);
  CHECK(log.str().find("a1*X^4") != std::string::npos);
}

TEST_CASE("an empty trace proves the baseline") {
  const auto r = run(Monomial{2, 1}, "");
  CHECK(r.bound == 10);
  CHECK(r.bound == r.baseline);
  REQUIRE(r.leaves.size() == 1);
  CHECK(r.leaves[0].established == upset_in_footprint(Monomial{2, 1}, K().footprint()));
}

TEST_CASE("replay rejects bad steps and unjustified claims") {
  CHECK(code_of([] { run(Monomial{0, 1}, "red Q head\n"); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { run(Monomial{0, 1}, "red FX full\n"); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { run(Monomial{0, 1}, "claim Y^3\n"); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { run(Monomial{0, 1}, "lm X\n"); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { run(Monomial{0, 1}, "branch X + a1 {\n} else {\n}\n"); }) == ErrorCode::InvalidStep);
  // a1 may vanish
  CHECK(code_of([] { run(Monomial{0, 1}, "mul Y^2\nred K head\nred F full\nclaim X^4\n"); }) ==
        ErrorCode::UnjustifiedClaim);
  // a higher term survives
  CHECK(code_of([] { run(Monomial{0, 1}, "mul Y^2\nred K head\nred F full\nbranch a1 {\nclaim X^3\n} else {\n}\n"); }) ==
        ErrorCode::UnjustifiedClaim);
}

TEST_CASE("a vacuous branch is reported and ignored") {
  const auto r = run(Monomial{0, 1}, "branch 1 {\n} else {\n  claim X\n}\n");
  REQUIRE(r.leaves.size() == 2);
  CHECK_FALSE(r.leaves[0].vacuous);
  CHECK(r.leaves[1].vacuous);
  CHECK(r.bound == 14);
}

TEST_CASE("all nine traces reproduce their bounds") {
  const auto files = load_trace_dir(std::string(KLEIN_SOURCE_DIR) + "/traces", K());
  REQUIRE(files.size() == expected::kTraceBounds.size());
  const auto verified = verify_traces(K(), files, 2);
  std::vector<BoundReport> reports;
  for (const auto& [a, b, bound] : expected::kTraceBounds) {
    const auto it = std::find_if(verified.begin(), verified.end(),
                                 [&](const auto& v) { return v.report.lead == Monomial{a, b}; });
    REQUIRE(it != verified.end());
    CHECK(it->report.bound == bound);
    reports.push_back(it->report);
  }
  const auto dm = figure2_map(K(), reports);
  CHECK(dm.size() == 22);
  for (const auto& [m, d] : dm.entries()) CHECK(d == expected::kDelta[m[1]][m[0]]);
}

TEST_CASE("trace loading errors") {
  CHECK(code_of([] { load_trace(trace_path("missing.trace"), K()); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load_trace_dir(trace_path("s31.trace"), K()); }) == ErrorCode::ParseError);
}

TEST_CASE("leaf instantiation") {
  const auto y = load_trace(trace_path("s31.trace"), K());
  const CaseContext ctx(K(), y.lead);
  const auto r = verify_trace(ctx, y.trace);
  for (const auto& leaf : r.leaves) {
    const auto rep = instantiate_and_check(ctx, leaf, 25, 7);
    CHECK(rep.samples == 25);
    CHECK(rep.violations == 0);
    CHECK(rep.min_weight >= leaf.count);
    const auto again = instantiate_and_check(ctx, leaf, 25, 7);
    CHECK(again.min_weight == rep.min_weight);
  }
  const auto v = run(Monomial{0, 1}, "branch 1 {\n} else {\n}\n");
  CHECK(code_of([&] { instantiate_and_check(ctx, v.leaves[1], 5, 1); }) == ErrorCode::UnsatisfiableLeaf);
}

TEST_CASE("weight ceiling") {
  CHECK(weight_ceiling(K(), Monomial{7, 0}) == 1);
  CHECK(weight_ceiling(K(), Monomial{6, 2}) == 1);
  CHECK(weight_ceiling(K(), Monomial{0, 1}) == 22);
  CHECK(weight_ceiling(K(), Monomial{0, 0}, 0) == 22);
}

TEST_CASE("bounded search") {
  CHECK(auto_search(CaseContext(K(), Monomial{0, 1})).bound == 18);
  const auto top = auto_search(CaseContext(K(), Monomial{6, 2}));
  CHECK(top.bound == 1);
  const CaseContext ctx(K(), Monomial{1, 1});
  SearchBudget none;
  none.max_depth = 0;
  const auto base = auto_search(ctx, none);
  CHECK(base.bound == base.baseline);
  const auto a = auto_search(ctx);
  const auto b = auto_search(ctx);
  CHECK(a.bound == b.bound);
  CHECK(a.steps == b.steps);
  CHECK(a.bound >= a.baseline);
  CHECK(a.bound <= expected::kDelta[1][1]);
}
