#include "klein/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "klein/casebound.hpp"
#include "klein/expected.hpp"
#include "klein/oracle.hpp"
#include "klein/traces.hpp"

namespace klein::verify {

using gf::Element;
using poly::FieldPoly;
using poly::Monomial;
using report::Check;

poly::FieldPoly random_reduced(const AffineSetup& setup, SplitMix64& rng) {
  const auto& fp = setup.footprint();
  const std::uint32_t q = setup.field().size();
  for (;;) {
    // Keep each monomial with probability density/8, density in 1..8.
    const std::uint64_t density = 1 + rng.below(8);
    FieldPoly f(setup.ring());
    for (const auto& m : fp.monomials) {
      if (rng.below(8) >= density) continue;
      f.add_term(m, setup.field().make(static_cast<std::uint32_t>(1 + rng.below(q - 1))));
    }
    if (!f.is_zero()) return f;
  }
}

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

class Suite {
 public:
  Suite(const AffineSetup& setup, const Options& opt) : setup_(setup), opt_(opt) {}

  std::vector<Check> run() {
    add("field arithmetic", [&] { return field(); });
    add("monomial order", [&] { return order(); });
    add("groebner basis", [&] { return basis(); });
    add("footprint", [&] { return footprint(); });
    add("variety", [&] { return variety(); });
    add("evaluation bijection", [&] { return bijection(); });
    add("weight identity", [&] { return weight_identity(); });
    if (opt_.expected_values) add("order-domain conditions", [&] { return order_domain(); });
    add("trace verification", [&] { return traces(); });
    add("delta map", [&] { return delta_map(); });
    add("code table", [&] { return table(); });
    add("table distances", [&] { return table_distances(); });
    add("weight-one codewords", [&] { return weight_one(); });
    add("coset minima", [&] { return coset_minima(); });
    add("sampled soundness", [&] { return sampled(); });
    add("leaf instantiation", [&] { return leaves(); });
    add("auto-search", [&] { return auto_search(); });
    return std::move(checks_);
  }

 private:
  using Result = std::pair<bool, std::string>;

  void add(std::string name, const std::function<Result()>& f) {
    Check c{std::move(name), false, ""};
    try {
      auto [ok, detail] = f();
      c.passed = ok;
      c.detail = std::move(detail);
    } catch (const Error& e) {
      c.detail = e.what();
    }
    checks_.push_back(std::move(c));
  }

  Result field() const {
    const auto& f = setup_.field();
    if (f.size() > 64) return {true, "skipped (q > 64)"};
    const auto els = f.elements();
    for (auto a : els) {
      if (f.pow(a, f.size()) != a) return {false, "a^q != a for " + str(a.enc)};
      if (!a.is_zero() && f.mul(a, f.inv(a)) != f.one()) return {false, "a * inv(a) != 1 for " + str(a.enc)};
      for (auto b : els) {
        if (f.mul(a, b) != f.mul(b, a)) return {false, "mul not commutative"};
        const Element s = f.add(a, b);
        if (f.mul(s, s) != f.add(f.mul(a, a), f.mul(b, b))) return {false, "Frobenius fails"};
        for (auto c : els) {
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return {false, "mul not associative"};
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return {false, "not distributive"};
        }
      }
    }
    return {true, "exhaustive over " + str(els.size()) + "^3 triples"};
  }

  Result order() const {
    const auto& ord = setup_.order();
    const std::size_t n = setup_.arity();
    std::vector<Monomial> ms;
    const std::uint32_t cap = n <= 2 ? 5 : 2;
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
      ms.emplace_back(std::span<const std::uint32_t>(e));
      std::size_t i = 0;
      while (i < n && ++e[i] > cap) e[i++] = 0;
      if (i == n) break;
    }
    const Monomial one = Monomial::one(n);
    for (const auto& u : ms) {
      if (!u.is_one() && !ord.less(one, u)) return {false, "1 is not below " + poly::to_string(u)};
      for (const auto& v : ms) {
        const auto c = ord.compare(u, v);
        if ((c == 0) != (u == v) || ord.compare(v, u) != (0 <=> c)) return {false, "not a total order"};
        if (c < 0) {
          for (const auto& w : ms) {
            if (!ord.less(u * w, v * w)) return {false, "not multiplicative"};
          }
        }
      }
    }
    return {true, str(ms.size()) + " monomials, all pairs and products"};
  }

  Result basis() const {
    const auto gb = groebner::buchberger(setup_.ring(), setup_.generators());
    const auto& mine = setup_.basis().generators();
    if (gb.generators() != mine) return {false, "recomputed basis differs"};
    if (!groebner::satisfies_buchberger_criterion(gb)) return {false, "an S-polynomial does not reduce to 0"};
    if (!groebner::is_reduced(gb)) return {false, "basis is not reduced"};
    std::string detail;
    for (const auto& g : mine) detail += (detail.empty() ? "" : ", ") + poly::to_string(g);
    if (opt_.expected_values) {
      std::vector<FieldPoly> want;
      for (const char* t : {"Y^3 + X^3*Y + X", "X^8 + X", "X^7*Y + Y"}) want.push_back(setup_.parse(t));
      for (const auto& w : want) {
        if (std::find(mine.begin(), mine.end(), w) == mine.end() || mine.size() != want.size()) {
          return {false, "expected {Y^3 + X^3*Y + X, X^8 + X, X^7*Y + Y}, got {" + detail + "}"};
        }
      }
    }
    return {true, "{" + detail + "}"};
  }

  Result footprint() const {
    const auto& fp = setup_.footprint();
    if (fp.size() != setup_.length()) {
      return {false, str(fp.size()) + " footprint monomials but " + str(setup_.length()) + " points"};
    }
    if (opt_.expected_values) {
      for (std::uint32_t b = 0; b < 3; ++b) {
        for (std::uint32_t a = 0; a < 8; ++a) {
          const bool want = expected::kDelta[b][a] != 0;
          if (fp.contains(Monomial{a, b}) != want) return {false, "X^" + str(a) + "*Y^" + str(b) + " misplaced"};
          if (want && setup_.order().weight(Monomial{a, b}) != 2 * a + 3 * b) return {false, "weight mismatch"};
        }
      }
      if (fp.size() != expected::kLength) return {false, "size " + str(fp.size())};
    }
    return {true, str(fp.size()) + " monomials = number of points"};
  }

  Result variety() const {
    const auto& v = setup_.variety();
    for (const auto& p : v.points) {
      for (const auto& g : setup_.generators()) {
        if (!poly::eval(g, std::span<const Element>(p.coords)).is_zero()) return {false, "a generator is nonzero at a point"};
      }
    }
    if (opt_.expected_values) {
      const bool origin = std::any_of(v.points.begin(), v.points.end(), [](const codes::Point& p) {
        return std::all_of(p.coords.begin(), p.coords.end(), [](Element e) { return e.is_zero(); });
      });
      if (v.size() != expected::kLength || !origin) return {false, str(v.size()) + " points"};
      if (!codes::verify_fano(v)) return {false, "the points do not form the Fano plane"};
      return {true, str(v.size()) + " points including (0,0); Fano plane structure"};
    }
    return {true, str(v.size()) + " points"};
  }

  Result bijection() const {
    const auto code = codes::build_code(setup_.footprint().monomials, setup_.variety(), setup_.ring());
    const std::size_t r = codes::rank(code.generator, setup_.field());
    return {r == setup_.length(), "rank " + str(r) + " of " + str(code.k) + " x " + str(code.n)};
  }

  Result weight_identity() const {
    SplitMix64 rng = SplitMix64::stream(opt_.seed, 1);
    for (std::size_t i = 0; i < opt_.weight_samples; ++i) {
      const FieldPoly f = random_reduced(setup_, rng);
      const std::size_t direct = codes::hamming_weight(codes::evaluation_vector(f, setup_.variety()));
      const std::size_t via = weight_via_footprint(f, setup_);
      if (direct != via) {
        return {false, "F = " + poly::to_string(f) + ": direct " + str(direct) + ", footprint " + str(via)};
      }
    }
    return {true, str(opt_.weight_samples) + " random F"};
  }

  Result order_domain() const {
    const auto gb = groebner::buchberger(setup_.ring(), setup_.ideal_generators());
    const auto c = groebner::order_domain_check(gb);
    const std::string got = std::string("(") + (c.weighted_order ? "true" : "false") + ", " +
                            (c.two_top_weight_monomials ? "true" : "false") + ", " +
                            (c.distinct_footprint_weights ? "true" : "false") + ")";
    return {c.weighted_order && c.two_top_weight_monomials && !c.distinct_footprint_weights, got};
  }

  Result traces() {
    const auto files = casebound::load_trace_dir(opt_.traces, setup_);
    classes_ = casebound::verify_traces(setup_, files, opt_.jobs);
    std::string detail;
    bool ok = !classes_.empty();
    for (const auto& c : classes_) {
      detail += (detail.empty() ? "" : ", ") + poly::to_string(c.report.lead) + ":" + str(c.report.bound);
    }
    if (opt_.expected_values) {
      for (const auto& [a, b, bound] : expected::kTraceBounds) {
        const auto it = std::find_if(classes_.begin(), classes_.end(),
                                     [&](const auto& c) { return c.report.lead == Monomial{a, b}; });
        if (it == classes_.end() || it->report.bound != bound) {
          ok = false;
          detail += "; expected " + poly::to_string(Monomial{a, b}) + ":" + str(bound);
        }
      }
    }
    return {ok, detail};
  }

  std::vector<casebound::BoundReport> reports() const {
    std::vector<casebound::BoundReport> out;
    for (const auto& c : classes_) out.push_back(c.report);
    return out;
  }

  Result delta_map() {
    delta_ = casebound::figure2_map(setup_, reports());
    const auto& fp = setup_.footprint();
    for (const auto& [m, d] : delta_.entries()) {
      if (d < casebound::divisibility_bound(m, fp) || d < 1 || d > setup_.length()) {
        return {false, poly::to_string(m) + ": " + str(d) + " outside [baseline, n]"};
      }
    }
    if (opt_.expected_values) {
      for (const auto& [m, d] : delta_.entries()) {
        if (m[1] > 2 || m[0] > 7 || expected::kDelta[m[1]][m[0]] != d) {
          return {false, poly::to_string(m) + ": " + str(d)};
        }
      }
      return {true, "all 22 entries as expected"};
    }
    return {true, str(delta_.size()) + " entries"};
  }

  Result table() {
    rows_ = codes::construct_table(delta_, setup_.variety());
    std::string detail;
    for (const auto& r : rows_) detail += (detail.empty() ? "" : " ") + ("[" + str(r.n) + "," + str(r.k) + "," + str(r.d) + "]");
    if (opt_.expected_values) {
      if (rows_.size() != expected::kTable.size() + 1) return {false, detail};
      for (std::size_t i = 0; i < expected::kTable.size(); ++i) {
        if (rows_[i].k != expected::kTable[i].first || rows_[i].d != expected::kTable[i].second) return {false, detail};
      }
      if (rows_.back().s != 1 || rows_.back().k != setup_.length()) return {false, detail};
    }
    return {true, detail};
  }

  Result table_distances() const {
    std::string detail;
    bool ok = true;
    for (const auto& r : rows_) {
      if (r.k > opt_.exhaustive_k) continue;
      const auto code = codes::build_code(codes::threshold_basis(delta_, r.s), setup_.variety(), setup_.ring());
      const auto res = oracle::min_distance(code, oracle::Exhaustive{opt_.exhaustive_k}, opt_.jobs);
      ok = ok && res.min_weight >= r.d;
      detail += (detail.empty() ? "" : ", ") + ("k=" + str(r.k) + " d=" + str(res.min_weight) + ">=" + str(r.d));
    }
    return {ok, detail.empty() ? "no row small enough" : detail};
  }

  Result weight_one() const {
    const auto& fp = setup_.footprint().monomials;
    const auto full = codes::build_code(fp, setup_.variety(), setup_.ring());
    const std::uint64_t all = codes::count_weight_one(full);
    const std::vector<Monomial> most(fp.begin(), fp.end() - 1);
    const Monomial top = fp.back();
    const auto code = codes::build_code(most, setup_.variety(), setup_.ring());
    const std::uint64_t some = codes::count_weight_one(code);
    const std::string detail = "full code " + std::to_string(all) + ", without " + poly::to_string(top) + " " +
                               std::to_string(some);
    bool ok = all == setup_.length() * (setup_.field().size() - 1);
    if (opt_.expected_values) {
      ok = ok && all == expected::kWeightOneFull && some == expected::kWeightOneWithoutTop;
    }
    return {ok, detail};
  }

  Result coset_minima() const {
    const auto& fp = setup_.footprint();
    std::string detail;
    bool ok = true;
    for (const auto& m : fp.monomials) {
      const auto below = oracle::monomials_below(m, fp);
      if (below.size() > opt_.coset_params) continue;
      const auto res = oracle::coset_min_weight(m, below, setup_.variety(), setup_.ring(), fp,
                                                oracle::Gray{opt_.coset_params}, opt_.jobs);
      ok = ok && res.min_weight >= delta_.at(m);
      detail += (detail.empty() ? "" : ", ") + poly::to_string(m) + ":" + str(res.min_weight) + ">=" + str(delta_.at(m));
    }
    return {ok, detail};
  }

  Result sampled() const {
    const auto& fp = setup_.footprint();
    std::size_t i = 0;
    for (const auto& m : fp.monomials) {
      const auto below = oracle::monomials_below(m, fp);
      const auto res = oracle::coset_min_weight(m, below, setup_.variety(), setup_.ring(), fp,
                                                oracle::Sample{opt_.seed + 1000 + i++, opt_.class_samples}, opt_.jobs);
      if (res.min_weight < delta_.at(m)) {
        return {false, poly::to_string(m) + ": sampled weight " + str(res.min_weight) + " < " + str(delta_.at(m))};
      }
    }
    return {true, str(opt_.class_samples) + " samples for each of " + str(fp.size()) + " classes"};
  }

  Result leaves() const {
    std::size_t checked = 0;
    std::size_t samples = 0;
    for (const auto& c : classes_) {
      std::size_t index = 0;
      for (const auto& leaf : c.report.leaves) {
        ++index;
        if (leaf.vacuous) continue;
        const auto r = casebound::instantiate_and_check(*c.context, leaf, opt_.leaf_samples,
                                                        opt_.seed ^ (index * 0x9E37ull));
        samples += r.samples;
        ++checked;
        if (r.violations != 0) return {false, poly::to_string(c.report.lead) + ": " + r.messages.front()};
      }
    }
    return {checked > 0, str(checked) + " leaves, " + str(samples) + " instances, no violation"};
  }

  Result auto_search() const {
    const auto& fp = setup_.footprint();
    std::vector<Monomial> targets;
    if (opt_.expected_values) {
      targets = {Monomial{0, 1}, Monomial{6, 2}};
    } else {
      targets = {fp.monomials.back()};
    }
    std::string detail;
    bool ok = true;
    for (const auto& m : targets) {
      casebound::CaseContext ctx(setup_, m);
      const auto r = casebound::auto_search(ctx);
      ok = ok && r.bound >= r.baseline;
      if (opt_.expected_values) ok = ok && r.bound == delta_.at(m);
      detail += (detail.empty() ? "" : ", ") + poly::to_string(m) + ":" + str(r.bound);
    }
    return {ok, detail};
  }

  const AffineSetup& setup_;
  const Options& opt_;
  std::vector<Check> checks_;
  std::vector<casebound::VerifiedClass> classes_;
  codes::DeltaMap delta_;
  std::vector<codes::TableRow> rows_;
};

}  // namespace

std::vector<Check> run_all(const AffineSetup& setup, const Options& options) { return Suite(setup, options).run(); }

}  // namespace klein::verify
