#include "klein/casebound.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "klein/rng.hpp"

namespace klein::casebound {

using poly::ReductionMode;

std::vector<Monomial> upset_in_footprint(const Monomial& lead, const groebner::Footprint& fp) {
  fp.index_of(lead);
  std::vector<Monomial> out;
  for (const auto& n : fp.monomials) {
    if (lead.divides(n)) out.push_back(n);
  }
  return out;
}

std::size_t divisibility_bound(const Monomial& lead, const groebner::Footprint& fp) {
  return upset_in_footprint(lead, fp).size();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Monomial> below_in(const Monomial& lead, const groebner::Footprint& fp) {
  fp.index_of(lead);
  std::vector<Monomial> out;
  for (const auto& m : fp.monomials) {
    if (fp.order->less(m, lead)) out.push_back(m);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

const poly::FieldPoly* basis_element_with_head(const AffineSetup& setup, const Monomial& head) {
  for (const auto& g : setup.basis().generators()) {
    if (g.leading_monomial() == head) return &g;
  }
  return nullptr;
}

}  // namespace

CaseContext::CaseContext(const AffineSetup& setup, const Monomial& lead)
    : setup_(&setup),
      lead_(lead),
      below_(below_in(lead, setup.footprint())),
      ring_(std::make_unique<ParamRing>(ParamCoeffs(setup.field(), below_.size()), setup.order())),
      f_(*ring_) {
  f_.add_term(lead_, coeffs().one());
  for (std::size_t i = 0; i < below_.size(); ++i) f_.add_term(below_[i], coeffs().param(i + 1));

  if (!setup.ideal_generators().empty()) divisors_.emplace_back("K", lift(setup.ideal_generators().front()));
  const std::uint32_t q = setup.field().size();
  if (setup.arity() >= 1) {
    if (const auto* g = basis_element_with_head(setup, Monomial::var(setup.arity(), 0, q))) {
      divisors_.emplace_back("FX", lift(*g));
    }
  }
  if (setup.arity() == 2) {
    const Monomial head = Monomial::var(2, 0, q - 1) * Monomial::var(2, 1);
    if (const auto* g = basis_element_with_head(setup, head)) divisors_.emplace_back("FXY", lift(*g));
  }
}

const ParamPoly& CaseContext::divisor(std::string_view name) const {
  for (const auto& [n, p] : divisors_) {
    if (n == name) return p;
  }
  throw Error(ErrorCode::InvalidStep, "unknown divisor '" + std::string(name) + "'");
}

ParamPoly CaseContext::lift(const poly::FieldPoly& p) const {
  ParamPoly out(*ring_);
  for (const auto& [m, c] : p.terms()) out.add_term(m, coeffs().constant(c));
  return out;
}

poly::FieldPoly CaseContext::instantiate(const Assignment& values) const {
  poly::FieldPoly f(setup_->ring());
  f.add_term(lead_, setup_->field().one());
  for (std::size_t i = 0; i < below_.size(); ++i) f.add_term(below_[i], values.at(i));
  return f;
}

// ---------------------------------------------------------------------------

ReduceResult param_reduce_step(const ParamPoly& s, const ParamPoly& d, ReductionMode mode,
                               const ConstraintStore& cs) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reduction by the zero polynomial");
  const ParamCoeffs& cr = s.coeffs();
  const ParamCoef lc = d.leading_coefficient();

  ReduceResult out{ParamPoly(s.ring()), ParamPoly(s.ring()), cr.one()};
  if (auto k = cr.as_constant(lc); k && !k->is_zero()) {
    auto res = poly::divide<ParamCoeffs>(s, std::span<const ParamPoly>(&d, 1), mode);
    out.quotient = std::move(res.quotients.front());
    out.remainder = std::move(res.remainder);
  } else if (cs.certified_nonzero(lc)) {
    // Multiply through by lc instead of dividing by it.
    const Monomial& head = d.leading_monomial();
    ParamPoly w = s;
    auto it = w.terms().begin();
    while (it != w.terms().end()) {
      const Monomial m = it->first;
      const ParamCoef c = it->second;
      if (head.divides(m)) {
        const Monomial shift = head.quotient_into(m);
        w = w.scale(lc) - d.mul_term(c, shift);
        out.quotient = out.quotient.scale(lc) + ParamPoly::term(s.ring(), c, shift);
        out.remainder = out.remainder.scale(lc);
        out.scale = cr.mul(out.scale, lc);
        it = w.terms().upper_bound(m);
      } else if (mode == ReductionMode::full) {
        out.remainder.add_term(m, c);
        w.set_coefficient(m, cr.zero());
        it = w.terms().upper_bound(m);
      } else {
        break;
      }
    }
    out.remainder += w;
  } else {
    throw Error(ErrorCode::UncertifiedLeadingCoefficient,
                "leading coefficient " + cr.to_string(lc) + " of the divisor is not certified nonzero");
  }

  const ParamPoly lhs = s.scale(out.scale);
  const ParamPoly rhs = out.quotient * d + out.remainder;
  if (!(lhs == rhs)) throw Error(ErrorCode::InvalidStep, "reduction identity does not hold");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Line {
  int number;
  std::string text;
};

class TraceParser {
 public:
  explicit TraceParser(std::string_view text) {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      std::string t = trim(raw);
      if (!t.empty()) lines_.push_back({number, std::move(t)});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  Trace parse() {
    Trace trace;
    if (pos_ < lines_.size() && starts_with(lines_[pos_].text, "lm ")) {
      trace.lead = trim(lines_[pos_].text.substr(3));
      ++pos_;
    }
    trace.steps = block();
    if (pos_ < lines_.size()) fail(lines_[pos_], "unmatched '" + lines_[pos_].text + "'");
    return trace;
  }

 private:
  static bool starts_with(const std::string& s, std::string_view p) { return s.rfind(p, 0) == 0; }

  [[noreturn]] static void fail(const Line& l, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(l.number) + ": " + what);
  }

  std::vector<TraceStep> block() {
    std::vector<TraceStep> steps;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_];
      if (l.text == "}" || l.text == "} else {") break;
      if (!steps.empty() && steps.back().kind == TraceStep::Kind::branch) {
        fail(l, "a branch must be the last step of its block");
      }
      ++pos_;
      steps.push_back(step(l));
    }
    return steps;
  }

  TraceStep step(const Line& l) {
    TraceStep s;
    s.line = l.number;
    std::istringstream in(l.text);
    std::string word;
    in >> word;
    if (word == "mul" || word == "claim") {
      s.kind = word == "mul" ? TraceStep::Kind::mul : TraceStep::Kind::claim;
      s.text = trim(l.text.substr(word.size()));
      if (s.text.empty()) fail(l, word + " needs a monomial");
    } else if (word == "red") {
      s.kind = TraceStep::Kind::red;
      std::string mode, extra;
      in >> s.text >> mode;
      if (s.text.empty() || (mode != "head" && mode != "full") || (in >> extra)) {
        fail(l, "expected 'red <F|K|FX|FXY> <head|full>'");
      }
      s.mode = mode == "head" ? ReductionMode::head : ReductionMode::full;
    } else if (word == "reset") {
      s.kind = TraceStep::Kind::reset;
      if (l.text != "reset") fail(l, "reset takes no argument");
    } else if (word == "branch") {
      s.kind = TraceStep::Kind::branch;
      if (l.text.back() != '{') fail(l, "expected '{' at the end of a branch line");
      s.text = trim(std::string_view(l.text).substr(6, l.text.size() - 7));
      if (s.text.empty()) fail(l, "branch needs an expression");
      s.nonzero_block = block();
      if (pos_ >= lines_.size() || lines_[pos_].text != "} else {") fail(l, "branch without '} else {'");
      ++pos_;
      s.zero_block = block();
      if (pos_ >= lines_.size() || lines_[pos_].text != "}") fail(l, "branch without closing '}'");
      ++pos_;
    } else {
      fail(l, "unknown step '" + word + "'");
    }
    return s;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

// Working state along one path of a case tree.
struct PathState {
  ConstraintStore store;
  ParamPoly w;
  ParamPoly f;
  std::vector<char> established;  // indexed like the footprint
  std::vector<Monomial> claims;
};

void mark_upset(std::vector<char>& est, const Monomial& n, const groebner::Footprint& fp) {
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (n.divides(fp.monomials[i])) est[i] = 1;
  }
}

Leaf make_leaf(const PathState& s, const groebner::Footprint& fp) {
  Leaf leaf;
  leaf.constraints = s.store.describe();
  leaf.claims = s.claims;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    if (s.established[i]) leaf.established.push_back(fp.monomials[i]);
  }
  leaf.count = leaf.established.size();
  leaf.store = std::make_shared<const ConstraintStore>(s.store);
  return leaf;
}

Leaf vacuous_leaf(const ConstraintStore& store) {
  Leaf leaf;
  leaf.constraints = store.describe();
  leaf.vacuous = true;
  return leaf;
}

PathState root_state(const CaseContext& ctx) {
  const auto& fp = ctx.setup().footprint();
  PathState s{ConstraintStore(ctx.coeffs()), ctx.generic(), ctx.generic(),
              std::vector<char>(fp.size(), 0), {}};
  mark_upset(s.established, ctx.lead(), fp);
  return s;
}

ParamCoef parse_expression(const CaseContext& ctx, const std::string& text, int line) {
  ParamPoly p = ctx.parse(text);
  if (p.is_zero()) return ctx.coeffs().zero();
  if (p.size() != 1 || !p.leading_monomial().is_one()) {
    throw Error(ErrorCode::InvalidStep, at_line(line) + "branch expression '" + text + "' mentions X or Y");
  }
  return p.leading_coefficient();
}

class Replayer {
 public:
  Replayer(const CaseContext& ctx, BoundReport& report, std::ostream* log)
      : ctx_(ctx), report_(report), log_(log) {}

  void run(const std::vector<TraceStep>& steps, PathState s) {
    const auto& fp = ctx_.setup().footprint();
    for (const auto& step : steps) {
      ++report_.steps;
      switch (step.kind) {
        case TraceStep::Kind::mul:
          s.w = s.w.mul_term(ctx_.coeffs().one(), monomial(step));
          break;
        case TraceStep::Kind::reset:
          s.w = s.f;
          break;
        case TraceStep::Kind::red: {
          const ParamPoly& d = step.text == "F" ? s.f : divisor(step);
          ReduceResult r = reduce(s.w, d, step, s.store);
          if (r.remainder == s.w) {
            throw Error(ErrorCode::InvalidStep, at_line(step.line) + "red " + step.text + " changes nothing");
          }
          s.w = std::move(r.remainder);
          break;
        }
        case TraceStep::Kind::claim: {
          const Monomial n = monomial(step);
          if (!fp.contains(n)) {
            throw Error(ErrorCode::InvalidStep,
                        at_line(step.line) + "claimed " + step.text + " is not in the footprint");
          }
          check_claim(s, n, step);
          mark_upset(s.established, n, fp);
          s.claims.push_back(n);
          break;
        }
        case TraceStep::Kind::branch: {
          const ParamCoef e = s.store.reduce(parse_expression(ctx_, step.text, step.line));
          auto [nonzero, zero] = s.store.branch(e);
          descend(step.nonzero_block, s, std::move(nonzero));
          descend(step.zero_block, s, std::move(zero));
          return;
        }
      }
      if (log_) {
        *log_ << "line " << step.line << " [" << s.store.describe() << "]: " << poly::to_string(s.w) << "\n";
      }
    }
    report_.leaves.push_back(make_leaf(s, fp));
  }

 private:
  Monomial monomial(const TraceStep& step) const {
    try {
      return poly::parse_monomial(step.text, ctx_.setup().arity());
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidStep, at_line(step.line) + e.detail());
    }
  }

  const ParamPoly& divisor(const TraceStep& step) const {
    try {
      return ctx_.divisor(step.text);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidStep, at_line(step.line) + e.detail());
    }
  }

  static ReduceResult reduce(const ParamPoly& w, const ParamPoly& d, const TraceStep& step,
                             const ConstraintStore& store) {
    try {
      return param_reduce_step(w, d, step.mode, store);
    } catch (const Error& e) {
      throw Error(e.code(), at_line(step.line) + e.detail());
    }
  }

  void check_claim(const PathState& s, const Monomial& n, const TraceStep& step) const {
    const auto& order = ctx_.setup().order();
    const ParamCoeffs& cr = ctx_.coeffs();
    for (const auto& [m, c] : s.w.terms()) {
      if (!order.less(n, m)) break;
      if (!s.store.is_zero(c)) {
        throw Error(ErrorCode::UnjustifiedClaim,
                    at_line(step.line) + "claim " + step.text + ": term " + poly::to_string(m) +
                        " with coefficient " + cr.to_string(s.store.reduce(c)) +
                        " is not zero under " + s.store.describe());
      }
    }
    const ParamCoef c = s.w.coefficient(n);
    if (!s.store.certified_nonzero(c)) {
      throw Error(ErrorCode::UnjustifiedClaim,
                  at_line(step.line) + "claim " + step.text + ": coefficient " +
                      cr.to_string(s.store.reduce(c)) + " is not certified nonzero under " +
                      s.store.describe());
    }
  }

  void descend(const std::vector<TraceStep>& block, const PathState& parent, ConstraintStore child) {
    if (child.vacuous()) {
      report_.leaves.push_back(vacuous_leaf(child));
      return;
    }
    PathState s{std::move(child), ParamPoly(ctx_.ring()), ParamPoly(ctx_.ring()), parent.established,
                parent.claims};
    s.w = s.store.reduce(parent.w);
    s.f = s.store.reduce(parent.f);
    run(block, std::move(s));
  }

  const CaseContext& ctx_;
  BoundReport& report_;
  std::ostream* log_;
};

void finish(BoundReport& report) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& leaf : report.leaves) {
    if (!leaf.vacuous) best = std::min(best, leaf.count);
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw Error(ErrorCode::VacuousEverywhere,
                "every branch for " + poly::to_string(report.lead) + " is vacuous");
  }
  report.bound = best;
}

}  // namespace

Trace parse_trace(std::string_view text) { return TraceParser(text).parse(); }

BoundReport verify_trace(const CaseContext& ctx, const Trace& trace, std::ostream* log) {
  const auto& fp = ctx.setup().footprint();
  if (trace.lead) {
    const Monomial m = poly::parse_monomial(*trace.lead, ctx.setup().arity());
    if (!(m == ctx.lead())) {
      throw Error(ErrorCode::InvalidStep, "trace is for " + *trace.lead + ", not " + poly::to_string(ctx.lead()));
    }
  }
  BoundReport report;
  report.lead = ctx.lead();
  report.params = ctx.params();
  report.baseline = divisibility_bound(ctx.lead(), fp);
  Replayer(ctx, report, log).run(trace.steps, root_state(ctx));
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------

std::size_t weight_ceiling(const AffineSetup& setup, const Monomial& lead, std::size_t max_weight) {
  const auto& fp = setup.footprint();
  const auto& field = setup.field();
  const std::size_t n = setup.length();
  const std::size_t target = fp.index_of(lead);
  if (fp.size() != n || n == 0) return n;
  // Row i of inv maps a word to the coefficient of fp.monomials[i] in its
  // interpolating polynomial: invert the transposed evaluation matrix.
  codes::Matrix a(n, std::vector<Element>(2 * n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = codes::evaluation_vector(setup.monomial(fp.monomials[i]), setup.variety());
    for (std::size_t j = 0; j < n; ++j) a[j][i] = row[j];
    a[i][n + i] = field.one();
  }
  codes::row_reduce(a, field);
  const auto lead_index = [&](const std::vector<Element>& c) {
    for (std::size_t i = n; i-- > 0;) {
      if (!c[i].is_zero()) return i;
    }
    return n;
  };
  std::vector<Element> c(n);
  const auto column = [&](std::size_t j, Element scale, bool accumulate) {
    for (std::size_t i = 0; i < n; ++i) {
      const Element v = field.mul(a[i][n + j], scale);
      c[i] = accumulate ? field.add(c[i], v) : v;
    }
  };
  if (max_weight >= 1) {
    for (std::size_t j = 0; j < n; ++j) {
      column(j, field.one(), false);
      if (lead_index(c) == target) return 1;
    }
  }
  if (max_weight >= 2) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::uint32_t l = 1; l < field.size(); ++l) {
          column(j, field.one(), false);
          column(k, field.make(l), true);
          if (lead_index(c) == target) return 2;
        }
      }
    }
  }
  return n;
}

namespace {

class Searcher {
 public:
  Searcher(const CaseContext& ctx, const SearchBudget& budget)
      : ctx_(ctx), budget_(budget), ceiling_(weight_ceiling(ctx.setup(), ctx.lead())) {
    const std::size_t n = ctx.setup().arity();
    if (budget.moves.empty()) {
      moves_.push_back(Monomial::var(n, 0));
      if (n >= 2) {
        moves_.push_back(Monomial::var(n, 1));
        moves_.push_back(Monomial::var(n, 1, 2));
      }
      for (std::uint32_t e = 2; e < ctx.setup().field().size(); ++e) moves_.push_back(Monomial::var(n, 0, e));
    } else {
      moves_ = budget.moves;
    }
    for (const char* name : {"K", "FX", "FXY"}) {
      try {
        fixed_.push_back(ctx.divisor(name));
      } catch (const Error&) {
      }
    }
  }

  struct Outcome {
    std::size_t value = 0;
    std::vector<Leaf> leaves;
  };

  Outcome value(const PathState& node, std::size_t depth) {
    ++nodes_;
    const auto& fp = ctx_.setup().footprint();
    Outcome best{count(node), {make_leaf(node, fp)}};
    if (depth >= budget_.max_depth || best.value >= ceiling_) return best;
    for (int source = 0; source < 2; ++source) {
      if (source == 1 && node.w == node.f) continue;
      const ParamPoly& from = source == 0 ? node.w : node.f;
      if (from.is_zero()) continue;
      for (const auto& m : moves_) {
        if (nodes_ >= budget_.max_nodes || best.value >= ceiling_) return best;
        ParamPoly p = reduce(from.mul_term(ctx_.coeffs().one(), m), node);
        std::vector<PathState> cases;
        split(node.store, p, std::nullopt, node, cases);
        if (cases.empty()) continue;
        Outcome worst{std::numeric_limits<std::size_t>::max(), {}};
        for (const auto& c : cases) {
          Outcome o = value(c, depth + 1);
          if (o.value < worst.value) worst.value = o.value;
          worst.leaves.insert(worst.leaves.end(), o.leaves.begin(), o.leaves.end());
          if (worst.value <= best.value) break;
        }
        if (worst.value > best.value) best = std::move(worst);
      }
    }
    return best;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  static std::size_t count(const PathState& s) {
    return static_cast<std::size_t>(std::count(s.established.begin(), s.established.end(), 1));
  }

  ParamPoly reduce(const ParamPoly& p, const PathState& node) const {
    std::vector<ParamPoly> divisors = fixed_;
    divisors.push_back(node.f);
    const auto certified = [&node](const ParamCoef& c) { return node.store.certified_nonzero(c); };
    return poly::divide<ParamCoeffs>(p, divisors, ReductionMode::head, certified).remainder;
  }

  // Case split on the leading coefficient: scan down from the top (below
  // `after` if set), skipping coefficients that vanish, claiming the first
  // certified nonzero one and branching on any undecided one.
  void split(const ConstraintStore& store, const ParamPoly& p, const std::optional<Monomial>& after,
             const PathState& parent, std::vector<PathState>& out) const {
    auto it = after ? p.terms().upper_bound(*after) : p.terms().begin();
    for (; it != p.terms().end(); ++it) {
      const auto& [m, c] = *it;
      if (store.is_zero(c)) continue;
      if (store.certified_nonzero(c)) {
        out.push_back(child(store, p, parent, m));
        return;
      }
      auto [nonzero, zero] = store.branch(c);
      if (!nonzero.vacuous()) out.push_back(child(nonzero, nonzero.reduce(p), parent, m));
      if (!zero.vacuous()) split(zero, zero.reduce(p), m, parent, out);
      return;
    }
    // p vanishes on this branch.
    PathState s{store, ParamPoly(ctx_.ring()), store.reduce(parent.f), parent.established, parent.claims};
    out.push_back(std::move(s));
  }

  PathState child(const ConstraintStore& store, const ParamPoly& p, const PathState& parent,
                  const Monomial& m) const {
    const auto& fp = ctx_.setup().footprint();
    PathState s{store, p, store.reduce(parent.f), parent.established, parent.claims};
    if (fp.contains(m)) {
      mark_upset(s.established, m, fp);
      s.claims.push_back(m);
    }
    return s;
  }

  const CaseContext& ctx_;
  const SearchBudget& budget_;
  std::vector<Monomial> moves_;
  std::vector<ParamPoly> fixed_;
  std::size_t ceiling_;
  std::size_t nodes_ = 0;
};

}  // namespace

BoundReport auto_search(const CaseContext& ctx, const SearchBudget& budget) {
  BoundReport report;
  report.lead = ctx.lead();
  report.params = ctx.params();
  report.baseline = divisibility_bound(ctx.lead(), ctx.setup().footprint());
  Searcher searcher(ctx, budget);
  auto outcome = searcher.value(root_state(ctx), 0);
  report.leaves = std::move(outcome.leaves);
  report.steps = searcher.nodes();
  finish(report);
  return report;
}

// ---------------------------------------------------------------------------

InstantiationReport instantiate_and_check(const CaseContext& ctx, const Leaf& leaf, std::size_t nsamples,
                                          std::uint64_t seed) {
  if (leaf.vacuous || !leaf.store) throw Error(ErrorCode::UnsatisfiableLeaf, "leaf is vacuous");
  InstantiationReport report;
  report.min_weight = std::numeric_limits<std::size_t>::max();
  const AffineSetup& setup = ctx.setup();
  for (std::size_t s = 0; s < nsamples; ++s) {
    auto values = leaf.store->witness(SplitMix64::stream(seed, s).next());
    if (!values) {
      throw Error(ErrorCode::UnsatisfiableLeaf, "no assignment satisfies " + leaf.constraints);
    }
    const poly::FieldPoly f = ctx.instantiate(*values);
    const groebner::Footprint fp = footprint_with(f, setup);
    const std::size_t weight = setup.length() - fp.size();
    report.min_weight = std::min(report.min_weight, weight);
    ++report.samples;
    for (const auto& n : leaf.established) {
      if (fp.contains(n)) {
        ++report.violations;
        report.messages.push_back(poly::to_string(n) + " is in the footprint of <F> + I for F = " +
                                  poly::to_string(f));
      }
    }
  }
  return report;
}

codes::DeltaMap figure2_map(const AffineSetup& setup, const std::vector<BoundReport>& reports) {
  codes::DeltaMap map(setup.order());
  for (const auto& m : setup.footprint().monomials) {
    std::size_t delta = divisibility_bound(m, setup.footprint());
    for (const auto& r : reports) {
      if (r.lead == m) delta = std::max(delta, r.bound);
    }
    map.set(m, static_cast<std::uint32_t>(delta));
  }
  return map;
}

}  // namespace klein::casebound
