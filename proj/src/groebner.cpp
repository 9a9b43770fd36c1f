#include "klein/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace klein::groebner {
namespace {

FieldPoly make_monic(const FieldPoly& p) {
  const auto& f = p.coeffs().field();
  return p.scale(f.inv(p.leading_coefficient()));
}

FieldPoly reduce_full(const FieldPoly& p, const std::vector<FieldPoly>& by) {
  return poly::divide<poly::FieldCoeffs>(p, by, poly::ReductionMode::full).remainder;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::heads() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const FieldPoly& g) { return g.leading_monomial().is_one(); });
}

bool Footprint::contains(const Monomial& m) const {
  return std::binary_search(monomials.begin(), monomials.end(), m,
                            [this](const Monomial& a, const Monomial& b) { return order->less(a, b); });
}

std::size_t Footprint::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m,
                             [this](const Monomial& a, const Monomial& b) { return order->less(a, b); });
  if (it == monomials.end() || !(*it == m)) {
    throw Error(ErrorCode::NotInFootprint, poly::to_string(m) + " is not in the footprint");
  }
  return static_cast<std::size_t>(it - monomials.begin());
}

FieldPoly s_polynomial(const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "S-polynomial of zero");
  const auto& field = f.coeffs().field();
  const auto& [mf, cf] = f.leading_term();
  const auto& [mg, cg] = g.leading_term();
  const Monomial l = mf.lcm(mg);
  return f.mul_term(field.inv(cf), mf.quotient_into(l)) - g.mul_term(field.inv(cg), mg.quotient_into(l));
}

GroebnerBasis buchberger(const FieldPolyRing& ring, const std::vector<FieldPoly>& gens,
                         BuchbergerStats* stats) {
  const auto& order = ring.order();
  std::vector<FieldPoly> basis;
  for (const auto& g : gens) {
    if (&g.ring() != &ring) throw Error(ErrorCode::DomainMismatch, "generator from another ring");
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  BuchbergerStats local;
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, index order breaks ties.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pr = *best;
    pairs.erase(best);
    ++local.pairs_considered;
    if (basis[pr.i].leading_monomial().coprime(basis[pr.j].leading_monomial())) {
      ++local.pairs_skipped_coprime;
      continue;
    }
    FieldPoly r = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (r.is_zero()) {
      ++local.reductions_to_zero;
      continue;
    }
    basis.push_back(make_monic(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimal basis: drop generators whose head is divisible by another head.
  std::vector<FieldPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& hi = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& hj = basis[j].leading_monomial();
      if (hj.divides(hi) && (!(hj == hi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce each generator by the others.
  std::vector<FieldPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FieldPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    FieldPoly g = minimal[i];
    const auto lt = *g.terms().begin();
    FieldPoly tail = g;
    tail.set_coefficient(lt.first, ring.coeffs().zero());
    FieldPoly nf = reduce_full(tail, others);
    nf.add_term(lt.first, lt.second);
    reduced.push_back(make_monic(nf));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const FieldPoly& a, const FieldPoly& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  if (stats) *stats = local;
  return GroebnerBasis(ring, std::move(reduced), true);
}

FieldPoly normal_form(const FieldPoly& p, const GroebnerBasis& gb) {
  return reduce_full(p, gb.generators());
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!reduce_full(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto heads = gb.heads();
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].leading_coefficient() != g[i].coeffs().one()) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g[i].terms()) {
        if (heads[j].divides(m)) return false;
      }
    }
  }
  return true;
}

Footprint footprint(const GroebnerBasis& gb) {
  const auto& ring = gb.ring();
  const std::size_t n = ring.arity();
  const auto heads = gb.heads();
  Footprint fp;
  fp.order = &ring.order();
  if (heads.empty()) throw Error(ErrorCode::InfiniteFootprint, "zero ideal");

  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::optional<std::uint32_t> best;
    for (const auto& h : heads) {
      bool pure = true;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && h[w] != 0) pure = false;
      }
      if (pure && (!best || h[v] < *best)) best = h[v];
    }
    if (!best) {
      throw Error(ErrorCode::InfiniteFootprint,
                  "no pure power of " + poly::variable_name(n, v) + " among the heads");
    }
    bound[v] = *best;
  }

  Monomial cur(n);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      for (const auto& h : heads) {
        if (h.divides(cur)) return;
      }
      fp.monomials.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < bound[v]; ++e) {
      cur[v] = e;
      walk(v + 1);
    }
    cur[v] = 0;
  };
  walk(0);
  std::sort(fp.monomials.begin(), fp.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return fp.order->less(a, b); });
  return fp;
}

OrderDomainConditions order_domain_check(const GroebnerBasis& gb, std::uint64_t weight_bound) {
  const auto& order = gb.ring().order();
  OrderDomainConditions out;
  out.weighted_order = order.kind() == poly::OrderKind::weighted_deg_lex;

  out.two_top_weight_monomials = !gb.generators().empty();
  for (const auto& g : gb.generators()) {
    std::uint64_t top = 0;
    for (const auto& [m, c] : g.terms()) top = std::max(top, order.weight(m));
    std::size_t count = 0;
    for (const auto& [m, c] : g.terms()) count += order.weight(m) == top ? 1 : 0;
    if (count != 2) out.two_top_weight_monomials = false;
  }

  std::vector<Monomial> candidates;
  try {
    candidates = footprint(gb).monomials;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteFootprint) throw;
    // Enumerate monomials of bounded weight outside the initial ideal.
    const std::size_t n = gb.ring().arity();
    const auto heads = gb.heads();
    Monomial cur(n);
    std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t v, std::uint64_t w) {
      if (v == n) {
        for (const auto& h : heads) {
          if (h.divides(cur)) return;
        }
        candidates.push_back(cur);
        return;
      }
      const std::uint64_t step = order.weight(Monomial::var(n, v));
      for (std::uint32_t e = 0; w + e * step <= weight_bound; ++e) {
        cur[v] = e;
        walk(v + 1, w + e * step);
      }
      cur[v] = 0;
    };
    walk(0, 0);
  }
  std::set<std::uint64_t> seen;
  out.distinct_footprint_weights = true;
  for (const auto& m : candidates) {
    if (!seen.insert(order.weight(m)).second) out.distinct_footprint_weights = false;
  }
  return out;
}

}  // namespace klein::groebner
