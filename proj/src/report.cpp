#include "klein/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace klein::report {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

Json exponents(const poly::Monomial& m) {
  Json a = Json::array();
  for (auto e : m.exponents()) a.push_back(e);
  return a;
}

// Two-variable grid, Y-exponent rows from the top, X-exponent columns.
// Returns "" when the setup is not two-variable.
std::string grid(const groebner::Footprint& fp, const std::function<std::string(const poly::Monomial&)>& cell) {
  if (fp.monomials.empty() || fp.monomials.front().arity() != 2) return "";
  std::uint32_t ax = 0;
  std::uint32_t by = 0;
  for (const auto& m : fp.monomials) {
    ax = std::max(ax, m[0]);
    by = std::max(by, m[1]);
  }
  std::ostringstream out;
  out << " b\\a";
  for (std::uint32_t a = 0; a <= ax; ++a) out << pad(std::to_string(a), 4);
  out << "\n";
  for (std::uint32_t b = by + 1; b-- > 0;) {
    std::string line = pad(std::to_string(b), 4);
    for (std::uint32_t a = 0; a <= ax; ++a) {
      const poly::Monomial m{a, b};
      line += pad(fp.contains(m) ? cell(m) : "", 4);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string join(const std::vector<poly::Monomial>& ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : " ") + poly::to_string(m);
  return s;
}

Json bound_json(const casebound::BoundReport& r) {
  Json j;
  j["lead"] = poly::to_string(r.lead);
  j["params"] = r.params;
  j["baseline"] = r.baseline;
  j["bound"] = r.bound;
  j["steps"] = r.steps;
  Json leaves = Json::array();
  for (const auto& l : r.leaves) {
    Json lj;
    lj["constraints"] = l.constraints;
    lj["vacuous"] = l.vacuous;
    Json claims = Json::array();
    for (const auto& c : l.claims) claims.push_back(poly::to_string(c));
    lj["claims"] = claims;
    lj["count"] = l.count;
    leaves.push_back(lj);
  }
  j["leaves"] = leaves;
  return j;
}

std::string bound_text(const casebound::BoundReport& r) {
  std::ostringstream out;
  std::size_t live = 0;
  for (const auto& l : r.leaves) live += l.vacuous ? 0 : 1;
  out << poly::to_string(r.lead) << ": baseline " << r.baseline << ", bound " << r.bound << " (" << live
      << " leaves";
  if (live != r.leaves.size()) out << ", " << r.leaves.size() - live << " vacuous";
  out << ")\n";
  for (const auto& l : r.leaves) {
    if (l.vacuous) {
      out << "     -  vacuous: " << l.constraints << "\n";
      continue;
    }
    out << pad(std::to_string(l.count), 6) << "  " << l.constraints;
    if (!l.claims.empty()) out << "  => " << join(l.claims);
    out << "\n";
  }
  return out.str();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "' (text, json, csv)");
}

std::optional<std::uint32_t> best_known_distance(std::size_t n, std::size_t k, std::uint32_t q) {
  // [22, k]_8 codes: best minimum distances known to exist.
  static constexpr std::array<std::pair<std::size_t, std::uint32_t>, 16> kBest{{
      {1, 22}, {2, 19}, {3, 18}, {4, 17}, {5, 15}, {7, 13}, {8, 12}, {10, 10},
      {11, 9}, {13, 7}, {14, 7}, {15, 6}, {17, 4}, {18, 4}, {20, 2}, {21, 2},
  }};
  if (n != 22 || q != 8) return std::nullopt;
  for (const auto& [kk, d] : kBest) {
    if (kk == k) return d;
  }
  return std::nullopt;
}

std::string footprint(const AffineSetup& setup, Format fmt) {
  const auto& fp = setup.footprint();
  const auto& order = setup.order();
  switch (fmt) {
    case Format::json: {
      Json j;
      j["order"] = order.describe();
      Json basis = Json::array();
      for (const auto& g : setup.basis().generators()) basis.push_back(poly::to_string(g));
      j["basis"] = basis;
      j["size"] = fp.size();
      Json ms = Json::array();
      for (const auto& m : fp.monomials) {
        ms.push_back(Json{{"monomial", poly::to_string(m)}, {"exponents", exponents(m)}, {"weight", order.weight(m)}});
      }
      j["monomials"] = ms;
      return dump(j);
    }
    case Format::csv: {
      std::string out = "monomial";
      for (std::size_t i = 0; i < setup.arity(); ++i) out += "," + poly::variable_name(setup.arity(), i);
      out += ",weight\n";
      for (const auto& m : fp.monomials) {
        out += poly::to_string(m);
        for (auto e : m.exponents()) out += "," + std::to_string(e);
        out += "," + std::to_string(order.weight(m)) + "\n";
      }
      return out;
    }
    case Format::text:
      break;
  }
  std::ostringstream out;
  out << "order: " << order.describe() << "\n";
  out << "basis:";
  for (const auto& g : setup.basis().generators()) out << "\n  " << poly::to_string(g);
  out << "\nfootprint: " << fp.size() << " monomials\n";
  const std::string g = grid(fp, [&](const poly::Monomial& m) { return std::to_string(order.weight(m)); });
  if (!g.empty()) {
    out << "weights:\n" << g;
  } else {
    for (const auto& m : fp.monomials) out << "  " << poly::to_string(m) << "  " << order.weight(m) << "\n";
  }
  return out.str();
}

std::string variety(const AffineSetup& setup, Format fmt) {
  const auto& v = setup.variety();
  const bool fano = setup.arity() == 2 && codes::verify_fano(v);
  switch (fmt) {
    case Format::json: {
      Json pts = Json::array();
      for (const auto& p : v.points) {
        Json c = Json::array();
        for (auto e : p.coords) c.push_back(e.enc);
        pts.push_back(c);
      }
      return dump(Json{{"size", v.size()}, {"fano", fano}, {"points", pts}});
    }
    case Format::csv: {
      std::string out;
      for (std::size_t i = 0; i < setup.arity(); ++i) out += (i ? "," : "") + poly::variable_name(setup.arity(), i);
      out += "\n";
      for (const auto& p : v.points) {
        for (std::size_t i = 0; i < p.coords.size(); ++i) out += (i ? "," : "") + std::to_string(p.coords[i].enc);
        out += "\n";
      }
      return out;
    }
    case Format::text:
      break;
  }
  std::ostringstream out;
  out << "variety: " << v.size() << " points\n";
  for (const auto& p : v.points) {
    out << "  (";
    for (std::size_t i = 0; i < p.coords.size(); ++i) out << (i ? ", " : "") << p.coords[i].enc;
    out << ")\n";
  }
  out << "fano plane structure: " << (fano ? "yes" : "no") << "\n";
  return out.str();
}

std::string bound(const casebound::BoundReport& r, Format fmt) {
  switch (fmt) {
    case Format::json:
      return dump(bound_json(r));
    case Format::csv: {
      std::string out = "count,vacuous,constraints,claims\n";
      for (const auto& l : r.leaves) {
        out += std::to_string(l.count) + "," + (l.vacuous ? "1" : "0") + ",\"" + l.constraints + "\",\"" +
               join(l.claims) + "\"\n";
      }
      return out;
    }
    case Format::text:
      break;
  }
  return bound_text(r);
}

std::string bounds(const AffineSetup& setup, const std::vector<casebound::BoundReport>& reports,
                   const codes::DeltaMap& delta, Format fmt) {
  const auto& fp = setup.footprint();
  switch (fmt) {
    case Format::json: {
      Json cls = Json::array();
      for (const auto& r : reports) cls.push_back(bound_json(r));
      Json dm = Json::array();
      for (const auto& [m, d] : delta.entries()) {
        dm.push_back(Json{{"monomial", poly::to_string(m)},
                          {"exponents", exponents(m)},
                          {"baseline", casebound::divisibility_bound(m, fp)},
                          {"delta", d}});
      }
      return dump(Json{{"classes", cls}, {"delta", dm}});
    }
    case Format::csv: {
      std::string out = "monomial,baseline,delta\n";
      for (const auto& [m, d] : delta.entries()) {
        out += poly::to_string(m) + "," + std::to_string(casebound::divisibility_bound(m, fp)) + "," +
               std::to_string(d) + "\n";
      }
      return out;
    }
    case Format::text:
      break;
  }
  std::ostringstream out;
  for (const auto& r : reports) out << bound_text(r) << "\n";
  const std::string g = grid(fp, [&](const poly::Monomial& m) { return std::to_string(delta.at(m)); });
  out << "lower bounds delta(M):\n";
  if (!g.empty()) {
    out << g;
  } else {
    for (const auto& [m, d] : delta.entries()) out << "  " << poly::to_string(m) << "  " << d << "\n";
  }
  return out.str();
}

std::string table(const std::vector<codes::TableRow>& rows, std::uint32_t q, Format fmt) {
  const auto supplementary = [](const codes::TableRow& r) { return r.s == 1 && r.k == r.n; };
  const auto comparison = [&](const codes::TableRow& r) -> std::string {
    const auto best = best_known_distance(r.n, r.k, q);
    if (!best) return "";
    if (*best == r.d) return "matches";
    if (*best == r.d + 1) return "one less";
    return *best > r.d ? "below" : "above";
  };
  switch (fmt) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& r : rows) {
        Json j{{"s", r.s}, {"n", r.n}, {"k", r.k}, {"d", r.d}};
        j["measured"] = r.measured ? Json(*r.measured) : Json(nullptr);
        j["exact"] = r.exact;
        const auto best = best_known_distance(r.n, r.k, q);
        j["best_known"] = best ? Json(*best) : Json(nullptr);
        j["supplementary"] = supplementary(r);
        a.push_back(j);
      }
      return dump(Json{{"q", q}, {"rows", a}});
    }
    case Format::csv: {
      std::string out = "s,n,k,d,measured,exact,best_known,supplementary\n";
      for (const auto& r : rows) {
        const auto best = best_known_distance(r.n, r.k, q);
        out += std::to_string(r.s) + "," + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
               std::to_string(r.d) + "," + (r.measured ? std::to_string(*r.measured) : "") + "," +
               (r.exact ? "1" : "0") + "," + (best ? std::to_string(*best) : "") + "," +
               (supplementary(r) ? "1" : "0") + "\n";
      }
      return out;
    }
    case Format::text:
      break;
  }
  std::ostringstream out;
  out << "    s  [n, k, d]_" << q << "      best known\n";
  for (const auto& r : rows) {
    std::string code = "[" + std::to_string(r.n) + ", " + std::to_string(r.k) + ", " + std::to_string(r.d) + "]";
    std::string line = pad(std::to_string(r.s), 5) + "  " + code + std::string(16 - std::min<std::size_t>(code.size(), 15), ' ');
    const auto best = best_known_distance(r.n, r.k, q);
    line += best ? pad(std::to_string(*best), 3) + "  " + comparison(r) : "";
    if (r.measured) line += "  measured " + std::to_string(*r.measured) + (r.exact ? " (exact)" : " (upper)");
    if (supplementary(r)) line += "  (supplementary)";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string scan(const ScanReport& r, Format fmt) {
  const bool ok = r.result.min_weight >= r.delta;
  switch (fmt) {
    case Format::json: {
      Json arg = Json::array();
      for (auto e : r.result.argmin) arg.push_back(e.enc);
      return dump(Json{{"lead", poly::to_string(r.lead)},
                       {"mode", r.mode},
                       {"states", r.result.states},
                       {"min_weight", r.result.min_weight},
                       {"exact", r.result.exact},
                       {"argmin", arg},
                       {"delta", r.delta},
                       {"consistent", ok}});
    }
    case Format::csv: {
      std::string arg;
      for (auto e : r.result.argmin) arg += (arg.empty() ? "" : " ") + std::to_string(e.enc);
      return "lead,mode,states,min_weight,exact,delta,consistent,argmin\n" + poly::to_string(r.lead) + "," + r.mode +
             "," + std::to_string(r.result.states) + "," + std::to_string(r.result.min_weight) + "," +
             (r.result.exact ? "1" : "0") + "," + std::to_string(r.delta) + "," + (ok ? "1" : "0") + "," + arg + "\n";
    }
    case Format::text:
      break;
  }
  std::ostringstream out;
  out << "class " << poly::to_string(r.lead) << ", " << r.mode << " scan of " << r.result.states << " states\n";
  out << "minimum weight " << r.result.min_weight << (r.result.exact ? " (exact)" : " (upper bound)") << "\n";
  out << "argmin coefficients:";
  for (auto e : r.result.argmin) out << " " << e.enc;
  out << "\ndelta " << r.delta << ": " << (ok ? "consistent" : "VIOLATED") << "\n";
  return out.str();
}

std::string checks(const std::vector<Check>& list, Format fmt) {
  const bool all = std::all_of(list.begin(), list.end(), [](const Check& c) { return c.passed; });
  switch (fmt) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& c : list) a.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      return dump(Json{{"passed", all}, {"checks", a}});
    }
    case Format::csv: {
      std::string out = "name,passed,detail\n";
      for (const auto& c : list) out += c.name + "," + (c.passed ? "1" : "0") + ",\"" + c.detail + "\"\n";
      return out;
    }
    case Format::text:
      break;
  }
  std::ostringstream out;
  for (const auto& c : list) out << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

}  // namespace klein::report
