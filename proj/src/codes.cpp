#include "klein/codes.hpp"

#include <algorithm>
#include <set>

namespace klein::codes {

Variety enumerate_variety(const std::vector<FieldPoly>& gens, const gf::Field& field,
                          std::size_t arity) {
  Variety v;
  const std::uint64_t q = field.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= q;
  std::vector<Element> coords(arity);
  // Index 0 is the most significant coordinate, so the scan is already in
  // lexicographic order of encodings.
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = arity; i-- > 0;) {
      coords[i] = field.make(static_cast<std::uint32_t>(rest % q));
      rest /= q;
    }
    const bool zero = std::all_of(gens.begin(), gens.end(), [&](const FieldPoly& g) {
      return poly::eval(g, coords).is_zero();
    });
    if (zero) v.points.push_back({coords});
  }
  return v;
}

bool verify_fano(const Variety& v) {
  if (v.points.empty() || v.points.front().coords.size() != 2) return false;
  std::map<std::uint16_t, std::set<std::uint16_t>> lines;
  std::size_t on_axis = 0;
  for (const auto& p : v.points) {
    if (p.coords[0].is_zero()) {
      ++on_axis;
    } else {
      lines[p.coords[0].enc].insert(p.coords[1].enc);
    }
  }
  if (on_axis != 1 || lines.size() != 7) return false;
  std::map<std::uint16_t, int> incidence;
  for (const auto& [a, line] : lines) {
    if (line.size() != 3 || line.count(0)) return false;
    for (auto b : line) ++incidence[b];
  }
  if (incidence.size() != 7) return false;
  for (const auto& [b, count] : incidence) {
    if (count != 3) return false;
  }
  for (auto it = lines.begin(); it != lines.end(); ++it) {
    for (auto jt = std::next(it); jt != lines.end(); ++jt) {
      std::size_t common = 0;
      for (auto b : it->second) common += jt->second.count(b);
      if (common != 1) return false;
    }
  }
  return true;
}

std::vector<Element> evaluation_vector(const FieldPoly& f, const Variety& v) {
  std::vector<Element> out;
  out.reserve(v.size());
  for (const auto& p : v.points) out.push_back(poly::eval(f, p.coords));
  return out;
}

std::size_t hamming_weight(const std::vector<Element>& word) {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [](Element e) { return !e.is_zero(); }));
}

std::vector<std::size_t> row_reduce(Matrix& m, const gf::Field& field) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const Element inv = field.inv(m[r][c]);
    for (auto& x : m[r]) x = field.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Element f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = field.sub(m[i][j], field.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const gf::Field& field) { return row_reduce(m, field).size(); }

EvaluationCode build_code(const std::vector<Monomial>& basis, const Variety& v,
                          const FieldPolyRing& ring) {
  std::set<Monomial> seen;
  for (const auto& m : basis) {
    if (!seen.insert(m).second) {
      throw Error(ErrorCode::DuplicateMonomial, poly::to_string(m) + " listed twice");
    }
  }
  EvaluationCode code;
  code.basis = basis;
  code.n = v.size();
  code.k = basis.size();
  code.field = &ring.coeffs().field();
  for (const auto& m : basis) code.generator.push_back(evaluation_vector(FieldPoly::monomial(ring, m), v));
  if (rank(code.generator, *code.field) != code.k) {
    throw Error(ErrorCode::RankDeficient, "evaluation map is not injective on the chosen monomials");
  }
  return code;
}

Matrix parity_check(const Matrix& g, std::size_t n, const gf::Field& field) {
  Matrix rref = g;
  const auto pivots = row_reduce(rref, field);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix h;
  // One row per free column f: x_f = 1, x_pivot(r) = -rref[r][f].
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Element> row(n, field.zero());
    row[f] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) row[pivots[r]] = field.sub(field.zero(), rref[r][f]);
    h.push_back(std::move(row));
  }
  return h;
}

std::uint64_t count_weight_one(const EvaluationCode& code) {
  const Matrix h = parity_check(code.generator, code.n, *code.field);
  std::uint64_t directions = 0;
  for (std::size_t j = 0; j < code.n; ++j) {
    const bool zero_column =
        std::all_of(h.begin(), h.end(), [j](const std::vector<Element>& row) { return row[j].is_zero(); });
    if (zero_column) ++directions;
  }
  return directions * (code.field->size() - 1);
}

void DeltaMap::set(const Monomial& m, std::uint32_t delta) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), m,
                             [this](const auto& e, const Monomial& x) { return order_->less(e.first, x); });
  if (it != entries_.end() && it->first == m) {
    it->second = delta;
  } else {
    entries_.insert(it, {m, delta});
  }
}

bool DeltaMap::contains(const Monomial& m) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == m; });
}

std::uint32_t DeltaMap::at(const Monomial& m) const {
  for (const auto& [mono, d] : entries_) {
    if (mono == m) return d;
  }
  throw Error(ErrorCode::NotInFootprint, poly::to_string(m) + " has no bound");
}

std::vector<TableRow> construct_table(const DeltaMap& dm, const Variety& v) {
  std::set<std::uint32_t, std::greater<>> thresholds;
  for (const auto& [m, d] : dm.entries()) thresholds.insert(d);
  std::vector<TableRow> rows;
  for (auto s : thresholds) {
    TableRow row;
    row.s = s;
    row.n = v.size();
    row.k = threshold_basis(dm, s).size();
    row.d = s;
    if (row.k > 0) rows.push_back(row);
  }
  return rows;
}

std::vector<Monomial> threshold_basis(const DeltaMap& dm, std::uint32_t s) {
  std::vector<Monomial> out;
  for (const auto& [m, d] : dm.entries()) {
    if (d >= s) out.push_back(m);
  }
  return out;
}

}  // namespace klein::codes
