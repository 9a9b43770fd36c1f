#include <doctest.h>

#include <algorithm>

#include "klein/expected.hpp"
#include "klein/oracle.hpp"
#include "klein/rng.hpp"
#include "klein/setup.hpp"
#include "support.hpp"

using namespace klein;
using codes::Element;
using poly::FieldPoly;
using poly::Monomial;
using test::code_of;
using test::derived;

namespace {

const gf::Field& F8() { return gf::Field::gf8(); }
const AffineSetup& K() { return AffineSetup::klein(); }

FieldPoly random_reduced(SplitMix64& rng) {
  for (;;) {
    FieldPoly p(K().ring());
    const std::uint64_t density = 5 + rng.below(90);  // percent
    for (const auto& m : K().footprint().monomials) {
      if (rng.below(100) < density) p.add_term(m, F8().make(static_cast<std::uint32_t>(1 + rng.below(7))));
    }
    if (!p.is_zero()) return p;
  }
}

codes::DeltaMap expected_delta() {
  codes::DeltaMap dm(K().order());
  for (std::uint32_t b = 0; b < 3; ++b) {
    for (std::uint32_t a = 0; a < 8; ++a) {
      if (expected::kDelta[b][a]) dm.set(Monomial{a, b}, expected::kDelta[b][a]);
    }
  }
  return dm;
}

std::vector<Element> random_word(SplitMix64& rng, std::size_t n) {
  std::vector<Element> w(n);
  for (auto& e : w) e = F8().make(static_cast<std::uint32_t>(rng.below(8)));
  return w;
}

}  // namespace

TEST_CASE("the variety has 22 points and matches the oracle") {
  const auto& v = K().variety();
  REQUIRE(v.size() == expected::kLength);
  const auto& pts = derived()["variety"];
  REQUIRE(pts.size() == v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(v.points[i].coords[0].enc == pts[i][0].get<int>());
    CHECK(v.points[i].coords[1].enc == pts[i][1].get<int>());
  }
  CHECK(v.points.front().coords == std::vector<Element>{F8().zero(), F8().zero()});
  CHECK(codes::verify_fano(v));
}

TEST_CASE("Fano check rejects other point sets") {
  codes::Variety v = K().variety();
  v.points.pop_back();
  CHECK_FALSE(codes::verify_fano(v));
  const auto line = codes::enumerate_variety({K().parse("Y + X")}, F8(), 2);
  CHECK(line.size() == 8);
  CHECK_FALSE(codes::verify_fano(line));
}

TEST_CASE("evaluation vectors") {
  const auto& v = K().variety();
  CHECK(codes::hamming_weight(codes::evaluation_vector(K().parse("1"), v)) == 22);
  CHECK(codes::hamming_weight(codes::evaluation_vector(K().parse("Y^3 + X^3*Y + X"), v)) == 0);
  CHECK(codes::hamming_weight(codes::evaluation_vector(K().parse("X^6*Y^2"), v)) ==
        derived()["weight_X6Y2"].get<std::size_t>());
  CHECK(codes::hamming_weight(codes::evaluation_vector(K().parse("X^7 + 1"), v)) ==
        derived()["weight_X7_plus_1"].get<std::size_t>());
  CHECK(codes::evaluation_vector(K().parse("X"), v)[2] == F8().make(1));
}

TEST_CASE("footprint weights match the oracle") {
  const auto& w = derived()["footprint_weights"];
  CHECK(w.size() == K().footprint().size());
  for (const auto& m : K().footprint().monomials) {
    CHECK(K().order().weight(m) == w[poly::to_string(m)].get<std::uint64_t>());
  }
}

TEST_CASE("evaluation is a bijection from reduced polynomials to words") {
  const auto code = codes::build_code(K().footprint().monomials, K().variety(), K().ring());
  CHECK(code.k == 22);
  CHECK(code.n == 22);
  CHECK(codes::rank(code.generator, F8()) == 22);
  CHECK(codes::parity_check(code.generator, code.n, F8()).empty());
}

TEST_CASE("build_code errors") {
  CHECK(code_of([] { codes::build_code({Monomial{1, 0}, Monomial{1, 0}}, K().variety(), K().ring()); }) ==
        ErrorCode::DuplicateMonomial);
  // X^8 and X agree on every point
  CHECK(code_of([] { codes::build_code({Monomial{1, 0}, Monomial{8, 0}}, K().variety(), K().ring()); }) ==
        ErrorCode::RankDeficient);
}

TEST_CASE("weight identity: footprint count equals Hamming weight") {
  CHECK(weight_via_footprint(K().parse("1"), K()) == 22);
  CHECK(weight_via_footprint(K().parse("X"), K()) == 21);
  CHECK(weight_via_footprint(K().parse("X^7 + 1"), K()) == 1);
  CHECK(code_of([] { weight_via_footprint(FieldPoly(K().ring()), K()); }) == ErrorCode::ZeroPolynomial);

  SplitMix64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const FieldPoly f = random_reduced(rng);
    CHECK(weight_via_footprint(f, K()) == codes::hamming_weight(codes::evaluation_vector(f, K().variety())));
  }
}

TEST_CASE("the leading monomials of <Y + 2X> + I_q match the oracle") {
  const FieldPoly f = K().parse("Y + 2*X");
  const auto fp = footprint_with(f, K());
  const auto& d = derived()["leaf_Y_a1_alpha"];
  CHECK(fp.size() == d["zeros"].get<std::size_t>());
  std::vector<std::string> leading;
  for (const auto& m : K().footprint().monomials) {
    if (!fp.contains(m)) leading.push_back(poly::to_string(m));
  }
  CHECK(leading == d["leading"].get<std::vector<std::string>>());
}

TEST_CASE("minimum distances of small codes") {
  const auto one = codes::build_code({Monomial{0, 0}}, K().variety(), K().ring());
  const auto r1 = oracle::min_distance(one, oracle::Exhaustive{});
  CHECK(r1.min_weight == 22);
  CHECK(r1.exact);
  const auto two = codes::build_code({Monomial{0, 0}, Monomial{1, 0}}, K().variety(), K().ring());
  const auto r2 = oracle::min_distance(two, oracle::Exhaustive{});
  CHECK(r2.min_weight == derived()["min_distance_1_X"].get<std::uint32_t>());
  CHECK(r2.exact);
  codes::EvaluationCode empty = one;
  empty.basis.clear();
  empty.generator.clear();
  empty.k = 0;
  CHECK(code_of([&] { oracle::min_distance(empty, oracle::Exhaustive{}); }) == ErrorCode::DimensionTooLarge);
}

TEST_CASE("weight-one codewords") {
  const auto& fp = K().footprint().monomials;
  const auto full = codes::build_code(fp, K().variety(), K().ring());
  CHECK(codes::count_weight_one(full) == expected::kWeightOneFull);
  CHECK(codes::count_weight_one(full) == derived()["weight_one_full"].get<std::uint64_t>());
  const std::vector<Monomial> without_top(fp.begin(), fp.end() - 1);
  const auto sub = codes::build_code(without_top, K().variety(), K().ring());
  CHECK(codes::count_weight_one(sub) == expected::kWeightOneWithoutTop);
  CHECK(codes::count_weight_one(sub) == derived()["weight_one_without_top"].get<std::uint64_t>());
  const auto small = codes::build_code({Monomial{0, 0}, Monomial{1, 0}}, K().variety(), K().ring());
  CHECK(codes::count_weight_one(small) == 0);
}

TEST_CASE("parity-check matrices annihilate the code") {
  SplitMix64 rng(17);
  const auto& fp = K().footprint().monomials;
  for (int i = 0; i < 50; ++i) {
    std::vector<Monomial> basis;
    for (const auto& m : fp) {
      if (rng.below(2)) basis.push_back(m);
    }
    if (basis.empty()) continue;
    const auto code = codes::build_code(basis, K().variety(), K().ring());
    const auto h = codes::parity_check(code.generator, code.n, F8());
    CHECK(h.size() == code.n - code.k);
    for (const auto& g : code.generator) {
      for (const auto& row : h) {
        Element dot = F8().zero();
        for (std::size_t j = 0; j < code.n; ++j) dot = F8().add(dot, F8().mul(g[j], row[j]));
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("rank properties, random matrices") {
  SplitMix64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 1 + rng.below(8);
    const std::size_t cols = 1 + rng.below(8);
    codes::Matrix m;
    for (std::size_t r = 0; r < rows; ++r) m.push_back(random_word(rng, cols));
    const std::size_t rk = codes::rank(m, F8());
    CHECK(rk <= std::min(rows, cols));
    // appending a combination of existing rows keeps the rank
    std::vector<Element> combo(cols, F8().zero());
    for (const auto& row : m) {
      const Element c = F8().make(static_cast<std::uint32_t>(rng.below(8)));
      for (std::size_t j = 0; j < cols; ++j) combo[j] = F8().add(combo[j], F8().mul(c, row[j]));
    }
    codes::Matrix grown = m;
    grown.push_back(combo);
    CHECK(codes::rank(grown, F8()) == rk);
    // and so does dropping to a subset of rows, up to the number dropped
    codes::Matrix shrunk(m.begin(), m.end() - 1);
    const std::size_t rs = codes::rank(shrunk, F8());
    CHECK(rs <= rk);
    CHECK(rs + 1 >= rk);
  }
}

TEST_CASE("the code table from the reference bounds") {
  const auto rows = codes::construct_table(expected_delta(), K().variety());
  REQUIRE(rows.size() == expected::kTable.size() + 1);
  for (std::size_t i = 0; i < expected::kTable.size(); ++i) {
    CHECK(rows[i].n == 22);
    CHECK(rows[i].k == expected::kTable[i].first);
    CHECK(rows[i].d == expected::kTable[i].second);
  }
  CHECK(rows.back().s == 1);
  CHECK(rows.back().k == 22);
}

TEST_CASE("table consistency: k grows as s falls, bases are nested") {
  const auto dm = expected_delta();
  const auto rows = codes::construct_table(dm, K().variety());
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(rows[i].s > rows[i + 1].s);
    CHECK(rows[i].k < rows[i + 1].k);
    const auto small = codes::threshold_basis(dm, rows[i].s);
    const auto large = codes::threshold_basis(dm, rows[i + 1].s);
    for (const auto& m : small) CHECK(std::find(large.begin(), large.end(), m) != large.end());
  }
  // Singleton bound
  for (const auto& r : rows) CHECK(r.d + r.k <= r.n + 1);
  CHECK(code_of([&] { dm.at(Monomial{0, 3}); }) == ErrorCode::NotInFootprint);
}

TEST_CASE("measured distances of the thresholded codes with k <= 5") {
  const auto dm = expected_delta();
  const auto& want = derived()["table_min_distance"];
  for (const auto& row : codes::construct_table(dm, K().variety())) {
    if (row.k > 5) continue;
    const auto code = codes::build_code(codes::threshold_basis(dm, row.s), K().variety(), K().ring());
    const auto r = oracle::min_distance(code, oracle::Gray{});
    CHECK(r.min_weight == want[std::to_string(row.k)].get<std::uint32_t>());
    CHECK(r.min_weight >= row.d);
  }
}

TEST_CASE("the oracle's values agree with the frozen constants") {
  const auto& d = derived();
  CHECK(d["weight_one_full"].get<std::uint64_t>() == expected::kWeightOneFull);
  CHECK(d["weight_one_without_top"].get<std::uint64_t>() == expected::kWeightOneWithoutTop);
  CHECK(d["variety"].size() == expected::kLength);
  for (const auto& [k, dist] : d["table_min_distance"].items()) {
    const auto it = std::find_if(expected::kTable.begin(), expected::kTable.end(),
                                 [&](const auto& p) { return std::to_string(p.first) == k; });
    REQUIRE(it != expected::kTable.end());
    CHECK(dist.get<std::uint32_t>() == it->second);
  }
  for (const auto& [name, dist] : d["coset_min"].items()) {
    const auto m = poly::parse_monomial(name, 2);
    CHECK(dist.get<std::uint32_t>() == expected::kDelta[m[1]][m[0]]);
  }
}
