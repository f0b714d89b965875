#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "sgb/linear_code.hpp"
#include "sgb/oracles.hpp"
#include "sgb/schubert.hpp"

using namespace sgb;

namespace {

std::multiset<std::vector<std::uint32_t>> columns(const FpMatrix& m) {
  std::multiset<std::vector<std::uint32_t>> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.insert(m.column(c));
  return out;
}

}  // namespace

TEST_CASE("index tuples") {
  const auto t = index_tuples(2, 5);
  std::vector<std::string> rendered;
  for (const auto& x : t) rendered.push_back(x.to_string());
  CHECK(rendered == std::vector<std::string>{"(1,2)", "(1,3)", "(1,4)", "(1,5)", "(2,3)", "(2,4)", "(2,5)", "(3,4)",
                                             "(3,5)", "(4,5)"});
  CHECK(index_tuples(1, 3).size() == 3);
  CHECK(index_tuples(1, 3)[2].to_string() == "(3)");
  CHECK_THROWS_AS(IndexTuple({5, 5}, 5), Error);
  CHECK_THROWS_AS(IndexTuple({0, 2}, 5), Error);
  CHECK_THROWS_AS(IndexTuple({2, 6}, 5), Error);
}

TEST_CASE("bruhat order") {
  CHECK(bruhat_leq(IndexTuple({1, 2}, 5), IndexTuple({1, 4}, 5)));
  CHECK_FALSE(bruhat_leq(IndexTuple({2, 3}, 5), IndexTuple({1, 4}, 5)));
  const IndexTuple alpha({1, 4}, 5);
  const auto all = index_tuples(2, 5);
  const auto below = std::count_if(all.begin(), all.end(),
                                   [&](const IndexTuple& b) { return bruhat_leq(b, alpha); });
  CHECK(below == 3);
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(5, 2, 2) == 155);
  CHECK(gaussian_binomial(5, 2, 2) == oracle::subspaces(2, 5, 2).size());
  CHECK(gaussian_binomial(4, 2, 3) == oracle::subspaces(2, 4, 3).size());
  for (std::uint64_t q : {2, 3, 5}) {
    for (unsigned m = 1; m <= 6; ++m) {
      std::uint64_t qm = 1;
      for (unsigned i = 0; i < m; ++i) qm *= q;
      CHECK(gaussian_binomial(m, 1, q) == (qm - 1) / (q - 1));
      CHECK(gaussian_binomial(m, m, q) == 1);
    }
  }
  CHECK_THROWS_AS((void)gaussian_binomial(3, 5, 2), Error);
  CHECK_THROWS_AS((void)gaussian_binomial(3, 0, 2), Error);
}

TEST_CASE("schubert parameters") {
  auto p = schubert_params(SchubertSpec::make(2, 5, 2, {1, 4}));
  CHECK(p.n_alpha == 7);
  CHECK(p.k_alpha == 3);
  CHECK(p.delta_alpha == 2);
  CHECK(p.d == 4);
  CHECK(p.capability() == 1);
  CHECK_FALSE(p.is_mds());
  p = schubert_params(SchubertSpec::make(2, 5, 2, {2, 4}));
  CHECK(p.n_alpha == 19);
  CHECK(p.k_alpha == 5);
  CHECK(p.d == 8);
  p = schubert_params(SchubertSpec::make(2, 5, 2, {4, 5}));
  CHECK(p.n_alpha == 155);
  CHECK(p.k_alpha == 10);
  // alpha=(1,2) is a single point: [1,1,1] is MDS
  CHECK(schubert_params(SchubertSpec::make(2, 5, 2, {1, 2})).is_mds());
  CHECK_THROWS_AS(SchubertSpec::make(2, 5, 4, {1, 4}), Error);
  CHECK_THROWS_AS(SchubertSpec::make(2, 5, 2, {1, 4, 5}), Error);
}

TEST_CASE("plucker coordinates") {
  const FpMatrix e12(2, 5, 2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0});
  auto p = plucker(e12);
  CHECK(p.coords == std::vector<std::uint32_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});

  const FpMatrix e1_e25(2, 5, 2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1});
  p = plucker(e1_e25);
  CHECK(p.coords == std::vector<std::uint32_t>{1, 0, 0, 1, 0, 0, 0, 0, 0, 0});

  // invertible row operation: swap and add
  const FpMatrix mixed(2, 5, 2, {1, 1, 0, 0, 1, 1, 0, 0, 0, 0});
  const FpMatrix mixed_u(2, 5, 2, {0, 1, 0, 0, 1, 1, 1, 0, 0, 1});
  CHECK(plucker(mixed) == plucker(mixed_u));

  // over GF(3) the first nonzero coordinate is scaled to 1
  const FpMatrix g3(2, 4, 3, {2, 0, 0, 0, 0, 1, 1, 0});
  const auto p3 = plucker(g3);
  CHECK(p3.coords[0] == 1);
  CHECK(plucker(FpMatrix(2, 4, 3, {1, 0, 0, 0, 0, 1, 1, 0})) == p3);

  CHECK_THROWS_AS((void)plucker(FpMatrix(2, 5, 2, {1, 1, 0, 0, 0, 1, 1, 0, 0, 0})), Error);
}

TEST_CASE("schubert points") {
  const auto spec = SchubertSpec::make(2, 5, 2, {1, 4});
  const auto points = enumerate_schubert_points(spec);
  REQUIRE(points.size() == 7);
  // truncations to beta <= alpha, i.e. coordinates (1,2),(1,3),(1,4), give all nonzero vectors of GF(2)^3
  std::set<std::vector<std::uint32_t>> truncated;
  for (const auto& p : points) {
    truncated.insert({p.coords[0], p.coords[1], p.coords[2]});
    for (std::size_t i = 3; i < p.coords.size(); ++i) CHECK(p.coords[i] == 0);
  }
  CHECK(truncated.size() == 7);
  CHECK(truncated.count({0, 0, 0}) == 0);

  CHECK(enumerate_schubert_points(SchubertSpec::grassmannian(2, 5, 2)).size() == 155);
  CHECK(enumerate_schubert_points(SchubertSpec::grassmannian(2, 4, 3)).size() == gaussian_binomial(4, 2, 3));

  for (const auto& a : index_tuples(2, 5)) {
    const auto s = SchubertSpec::make(2, 5, 3, a.entries());
    auto x = enumerate_schubert_points(s);
    auto y = schubert_points_by_plucker(s);
    CHECK(x.size() == count_schubert_points(s));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    CHECK(x == y);
  }

  const auto bases = enumerate_schubert_bases(spec);
  for (const auto& b : bases) CHECK(rref(b).rank == 2);

  Limits tight;
  tight.max_enum_log2 = 3;
  CHECK_THROWS_AS((void)enumerate_schubert_points(SchubertSpec::grassmannian(2, 5, 2), tight), Error);
}

TEST_CASE("generator matrices match the printed ones up to column order") {
  for (const auto& [tag, alpha] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"1_4", {1, 4}}, {"1_5", {1, 5}}, {"2_3", {2, 3}}, {"2_4", {2, 4}}}) {
    CAPTURE(tag);
    const auto spec = SchubertSpec::make(2, 5, 2, alpha);
    const auto g = generator_matrix(spec);
    const auto printed = load_matrix(fixture("a_" + tag + ".txt"));
    CHECK(columns(g) == columns(printed));
    const auto p = schubert_params(spec);
    CHECK(static_cast<std::uint64_t>(min_distance_bruteforce(LinearCode(g))) == p.d);
  }
  const auto g = generator_matrix(SchubertSpec::make(2, 5, 2, {2, 4}));
  const auto cols = columns(g);
  CHECK(std::set<std::vector<std::uint32_t>>(cols.begin(), cols.end()).size() == 19);
  const auto big = generator_matrix(SchubertSpec::make(2, 5, 2, {4, 5}));
  CHECK(big.rows() == 10);
  CHECK(big.cols() == 155);
  const auto g3 = generator_matrix(SchubertSpec::make(2, 4, 3, {2, 4}));
  CHECK(static_cast<std::uint64_t>(min_distance_bruteforce(LinearCode(g3))) ==
        schubert_params(SchubertSpec::make(2, 4, 3, {2, 4})).d);
}
