#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "sgb/groebner.hpp"
#include "sgb/oracles.hpp"

using namespace sgb;

namespace {

ExtMonomial mono(const std::string& s) { return parse_term(s); }
Binomial bin(const std::string& s) { return parse_binomial(s); }

std::set<std::string> rendered(const std::vector<Binomial>& v) {
  std::set<std::string> out;
  for (const auto& b : v) out.insert(b.to_string());
  return out;
}

}  // namespace

TEST_CASE("degrevlex order") {
  CHECK(degrevlex_compare(mono("x1*x2"), mono("x4*x7")) == std::strong_ordering::greater);
  CHECK(degrevlex_compare(mono("1"), mono("x1")) == std::strong_ordering::less);
  CHECK(degrevlex_compare(mono("x3"), mono("x3")) == std::strong_ordering::equal);
  CHECK(degrevlex_less(mono("x2"), mono("x1")));
  CHECK(degrevlex_less(mono("x1*x3"), mono("x2^2")));
  CHECK(degrevlex_less(mono("x1^2"), mono("x1*x2*x3")));
  // squarefree masks agree with the general comparison
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      CHECK(degrevlex_compare(a, b) == degrevlex_compare(ExtMonomial::from_support(a), ExtMonomial::from_support(b)));
    }
  }
}

TEST_CASE("monomial arithmetic and parsing") {
  const auto m = mono("x1*x3^2");
  CHECK(m.degree() == 3);
  CHECK(m.exponent(2) == 2);
  CHECK(m.to_string() == "x1*x3^2");
  CHECK(lcm(mono("x1*x2"), mono("x2^2*x3")).to_string() == "x1*x2^2*x3");
  CHECK(quotient(mono("x1*x2^2"), mono("x2")).to_string() == "x1*x2");
  CHECK(mono("x2").divides(mono("x1*x2")));
  CHECK_FALSE(mono("x2^2").divides(mono("x1*x2")));
  CHECK(mono("1").is_one());
  CHECK_THROWS_AS((void)mono("x0"), Error);
  CHECK_THROWS_AS((void)mono("x1*"), Error);
  CHECK_THROWS_AS((void)mono("y1"), Error);
  CHECK_THROWS_AS((void)bin("x1 - x1"), Error);
  CHECK_THROWS_AS((void)bin("x1 x2"), Error);
}

TEST_CASE("binomial orientation and kind") {
  const auto b = bin("x4*x7 - x1*x2");
  CHECK(b.lead().to_string() == "x1*x2");
  CHECK(b.to_string() == "x1*x2 - x4*x7");
  CHECK(b.kind() == BinomialKind::code_binomial);
  CHECK(Binomial::field_relation(2).to_string() == "x3^2 - 1");
  CHECK(Binomial::field_relation(2).kind() == BinomialKind::field_relation);
  CHECK_FALSE(Binomial::make(mono("x1"), mono("x1")).has_value());
}

TEST_CASE("ideal generators") {
  const auto gens = ideal_generators(fixture_code("1_4"));
  CHECK(gens.size() == 3 + 7);
  const auto s = rendered(gens);
  CHECK(s.count("x1*x5*x6*x7 - 1"));
  CHECK(s.count("x2*x4*x5*x6 - 1"));
  CHECK(s.count("x3*x4*x5*x7 - 1"));
  for (int i = 1; i <= 7; ++i) CHECK(s.count("x" + std::to_string(i) + "^2 - 1"));

  const auto empty = ideal_generators(LinearCode(FpMatrix(0, 4, 2)));
  CHECK(empty.size() == 4);
}

TEST_CASE("s-polynomials and reduction") {
  const auto f = bin("x1*x2 - x4*x7");
  const auto g = bin("x2*x3 - x6*x7");
  CHECK_FALSE(spoly(f, f).has_value());
  const auto s = spoly(f, g);
  REQUIRE(s.has_value());
  CHECK(*s == bin("x3*x4*x7 - x1*x6*x7"));

  const auto s2 = spoly(Binomial::field_relation(0), f);
  REQUIRE(s2.has_value());
  CHECK(s2->lead().to_string() == "x1*x4*x7");
  CHECK(s2->trail().to_string() == "x2");

  const std::vector<Binomial> just_f{f};
  CHECK_FALSE(reduce(f, just_f).has_value());
  std::vector<Binomial> fields;
  for (std::size_t i = 0; i < 7; ++i) fields.push_back(Binomial::field_relation(i));
  CHECK_FALSE(reduce(Binomial::field_relation(3), fields).has_value());

  const auto listing = load_binomials(fixture("listing_1_4.txt"));
  CHECK_FALSE(reduce(bin("x3*x4*x7 - x1*x6*x7"), listing.elements).has_value());
  CHECK(reduce_term(mono("x1*x2"), listing.elements).to_string() == "x4*x7");
}

TEST_CASE("buchberger criterion") {
  const auto listing = load_binomials(fixture("listing_1_4.txt"));
  CHECK(is_groebner(listing.elements));
  CHECK_FALSE(is_groebner(ideal_generators(fixture_code("1_4"))));
  std::vector<Binomial> fields;
  for (std::size_t i = 0; i < 5; ++i) fields.push_back(Binomial::field_relation(i));
  CHECK(is_groebner(fields));
}

TEST_CASE("both engines reproduce the printed bases") {
  for (const std::string tag : {"1_4", "2_3"}) {
    CAPTURE(tag);
    const auto code = fixture_code(tag);
    const auto listing = load_binomials(fixture("listing_" + tag + ".txt"));
    const auto fast = coset_engine(code);
    BuchbergerStats stats;
    const auto gens = ideal_generators(code);
    const auto slow = buchberger(code.length(), gens, {}, &stats);
    CHECK(fast == slow);
    CHECK(fast.size() == 21);
    CHECK(fast.field_relation_count() == 7);
    CHECK(rendered(fast.elements()) == rendered(listing.elements));
    CHECK(stats.pairs_total > 0);
    CHECK(stats.pairs_coprime > 0);
  }
  std::vector<Binomial> fields;
  for (std::size_t i = 0; i < 4; ++i) fields.push_back(Binomial::field_relation(i));
  const auto only_fields = buchberger(4, fields);
  CHECK(only_fields.size() == 4);
  CHECK(only_fields == coset_engine(LinearCode(FpMatrix(0, 4, 2))));
}

TEST_CASE("coset engine structure") {
  const auto gb15 = coset_engine(fixture_code("1_5"));
  CHECK(gb15.min_code_degree() == 4);
  CHECK(rendered(gb15.elements()).count("x1*x2*x3*x4 - x8*x9*x11*x13"));
  CHECK(capability(gb15) == 3);

  for (const std::string tag : {"1_4", "1_5", "2_3", "2_4"}) {
    CAPTURE(tag);
    const auto code = fixture_code(tag);
    const auto gb = coset_engine(code);
    CHECK(gb.code_leads().size() == oracle::count_minimal_nonstandard(code));
    // standard monomials: supports no lead divides
    std::size_t standard = 0;
    const std::uint64_t n = code.length();
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
      bool reducible = false;
      for (std::uint64_t lead : gb.code_leads()) {
        if ((lead & ~u) == 0) {
          reducible = true;
          break;
        }
      }
      if (!reducible) ++standard;
    }
    CHECK(standard == (std::uint64_t{1} << (code.length() - code.dimension())));
  }
  CHECK(capability(coset_engine(fixture_code("1_4"))) == 1);
  CHECK(capability(coset_engine(fixture_code("2_4"))) == 3);
  CHECK_THROWS_AS((void)capability(coset_engine(LinearCode(FpMatrix(0, 4, 2)))), Error);

  // a code with a zero coordinate makes x_i itself reducible
  CHECK_THROWS_AS((void)coset_engine(LinearCode(FpMatrix(1, 3, 2, {1, 1, 0}))), Error);
}

TEST_CASE("normal form") {
  const auto code = fixture_code("1_4");
  const auto gb = coset_engine(code);
  CHECK(normal_form(SquarefreeMonomial(7, 0b11), gb).to_string() == "x4*x7");
  CHECK(normal_form(SquarefreeMonomial(7, 0), gb).support() == 0);
  CHECK(normal_form(SquarefreeMonomial(7, code.generator_rows()[0]), gb).support() == 0);
  const auto words = oracle::codewords(code);
  std::mt19937_64 rng(7);
  for (std::uint64_t u = 0; u < 128; ++u) {
    const SquarefreeMonomial m(7, u);
    CHECK(normal_form(m, gb).support() == oracle::coset_minimum(u, words));
    CHECK(normal_form(m, gb, rng) == normal_form(m, gb));
  }
}

TEST_CASE("reduced basis invariants are enforced") {
  const auto listing = load_binomials(fixture("listing_1_4.txt"));
  CHECK_NOTHROW(ReducedGroebnerBasis(7, listing.elements));
  auto missing_field = listing.elements;
  missing_field.erase(std::find(missing_field.begin(), missing_field.end(), Binomial::field_relation(6)));
  CHECK_THROWS_AS(ReducedGroebnerBasis(7, missing_field), Error);
  auto not_reduced = listing.elements;
  not_reduced.push_back(bin("x1*x2*x3 - x4*x5*x6"));
  CHECK_THROWS_AS(ReducedGroebnerBasis(7, not_reduced), Error);
  CHECK_THROWS_AS(ReducedGroebnerBasis(0, {}), Error);
}

TEST_CASE("guards") {
  const auto code = fixture_code("1_5");
  const auto gens = ideal_generators(code);
  try {
    (void)buchberger(code.length(), gens);
    FAIL("expected the variable guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bound_exceeded);
  }
  Limits tight;
  tight.max_word_bits = 10;
  CHECK_THROWS_AS((void)coset_engine(code, tight), Error);
}

TEST_CASE("basis text format round trip") {
  const auto gb = coset_engine(fixture_code("2_4"));
  std::stringstream s;
  write_basis(s, gb);
  const auto back = read_binomials(s);
  CHECK(back.variables == 19);
  CHECK(ReducedGroebnerBasis(back.variables, back.elements) == gb);

  std::istringstream lex("# n=3 order=lex field=GF(2)\nx1^2 - 1\n");
  CHECK_THROWS_AS((void)read_binomials(lex), Error);
  std::istringstream no_header("x1^2 - 1\n");
  CHECK_THROWS_AS((void)read_binomials(no_header), Error);
}
