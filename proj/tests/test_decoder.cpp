#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "sgb/decoder.hpp"
#include "sgb/oracles.hpp"

using namespace sgb;

namespace {

BinaryWord psi(std::size_t n, const std::string& monomial) { return BinaryWord(n, parse_term(monomial).support()); }

}  // namespace

TEST_CASE("word and monomial correspondence") {
  CHECK(word_to_monomial(BinaryWord(7)).to_string() == "1");
  CHECK(word_to_monomial(BinaryWord::from_string("1111100")).to_string() == "x1*x2*x3*x4*x5");
  for (std::uint64_t u = 0; u < 128; ++u) {
    const BinaryWord w(7, u);
    CHECK(monomial_to_word(word_to_monomial(w)) == w);
  }
}

TEST_CASE("decoding table rows") {
  const auto gb14 = coset_engine(fixture_code("1_4"));
  auto out = gb_decode(psi(7, "x1*x2*x3*x4*x5"), gb14);
  CHECK(out.status == DecodeStatus::decoded);
  CHECK(out.error == psi(7, "x4"));
  CHECK(out.codeword == psi(7, "x1*x2*x3*x5"));

  const auto gb15 = coset_engine(fixture_code("1_5"));
  out = gb_decode(psi(15, "x7*x8*x9*x10*x11*x12*x13*x14*x15"), gb15);
  CHECK(out.status == DecodeStatus::decoded);
  CHECK(out.error == psi(15, "x1*x7*x8"));
  CHECK(out.codeword == psi(15, "x1*x9*x10*x11*x12*x13*x14*x15"));

  const auto gb24 = coset_engine(fixture_code("2_4"));
  out = gb_decode(psi(19, "x1*x6*x7*x9*x11*x13*x14*x18*x19"), gb24);
  CHECK(out.status == DecodeStatus::decoded);
  CHECK(out.error == psi(19, "x5*x9*x10"));
  CHECK(out.codeword == psi(19, "x1*x5*x6*x7*x10*x11*x13*x14*x18*x19"));
}

TEST_CASE("bounded and complete modes") {
  const auto code = fixture_code("1_4");
  const auto gb = coset_engine(code);
  const auto w = BinaryWord::from_string("1100000");
  const auto bounded = gb_decode(w, gb);
  CHECK(bounded.status == DecodeStatus::too_many_errors);
  CHECK(bounded.nf_weight == 2);
  const auto complete = gb_decode(w, gb, DecodeMode::complete);
  CHECK(complete.status == DecodeStatus::decoded);
  CHECK(code.contains(complete.codeword));
  CHECK((complete.codeword ^ complete.error) == w);
  CHECK_THROWS_AS((void)gb_decode(BinaryWord(6), gb), Error);
}

TEST_CASE("three decoders agree within the capability") {
  for (const std::string tag : {"1_4", "1_5"}) {
    CAPTURE(tag);
    const auto code = fixture_code(tag);
    const auto gb = coset_engine(code);
    const auto table = build_coset_leader_table(code);
    const std::size_t n = code.length();
    const int t = capability(gb);
    const auto words = tag == "1_4" ? oracle::codewords(code) : std::vector<std::uint64_t>{0};
    std::size_t checked = 0;
    for (std::uint64_t c : words) {
      for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e) {
        if (std::popcount(e) > t) continue;
        const auto cc = cross_check(BinaryWord(n, c ^ e), code, gb, table);
        CHECK(cc.consistent());
        CHECK(cc.gb.codeword.bits() == c);
        ++checked;
      }
    }
    CHECK(checked == (tag == "1_4" ? 8 * 8 : 1 + 15 + 105 + 455));
  }
}

TEST_CASE("channel models") {
  CHECK(ChannelModel::parse("fixed_weight(3)").weight == 3);
  CHECK(ChannelModel::parse("bsc(0.05)").crossover == 0.05);
  CHECK(ChannelModel::parse("bsc(0.05)").to_string() == "bsc(0.05)");
  CHECK(ChannelModel::fixed(2).to_string() == "fixed_weight(2)");
  CHECK_THROWS_AS((void)ChannelModel::parse("bsc(1.5)"), Error);
  CHECK_THROWS_AS((void)ChannelModel::parse("bsc(-0.1)"), Error);
  CHECK_THROWS_AS((void)ChannelModel::parse("fixed_weight(-1)"), Error);
  CHECK_THROWS_AS((void)ChannelModel::parse("gaussian(1)"), Error);
}

TEST_CASE("trial rng") {
  TrialRng a(1, 2);
  TrialRng b(1, 2);
  TrialRng c(1, 3);
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  TrialRng r(9, 0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("simulation") {
  const auto code = fixture_code("1_4");
  const auto gb = coset_engine(code);
  const auto zero = simulate(code, gb, ChannelModel::fixed(0), 200, 5);
  CHECK(zero.successes == 200);
  const auto clean = simulate(code, gb, ChannelModel::binary_symmetric(0.0), 200, 5);
  CHECK(clean.successes == 200);
  const auto one = simulate(code, gb, ChannelModel::fixed(1), 1000, 5);
  CHECK(one.successes == 1000);
  CHECK(one.miscorrections == 0);

  const auto two = simulate(code, gb, ChannelModel::fixed(2), 500, 5);
  CHECK(two.successes == 0);
  CHECK(two.failures_flagged + two.miscorrections == 500);

  const auto noisy = simulate(code, gb, ChannelModel::binary_symmetric(0.2), 2000, 11);
  CHECK(noisy.successes + noisy.failures_flagged + noisy.miscorrections == noisy.trials);
  CHECK(noisy.to_string() == simulate(code, gb, ChannelModel::binary_symmetric(0.2), 2000, 11).to_string());
  CHECK(noisy.to_string() != simulate(code, gb, ChannelModel::binary_symmetric(0.2), 2000, 12).to_string());

  const auto gb24 = coset_engine(fixture_code("2_4"));
  const auto three = simulate(fixture_code("2_4"), gb24, ChannelModel::fixed(3), 1000, 5);
  CHECK(three.successes == 1000);

  CHECK_THROWS_AS((void)simulate(code, gb, ChannelModel::fixed(8), 10, 5), Error);
}
