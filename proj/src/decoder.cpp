#include "sgb/decoder.hpp"

#include <charconv>
#include <sstream>

namespace sgb {

SquarefreeMonomial word_to_monomial(const BinaryWord& w) { return SquarefreeMonomial(w.size(), w.bits()); }

BinaryWord monomial_to_word(const SquarefreeMonomial& m) { return BinaryWord(m.variables(), m.support()); }

DecodeOutcome gb_decode(const BinaryWord& w, const ReducedGroebnerBasis& gb, DecodeMode mode) {
  if (w.size() != gb.variables()) fail(ErrorKind::invalid_input, "word length does not match basis variable count");
  const int t = capability(gb);
  DecodeOutcome out;
  out.canonical = normal_form(word_to_monomial(w), gb);
  out.nf_weight = out.canonical.degree();
  out.error = monomial_to_word(out.canonical);
  if (mode == DecodeMode::complete || out.nf_weight <= t) {
    out.status = DecodeStatus::decoded;
    out.codeword = w ^ out.error;
  } else {
    out.status = DecodeStatus::too_many_errors;
    out.codeword = BinaryWord(w.size());
  }
  return out;
}

bool CrossCheck::consistent() const noexcept {
  if (gb.status != DecodeStatus::decoded) return true;
  return gb_matches_syndrome && gb_matches_nearest && !nearest.ambiguous;
}

CrossCheck cross_check(const BinaryWord& w, const LinearCode& code, const ReducedGroebnerBasis& gb,
                       const CosetLeaderTable& table) {
  CrossCheck out{gb_decode(w, gb), syndrome_decode(w, table, code), nn_decode(w, code)};
  out.gb_matches_syndrome = out.gb.status == DecodeStatus::decoded && out.gb.codeword == out.syndrome_codeword;
  out.gb_matches_nearest = out.gb.status == DecodeStatus::decoded && out.gb.codeword == out.nearest.codeword;
  out.syndrome_matches_nearest = out.syndrome_codeword == out.nearest.codeword;
  return out;
}

// ---- simulation -------------------------------------------------------------

ChannelModel ChannelModel::fixed(int w) {
  if (w < 0) fail(ErrorKind::invalid_input, "error weight must be non-negative");
  return {Kind::fixed_weight, w, 0.0};
}

ChannelModel ChannelModel::binary_symmetric(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::invalid_input, "invalid probability");
  return {Kind::bsc, 0, p};
}

ChannelModel ChannelModel::parse(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    fail(ErrorKind::invalid_input, "model must be fixed_weight(w) or bsc(p)");
  }
  const std::string name = text.substr(0, open);
  const std::string arg = text.substr(open + 1, text.size() - open - 2);
  std::istringstream in(arg);
  if (name == "fixed_weight") {
    int w = 0;
    if (!(in >> w) || !in.eof()) fail(ErrorKind::invalid_input, "bad weight in " + text);
    return fixed(w);
  }
  if (name == "bsc") {
    double p = 0;
    if (!(in >> p) || !in.eof()) fail(ErrorKind::invalid_input, "bad probability in " + text);
    return binary_symmetric(p);
  }
  fail(ErrorKind::invalid_input, "unknown channel model " + name);
}

std::string ChannelModel::to_string() const {
  if (kind == Kind::fixed_weight) return "fixed_weight(" + std::to_string(weight) + ")";
  char buf[64];
  const auto end = std::to_chars(buf, buf + sizeof buf, crossover).ptr;
  return "bsc(" + std::string(buf, end) + ")";
}

std::string SimReport::to_string() const {
  std::ostringstream out;
  out << "model=" << model.to_string() << " trials=" << trials << " seed=" << seed << " successes=" << successes
      << " failures_flagged=" << failures_flagged << " miscorrections=" << miscorrections;
  return out.str();
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t v) { return splitmix64(v); }

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) : state_(mix(seed) ^ mix(~trial)) {}

std::uint64_t TrialRng::next() { return splitmix64(state_); }

std::uint64_t TrialRng::below(std::uint64_t bound) {
  // reject the tail that would bias the modulo
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

double TrialRng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SimReport simulate(const LinearCode& code, const ReducedGroebnerBasis& gb, const ChannelModel& model,
                   std::uint64_t trials, std::uint64_t seed) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (gb.variables() != n) fail(ErrorKind::invalid_input, "basis and code disagree on n");
  if (model.kind == ChannelModel::Kind::fixed_weight && static_cast<std::size_t>(model.weight) > n) {
    fail(ErrorKind::invalid_input, "error weight exceeds code length");
  }
  if (model.kind == ChannelModel::Kind::bsc && !(model.crossover >= 0.0 && model.crossover <= 1.0)) {
    fail(ErrorKind::invalid_input, "invalid probability");
  }
  SimReport report;
  report.trials = trials;
  report.seed = seed;
  report.model = model;
  std::vector<std::size_t> positions(n);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    const std::uint64_t message = k == 0 ? 0 : (k >= 64 ? rng.next() : rng.next() & ((std::uint64_t{1} << k) - 1));
    const std::uint64_t sent = code.encode(message);
    std::uint64_t error = 0;
    if (model.kind == ChannelModel::Kind::fixed_weight) {
      // partial Fisher-Yates over positions
      for (std::size_t i = 0; i < n; ++i) positions[i] = i;
      for (int i = 0; i < model.weight; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        const std::size_t j = ii + static_cast<std::size_t>(rng.below(n - ii));
        std::swap(positions[ii], positions[j]);
        error |= std::uint64_t{1} << positions[ii];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (rng.unit() < model.crossover) error |= std::uint64_t{1} << i;
      }
    }
    const DecodeOutcome outcome = gb_decode(BinaryWord(n, sent ^ error), gb);
    if (outcome.status == DecodeStatus::too_many_errors) {
      ++report.failures_flagged;
    } else if (outcome.codeword.bits() == sent) {
      ++report.successes;
    } else {
      ++report.miscorrections;
    }
  }
  return report;
}

}  // namespace sgb
