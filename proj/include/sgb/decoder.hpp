#pragma once

#include <cstdint>
#include <string>

#include "sgb/binary_word.hpp"
#include "sgb/groebner.hpp"
#include "sgb/linear_code.hpp"
#include "sgb/monomial.hpp"

namespace sgb {

/// psi^{-1}: the squarefree monomial whose support is the word's support.
[[nodiscard]] SquarefreeMonomial word_to_monomial(const BinaryWord& w);
/// psi restricted to squarefree monomials.
[[nodiscard]] BinaryWord monomial_to_word(const SquarefreeMonomial& m);

enum class DecodeStatus { decoded, too_many_errors };

enum class DecodeMode {
  bounded,   // correct only up to the capability t
  complete,  // always decode to the coset leader (not bounded-distance)
};

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::too_many_errors;
  SquarefreeMonomial canonical;
  BinaryWord error;     // meaningful when decoded
  BinaryWord codeword;  // meaningful when decoded
  int nf_weight = 0;
};

/// Decodes through the canonical form of the received word's monomial.
[[nodiscard]] DecodeOutcome gb_decode(const BinaryWord& w, const ReducedGroebnerBasis& gb,
                                      DecodeMode mode = DecodeMode::bounded);

struct CrossCheck {
  DecodeOutcome gb;
  BinaryWord syndrome_codeword;
  NearestResult nearest;
  bool gb_matches_syndrome = false;
  bool gb_matches_nearest = false;
  bool syndrome_matches_nearest = false;
  /// gb decoded => all three codewords equal and the nearest codeword is unique.
  [[nodiscard]] bool consistent() const noexcept;
};

[[nodiscard]] CrossCheck cross_check(const BinaryWord& w, const LinearCode& code, const ReducedGroebnerBasis& gb,
                                     const CosetLeaderTable& table);

// ---- channel simulation -----------------------------------------------------

struct ChannelModel {
  enum class Kind { fixed_weight, bsc };
  Kind kind = Kind::fixed_weight;
  int weight = 0;            // fixed_weight
  double crossover = 0.0;    // bsc

  static ChannelModel fixed(int w);
  static ChannelModel binary_symmetric(double p);
  /// `fixed_weight(3)` / `bsc(0.05)`.
  static ChannelModel parse(const std::string& text);
  [[nodiscard]] std::string to_string() const;
};

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures_flagged = 0;
  std::uint64_t miscorrections = 0;
  std::uint64_t seed = 0;
  ChannelModel model;

  /// One line, fixed field order.
  [[nodiscard]] std::string to_string() const;
};

/// Counter-based stream: trial i draws from splitmix64 seeded by (seed, i), so
/// reports do not depend on scheduling.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t state_;
};

[[nodiscard]] SimReport simulate(const LinearCode& code, const ReducedGroebnerBasis& gb, const ChannelModel& model,
                                 std::uint64_t trials, std::uint64_t seed);

}  // namespace sgb
