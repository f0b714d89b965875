#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sgb/binary_word.hpp"
#include "sgb/fp_matrix.hpp"

namespace sgb {

/// (n-k) x n parity-check matrix of a full-rank generator. Rows come from the
/// non-pivot columns of the RREF in ascending order.
[[nodiscard]] FpMatrix parity_check_of(const FpMatrix& generator);

/// A linear [n, k] code over GF(p) given by a full-row-rank generator.
class LinearCode {
 public:
  explicit LinearCode(FpMatrix generator);

  [[nodiscard]] const FpMatrix& generator() const noexcept { return generator_; }
  [[nodiscard]] const FpMatrix& parity_check() const noexcept { return parity_check_; }
  [[nodiscard]] std::size_t length() const noexcept { return generator_.cols(); }
  [[nodiscard]] std::size_t dimension() const noexcept { return generator_.rows(); }
  [[nodiscard]] std::uint32_t field() const noexcept { return generator_.modulus(); }
  [[nodiscard]] bool is_binary() const noexcept { return generator_.modulus() == 2; }

  // Binary views; valid only when is_binary() and n <= 64.
  [[nodiscard]] const std::vector<std::uint64_t>& generator_rows() const;
  /// Column j of H packed as a bit mask over the n-k check positions.
  [[nodiscard]] const std::vector<std::uint64_t>& check_columns() const;
  [[nodiscard]] std::uint64_t syndrome_bits(std::uint64_t word) const;
  [[nodiscard]] std::uint64_t encode(std::uint64_t message) const;
  [[nodiscard]] bool contains(const BinaryWord& w) const;

 private:
  void require_binary() const;

  FpMatrix generator_;
  FpMatrix parity_check_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> check_columns_;
};

/// w * H^T, as a word of length n-k.
[[nodiscard]] BinaryWord syndrome(const BinaryWord& w, const LinearCode& code);

[[nodiscard]] int min_distance_bruteforce(const LinearCode& code, const Limits& limits = {});
[[nodiscard]] std::vector<std::uint64_t> weight_distribution(const LinearCode& code, const Limits& limits = {});

/// Coset leaders indexed by syndrome value; each is the degrevlex-minimal word of its coset.
class CosetLeaderTable {
 public:
  CosetLeaderTable(std::size_t length, std::vector<std::uint64_t> leaders)
      : length_(length), leaders_(std::move(leaders)) {}

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t size() const noexcept { return leaders_.size(); }
  [[nodiscard]] std::uint64_t leader_bits(std::uint64_t syndrome) const { return leaders_.at(syndrome); }
  [[nodiscard]] BinaryWord leader(std::uint64_t syndrome) const { return BinaryWord(length_, leaders_.at(syndrome)); }
  [[nodiscard]] const std::vector<std::uint64_t>& leaders() const noexcept { return leaders_; }

 private:
  std::size_t length_;
  std::vector<std::uint64_t> leaders_;
};

[[nodiscard]] CosetLeaderTable build_coset_leader_table(const LinearCode& code, const Limits& limits = {});

[[nodiscard]] BinaryWord syndrome_decode(const BinaryWord& w, const CosetLeaderTable& table, const LinearCode& code);

struct NearestResult {
  BinaryWord codeword;
  bool ambiguous = false;
  int distance = 0;
};

/// Exhaustive nearest-codeword search; ties go to the lexicographically smallest codeword.
[[nodiscard]] NearestResult nn_decode(const BinaryWord& w, const LinearCode& code, const Limits& limits = {});

}  // namespace sgb
