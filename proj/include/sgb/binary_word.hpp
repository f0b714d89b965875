#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "sgb/error.hpp"

namespace sgb {

/// A vector in GF(2)^n, n <= 64. Position 1 is bit 0 of the mask.
class BinaryWord {
 public:
  static constexpr std::size_t kMaxLength = 64;

  BinaryWord() = default;
  explicit BinaryWord(std::size_t length, std::uint64_t bits = 0) : length_(length), bits_(bits) {
    if (length > kMaxLength) fail(ErrorKind::invalid_input, "word length exceeds 64");
    if (length < kMaxLength && (bits >> length) != 0) {
      fail(ErrorKind::invalid_input, "word bits set beyond its length");
    }
  }

  /// Parses a contiguous 0/1 string; the leftmost character is position 1.
  static BinaryWord from_string(std::string_view text);
  /// Builds a word from 1-based positions.
  static BinaryWord from_positions(std::size_t length, std::initializer_list<int> positions);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] int weight() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] bool is_zero() const noexcept { return bits_ == 0; }

  /// 1-based access.
  [[nodiscard]] bool at(std::size_t position) const { return (bits_ >> (position - 1)) & 1U; }
  void set(std::size_t position, bool value);

  [[nodiscard]] std::string to_string() const;

  friend BinaryWord operator^(const BinaryWord& a, const BinaryWord& b) {
    if (a.length_ != b.length_) fail(ErrorKind::invalid_input, "word length mismatch");
    return BinaryWord(a.length_, a.bits_ ^ b.bits_);
  }
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison with position 1 most significant ('0' < '1').
[[nodiscard]] bool lex_less(const BinaryWord& a, const BinaryWord& b);

}  // namespace sgb
