#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "sgb/error.hpp"

namespace sgb {

inline constexpr std::size_t kMaxVars = 64;

/// Degrevlex on squarefree supports (bit i <-> x_{i+1}), with x_1 > x_2 > ... > x_n.
/// Higher degree wins; on equal degree the monomial missing the highest-indexed
/// differing variable is the larger one.
[[nodiscard]] constexpr std::strong_ordering degrevlex_compare(std::uint64_t a, std::uint64_t b) noexcept {
  const int da = std::popcount(a);
  const int db = std::popcount(b);
  if (da != db) return da <=> db;
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return std::strong_ordering::equal;
  const int top = 63 - std::countl_zero(diff);
  return ((a >> top) & 1U) ? std::strong_ordering::less : std::strong_ordering::greater;
}

[[nodiscard]] constexpr bool degrevlex_less(std::uint64_t a, std::uint64_t b) noexcept {
  return degrevlex_compare(a, b) == std::strong_ordering::less;
}

/// Product of distinct variables; the empty support is the monomial 1.
class SquarefreeMonomial {
 public:
  SquarefreeMonomial() = default;
  SquarefreeMonomial(std::size_t variables, std::uint64_t support);

  [[nodiscard]] std::size_t variables() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t support() const noexcept { return support_; }
  [[nodiscard]] int degree() const noexcept { return std::popcount(support_); }
  [[nodiscard]] bool divides(const SquarefreeMonomial& other) const noexcept {
    return (support_ & ~other.support_) == 0;
  }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t support_ = 0;
};

[[nodiscard]] inline std::strong_ordering degrevlex_compare(const SquarefreeMonomial& a,
                                                            const SquarefreeMonomial& b) noexcept {
  return degrevlex_compare(a.support(), b.support());
}

/// General monomial with per-variable exponents; used by the Buchberger engine.
class ExtMonomial {
 public:
  ExtMonomial() = default;

  [[nodiscard]] static ExtMonomial from_support(std::uint64_t support);
  [[nodiscard]] static ExtMonomial variable(std::size_t index, unsigned power = 1);

  [[nodiscard]] unsigned exponent(std::size_t index) const { return exp_[index]; }
  [[nodiscard]] unsigned degree() const noexcept { return degree_; }
  [[nodiscard]] std::uint64_t support() const noexcept { return support_; }
  [[nodiscard]] bool is_one() const noexcept { return degree_ == 0; }
  [[nodiscard]] bool is_squarefree() const noexcept { return std::cmp_equal(std::popcount(support_), degree_); }
  /// Highest variable index present plus one (0 for the monomial 1).
  [[nodiscard]] std::size_t span() const noexcept { return 64 - static_cast<std::size_t>(std::countl_zero(support_)); }

  /// True iff *this divides other.
  [[nodiscard]] bool divides(const ExtMonomial& other) const noexcept;

  friend ExtMonomial operator*(const ExtMonomial& a, const ExtMonomial& b);
  /// a / b; requires b | a.
  [[nodiscard]] friend ExtMonomial quotient(const ExtMonomial& a, const ExtMonomial& b);
  [[nodiscard]] friend ExtMonomial lcm(const ExtMonomial& a, const ExtMonomial& b);
  [[nodiscard]] friend bool coprime(const ExtMonomial& a, const ExtMonomial& b) noexcept {
    return (a.support_ & b.support_) == 0;
  }

  /// `1` or `x1*x3^2`, indices ascending.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ExtMonomial&, const ExtMonomial&) = default;

 private:
  void set_exponent(std::size_t index, unsigned e);

  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint64_t support_ = 0;
  unsigned degree_ = 0;
};

[[nodiscard]] std::strong_ordering degrevlex_compare(const ExtMonomial& a, const ExtMonomial& b) noexcept;

[[nodiscard]] inline bool degrevlex_less(const ExtMonomial& a, const ExtMonomial& b) noexcept {
  return degrevlex_compare(a, b) == std::strong_ordering::less;
}

/// `x1*x2*x5` rendering of a support mask; `1` for the empty set.
[[nodiscard]] std::string support_to_string(std::uint64_t support);

}  // namespace sgb
