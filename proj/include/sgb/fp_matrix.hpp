#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sgb/error.hpp"

namespace sgb {

[[nodiscard]] bool is_prime(std::uint32_t p);

/// Dense matrix over the prime field GF(p), stored row-major.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  /// Entries are reduced mod p.
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, const std::vector<std::int64_t>& entries);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }

  [[nodiscard]] std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);

  [[nodiscard]] std::vector<std::uint32_t> row(std::size_t r) const;
  [[nodiscard]] std::vector<std::uint32_t> column(std::size_t c) const;

  [[nodiscard]] FpMatrix transpose() const;
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] static FpMatrix identity(std::size_t n, std::uint32_t p);

  // field helpers
  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  FpMatrix matrix;
  std::vector<std::size_t> pivot_columns;  // 0-based, strictly increasing
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination over GF(p).
[[nodiscard]] RrefResult rref(const FpMatrix& m);

/// Determinant of a square matrix over GF(p).
[[nodiscard]] std::uint32_t determinant(const FpMatrix& m);

/// Shared matrix text format: `k n p`, then k rows of n residues.
[[nodiscard]] FpMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const FpMatrix& m);
[[nodiscard]] FpMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const FpMatrix& m);

}  // namespace sgb
