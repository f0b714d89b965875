#include "sgb/fp_matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace sgb {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  if (!is_prime(p)) fail(ErrorKind::invalid_input, "modulus " + std::to_string(p) + " is not prime");
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, const std::vector<std::int64_t>& entries)
    : FpMatrix(rows, cols, p) {
  if (entries.size() != rows * cols) fail(ErrorKind::invalid_input, "entry count does not match shape");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::int64_t m = static_cast<std::int64_t>(p);
    data_[i] = static_cast<std::uint32_t>(((entries[i] % m) + m) % m);
  }
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  const std::int64_t m = static_cast<std::int64_t>(p_);
  data_[r * cols_ + c] = static_cast<std::uint32_t>(((value % m) + m) % m);
}

std::vector<std::uint32_t> FpMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::uint32_t> FpMatrix::column(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.cols_ != b.rows_) fail(ErrorKind::invalid_input, "matrix shape or field mismatch");
  FpMatrix out(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc = (acc + std::uint64_t{a(i, k)} * b(k, j)) % a.p_;
      out.data_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc);
    }
  }
  return out;
}

bool FpMatrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

std::uint32_t FpMatrix::inv(std::uint32_t a) const {
  if (a % p_ == 0) fail(ErrorKind::invalid_input, "zero has no inverse");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

RrefResult rref(const FpMatrix& input) {
  RrefResult out{input, {}, 0};
  FpMatrix& m = out.matrix;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < cols; ++j) {
        const auto tmp = m(pivot, j);
        m.set(pivot, j, m(lead_row, j));
        m.set(lead_row, j, tmp);
      }
    }
    const std::uint32_t scale = m.inv(m(lead_row, c));
    for (std::size_t j = 0; j < cols; ++j) m.set(lead_row, j, m.mul(m(lead_row, j), scale));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const std::uint32_t factor = m(r, c);
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(r, j, m.add(m(r, j), m.neg(m.mul(factor, m(lead_row, j)))));
      }
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  return out;
}

std::uint32_t determinant(const FpMatrix& input) {
  if (input.rows() != input.cols()) fail(ErrorKind::invalid_input, "determinant of non-square matrix");
  FpMatrix m = input;
  const std::size_t n = m.rows();
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto tmp = m(pivot, j);
        m.set(pivot, j, m(c, j));
        m.set(c, j, tmp);
      }
      det = m.neg(det);
    }
    det = m.mul(det, m(c, c));
    const std::uint32_t inv_pivot = m.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const std::uint32_t factor = m.mul(m(r, c), inv_pivot);
      for (std::size_t j = c; j < n; ++j) m.set(r, j, m.add(m(r, j), m.neg(m.mul(factor, m(c, j)))));
    }
  }
  return det;
}

FpMatrix read_matrix(std::istream& in) {
  std::size_t k = 0;
  std::size_t n = 0;
  std::int64_t p = 0;
  if (!(in >> k >> n >> p)) fail(ErrorKind::invalid_input, "matrix header must be `k n p`");
  if (p < 2 || p > 0xFFFFFFFFLL) fail(ErrorKind::invalid_input, "invalid modulus in matrix header");
  std::vector<std::int64_t> entries(k * n);
  for (auto& e : entries) {
    if (!(in >> e)) fail(ErrorKind::invalid_input, "matrix body is truncated");
    if (e < 0 || e >= p) fail(ErrorKind::invalid_input, "matrix entry outside [0, p)");
  }
  std::string trailing;
  if (in >> trailing) fail(ErrorKind::invalid_input, "unexpected trailing data after matrix");
  return FpMatrix(k, n, static_cast<std::uint32_t>(p), entries);
}

void write_matrix(std::ostream& out, const FpMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.modulus() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
}

FpMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::missing_file, "cannot open matrix file " + path);
  return read_matrix(in);
}

void save_matrix(const std::string& path, const FpMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_input, "cannot write " + path);
  write_matrix(out, m);
}

}  // namespace sgb
