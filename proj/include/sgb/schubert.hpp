#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgb/error.hpp"
#include "sgb/fp_matrix.hpp"

namespace sgb {

/// Strictly increasing 1-based tuple 1 <= a_1 < ... < a_l <= m.
class IndexTuple {
 public:
  IndexTuple(std::vector<int> entries, int m);

  [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] int ambient() const noexcept { return m_; }
  [[nodiscard]] int operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> entries_;
  int m_;
};

/// All tuples of I(l, m) in lexicographic order.
[[nodiscard]] std::vector<IndexTuple> index_tuples(int l, int m);

/// Componentwise order: beta_i <= alpha_i for every i.
[[nodiscard]] bool bruhat_leq(const IndexTuple& beta, const IndexTuple& alpha);

/// Number of l-dimensional subspaces of GF(q)^m.
[[nodiscard]] std::uint64_t gaussian_binomial(unsigned m, unsigned l, std::uint64_t q);

struct SchubertSpec {
  int l;
  int m;
  std::uint32_t q;
  IndexTuple alpha;

  /// Validates l, m, q prime and alpha in I(l, m).
  static SchubertSpec make(int l, int m, std::uint32_t q, std::vector<int> alpha);
  /// alpha = (m-l+1, ..., m): the whole Grassmannian.
  static SchubertSpec grassmannian(int l, int m, std::uint32_t q);
};

struct SchubertParams {
  std::uint64_t n_alpha = 0;
  std::uint64_t k_alpha = 0;
  std::uint64_t delta_alpha = 0;
  std::uint64_t d = 0;

  [[nodiscard]] std::uint64_t capability() const noexcept { return (d - 1) / 2; }
  [[nodiscard]] bool is_mds() const noexcept { return k_alpha + d == n_alpha + 1; }
};

/// Plucker coordinates indexed by index_tuples(l, m), first nonzero entry scaled to 1.
struct PluckerVector {
  std::vector<std::uint32_t> coords;
  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
  friend auto operator<=>(const PluckerVector&, const PluckerVector&) = default;
};

[[nodiscard]] PluckerVector plucker(const FpMatrix& basis);

/// Echelon bases of the points of the Schubert variety, one per point. Each row
/// has its rightmost nonzero entry equal to 1 at a pivot column, and the pivot
/// columns vanish in every other row. A subspace belongs to the variety iff its
/// pivot tuple j satisfies j_i <= alpha_i. Order: pivot tuple lex ascending,
/// then free cells read row-major as a base-q number, first cell most significant.
[[nodiscard]] std::vector<FpMatrix> enumerate_schubert_bases(const SchubertSpec& spec, const Limits& limits = {});

[[nodiscard]] std::vector<PluckerVector> enumerate_schubert_points(const SchubertSpec& spec,
                                                                   const Limits& limits = {});

/// Same point set selected the other way: all Grassmannian points whose
/// coordinates vanish at every beta not below alpha. Grassmannian order.
[[nodiscard]] std::vector<PluckerVector> schubert_points_by_plucker(const SchubertSpec& spec,
                                                                    const Limits& limits = {});

/// Point count without building coordinates.
[[nodiscard]] std::uint64_t count_schubert_points(const SchubertSpec& spec);

[[nodiscard]] SchubertParams schubert_params(const SchubertSpec& spec, const Limits& limits = {});

/// k_alpha x n_alpha matrix: row r evaluates p_{beta_r} (beta_r the r-th tuple below alpha)
/// at every point in enumeration order.
[[nodiscard]] FpMatrix generator_matrix(const SchubertSpec& spec, const Limits& limits = {});

}  // namespace sgb
