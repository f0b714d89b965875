#include "sgb/schubert.hpp"

#include <functional>
#include <limits>
#include <utility>

namespace sgb {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / base) fail(ErrorKind::bound_exceeded, "integer overflow");
    v *= base;
  }
  return v;
}

std::uint64_t enum_cap(const Limits& limits) {
  return limits.max_enum_log2 >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                    : (std::uint64_t{1} << limits.max_enum_log2);
}

// Free cells of the echelon form with the given 1-based pivot columns.
std::vector<std::pair<std::size_t, std::size_t>> free_cells(const std::vector<int>& pivots) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (int c = 1; c < pivots[r]; ++c) {
      bool is_pivot = false;
      for (std::size_t s = 0; s < r; ++s) is_pivot = is_pivot || pivots[s] == c;
      if (!is_pivot) cells.emplace_back(r, static_cast<std::size_t>(c - 1));
    }
  }
  return cells;
}

std::uint32_t cofactor_det(const std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p) {
  if (n == 1) return a[0];
  if (n == 2) {
    const std::uint64_t lhs = std::uint64_t{a[0]} * a[3] % p;
    const std::uint64_t rhs = std::uint64_t{a[1]} * a[2] % p;
    return static_cast<std::uint32_t>((lhs + p - rhs) % p);
  }
  std::uint64_t det = 0;
  std::vector<std::uint32_t> sub((n - 1) * (n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c] == 0) continue;
    std::size_t idx = 0;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) sub[idx++] = a[r * n + cc];
      }
    }
    const std::uint64_t term = std::uint64_t{a[c]} * cofactor_det(sub, n - 1, p) % p;
    det = (c % 2 == 0) ? (det + term) % p : (det + p - term) % p;
  }
  return static_cast<std::uint32_t>(det);
}

std::uint32_t minor(const FpMatrix& basis, const IndexTuple& cols) {
  const std::size_t l = basis.rows();
  if (l <= 4) {
    std::vector<std::uint32_t> a(l * l);
    for (std::size_t r = 0; r < l; ++r) {
      for (std::size_t c = 0; c < l; ++c) a[r * l + c] = basis(r, static_cast<std::size_t>(cols[c] - 1));
    }
    return cofactor_det(a, l, basis.modulus());
  }
  FpMatrix sub(l, l, basis.modulus());
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = 0; c < l; ++c) sub.set(r, c, basis(r, static_cast<std::size_t>(cols[c] - 1)));
  }
  return determinant(sub);
}

// Base-q counter, last digit least significant. False after wrapping to all zeros.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

IndexTuple::IndexTuple(std::vector<int> entries, int m) : entries_(std::move(entries)), m_(m) {
  if (entries_.empty()) fail(ErrorKind::invalid_input, "index tuple must be nonempty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > m) fail(ErrorKind::invalid_input, "index tuple entry outside [1, m]");
    if (i > 0 && entries_[i] <= entries_[i - 1]) {
      fail(ErrorKind::invalid_input, "index tuple " + to_string() + " is not strictly increasing");
    }
  }
}

std::string IndexTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::vector<IndexTuple> index_tuples(int l, int m) {
  if (l < 1 || l > m) fail(ErrorKind::invalid_input, "index tuples need 1 <= l <= m");
  std::vector<IndexTuple> out;
  std::vector<int> cur(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.emplace_back(cur, m);
    int i = l - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - (l - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool bruhat_leq(const IndexTuple& beta, const IndexTuple& alpha) {
  if (beta.size() != alpha.size() || beta.ambient() != alpha.ambient()) {
    fail(ErrorKind::invalid_input, "index tuples of different shape");
  }
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] > alpha[i]) return false;
  }
  return true;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t gaussian_binomial(unsigned m, unsigned l, std::uint64_t q) {
  if (l < 1 || l > m) fail(ErrorKind::invalid_input, "gaussian binomial needs 1 <= l <= m");
  if (q < 2) fail(ErrorKind::invalid_input, "gaussian binomial needs q >= 2");
  // After step i the running value is [m choose i+1]_q, so every division is exact.
  u128 value = 1;
  for (unsigned i = 0; i < l; ++i) {
    const u128 num = checked_pow(q, m - i) - 1;
    const u128 den = checked_pow(q, i + 1) - 1;
    value = value * num;
    if (value % den != 0) fail(ErrorKind::invariant, "gaussian binomial division not exact");
    value /= den;
    if (value > std::numeric_limits<std::uint64_t>::max()) fail(ErrorKind::bound_exceeded, "gaussian binomial overflow");
  }
  return static_cast<std::uint64_t>(value);
}

SchubertSpec SchubertSpec::make(int l, int m, std::uint32_t q, std::vector<int> alpha) {
  if (l < 1 || l > m) fail(ErrorKind::invalid_input, "need 1 <= l <= m");
  if (!is_prime(q)) fail(ErrorKind::invalid_input, "q must be prime");
  if (alpha.size() != static_cast<std::size_t>(l)) fail(ErrorKind::invalid_input, "alpha must have l entries");
  return SchubertSpec{l, m, q, IndexTuple(std::move(alpha), m)};
}

SchubertSpec SchubertSpec::grassmannian(int l, int m, std::uint32_t q) {
  std::vector<int> alpha;
  for (int i = 0; i < l; ++i) alpha.push_back(m - l + 1 + i);
  return make(l, m, q, std::move(alpha));
}

PluckerVector plucker(const FpMatrix& basis) {
  const auto tuples = index_tuples(static_cast<int>(basis.rows()), static_cast<int>(basis.cols()));
  PluckerVector v;
  v.coords.reserve(tuples.size());
  for (const auto& t : tuples) v.coords.push_back(minor(basis, t));
  std::size_t first = 0;
  while (first < v.coords.size() && v.coords[first] == 0) ++first;
  if (first == v.coords.size()) fail(ErrorKind::invalid_input, "not a basis");
  const std::uint32_t scale = basis.inv(v.coords[first]);
  for (auto& c : v.coords) c = basis.mul(c, scale);
  return v;
}

std::uint64_t count_schubert_points(const SchubertSpec& spec) {
  std::uint64_t total = 0;
  for (const auto& pivots : index_tuples(spec.l, spec.m)) {
    if (!bruhat_leq(pivots, spec.alpha)) continue;
    const std::uint64_t add = checked_pow(spec.q, free_cells(pivots.entries()).size());
    if (total > std::numeric_limits<std::uint64_t>::max() - add) fail(ErrorKind::bound_exceeded, "point count overflow");
    total += add;
  }
  return total;
}

std::vector<FpMatrix> enumerate_schubert_bases(const SchubertSpec& spec, const Limits& limits) {
  if (count_schubert_points(spec) > enum_cap(limits)) fail(ErrorKind::bound_exceeded, "enumeration bound exceeded");
  std::vector<FpMatrix> out;
  const auto l = static_cast<std::size_t>(spec.l);
  const auto m = static_cast<std::size_t>(spec.m);
  for (const auto& pivots : index_tuples(spec.l, spec.m)) {
    if (!bruhat_leq(pivots, spec.alpha)) continue;
    const auto cells = free_cells(pivots.entries());
    std::vector<std::uint32_t> digits(cells.size(), 0);
    do {
      FpMatrix basis(l, m, spec.q);
      for (std::size_t r = 0; r < l; ++r) basis.set(r, static_cast<std::size_t>(pivots[r] - 1), 1);
      for (std::size_t i = 0; i < cells.size(); ++i) basis.set(cells[i].first, cells[i].second, digits[i]);
      out.push_back(std::move(basis));
    } while (advance(digits, spec.q));
  }
  return out;
}

std::vector<PluckerVector> enumerate_schubert_points(const SchubertSpec& spec, const Limits& limits) {
  std::vector<PluckerVector> out;
  for (const auto& basis : enumerate_schubert_bases(spec, limits)) out.push_back(plucker(basis));
  return out;
}

std::vector<PluckerVector> schubert_points_by_plucker(const SchubertSpec& spec, const Limits& limits) {
  const auto tuples = index_tuples(spec.l, spec.m);
  std::vector<PluckerVector> out;
  for (auto& point : enumerate_schubert_points(SchubertSpec::grassmannian(spec.l, spec.m, spec.q), limits)) {
    bool vanishes = true;
    for (std::size_t i = 0; i < tuples.size() && vanishes; ++i) {
      if (!bruhat_leq(tuples[i], spec.alpha) && point.coords[i] != 0) vanishes = false;
    }
    if (vanishes) out.push_back(std::move(point));
  }
  return out;
}

SchubertParams schubert_params(const SchubertSpec& spec, const Limits& limits) {
  SchubertParams params;
  params.n_alpha = enumerate_schubert_bases(spec, limits).size();
  for (const auto& beta : index_tuples(spec.l, spec.m)) {
    if (bruhat_leq(beta, spec.alpha)) ++params.k_alpha;
  }
  for (std::size_t i = 0; i < spec.alpha.size(); ++i) {
    params.delta_alpha += static_cast<std::uint64_t>(spec.alpha[i] - static_cast<int>(i + 1));
  }
  params.d = checked_pow(spec.q, params.delta_alpha);
  return params;
}

FpMatrix generator_matrix(const SchubertSpec& spec, const Limits& limits) {
  const auto tuples = index_tuples(spec.l, spec.m);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (bruhat_leq(tuples[i], spec.alpha)) kept.push_back(i);
  }
  const auto points = enumerate_schubert_points(spec, limits);
  FpMatrix g(kept.size(), points.size(), spec.q);
  for (std::size_t c = 0; c < points.size(); ++c) {
    bool zero_column = true;
    for (std::size_t i = 0, r = 0; i < tuples.size(); ++i) {
      const std::uint32_t v = points[c].coords[i];
      if (r < kept.size() && kept[r] == i) {
        g.set(r++, c, v);
        zero_column = zero_column && v == 0;
      } else if (v != 0) {
        fail(ErrorKind::invariant, "construction violated Schubert code invariants: p_beta != 0 for beta not <= alpha");
      }
    }
    if (zero_column) fail(ErrorKind::invariant, "construction violated Schubert code invariants: zero column");
  }
  if (rref(g).rank != kept.size()) fail(ErrorKind::invariant, "construction violated Schubert code invariants: rank defect");
  return g;
}

}  // namespace sgb
