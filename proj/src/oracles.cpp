#include "sgb/oracles.hpp"

#include <algorithm>
#include <set>

#include "sgb/monomial.hpp"

namespace sgb::oracle {

std::vector<std::uint64_t> codewords(const LinearCode& code) {
  const auto& rows = code.generator_rows();
  std::vector<std::uint64_t> out{0};
  for (std::uint64_t r : rows) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] ^ r);
  }
  return out;
}

std::uint64_t coset_minimum(std::uint64_t u, const std::vector<std::uint64_t>& codewords) {
  std::uint64_t best = u;
  for (std::uint64_t c : codewords) {
    if (degrevlex_less(u ^ c, best)) best = u ^ c;
  }
  return best;
}

std::size_t count_minimal_nonstandard(const LinearCode& code) {
  const auto words = codewords(code);
  const std::size_t n = code.length();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> standard(total);
  for (std::uint64_t u = 0; u < total; ++u) standard[u] = coset_minimum(u, words) == u;
  std::size_t count = 0;
  for (std::uint64_t u = 0; u < total; ++u) {
    if (standard[u]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (u & bit) minimal = standard[u & ~bit];
    }
    if (minimal) ++count;
  }
  return count;
}

namespace {

std::uint32_t add_vectors(std::uint32_t a, std::uint32_t b, std::uint32_t scale, int m, std::uint32_t q) {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (int i = 0; i < m; ++i) {
    const std::uint32_t da = a % q;
    const std::uint32_t db = b % q;
    out += ((da + scale * db) % q) * place;
    a /= q;
    b /= q;
    place *= q;
  }
  return out;
}

void extend(std::vector<std::uint32_t> span, std::uint32_t min_next, int remaining, int m, std::uint32_t q,
            std::uint32_t universe, std::set<std::vector<std::uint32_t>>& found) {
  if (remaining == 0) {
    std::sort(span.begin(), span.end());
    found.insert(std::move(span));
    return;
  }
  for (std::uint32_t v = min_next; v < universe; ++v) {
    if (std::find(span.begin(), span.end(), v) != span.end()) continue;
    std::vector<std::uint32_t> next;
    next.reserve(span.size() * q);
    for (std::uint32_t s : span) {
      for (std::uint32_t c = 0; c < q; ++c) next.push_back(add_vectors(s, v, c, m, q));
    }
    extend(std::move(next), v + 1, remaining - 1, m, q, universe, found);
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> subspaces(int l, int m, std::uint32_t q) {
  std::uint32_t universe = 1;
  for (int i = 0; i < m; ++i) universe *= q;
  std::set<std::vector<std::uint32_t>> found;
  extend({0}, 1, l, m, q, universe, found);
  return {found.begin(), found.end()};
}

bool meets_schubert_conditions(const std::vector<std::uint32_t>& subspace, const IndexTuple& alpha, std::uint32_t q) {
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    // vectors supported on the first alpha_i coordinates
    std::uint32_t bound = 1;
    for (int j = 0; j < alpha[i]; ++j) bound *= q;
    std::size_t inside = 0;
    for (std::uint32_t v : subspace) inside += v < bound ? 1 : 0;
    std::size_t needed = 1;
    for (std::size_t j = 0; j <= i; ++j) needed *= q;
    if (inside < needed) return false;
  }
  return true;
}

}  // namespace sgb::oracle
