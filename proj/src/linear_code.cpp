#include "sgb/linear_code.hpp"

#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "sgb/monomial.hpp"

namespace sgb {

namespace {

// p^k, or nullopt-like max when it exceeds 2^limit.
bool enumerable(std::uint64_t base, std::size_t exponent, unsigned log2_limit) {
  const std::uint64_t cap = log2_limit >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                             : (std::uint64_t{1} << log2_limit);
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (v > cap / base) return false;
    v *= base;
  }
  return v <= cap;
}

// Visits every codeword as a residue vector (p^k of them).
template <typename Visit>
void for_each_codeword(const LinearCode& code, const Limits& limits, Visit&& visit) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::uint32_t p = code.field();
  if (!enumerable(p, k, limits.max_enum_log2)) fail(ErrorKind::bound_exceeded, "enumeration bound exceeded");
  const FpMatrix& g = code.generator();
  std::vector<std::uint32_t> word(n, 0);
  std::vector<std::uint32_t> digits(k, 0);
  visit(word);
  for (;;) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      ++digits[i];
      for (std::size_t j = 0; j < n; ++j) word[j] = g.add(word[j], g(i, j));
      if (digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == k) return;
    visit(word);
  }
}

}  // namespace

FpMatrix parity_check_of(const FpMatrix& generator) {
  const RrefResult r = rref(generator);
  if (r.rank != generator.rows()) fail(ErrorKind::invalid_input, "generator not full rank");
  const std::size_t n = generator.cols();
  const std::size_t k = r.rank;
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  FpMatrix h(n - k, n, generator.modulus());
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    h.set(row, f, 1);
    for (std::size_t i = 0; i < k; ++i) {
      h.set(row, r.pivot_columns[i], r.matrix.neg(r.matrix(i, f)));
    }
    ++row;
  }
  return h;
}

LinearCode::LinearCode(FpMatrix generator)
    : generator_(std::move(generator)), parity_check_(parity_check_of(generator_)) {
  if (!(generator_ * parity_check_.transpose()).is_zero()) {
    fail(ErrorKind::invariant, "parity-check construction violated G*H^T = 0");
  }
  if (is_binary() && length() <= BinaryWord::kMaxLength) {
    for (std::size_t r = 0; r < dimension(); ++r) {
      std::uint64_t bits = 0;
      for (std::size_t c = 0; c < length(); ++c) {
        if (generator_(r, c) != 0) bits |= std::uint64_t{1} << c;
      }
      rows_.push_back(bits);
    }
    check_columns_.assign(length(), 0);
    for (std::size_t r = 0; r < parity_check_.rows(); ++r) {
      for (std::size_t c = 0; c < length(); ++c) {
        if (parity_check_(r, c) != 0) check_columns_[c] |= std::uint64_t{1} << r;
      }
    }
  }
}

void LinearCode::require_binary() const {
  if (!is_binary()) fail(ErrorKind::invalid_input, "binary only");
  if (length() > BinaryWord::kMaxLength) fail(ErrorKind::invalid_input, "binary code longer than 64");
}

const std::vector<std::uint64_t>& LinearCode::generator_rows() const {
  require_binary();
  return rows_;
}

const std::vector<std::uint64_t>& LinearCode::check_columns() const {
  require_binary();
  return check_columns_;
}

std::uint64_t LinearCode::syndrome_bits(std::uint64_t word) const {
  require_binary();
  std::uint64_t s = 0;
  while (word != 0) {
    s ^= check_columns_[static_cast<std::size_t>(std::countr_zero(word))];
    word &= word - 1;
  }
  return s;
}

std::uint64_t LinearCode::encode(std::uint64_t message) const {
  require_binary();
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((message >> i) & 1U) w ^= rows_[i];
  }
  return w;
}

bool LinearCode::contains(const BinaryWord& w) const {
  if (w.size() != length()) fail(ErrorKind::invalid_input, "word length does not match code length");
  return syndrome_bits(w.bits()) == 0;
}

BinaryWord syndrome(const BinaryWord& w, const LinearCode& code) {
  if (w.size() != code.length()) fail(ErrorKind::invalid_input, "word length does not match code length");
  return BinaryWord(code.length() - code.dimension(), code.syndrome_bits(w.bits()));
}

int min_distance_bruteforce(const LinearCode& code, const Limits& limits) {
  int best = std::numeric_limits<int>::max();
  bool first = true;
  for_each_codeword(code, limits, [&](const std::vector<std::uint32_t>& word) {
    if (first) {  // the zero word
      first = false;
      return;
    }
    int w = 0;
    for (auto v : word) w += v != 0 ? 1 : 0;
    if (w < best) best = w;
  });
  if (best == std::numeric_limits<int>::max()) fail(ErrorKind::invalid_input, "zero-dimensional code has no minimum distance");
  return best;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, const Limits& limits) {
  std::vector<std::uint64_t> dist(code.length() + 1, 0);
  for_each_codeword(code, limits, [&](const std::vector<std::uint32_t>& word) {
    std::size_t w = 0;
    for (auto v : word) w += v != 0 ? 1 : 0;
    ++dist[w];
  });
  return dist;
}

CosetLeaderTable build_coset_leader_table(const LinearCode& code, const Limits& limits) {
  if (!code.is_binary()) fail(ErrorKind::invalid_input, "binary only");
  const std::size_t n = code.length();
  if (n > limits.max_word_bits) {
    fail(ErrorKind::bound_exceeded, "coset table needs 2^" + std::to_string(n) + " words; bound is 2^" +
                                        std::to_string(limits.max_word_bits));
  }
  const std::size_t r = n - code.dimension();
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> leaders(std::size_t{1} << r, kUnset);
  const auto& cols = code.check_columns();
  // Gray-code walk: consecutive words differ in one bit, so the syndrome updates by one column.
  std::uint64_t word = 0;
  std::uint64_t syn = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i != 0) {
      const int flip = std::countr_zero(i);
      word ^= std::uint64_t{1} << flip;
      syn ^= cols[static_cast<std::size_t>(flip)];
    }
    std::uint64_t& slot = leaders[syn];
    if (slot == kUnset || degrevlex_less(word, slot)) slot = word;
  }
  return CosetLeaderTable(n, std::move(leaders));
}

BinaryWord syndrome_decode(const BinaryWord& w, const CosetLeaderTable& table, const LinearCode& code) {
  if (w.size() != code.length() || table.length() != code.length()) {
    fail(ErrorKind::invalid_input, "word length does not match code length");
  }
  return BinaryWord(w.size(), w.bits() ^ table.leader_bits(code.syndrome_bits(w.bits())));
}

NearestResult nn_decode(const BinaryWord& w, const LinearCode& code, const Limits& limits) {
  if (w.size() != code.length()) fail(ErrorKind::invalid_input, "word length does not match code length");
  const auto& rows = code.generator_rows();
  const std::size_t k = rows.size();
  if (k > limits.max_enum_log2) fail(ErrorKind::bound_exceeded, "enumeration bound exceeded");
  NearestResult best{BinaryWord(w.size()), false, std::numeric_limits<int>::max()};
  std::uint64_t cw = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i != 0) cw ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const int dist = std::popcount(cw ^ w.bits());
    const BinaryWord candidate(w.size(), cw);
    if (dist < best.distance) {
      best = {candidate, false, dist};
    } else if (dist == best.distance) {
      best.ambiguous = true;
      if (lex_less(candidate, best.codeword)) best.codeword = candidate;
    }
  }
  return best;
}

}  // namespace sgb
