#include "sgb/monomial.hpp"

#include <algorithm>
#include <utility>

namespace sgb {

SquarefreeMonomial::SquarefreeMonomial(std::size_t variables, std::uint64_t support)
    : n_(variables), support_(support) {
  if (variables > kMaxVars) fail(ErrorKind::invalid_input, "more than 64 variables");
  if (variables < kMaxVars && (support >> variables) != 0) {
    fail(ErrorKind::invalid_input, "monomial uses a variable beyond x_n");
  }
}

std::string SquarefreeMonomial::to_string() const { return support_to_string(support_); }

std::string support_to_string(std::uint64_t support) {
  if (support == 0) return "1";
  std::string out;
  while (support != 0) {
    const int i = std::countr_zero(support);
    support &= support - 1;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
  }
  return out;
}

ExtMonomial ExtMonomial::from_support(std::uint64_t support) {
  ExtMonomial m;
  while (support != 0) {
    const int i = std::countr_zero(support);
    support &= support - 1;
    m.set_exponent(static_cast<std::size_t>(i), 1);
  }
  return m;
}

ExtMonomial ExtMonomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) fail(ErrorKind::invalid_input, "variable index beyond 64");
  ExtMonomial m;
  m.set_exponent(index, power);
  return m;
}

void ExtMonomial::set_exponent(std::size_t index, unsigned e) {
  if (e > 255) fail(ErrorKind::invalid_input, "exponent overflow");
  degree_ = degree_ - exp_[index] + e;
  exp_[index] = static_cast<std::uint8_t>(e);
  const std::uint64_t bit = std::uint64_t{1} << index;
  support_ = e != 0 ? (support_ | bit) : (support_ & ~bit);
}

bool ExtMonomial::divides(const ExtMonomial& other) const noexcept {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  std::uint64_t s = support_;
  while (s != 0) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

ExtMonomial operator*(const ExtMonomial& a, const ExtMonomial& b) {
  ExtMonomial out = a;
  std::uint64_t s = b.support_;
  while (s != 0) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    out.set_exponent(static_cast<std::size_t>(i), unsigned{a.exp_[i]} + b.exp_[i]);
  }
  return out;
}

ExtMonomial quotient(const ExtMonomial& a, const ExtMonomial& b) {
  if (!b.divides(a)) fail(ErrorKind::invariant, "monomial quotient of non-divisible terms");
  ExtMonomial out = a;
  std::uint64_t s = b.support_;
  while (s != 0) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    out.set_exponent(static_cast<std::size_t>(i), unsigned{a.exp_[i]} - b.exp_[i]);
  }
  return out;
}

ExtMonomial lcm(const ExtMonomial& a, const ExtMonomial& b) {
  ExtMonomial out = a;
  std::uint64_t s = b.support_;
  while (s != 0) {
    const int i = std::countr_zero(s);
    s &= s - 1;
    out.set_exponent(static_cast<std::size_t>(i), std::max(a.exp_[i], b.exp_[i]));
  }
  return out;
}

std::string ExtMonomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (exp_[i] > 1) {
      out += '^';
      out += std::to_string(exp_[i]);
    }
  }
  return out;
}

std::strong_ordering degrevlex_compare(const ExtMonomial& a, const ExtMonomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = std::max(a.span(), b.span()); i-- > 0;) {
    const unsigned ea = a.exponent(i);
    const unsigned eb = b.exponent(i);
    if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace sgb
