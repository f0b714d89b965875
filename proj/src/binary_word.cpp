#include "sgb/binary_word.hpp"

namespace sgb {

BinaryWord BinaryWord::from_string(std::string_view text) {
  if (text.size() > kMaxLength) fail(ErrorKind::invalid_input, "word length exceeds 64");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      fail(ErrorKind::invalid_input, "binary word contains a character other than 0/1");
    }
  }
  return BinaryWord(text.size(), bits);
}

BinaryWord BinaryWord::from_positions(std::size_t length, std::initializer_list<int> positions) {
  BinaryWord w(length);
  for (int p : positions) {
    if (p < 1 || static_cast<std::size_t>(p) > length) {
      fail(ErrorKind::invalid_input, "position out of range");
    }
    w.set(static_cast<std::size_t>(p), true);
  }
  return w;
}

void BinaryWord::set(std::size_t position, bool value) {
  if (position < 1 || position > length_) fail(ErrorKind::invalid_input, "position out of range");
  const std::uint64_t bit = std::uint64_t{1} << (position - 1);
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

std::string BinaryWord::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) s[i] = '1';
  }
  return s;
}

bool lex_less(const BinaryWord& a, const BinaryWord& b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // first differing position: the word holding 0 there is smaller
  return ((a.bits() >> std::countr_zero(diff)) & 1U) == 0;
}

}  // namespace sgb
