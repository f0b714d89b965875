#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

enum class ErrorKind {
  invalid_input,   // malformed or out-of-contract arguments
  bound_exceeded,  // enumeration / variable-count guard tripped
  invariant,       // an internal construction check failed
  missing_file,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Enumeration guards shared by every brute-force routine.
struct Limits {
  /// Largest n for which all 2^n binary words may be scanned.
  unsigned max_word_bits = 24;
  /// Largest log2 of an enumerated set (p^k codewords, q^cells Schubert points).
  unsigned max_enum_log2 = 24;
  /// Variable count accepted by the Buchberger reference engine.
  unsigned max_buchberger_vars = 12;
};

}  // namespace sgb
