#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sgb/error.hpp"
#include "sgb/linear_code.hpp"
#include "sgb/monomial.hpp"

namespace sgb {

enum class BinomialKind { field_relation, code_binomial };

/// lead - trail over GF(2), lead > trail in degrevlex. Signs are immaterial in
/// characteristic 2, so a binomial is an unordered pair of distinct monomials.
class Binomial {
 public:
  /// Orients the pair; nullopt when the terms coincide (the zero polynomial).
  [[nodiscard]] static std::optional<Binomial> make(const ExtMonomial& a, const ExtMonomial& b);
  [[nodiscard]] static Binomial field_relation(std::size_t index);
  /// X^u - X^v for squarefree supports u != v.
  [[nodiscard]] static Binomial from_supports(std::uint64_t u, std::uint64_t v);

  [[nodiscard]] const ExtMonomial& lead() const noexcept { return lead_; }
  [[nodiscard]] const ExtMonomial& trail() const noexcept { return trail_; }
  [[nodiscard]] BinomialKind kind() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Binomial(ExtMonomial lead, ExtMonomial trail) : lead_(lead), trail_(trail) {}

  ExtMonomial lead_;
  ExtMonomial trail_;
};

/// Sort key: lead ascending, then trail ascending.
[[nodiscard]] bool binomial_less(const Binomial& a, const Binomial& b) noexcept;

/// X^{w_i} - 1 for every generator row, followed by x_i^2 - 1 for i = 1..n.
[[nodiscard]] std::vector<Binomial> ideal_generators(const LinearCode& code);

[[nodiscard]] std::optional<Binomial> spoly(const Binomial& f, const Binomial& g);

/// Rewrites a single term t -> (t / lead) * trail with the first dividing lead in
/// basis order until no lead divides it.
[[nodiscard]] ExtMonomial reduce_term(const ExtMonomial& term, std::span<const Binomial> basis);

/// Full reduction; nullopt when the remainder is zero.
[[nodiscard]] std::optional<Binomial> reduce(const Binomial& poly, std::span<const Binomial> basis);

/// Buchberger criterion: every S-polynomial reduces to zero.
[[nodiscard]] bool is_groebner(std::span<const Binomial> basis);

/// Interreduced binomial basis of a binary code ideal, sorted by lead.
class ReducedGroebnerBasis {
 public:
  /// Sorts the elements and checks the reduced-basis invariants; throws on violation.
  ReducedGroebnerBasis(std::size_t variables, std::vector<Binomial> elements);

  [[nodiscard]] std::size_t variables() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Binomial>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] static constexpr std::string_view order_id() noexcept { return "degrevlex"; }

  [[nodiscard]] std::size_t field_relation_count() const noexcept { return elements_.size() - code_leads_.size(); }
  /// Squarefree leads/trails of the code binomials, in element order.
  [[nodiscard]] const std::vector<std::uint64_t>& code_leads() const noexcept { return code_leads_; }
  [[nodiscard]] const std::vector<std::uint64_t>& code_trails() const noexcept { return code_trails_; }
  [[nodiscard]] std::optional<int> min_code_degree() const noexcept { return min_code_degree_; }

  friend bool operator==(const ReducedGroebnerBasis& a, const ReducedGroebnerBasis& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t n_;
  std::vector<Binomial> elements_;
  std::vector<std::uint64_t> code_leads_;
  std::vector<std::uint64_t> code_trails_;
  std::optional<int> min_code_degree_;
};

struct BuchbergerStats {
  std::size_t pairs_total = 0;
  std::size_t pairs_coprime = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_peak = 0;
};

/// Reference engine: pair queue in normal selection (smallest lcm first) with the
/// coprime-lead criterion, then minimalization and trail reduction.
[[nodiscard]] ReducedGroebnerBasis buchberger(std::size_t variables, std::span<const Binomial> generators,
                                              const Limits& limits = {}, BuchbergerStats* stats = nullptr);

/// Fast engine: reads the basis off the degrevlex coset-leader table. Standard
/// monomials are the leaders; leads are the minimal non-standard monomials.
[[nodiscard]] ReducedGroebnerBasis coset_engine(const LinearCode& code, const Limits& limits = {});

/// Canonical form of a squarefree monomial. Field relations are applied implicitly,
/// so one rewrite step is t -> t xor lead xor trail on supports.
[[nodiscard]] SquarefreeMonomial normal_form(const SquarefreeMonomial& a, const ReducedGroebnerBasis& gb);
/// Same, choosing uniformly among all applicable divisors at each step.
[[nodiscard]] SquarefreeMonomial normal_form(const SquarefreeMonomial& a, const ReducedGroebnerBasis& gb,
                                             std::mt19937_64& rng);

/// Minimum lead degree over code binomials, minus one.
[[nodiscard]] int capability(const ReducedGroebnerBasis& gb);

// ---- text format -------------------------------------------------------------

struct BinomialListing {
  std::size_t variables = 0;
  std::vector<Binomial> elements;
};

/// `# n=<n> order=degrevlex field=GF(2)` then one `term - term` per line.
void write_basis(std::ostream& out, const ReducedGroebnerBasis& gb);
[[nodiscard]] BinomialListing read_binomials(std::istream& in);
[[nodiscard]] BinomialListing load_binomials(const std::string& path);
[[nodiscard]] ExtMonomial parse_term(std::string_view text);
[[nodiscard]] Binomial parse_binomial(std::string_view text);

}  // namespace sgb
