#include "sgb/groebner.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <tuple>

namespace sgb {

// ---- Binomial ---------------------------------------------------------------

std::optional<Binomial> Binomial::make(const ExtMonomial& a, const ExtMonomial& b) {
  const auto c = degrevlex_compare(a, b);
  if (c == std::strong_ordering::equal) return std::nullopt;
  return c == std::strong_ordering::greater ? Binomial(a, b) : Binomial(b, a);
}

Binomial Binomial::field_relation(std::size_t index) { return Binomial(ExtMonomial::variable(index, 2), ExtMonomial{}); }

Binomial Binomial::from_supports(std::uint64_t u, std::uint64_t v) {
  auto b = make(ExtMonomial::from_support(u), ExtMonomial::from_support(v));
  if (!b) fail(ErrorKind::invalid_input, "binomial with equal terms");
  return *b;
}

BinomialKind Binomial::kind() const noexcept {
  const bool square_of_variable = lead_.degree() == 2 && std::popcount(lead_.support()) == 1;
  return square_of_variable && trail_.is_one() ? BinomialKind::field_relation : BinomialKind::code_binomial;
}

std::string Binomial::to_string() const { return lead_.to_string() + " - " + trail_.to_string(); }

bool binomial_less(const Binomial& a, const Binomial& b) noexcept {
  const auto c = degrevlex_compare(a.lead(), b.lead());
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return degrevlex_less(a.trail(), b.trail());
}

// ---- generators, S-polynomials, reduction -----------------------------------

std::vector<Binomial> ideal_generators(const LinearCode& code) {
  std::vector<Binomial> out;
  for (std::uint64_t row : code.generator_rows()) {
    if (row == 0) fail(ErrorKind::invalid_input, "degenerate generator row");
    out.push_back(Binomial::from_supports(row, 0));
  }
  for (std::size_t i = 0; i < code.length(); ++i) out.push_back(Binomial::field_relation(i));
  return out;
}

std::optional<Binomial> spoly(const Binomial& f, const Binomial& g) {
  const ExtMonomial l = lcm(f.lead(), g.lead());
  // the lcm terms cancel; what is left are the two shifted trails
  return Binomial::make(quotient(l, f.lead()) * f.trail(), quotient(l, g.lead()) * g.trail());
}

ExtMonomial reduce_term(const ExtMonomial& term, std::span<const Binomial> basis) {
  ExtMonomial t = term;
  for (;;) {
    const auto it = std::find_if(basis.begin(), basis.end(), [&](const Binomial& b) { return b.lead().divides(t); });
    if (it == basis.end()) return t;
    t = quotient(t, it->lead()) * it->trail();
  }
}

std::optional<Binomial> reduce(const Binomial& poly, std::span<const Binomial> basis) {
  // Over GF(2) each rewrite keeps a binomial a binomial, and the terms reduce
  // independently: if one term's chain meets the other term, both chains end
  // at the same monomial and the remainder cancels to zero.
  return Binomial::make(reduce_term(poly.lead(), basis), reduce_term(poly.trail(), basis));
}

bool is_groebner(std::span<const Binomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto s = spoly(basis[i], basis[j]);
      if (s && reduce(*s, basis)) return false;
    }
  }
  return true;
}

// ---- ReducedGroebnerBasis ---------------------------------------------------

ReducedGroebnerBasis::ReducedGroebnerBasis(std::size_t variables, std::vector<Binomial> elements)
    : n_(variables), elements_(std::move(elements)) {
  if (n_ == 0 || n_ > kMaxVars) fail(ErrorKind::invalid_input, "basis variable count must be in [1, 64]");
  std::sort(elements_.begin(), elements_.end(), binomial_less);
  const std::uint64_t universe = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  std::uint64_t relations = 0;
  for (const auto& b : elements_) {
    if (((b.lead().support() | b.trail().support()) & ~universe) != 0) {
      fail(ErrorKind::invalid_input, "basis element " + b.to_string() + " uses a variable beyond x_n");
    }
    if (b.kind() == BinomialKind::field_relation) {
      if (relations & b.lead().support()) fail(ErrorKind::invalid_input, "duplicate field relation");
      relations |= b.lead().support();
      continue;
    }
    if (!b.lead().is_squarefree() || !b.trail().is_squarefree()) {
      fail(ErrorKind::invalid_input, "code binomial " + b.to_string() + " is not squarefree");
    }
    code_leads_.push_back(b.lead().support());
    code_trails_.push_back(b.trail().support());
    const int deg = static_cast<int>(b.lead().degree());
    if (!min_code_degree_ || deg < *min_code_degree_) min_code_degree_ = deg;
  }
  if (relations != universe) fail(ErrorKind::invalid_input, "basis must contain x_i^2 - 1 for every variable");
  // Reducedness on the code part; x_i^2 leads never divide squarefree terms.
  for (std::size_t i = 0; i < code_leads_.size(); ++i) {
    if (std::popcount(code_leads_[i]) < 2) {
      fail(ErrorKind::invalid_input, "degenerate basis: a single variable is a leading term");
    }
    for (std::size_t j = 0; j < code_leads_.size(); ++j) {
      const bool hits_trail = (code_leads_[i] & ~code_trails_[j]) == 0;
      const bool hits_lead = i != j && (code_leads_[i] & ~code_leads_[j]) == 0;
      if (hits_trail || hits_lead) {
        fail(ErrorKind::invalid_input, "basis is not reduced: lead " + support_to_string(code_leads_[i]) +
                                           " divides a term of " + support_to_string(code_leads_[j]) + " - " +
                                           support_to_string(code_trails_[j]));
      }
    }
  }
}

// ---- engines ----------------------------------------------------------------

namespace {

ReducedGroebnerBasis interreduce(std::size_t variables, std::vector<Binomial> g) {
  std::stable_sort(g.begin(), g.end(), binomial_less);
  std::vector<Binomial> minimal;
  for (const auto& b : g) {
    // divisors precede multiples in any monomial order, so one pass suffices
    const bool redundant =
        std::any_of(minimal.begin(), minimal.end(), [&](const Binomial& m) { return m.lead().divides(b.lead()); });
    if (!redundant) minimal.push_back(b);
  }
  std::vector<Binomial> reduced;
  reduced.reserve(minimal.size());
  for (const auto& b : minimal) {
    auto r = Binomial::make(b.lead(), reduce_term(b.trail(), minimal));
    if (!r) fail(ErrorKind::invariant, "trail reduced onto its own lead");
    reduced.push_back(*r);
  }
  return ReducedGroebnerBasis(variables, std::move(reduced));
}

struct CriticalPair {
  ExtMonomial lcm;
  std::size_t i;
  std::size_t j;
};

struct LaterPair {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const noexcept {
    const auto c = degrevlex_compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return std::tie(a.j, a.i) > std::tie(b.j, b.i);
  }
};

}  // namespace

ReducedGroebnerBasis buchberger(std::size_t variables, std::span<const Binomial> generators, const Limits& limits,
                                BuchbergerStats* stats) {
  if (variables > limits.max_buchberger_vars) {
    fail(ErrorKind::bound_exceeded, "buchberger engine limited to " + std::to_string(limits.max_buchberger_vars) +
                                        " variables; use the coset engine");
  }
  BuchbergerStats local;
  BuchbergerStats& st = stats != nullptr ? *stats : local;
  std::vector<Binomial> g(generators.begin(), generators.end());
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, LaterPair> queue;
  const auto add_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push({lcm(g[i].lead(), g[j].lead()), i, j});
      ++st.pairs_total;
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs_with(j);

  while (!queue.empty()) {
    const CriticalPair pair = queue.top();
    queue.pop();
    if (coprime(g[pair.i].lead(), g[pair.j].lead())) {
      ++st.pairs_coprime;
      continue;
    }
    const auto s = spoly(g[pair.i], g[pair.j]);
    const auto r = s ? reduce(*s, g) : std::nullopt;
    if (!r) {
      ++st.zero_reductions;
      continue;
    }
    g.push_back(*r);
    add_pairs_with(g.size() - 1);
  }
  st.basis_peak = g.size();
  return interreduce(variables, std::move(g));
}

ReducedGroebnerBasis coset_engine(const LinearCode& code, const Limits& limits) {
  const CosetLeaderTable table = build_coset_leader_table(code, limits);
  const std::size_t n = code.length();
  const auto is_standard = [&](std::uint64_t u) { return table.leader_bits(code.syndrome_bits(u)) == u; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_standard(std::uint64_t{1} << i)) {
      fail(ErrorKind::invalid_input, "degenerate code: x" + std::to_string(i + 1) + " is not a standard monomial");
    }
  }
  // Standard monomials are closed under division, so every minimal non-standard
  // monomial is a standard monomial times one more variable.
  std::vector<std::uint64_t> leads;
  for (std::uint64_t s : table.leaders()) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (s & bit) continue;
      const std::uint64_t u = s | bit;
      if (is_standard(u)) continue;
      bool minimal = true;
      for (std::uint64_t rest = u; rest != 0 && minimal; rest &= rest - 1) {
        minimal = is_standard(u & ~(rest & -rest));
      }
      if (minimal) leads.push_back(u);
    }
  }
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());

  std::vector<Binomial> elements;
  elements.reserve(leads.size() + n);
  for (std::size_t i = 0; i < n; ++i) elements.push_back(Binomial::field_relation(i));
  for (std::uint64_t u : leads) elements.push_back(Binomial::from_supports(u, table.leader_bits(code.syndrome_bits(u))));
  return ReducedGroebnerBasis(n, std::move(elements));
}

// ---- normal forms -----------------------------------------------------------

SquarefreeMonomial normal_form(const SquarefreeMonomial& a, const ReducedGroebnerBasis& gb) {
  if (a.variables() != gb.variables()) fail(ErrorKind::invalid_input, "monomial and basis disagree on n");
  const auto& leads = gb.code_leads();
  const auto& trails = gb.code_trails();
  std::uint64_t t = a.support();
  for (;;) {
    std::size_t j = 0;
    while (j < leads.size() && (leads[j] & ~t) != 0) ++j;
    if (j == leads.size()) return SquarefreeMonomial(a.variables(), t);
    t ^= leads[j] ^ trails[j];
  }
}

SquarefreeMonomial normal_form(const SquarefreeMonomial& a, const ReducedGroebnerBasis& gb, std::mt19937_64& rng) {
  if (a.variables() != gb.variables()) fail(ErrorKind::invalid_input, "monomial and basis disagree on n");
  const auto& leads = gb.code_leads();
  const auto& trails = gb.code_trails();
  std::uint64_t t = a.support();
  std::vector<std::size_t> candidates;
  for (;;) {
    candidates.clear();
    for (std::size_t j = 0; j < leads.size(); ++j) {
      if ((leads[j] & ~t) == 0) candidates.push_back(j);
    }
    if (candidates.empty()) return SquarefreeMonomial(a.variables(), t);
    const std::size_t pick = candidates[rng() % candidates.size()];
    t ^= leads[pick] ^ trails[pick];
  }
}

int capability(const ReducedGroebnerBasis& gb) {
  if (!gb.min_code_degree()) fail(ErrorKind::invalid_input, "capability undefined: basis has no code binomials");
  return *gb.min_code_degree() - 1;
}

// ---- text format ------------------------------------------------------------

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r') out += c;
  }
  return out;
}

std::size_t parse_index(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  std::size_t v = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    v = v * 10 + static_cast<std::size_t>(s[pos] - '0');
    if (v > 1000) fail(ErrorKind::invalid_input, "index too large in term");
    ++pos;
  }
  if (pos == start) fail(ErrorKind::invalid_input, "expected a number in term `" + s + "`");
  return v;
}

}  // namespace

ExtMonomial parse_term(std::string_view text) {
  const std::string s = strip(text);
  if (s == "1") return {};
  if (s.empty()) fail(ErrorKind::invalid_input, "empty term");
  ExtMonomial m;
  std::size_t pos = 0;
  for (;;) {
    if (s[pos] != 'x') fail(ErrorKind::invalid_input, "malformed term `" + s + "`");
    ++pos;
    const std::size_t index = parse_index(s, pos);
    if (index < 1 || index > kMaxVars) fail(ErrorKind::invalid_input, "variable index out of range in `" + s + "`");
    unsigned power = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      power = static_cast<unsigned>(parse_index(s, pos));
    }
    m = m * ExtMonomial::variable(index - 1, power);
    if (pos == s.size()) return m;
    if (s[pos] != '*') fail(ErrorKind::invalid_input, "malformed term `" + s + "`");
    ++pos;
    if (pos == s.size()) fail(ErrorKind::invalid_input, "dangling `*` in `" + s + "`");
  }
}

Binomial parse_binomial(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos || text.find('-', dash + 1) != std::string_view::npos) {
    fail(ErrorKind::invalid_input, "binomial must read `term - term`: " + std::string(text));
  }
  auto b = Binomial::make(parse_term(text.substr(0, dash)), parse_term(text.substr(dash + 1)));
  if (!b) fail(ErrorKind::invalid_input, "binomial with equal terms: " + std::string(text));
  return *b;
}

void write_basis(std::ostream& out, const ReducedGroebnerBasis& gb) {
  out << "# n=" << gb.variables() << " order=" << ReducedGroebnerBasis::order_id() << " field=GF(2)\n";
  for (const auto& b : gb.elements()) out << b.to_string() << '\n';
}

BinomialListing read_binomials(std::istream& in) {
  BinomialListing listing;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    const std::string compact = strip(line);
    if (compact.empty()) continue;
    if (compact[0] == '#') {
      if (header) continue;
      std::istringstream fields(line.substr(line.find('#') + 1));
      std::string field;
      while (fields >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) fail(ErrorKind::invalid_input, "malformed basis header field `" + field + "`");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "n") {
          std::size_t pos = 0;
          listing.variables = parse_index(value, pos);
          if (pos != value.size()) fail(ErrorKind::invalid_input, "malformed n in basis header");
        } else if (key == "order" && value != "degrevlex") {
          fail(ErrorKind::invalid_input, "unsupported monomial order `" + value + "`; only degrevlex is implemented");
        } else if (key == "field" && value != "GF(2)") {
          fail(ErrorKind::invalid_input, "unsupported coefficient field `" + value + "`");
        }
      }
      header = true;
      continue;
    }
    if (!header) fail(ErrorKind::invalid_input, "basis file must start with a `# n=...` header");
    listing.elements.push_back(parse_binomial(line));
  }
  if (!header || listing.variables == 0) fail(ErrorKind::invalid_input, "basis header missing n");
  return listing;
}

BinomialListing load_binomials(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::missing_file, "cannot open basis file " + path);
  return read_binomials(in);
}

}  // namespace sgb
