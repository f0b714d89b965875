#include "sgb/fixture_suite.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "sgb/decoder.hpp"
#include "sgb/groebner.hpp"
#include "sgb/oracles.hpp"
#include "sgb/schubert.hpp"

namespace sgb {

namespace {

struct ReferenceCode {
  std::string tag;
  std::vector<int> alpha;
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t d;
  int t;
  std::vector<std::string> spot_elements;
};

const std::vector<ReferenceCode>& reference_codes() {
  static const std::vector<ReferenceCode> codes = {
      {"1_4", {1, 4}, 7, 3, 4, 1, {"x1*x2 - x4*x7", "x5*x6 - x1*x7"}},
      {"1_5",
       {1, 5},
       15,
       4,
       8,
       3,
       {"x1*x2*x3*x4 - x8*x9*x11*x13", "x1*x9*x10*x11 - x12*x13*x14*x15", "x11*x12*x13*x14 - x1*x9*x10*x15"}},
      {"2_3", {2, 3}, 7, 3, 4, 1, {"x1*x4 - x2*x6", "x5*x6 - x1*x7"}},
      {"2_4",
       {2, 4},
       19,
       5,
       8,
       3,
       {"x2*x3*x6*x10*x12*x14 - x4*x7*x15*x16*x18*x19", "x2*x3*x4*x18 - x5*x14*x17*x19",
        "x5*x14*x17*x18 - x2*x3*x4*x19"}},
  };
  return codes;
}

struct DecodeRow {
  std::string received;
  std::string canonical;
  std::string decoded;
};

struct LoadedCode {
  const ReferenceCode* info;
  FpMatrix matrix;
  BinomialListing listing;
  std::vector<DecodeRow> table;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<DecodeRow> load_decode_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::missing_file, "missing fixture " + path);
  std::vector<DecodeRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto a = line.find('|');
    const auto b = line.find('|', a + 1);
    if (a == std::string::npos || b == std::string::npos) fail(ErrorKind::invalid_input, "bad decode row: " + line);
    rows.push_back({trim(line.substr(0, a)), trim(line.substr(a + 1, b - a - 1)), trim(line.substr(b + 1))});
  }
  return rows;
}

std::string fixture_path(const SuiteOptions& o, const std::string& name) {
  const std::string path = (std::filesystem::path(o.fixture_dir) / name).string();
  if (!std::filesystem::exists(path)) fail(ErrorKind::missing_file, "missing fixture " + path);
  return path;
}

std::uint64_t support_of(const std::string& term) {
  const ExtMonomial m = parse_term(term);
  if (!m.is_squarefree()) fail(ErrorKind::invalid_input, "expected a squarefree monomial: " + term);
  return m.support();
}

std::multiset<std::vector<std::uint32_t>> column_multiset(const FpMatrix& m) {
  std::multiset<std::vector<std::uint32_t>> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.insert(m.column(c));
  return out;
}

bool has_zero_column(const FpMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto col = m.column(c);
    if (std::all_of(col.begin(), col.end(), [](std::uint32_t v) { return v == 0; })) return true;
  }
  return false;
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void check(const std::string& group, const std::string& name, bool passed, std::string detail = {},
             bool informational = false) {
    report_.checks.push_back({group, name, passed, std::move(detail), informational});
  }

  // Runs a check body, converting library errors into failures.
  void run(const std::string& group, const std::string& name, const std::function<std::string(bool&)>& body) {
    bool passed = true;
    std::string detail;
    try {
      detail = body(passed);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::missing_file) throw;
      passed = false;
      detail = std::string("error: ") + e.what();
    }
    check(group, name, passed, detail);
  }

 private:
  SuiteReport& report_;
};


}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.informational; });
}

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups = {"fixtures",    "params",       "construction", "gb",
                                                  "engines",     "capability",   "decode",       "completeness",
                                                  "normal-form", "counting",     "simulate"};
  return groups;
}

std::uint64_t file_checksum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::missing_file, "missing fixture " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c = 0;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<LinearCode> random_test_codes(std::uint64_t seed, unsigned count) {
  std::vector<LinearCode> codes;
  for (std::uint64_t attempt = 0; codes.size() < count; ++attempt) {
    if (attempt > 100000) fail(ErrorKind::invariant, "random code generator failed to find enough codes");
    TrialRng rng(seed, attempt);
    const std::size_t k = 3 + rng.below(3);  // 3..5
    const std::size_t max_n = std::min<std::size_t>(10, (std::size_t{1} << k) - 1);
    if (max_n < k + 2) continue;
    const std::size_t n = k + 2 + rng.below(max_n - (k + 2) + 1);
    // distinct nonzero columns drawn without replacement
    std::vector<std::uint32_t> pool;
    for (std::uint32_t v = 1; v < (1U << k); ++v) pool.push_back(v);
    FpMatrix g(k, n, 2);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t pick = c + rng.below(pool.size() - c);
      std::swap(pool[c], pool[pick]);
      for (std::size_t r = 0; r < k; ++r) g.set(r, c, (pool[c] >> r) & 1U);
    }
    if (rref(g).rank != k) continue;
    LinearCode code(g);
    if (min_distance_bruteforce(code) < 3) continue;
    codes.push_back(std::move(code));
  }
  return codes;
}

SuiteReport run_fixture_suite(const SuiteOptions& options) {
  if (options.only) {
    const auto& groups = suite_groups();
    if (std::find(groups.begin(), groups.end(), *options.only) == groups.end()) {
      fail(ErrorKind::invalid_input, "unknown check group `" + *options.only + "`");
    }
  }
  const auto wanted = [&](const std::string& group) { return !options.only || *options.only == group; };

  // Load every fixture up front so a missing file is reported before any check runs.
  std::vector<LoadedCode> fixtures;
  for (const auto& info : reference_codes()) {
    fixtures.push_back({&info, load_matrix(fixture_path(options, "a_" + info.tag + ".txt")),
                        load_binomials(fixture_path(options, "listing_" + info.tag + ".txt")),
                        load_decode_table(fixture_path(options, "decode_" + info.tag + ".txt"))});
  }
  const std::string manifest_path = fixture_path(options, "MANIFEST");

  SuiteReport report;
  Recorder rec(report);

  // Built lazily; several groups share them.
  std::map<std::string, LinearCode> codes;
  std::map<std::string, ReducedGroebnerBasis> bases;
  const auto code_of = [&](const LoadedCode& f) -> const LinearCode& {
    auto it = codes.find(f.info->tag);
    if (it == codes.end()) it = codes.emplace(f.info->tag, LinearCode(f.matrix)).first;
    return it->second;
  };
  const auto basis_of = [&](const LoadedCode& f) -> const ReducedGroebnerBasis& {
    auto it = bases.find(f.info->tag);
    if (it == bases.end()) it = bases.emplace(f.info->tag, coset_engine(code_of(f))).first;
    return it->second;
  };
  std::optional<std::vector<LinearCode>> random_codes;
  const auto randoms = [&]() -> const std::vector<LinearCode>& {
    if (!random_codes) random_codes = random_test_codes(options.seed, options.random_codes);
    return *random_codes;
  };
  std::map<const LinearCode*, std::optional<ReducedGroebnerBasis>> random_bases;
  const auto random_basis = [&](const LinearCode& c) -> const ReducedGroebnerBasis& {
    auto& slot = random_bases[&c];
    if (!slot) slot = coset_engine(c);
    return *slot;
  };

  if (wanted("fixtures")) {
    rec.run("fixtures", "checksums match MANIFEST", [&](bool& ok) {
      std::ifstream in(manifest_path);
      std::string line;
      std::string detail;
      std::size_t checked = 0;
      while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string sum;
        std::string name;
        if (!(fields >> sum >> name) || sum[0] == '#') continue;
        std::ostringstream actual;
        actual << std::hex << std::setw(16) << std::setfill('0') << file_checksum(fixture_path(options, name));
        ++checked;
        if (actual.str() != sum) {
          ok = false;
          detail += name + " ";
        }
      }
      if (checked == 0) ok = false;
      return ok ? std::to_string(checked) + " files" : "changed: " + detail;
    });
  }

  if (wanted("params")) {
    for (const auto& f : fixtures) {
      const auto& info = *f.info;
      rec.run("params", "AC1 parameters of alpha=" + info.tag, [&](bool& ok) {
        const auto spec = SchubertSpec::make(2, 5, 2, info.alpha);
        const auto p = schubert_params(spec);
        const int built_d = min_distance_bruteforce(LinearCode(generator_matrix(spec)));
        const int fixture_d = min_distance_bruteforce(code_of(f));
        ok = p.n_alpha == info.n && p.k_alpha == info.k && p.d == info.d &&
             static_cast<std::uint64_t>(built_d) == p.d && static_cast<std::uint64_t>(fixture_d) == p.d;
        std::ostringstream s;
        s << "[" << p.n_alpha << "," << p.k_alpha << "," << p.d << "] bruteforce d=" << built_d
          << " (fixture " << fixture_d << ")";
        return s.str();
      });
    }
  }

  if (wanted("construction")) {
    for (const auto& f : fixtures) {
      rec.run("construction", "AC2 column multiset of alpha=" + f.info->tag, [&](bool& ok) {
        const auto spec = SchubertSpec::make(2, 5, 2, f.info->alpha);
        const FpMatrix g = generator_matrix(spec);
        const bool same = column_multiset(g) == column_multiset(f.matrix);
        const bool rank_ok = rref(g).rank == f.info->k;
        const bool nonzero = !has_zero_column(g);
        ok = same && rank_ok && nonzero;
        return std::string(same ? "multiset equal" : "multiset differs") + (rank_ok ? ", rank ok" : ", rank wrong") +
               (nonzero ? ", no zero column" : ", zero column");
      });
    }
  }

  if (wanted("gb")) {
    for (const auto& f : fixtures) {
      const auto& info = *f.info;
      const bool full_listing = info.tag == "1_4" || info.tag == "2_3";
      rec.run("gb", "AC3 reduced basis of alpha=" + info.tag, [&](bool& ok) {
        const auto& gb = basis_of(f);
        const std::set<std::string> ours = [&] {
          std::set<std::string> s;
          for (const auto& b : gb.elements()) s.insert(b.to_string());
          return s;
        }();
        std::set<std::string> listed;
        for (const auto& b : f.listing.elements) listed.insert(b.to_string());
        std::string detail = std::to_string(gb.size()) + " elements";
        if (full_listing) {
          ok = ours == listed && gb.size() == 21;
          detail += ours == listed ? ", equals listing" : ", differs from listing";
          return detail;
        }
        std::size_t spots = 0;
        for (const auto& spot : info.spot_elements) spots += ours.count(parse_binomial(spot).to_string());
        const std::size_t oracle = oracle::count_minimal_nonstandard(code_of(f));
        ok = spots == info.spot_elements.size() && gb.field_relation_count() == info.n &&
             gb.code_leads().size() == oracle;
        detail += ", spot " + std::to_string(spots) + "/" + std::to_string(info.spot_elements.size()) +
                  ", field relations " + std::to_string(gb.field_relation_count()) + ", oracle count " +
                  std::to_string(oracle) + " vs " + std::to_string(gb.code_leads().size());
        return detail;
      });
      if (!full_listing) {
        // Transcription cross-check of the long listings; informational only.
        try {
          const auto& gb = basis_of(f);
          std::set<std::string> ours;
          for (const auto& b : gb.elements()) ours.insert(b.to_string());
          std::size_t missing = 0;
          for (const auto& b : f.listing.elements) missing += ours.count(b.to_string()) == 0 ? 1 : 0;
          const bool equal = missing == 0 && f.listing.elements.size() == ours.size();
          rec.check("gb", "full transcribed listing of alpha=" + info.tag, equal,
                    std::to_string(f.listing.elements.size()) + " transcribed, " + std::to_string(missing) +
                        " not in computed basis",
                    true);
        } catch (const Error& e) {
          rec.check("gb", "full transcribed listing of alpha=" + info.tag, false, e.what(), true);
        }
      }
    }
  }

  if (wanted("engines")) {
    for (const auto& f : fixtures) {
      if (f.info->n > 12) continue;
      rec.run("engines", "AC4 buchberger == coset engine on alpha=" + f.info->tag, [&](bool& ok) {
        const auto& code = code_of(f);
        const auto gens = ideal_generators(code);
        const auto ref = buchberger(code.length(), gens);
        ok = ref == basis_of(f) && is_groebner(ref.elements());
        return std::to_string(ref.size()) + " elements";
      });
    }
    rec.run("engines", "AC4 buchberger == coset engine on random codes", [&](bool& ok) {
      std::size_t agree = 0;
      for (const auto& code : randoms()) {
        const auto ref = buchberger(code.length(), ideal_generators(code));
        if (ref == random_basis(code) && is_groebner(ref.elements())) ++agree;
      }
      ok = agree == randoms().size() && randoms().size() == options.random_codes;
      return std::to_string(agree) + "/" + std::to_string(randoms().size()) + " codes agree";
    });
  }

  if (wanted("capability")) {
    for (const auto& f : fixtures) {
      rec.run("capability", "AC5 capability of alpha=" + f.info->tag, [&](bool& ok) {
        const int t = capability(basis_of(f));
        ok = t == f.info->t;
        return "t=" + std::to_string(t) + " (expected " + std::to_string(f.info->t) + ")";
      });
    }
    rec.run("capability", "AC5 capability == floor((d-1)/2) on random codes", [&](bool& ok) {
      std::size_t agree = 0;
      for (const auto& code : randoms()) {
        const int d = min_distance_bruteforce(code);
        if (capability(random_basis(code)) == (d - 1) / 2) ++agree;
      }
      ok = agree == randoms().size();
      return std::to_string(agree) + "/" + std::to_string(randoms().size());
    });
  }

  if (wanted("decode")) {
    for (const auto& f : fixtures) {
      rec.run("decode", "AC6 decoding table of alpha=" + f.info->tag, [&](bool& ok) {
        const auto& gb = basis_of(f);
        const std::size_t n = f.matrix.cols();
        std::size_t good = 0;
        std::string bad;
        for (const auto& row : f.table) {
          const BinaryWord received(n, support_of(row.received));
          const auto out = gb_decode(received, gb);
          const bool match = out.status == DecodeStatus::decoded && out.canonical.support() == support_of(row.canonical) &&
                             out.codeword.bits() == support_of(row.decoded) && code_of(f).contains(out.codeword);
          if (match) {
            ++good;
          } else {
            bad += " [" + row.received + " -> " + out.canonical.to_string() + "]";
          }
        }
        ok = good == f.table.size() && !f.table.empty();
        return std::to_string(good) + "/" + std::to_string(f.table.size()) + " rows" + bad;
      });
    }
  }

  if (wanted("completeness")) {
    for (const auto& f : fixtures) {
      rec.run("completeness", "AC7 radius-t completeness of alpha=" + f.info->tag, [&](bool& ok) {
        const auto& code = code_of(f);
        const auto& gb = basis_of(f);
        const auto table = build_coset_leader_table(code);
        const int t = capability(gb);
        const std::size_t n = code.length();
        std::vector<std::uint64_t> errors{0};
        for (int w = 1; w <= t; ++w) {
          std::vector<std::uint64_t> next;
          for (std::uint64_t e : errors) {
            // extend by a position above the current highest to enumerate each set once
            const int from = e == 0 ? 0 : 64 - std::countl_zero(e);
            for (std::size_t j = static_cast<std::size_t>(from); j < n; ++j) next.push_back(e | (std::uint64_t{1} << j));
          }
          errors.insert(errors.end(), next.begin(), next.end());
          std::sort(errors.begin(), errors.end());
          errors.erase(std::unique(errors.begin(), errors.end()), errors.end());
        }
        std::uint64_t trials = 0;
        std::uint64_t failures = 0;
        for (std::uint64_t c : oracle::codewords(code)) {
          for (std::uint64_t e : errors) {
            ++trials;
            const auto cc = cross_check(BinaryWord(n, c ^ e), code, gb, table);
            const bool good = cc.gb.status == DecodeStatus::decoded && cc.gb.error.bits() == e &&
                              cc.gb.codeword.bits() == c && cc.consistent() && cc.syndrome_matches_nearest;
            if (!good) ++failures;
          }
        }
        ok = failures == 0;
        return std::to_string(trials) + " trials, " + std::to_string(failures) + " failures";
      });
    }
  }

  if (wanted("normal-form")) {
    const auto exhaustive = [](const LinearCode& code, const ReducedGroebnerBasis& gb) {
      const auto words = oracle::codewords(code);
      const std::size_t n = code.length();
      std::size_t bad = 0;
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        if (normal_form(SquarefreeMonomial(n, u), gb).support() != oracle::coset_minimum(u, words)) ++bad;
      }
      return bad;
    };
    for (const auto& f : fixtures) {
      if (f.info->n > 12) continue;
      rec.run("normal-form", "AC8 normal form == coset minimum on alpha=" + f.info->tag, [&](bool& ok) {
        const std::size_t bad = exhaustive(code_of(f), basis_of(f));
        ok = bad == 0;
        return std::to_string(std::uint64_t{1} << f.info->n) + " monomials, " + std::to_string(bad) + " mismatches";
      });
    }
    rec.run("normal-form", "AC8 normal form == coset minimum on random codes", [&](bool& ok) {
      std::size_t bad = 0;
      for (const auto& code : randoms()) bad += exhaustive(code, random_basis(code));
      ok = bad == 0;
      return std::to_string(randoms().size()) + " codes, " + std::to_string(bad) + " mismatches";
    });
    rec.run("normal-form", "AC8 randomized divisor order reaches the same normal form", [&](bool& ok) {
      std::mt19937_64 rng(options.seed);
      std::size_t bad = 0;
      std::size_t tried = 0;
      for (const auto& f : fixtures) {
        const auto& gb = basis_of(f);
        const std::size_t n = f.info->n;
        for (int i = 0; i < 2000; ++i) {
          const std::uint64_t u = rng() & ((std::uint64_t{1} << n) - 1);
          const SquarefreeMonomial m(n, u);
          ++tried;
          if (normal_form(m, gb, rng).support() != normal_form(m, gb).support()) ++bad;
        }
      }
      ok = bad == 0;
      return std::to_string(tried) + " monomials, " + std::to_string(bad) + " disagreements";
    });
  }

  if (wanted("counting")) {
    rec.run("counting", "AC9 gaussian_binomial(5,2,2) == enumerated subspaces", [&](bool& ok) {
      const std::uint64_t formula = gaussian_binomial(5, 2, 2);
      const std::size_t brute = oracle::subspaces(2, 5, 2).size();
      const std::size_t echelon = enumerate_schubert_points(SchubertSpec::grassmannian(2, 5, 2)).size();
      ok = formula == 155 && brute == 155 && echelon == 155;
      return "formula " + std::to_string(formula) + ", spans " + std::to_string(brute) + ", echelon " +
             std::to_string(echelon);
    });
    for (std::uint32_t q : {2U, 3U}) {
      rec.run("counting", "AC9 Schubert point counts for all alpha in I(2,5), q=" + std::to_string(q), [&](bool& ok) {
        const auto spaces = oracle::subspaces(2, 5, q);
        std::string detail;
        for (const auto& alpha : index_tuples(2, 5)) {
          const auto spec = SchubertSpec::make(2, 5, q, alpha.entries());
          auto pivot = enumerate_schubert_points(spec);
          auto vanish = schubert_points_by_plucker(spec);
          const auto params = schubert_params(spec);
          const auto by_definition = static_cast<std::size_t>(std::count_if(
              spaces.begin(), spaces.end(),
              [&](const auto& s) { return oracle::meets_schubert_conditions(s, spec.alpha, q); }));
          std::sort(pivot.begin(), pivot.end());
          std::sort(vanish.begin(), vanish.end());
          const bool same = pivot == vanish && pivot.size() == params.n_alpha && by_definition == params.n_alpha;
          ok = ok && same;
          detail += alpha.to_string() + ":" + std::to_string(params.n_alpha) + (same ? "" : "!") + " ";
        }
        return detail;
      });
    }
  }

  if (wanted("simulate")) {
    rec.run("simulate", "AC10 simulator determinism", [&](bool& ok) {
      const auto& f = fixtures.front();
      const auto a = simulate(code_of(f), basis_of(f), ChannelModel::binary_symmetric(0.1), 1000, options.seed);
      const auto b = simulate(code_of(f), basis_of(f), ChannelModel::binary_symmetric(0.1), 1000, options.seed);
      ok = a.to_string() == b.to_string();
      return a.to_string();
    });
    for (const auto& f : fixtures) {
      rec.run("simulate", "AC10 fixed_weight(w<=t) soundness on alpha=" + f.info->tag, [&](bool& ok) {
        std::string detail;
        for (int w = 0; w <= f.info->t; ++w) {
          const auto r = simulate(code_of(f), basis_of(f), ChannelModel::fixed(w), 1000, options.seed);
          ok = ok && r.successes == 1000 && r.miscorrections == 0;
          detail += "w=" + std::to_string(w) + ":" + std::to_string(r.successes) + " ";
        }
        return detail;
      });
    }
  }
  return report;
}

}  // namespace sgb
