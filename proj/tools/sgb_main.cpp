// sgb: Schubert code construction, binomial Groebner bases and decoding.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sgb/decoder.hpp"
#include "sgb/error.hpp"
#include "sgb/fixture_suite.hpp"
#include "sgb/fp_matrix.hpp"
#include "sgb/groebner.hpp"
#include "sgb/linear_code.hpp"
#include "sgb/schubert.hpp"

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kGuard = 3, kMissing = 4 };

int exit_code(sgb::ErrorKind kind) {
  switch (kind) {
    case sgb::ErrorKind::invalid_input:
      return kUsage;
    case sgb::ErrorKind::bound_exceeded:
      return kGuard;
    case sgb::ErrorKind::missing_file:
      return kMissing;
    case sgb::ErrorKind::invariant:
      return kMismatch;
  }
  return kMismatch;
}

sgb::Limits limits_from_env() {
  sgb::Limits limits;
  if (const char* raw = std::getenv("SGB_MAX_N")) {
    const std::string text(raw);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || v == 0 || v > 63) {
      sgb::fail(sgb::ErrorKind::invalid_input, "SGB_MAX_N must be an integer in [1, 63], got `" + text + "`");
    }
    limits.max_word_bits = static_cast<unsigned>(v);
    limits.max_enum_log2 = static_cast<unsigned>(v);
  }
  return limits;
}

std::vector<int> parse_alpha(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) sgb::fail(sgb::ErrorKind::invalid_input, "bad --alpha `" + text + "`");
    out.push_back(v);
  }
  if (out.empty()) sgb::fail(sgb::ErrorKind::invalid_input, "empty --alpha");
  return out;
}

struct SpecFlags {
  int l = 2;
  int m = 5;
  std::uint32_t q = 2;
  std::string alpha;

  void attach(CLI::App* cmd) {
    cmd->add_option("--l", l, "subspace dimension")->capture_default_str();
    cmd->add_option("--m", m, "ambient dimension")->capture_default_str();
    cmd->add_option("--q", q, "field size (prime)")->capture_default_str();
    cmd->add_option("--alpha", alpha, "index tuple, e.g. 1,4")->required();
  }
  [[nodiscard]] sgb::SchubertSpec spec() const { return sgb::SchubertSpec::make(l, m, q, parse_alpha(alpha)); }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) sgb::fail(sgb::ErrorKind::invalid_input, "cannot write " + path);
  out << text;
}

sgb::BinaryWord parse_word(const std::string& text, std::size_t n) {
  const bool monomial = text == "1" || text.find('x') != std::string::npos;
  if (monomial) {
    const sgb::ExtMonomial m = sgb::parse_term(text);
    if (!m.is_squarefree()) sgb::fail(sgb::ErrorKind::invalid_input, "word monomial must be squarefree: " + text);
    if (m.span() > n) sgb::fail(sgb::ErrorKind::invalid_input, "word monomial uses variables beyond n=" + std::to_string(n));
    return sgb::BinaryWord(n, m.support());
  }
  const sgb::BinaryWord w = sgb::BinaryWord::from_string(text);
  if (w.size() != n) {
    sgb::fail(sgb::ErrorKind::invalid_input,
              "word length " + std::to_string(w.size()) + " does not match basis n=" + std::to_string(n));
  }
  return w;
}

int cmd_params(const SpecFlags& flags) {
  const auto p = sgb::schubert_params(flags.spec(), limits_from_env());
  std::cout << "n=" << p.n_alpha << " k=" << p.k_alpha << " d=" << p.d << " t=" << p.capability()
            << " mds=" << (p.is_mds() ? "yes" : "no") << " delta=" << p.delta_alpha << "\n";
  return kOk;
}

int cmd_build(const SpecFlags& flags, const std::string& out, const std::string& points_out) {
  const auto limits = limits_from_env();
  const auto spec = flags.spec();
  const auto g = sgb::generator_matrix(spec, limits);
  std::ostringstream text;
  sgb::write_matrix(text, g);
  write_output(out, text.str());
  if (!points_out.empty()) {
    std::ostringstream pts;
    pts << "# points of alpha=" << spec.alpha.to_string() << " q=" << spec.q << "; coordinates indexed by";
    for (const auto& t : sgb::index_tuples(spec.l, spec.m)) pts << ' ' << t.to_string();
    pts << '\n';
    for (const auto& p : sgb::enumerate_schubert_points(spec, limits)) {
      for (std::size_t i = 0; i < p.coords.size(); ++i) pts << (i ? "," : "") << p.coords[i];
      pts << '\n';
    }
    write_output(points_out, pts.str());
  }
  if (!out.empty() && out != "-") std::cout << "wrote " << g.rows() << "x" << g.cols() << " matrix to " << out << "\n";
  return kOk;
}

int cmd_gb(const std::string& matrix, const std::string& engine, const std::string& out, unsigned max_vars) {
  auto limits = limits_from_env();
  limits.max_buchberger_vars = max_vars;
  const sgb::LinearCode code(sgb::load_matrix(matrix));
  const sgb::ReducedGroebnerBasis gb = [&] {
    if (engine == "buchberger") {
      const auto gens = sgb::ideal_generators(code);
      return sgb::buchberger(code.length(), gens, limits);
    }
    return sgb::coset_engine(code, limits);
  }();
  std::ostringstream text;
  sgb::write_basis(text, gb);
  write_output(out, text.str());
  std::cout << "elements=" << gb.size() << " t=" << sgb::capability(gb) << "\n";
  return kOk;
}

int cmd_decode(const std::string& basis_path, const std::string& word, const std::string& mode) {
  const auto listing = sgb::load_binomials(basis_path);
  const sgb::ReducedGroebnerBasis gb(listing.variables, listing.elements);
  const sgb::BinaryWord w = parse_word(word, gb.variables());
  const auto out = sgb::gb_decode(w, gb, mode == "complete" ? sgb::DecodeMode::complete : sgb::DecodeMode::bounded);
  std::cout << "status=" << (out.status == sgb::DecodeStatus::decoded ? "decoded" : "too_many_errors")
            << " canonical=" << out.canonical.to_string() << " weight=" << out.nf_weight;
  if (out.status == sgb::DecodeStatus::decoded) {
    std::cout << " error=" << out.error.to_string() << " codeword=" << out.codeword.to_string()
              << " codeword_monomial=" << sgb::support_to_string(out.codeword.bits());
  }
  std::cout << "\n";
  return kOk;
}

int cmd_simulate(const std::string& matrix, const std::string& model, std::uint64_t trials, std::uint64_t seed) {
  const auto limits = limits_from_env();
  const auto channel = sgb::ChannelModel::parse(model);
  const sgb::LinearCode code(sgb::load_matrix(matrix));
  const auto gb = sgb::coset_engine(code, limits);
  std::cout << sgb::simulate(code, gb, channel, trials, seed).to_string() << "\n";
  return kOk;
}

int cmd_verify(const std::string& fixtures, const std::string& only) {
  sgb::SuiteOptions options;
  options.fixture_dir = fixtures;
  if (!only.empty()) options.only = only;
  const auto report = sgb::run_fixture_suite(options);
  for (const auto& c : report.checks) {
    const char* status = c.passed ? "PASS" : (c.informational ? "NOTE" : "FAIL");
    std::cout << status << " [" << c.group << "] " << c.name << ": " << c.detail << "\n";
  }
  const bool ok = report.all_passed();
  std::cout << (ok ? "all checks passed" : "verification FAILED") << " (" << report.checks.size() << " checks)\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert codes, binomial Groebner bases and GB decoding over GF(2)"};
  app.require_subcommand(1);

  SpecFlags params_flags;
  auto* params = app.add_subcommand("params", "print [n,k,d], capability and MDS flag of a Schubert code");
  params_flags.attach(params);

  SpecFlags build_flags;
  std::string build_out;
  std::string build_points;
  auto* build = app.add_subcommand("build", "write the generator matrix of a Schubert code");
  build_flags.attach(build);
  build->add_option("-o,--output", build_out, "matrix file (stdout when omitted)");
  build->add_option("--emit-points", build_points, "also write the Plucker coordinates of every point");

  std::string gb_matrix;
  std::string gb_engine = "coset";
  std::string gb_out;
  unsigned gb_max_vars = sgb::Limits{}.max_buchberger_vars;
  auto* gb = app.add_subcommand("gb", "reduced degrevlex Groebner basis of a binary code ideal");
  gb->add_option("--matrix", gb_matrix, "generator matrix file")->required();
  gb->add_option("--engine", gb_engine, "coset or buchberger")
      ->check(CLI::IsMember({"coset", "buchberger"}))
      ->capture_default_str();
  gb->add_option("-o,--output", gb_out, "basis file (stdout when omitted)");
  gb->add_option("--max-vars", gb_max_vars, "variable guard for the buchberger engine")->capture_default_str();

  std::string dec_basis;
  std::string dec_word;
  std::string dec_mode = "bounded";
  auto* decode = app.add_subcommand("decode", "decode one received word through its canonical form");
  decode->add_option("--basis", dec_basis, "basis file written by `gb`")->required();
  decode->add_option("--word", dec_word, "binary string or squarefree monomial like x1*x4")->required();
  decode->add_option("--mode", dec_mode, "bounded or complete")
      ->check(CLI::IsMember({"bounded", "complete"}))
      ->capture_default_str();

  std::string sim_matrix;
  std::string sim_model;
  std::uint64_t sim_trials = 1000;
  std::uint64_t sim_seed = 1;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo decoding over a channel model");
  sim->add_option("--matrix", sim_matrix, "generator matrix file")->required();
  sim->add_option("--model", sim_model, "fixed_weight(w) or bsc(p)")->required();
  sim->add_option("--trials", sim_trials)->capture_default_str();
  sim->add_option("--seed", sim_seed)->capture_default_str();

  std::string ver_fixtures = SGB_DEFAULT_FIXTURE_DIR;
  std::string ver_only;
  auto* verify = app.add_subcommand("verify-paper", "run the fixture verification suite");
  verify->add_option("--fixtures", ver_fixtures, "fixture directory")->capture_default_str();
  verify->add_option("--only", ver_only, "run a single check group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(params_flags);
    if (*build) return cmd_build(build_flags, build_out, build_points);
    if (*gb) return cmd_gb(gb_matrix, gb_engine, gb_out, gb_max_vars);
    if (*decode) return cmd_decode(dec_basis, dec_word, dec_mode);
    if (*sim) return cmd_simulate(sim_matrix, sim_model, sim_trials, sim_seed);
    if (*verify) return cmd_verify(ver_fixtures, ver_only);
  } catch (const sgb::Error& e) {
    std::cerr << "sgb: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}
