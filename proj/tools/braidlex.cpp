// braidlex: command-line front end for the max-lex automaton library.

#include <braidlex/appendix.hpp>
#include <braidlex/automaton.hpp>
#include <braidlex/diagram.hpp>
#include <braidlex/errors.hpp>
#include <braidlex/export.hpp>
#include <braidlex/spectral.hpp>
#include <braidlex/state_counts.hpp>
#include <braidlex/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <optional>
#include <sstream>
#include <string>

using namespace braidlex;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kCountMismatch = 2,
  kMatrixMismatch = 3,
  kNonConvergence = 4,
  kVerifyFailure = 5,
  kBadInput = 6,
};

int build_limit(std::optional<int> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BRAIDLEX_MAX_N")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("BRAIDLEX_MAX_N is not a positive integer: ") + env);
  }
  return kDefaultBuildLimit;
}

std::string format_real(double x, int digits) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(digits) << x;
  return out.str();
}

std::string format_words(const std::set<Word>& words) {
  std::string out = "{";
  for (const auto& w : words) {
    if (out.size() > 1) out += ", ";
    out += w.to_string();
  }
  return out + "}";
}

// Output target: a file when --output is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot open " + path + " for writing");
      file_.imbue(std::locale::classic());
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Options {
  std::optional<int> max_n;
  int n = 1;
  int k = 0;
  double tol = 1e-13;
  std::string which = "R";
  std::string format;
  std::string order = "canonical";
  std::string output;
  std::string config;
  std::string dir = "docs";
  bool check = false;
  bool by_letter = false;
  bool per_state = false;
  int from = 2;
  int to = 9;
  std::vector<int> digits{18, 18, 10};
  int max_len = 6;
};

int cmd_states(const Options& o) {
  const BigInt formula = state_count_formula(o.n);
  const BigInt recurrence = state_count_recurrence(o.n);
  std::cout << formula << ' ' << recurrence;
  bool agree = formula == recurrence;
  if (o.n <= build_limit(o.max_n)) {
    const auto size = Automaton::build(o.n, build_limit(o.max_n)).size();
    std::cout << ' ' << size;
    agree = agree && BigInt(size) == formula;
  }
  std::cout << '\n';
  if (!agree) {
    std::cerr << "state counts disagree\n";
    return kCountMismatch;
  }
  return kOk;
}

int cmd_matrix(const Options& o) {
  const auto a = Automaton::build(o.n, build_limit(o.max_n));
  const bool canonical = o.order == "canonical";
  SparseBooleanMatrix m;
  if (o.which == "M") {
    m = canonical ? appendix::canonical_incidence_matrix(a) : incidence_matrix(a);
  } else if (o.which == "R") {
    m = canonical ? appendix::canonical_recurrent_matrix(a) : recurrent_matrix(a);
  } else {
    m = appendix::build_R_direct(o.n);
  }

  Sink sink(o.output);
  if (o.format == "csv") {
    write_csv(sink.stream(), m);
  } else {
    write_matrix_market(sink.stream(), m);
  }

  if (o.check) {
    const auto direct = o.which == "R-appendix" ? m : appendix::build_R_direct(o.n);
    const auto bfs = appendix::canonical_recurrent_matrix(a);
    if (const auto diff = first_mismatch(bfs, direct)) {
      std::cerr << "R and R-appendix differ at (" << diff->row + 1 << "," << diff->col + 1
                << "): present only in " << (diff->only_in_left ? "R" : "R-appendix") << '\n';
      return kMatrixMismatch;
    }
    std::cerr << "R and R-appendix agree (" << bfs.dim() << "x" << bfs.dim() << ", "
              << bfs.nnz() << " nonzeros)\n";
  }
  return kOk;
}

int cmd_count(const Options& o) {
  const auto a = Automaton::build(o.n, build_limit(o.max_n));
  const auto counts = count_words(a, o.k);
  std::cout << counts.total << '\n';
  if (o.by_letter) {
    for (int r = 1; r <= o.n; ++r) {
      std::cout << 'a' << r << ' ' << counts.per_letter[r - 1] << '\n';
    }
  }
  if (o.per_state) {
    for (StateIndex s : appendix::canonical_state_order(a)) {
      std::cout << to_string(a.state(s)) << ' ' << counts.per_state[s] << '\n';
    }
  }
  return kOk;
}

int cmd_spectrum(const Options& o) {
  const auto row = growth_row(o.n, {o.tol, 100000}, build_limit(o.max_n));
  std::cout << "n=" << row.n << '\n'
            << "lambda=" << format_real(row.lambda, 18) << '\n'
            << "P_n_a1=" << format_real(row.p_a1, 18) << '\n'
            << "P_n_1=" << format_real(row.p_1, 18) << '\n'
            << "residual=" << format_real(row.residual, 3) << '\n'
            << "iterations=" << row.iterations << '\n';
  return kOk;
}

int cmd_table(const Options& o) {
  if (o.digits.size() != 3) throw PreconditionError("--digits takes three values");
  if (o.from < 1 || o.to < o.from) throw PreconditionError("need 1 <= --from <= --to");
  std::vector<GrowthRow> rows;
  std::cout << "n, lambda, P_n_a1, P_n_1\n";
  for (int n = o.from; n <= o.to; ++n) {
    rows.push_back(growth_row(n, {o.tol, 100000}, build_limit(o.max_n)));
    const auto& row = rows.back();
    std::cout << row.n << ", " << format_real(row.lambda, o.digits[0]) << ", "
              << format_real(row.p_a1, o.digits[1]) << ", "
              << format_real(row.p_1, o.digits[2]) << '\n';
  }
  bool all = true;
  for (const auto& check : bound_report(rows)) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.bound << " (n=" << check.n
              << "): " << check.detail << '\n';
    all = all && check.passed;
  }
  return all ? kOk : kVerifyFailure;
}

int cmd_verify(const Options& o) {
  if (o.n > build_limit(o.max_n)) {
    throw LimitExceeded("n=" + std::to_string(o.n) + " exceeds the build limit");
  }
  bool all = true;
  for (const auto& check : verify_against_oracle(o.n, o.max_len)) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.cases
              << " cases)";
    if (!check.passed) std::cout << ": " << check.counterexample;
    std::cout << '\n';
    all = all && check.passed;
  }
  return all ? kOk : kVerifyFailure;
}

int cmd_show_state(const Options& o) {
  const SegmentConfig c = parse_config_spec(o.config);
  require_valid(c, o.n);
  std::cout << to_string(c) << '\n' << render_diagram(to_diagram(c, o.n));
  std::cout << "psi = " << format_words(psi(c, o.n)) << '\n';
  std::cout << "permitted:";
  for (Letter r : permitted_letters(c, o.n)) std::cout << " a" << r;
  std::cout << '\n';
  return kOk;
}

int cmd_export(const Options& o) {
  const auto a = Automaton::build(o.n, build_limit(o.max_n));
  Sink sink(o.output);
  if (o.format == "dot") {
    write_dot(sink.stream(), a);
  } else {
    sink.stream() << to_json(a, 2) << '\n';
  }
  return kOk;
}

int cmd_seed_docs(const Options& o) {
  namespace fs = std::filesystem;
  const fs::path dir(o.dir);
  fs::create_directories(dir);
  const auto a = Automaton::build(2);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out) throw PreconditionError("cannot write " + (dir / name).string());
    out.imbue(std::locale::classic());
    return out;
  };
  {
    auto out = open("M2.csv");
    write_csv(out, appendix::canonical_incidence_matrix(a));
  }
  {
    auto out = open("R2.csv");
    write_csv(out, appendix::canonical_recurrent_matrix(a));
  }
  {
    auto out = open("M2_power50_row.txt");
    const auto counts = count_words(a, 50);
    for (StateIndex s : appendix::canonical_state_order(a)) {
      out << to_string(a.state(s)) << ' ' << counts.per_state[s] << '\n';
    }
  }
  {
    auto out = open("gamma2.dot");
    write_dot(out, a);
  }
  std::cout << "wrote M2.csv, R2.csv, M2_power50_row.txt, gamma2.dot to " << dir.string()
            << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout.imbue(std::locale::classic());
  std::cerr.imbue(std::locale::classic());

  CLI::App app{"Max-lex normal forms of positive braid monoids: automaton, counts, spectra"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-n", o.max_n, "Build limit for the automaton (overrides BRAIDLEX_MAX_N)")
      ->check(CLI::PositiveNumber);

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("n", o.n, "Number of generators")->required()->check(CLI::PositiveNumber);
  };

  auto* states = app.add_subcommand("states", "State counts by formula, recurrence and BFS");
  add_n(states);

  auto* matrix = app.add_subcommand("matrix", "Emit M_n, R_n, or the directly generated R_n");
  add_n(matrix);
  matrix->add_option("--which", o.which, "M, R or R-appendix")
      ->check(CLI::IsMember({"M", "R", "R-appendix"}));
  matrix->add_option("--format", o.format, "mm or csv")->check(CLI::IsMember({"mm", "csv"}));
  matrix->add_option("--order", o.order, "State order for M and R: canonical or bfs")
      ->check(CLI::IsMember({"canonical", "bfs"}));
  matrix->add_option("-o,--output", o.output, "Write to a file instead of stdout");
  matrix->add_flag("--check", o.check, "Compare R with R-appendix; exit 3 on mismatch");

  auto* count = app.add_subcommand("count", "Exact number of max-lex words of length k");
  add_n(count);
  count->add_option("k", o.k, "Word length")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--by-letter", o.by_letter, "Also print counts per final letter");
  count->add_flag("--per-state", o.per_state,
                  "Also print counts per state in canonical order (first row of M_n^k)");

  auto* spectrum = app.add_subcommand("spectrum", "Growth rate and limiting proportions");
  add_n(spectrum);
  spectrum->add_option("--tol", o.tol, "Power iteration tolerance")
      ->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Growth table with bound checks");
  table->add_option("--from", o.from, "First n")->check(CLI::PositiveNumber);
  table->add_option("--to", o.to, "Last n")->check(CLI::PositiveNumber);
  table->add_option("--digits", o.digits, "Significant digits for lambda, P_n_a1, P_n_1")
      ->expected(3)
      ->delimiter(',');
  table->add_option("--tol", o.tol, "Power iteration tolerance")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Cross-check the automaton against brute force");
  add_n(verify);
  verify->add_option("--max-len", o.max_len, "Longest word length checked")
      ->check(CLI::NonNegativeNumber);

  auto* show = app.add_subcommand("show-state", "Render a configuration as a diagram");
  add_n(show);
  show->add_option("config", o.config, "i,j,k,[p1-q1;p2-q2;...]")->required();

  auto* exporter = app.add_subcommand("export", "Export the automaton as JSON or DOT");
  add_n(exporter);
  exporter->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  exporter->add_option("-o,--output", o.output, "Write to a file instead of stdout");

  auto* seed = app.add_subcommand("seed-docs", "Regenerate the n=2 artifacts under docs/");
  seed->add_option("--dir", o.dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*states) return cmd_states(o);
    if (*matrix) return cmd_matrix(o);
    if (*count) return cmd_count(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*table) return cmd_table(o);
    if (*verify) return cmd_verify(o);
    if (*show) return cmd_show_state(o);
    if (*exporter) return cmd_export(o);
    if (*seed) return cmd_seed_docs(o);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const BoundViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
