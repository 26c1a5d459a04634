#include <exckit_cli/cli.hpp>

#include <exckit/admissibility.hpp>
#include <exckit/chern_sums.hpp>
#include <exckit/combinatorics.hpp>
#include <exckit/graded.hpp>
#include <exckit/hilbert.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace exckit::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  int p = 1;
  int codim = -1;  // -1: take the length of --a
  std::string a_text;
  std::string system;  // per-command default applied at dispatch
  int h = -1;          // leading-coeff: -1 selects the plain coefficient
  int bound = 0;
  int rmax = -1;  // -1: per-command default
  std::vector<std::string> filters;
  std::string format = "human";
  std::string out_path;
  std::string suite = "all";
  int kmax = -1;
  int imax = -1;
  int jmax = -1;
};

std::vector<Degree> parse_degrees(const std::string& text) {
  std::vector<Degree> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t first = token.find_first_not_of(" \t");
    const std::size_t last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? std::string{} : token.substr(first, last - first + 1);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("--a: '" + token + "' is not an integer");
    out.push_back(static_cast<Degree>(value));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Degree> checked_degrees(const Options& opt) {
  std::vector<Degree> a = parse_degrees(opt.a_text);
  if (opt.codim >= 0 && opt.codim != static_cast<int>(a.size()))
    throw std::invalid_argument("--codim disagrees with the length of --a");
  return a;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("EXCKIT_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0')
    throw std::invalid_argument("EXCKIT_THREADS must be a nonnegative integer");
  return value;
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output path: " + opt.out_path);
  file << text;
  if (!file.good()) throw std::invalid_argument("failed writing output path: " + opt.out_path);
}

std::string rat_text(const Rat& r) {
  std::string s = to_decimal(r.get_num());
  if (r.get_den() != 1) s += "/" + to_decimal(r.get_den());
  return s;
}

ordered_json rat_json(const Rat& r) {
  return ordered_json{{"num", to_decimal(Int(r.get_num()))}, {"den", to_decimal(Int(r.get_den()))}};
}

ordered_json degrees_json(std::span<const Degree> a) {
  ordered_json arr = ordered_json::array();
  for (Degree v : a) arr.push_back(std::to_string(v));
  return arr;
}

std::string degrees_text(std::span<const Degree> a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

// ---- check ----

int cmd_check(const Options& opt, std::ostream& out) {
  const std::vector<Degree> a = checked_degrees(opt);
  const Geometry g(opt.p + static_cast<int>(a.size()), opt.p, a);
  const std::string system = opt.system.empty() ? "filtration" : opt.system;
  const InequalityReport report =
      system == "filtration" ? check_filtration(g) : check_split(g);

  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = "exckit/1";
    doc["command"] = "check";
    doc["system"] = system;
    doc["p"] = g.p;
    doc["codim"] = g.codim();
    doc["a"] = degrees_json(a);
    ordered_json rows = ordered_json::array();
    for (const auto& rec : report.records)
      rows.push_back(ordered_json{{"pattern", rec.pattern.describe()},
                                  {"value", to_decimal(rec.value)},
                                  {"pass", rec.pass}});
    doc["inequalities"] = rows;
    doc["overall"] = report.overall;
    emit(doc.dump(2) + "\n", opt, out);
  } else {
    std::ostringstream text;
    text << "system: " << system << "\n";
    text << "p: " << g.p << "  codim: " << g.codim() << "  a: " << degrees_text(a) << "\n";
    for (const auto& rec : report.records)
      text << "  " << rec.pattern.describe() << "  value " << to_decimal(rec.value) << "  "
           << (rec.pass ? "pass" : "FAIL") << "\n";
    text << "overall: " << (report.overall ? "pass" : "FAIL") << "\n";
    emit(text.str(), opt, out);
  }
  return report.overall ? exit_pass : exit_math_failure;
}

// ---- enumerate ----

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  CatalogParams params;
  params.p = opt.p;
  params.codim = opt.codim >= 0 ? opt.codim : 2;
  params.bound = opt.bound;
  const std::string system = opt.system.empty() ? "split" : opt.system;
  params.system =
      system == "filtration" ? InequalitySystem::filtration : InequalitySystem::split;
  for (const std::string& f : opt.filters) {
    if (f == "crepant")
      params.filter_crepant = true;
    else
      params.filter_nonnegative = true;
  }
  params.threads = threads_from_env();

  const AdmissibleCatalog catalog = enumerate_admissible(params);

  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = "exckit/1";
    doc["command"] = "enumerate";
    doc["p"] = params.p;
    doc["codim"] = params.codim;
    doc["bound"] = params.bound;
    doc["system"] = system;
    ordered_json filters = ordered_json::array();
    if (params.filter_crepant) filters.push_back("crepant");
    if (params.filter_nonnegative) filters.push_back("nonnegative");
    doc["filters"] = filters;
    doc["candidates"] = catalog.candidates;
    doc["count"] = catalog.vectors.size();
    ordered_json rows = ordered_json::array();
    for (const auto& v : catalog.vectors) rows.push_back(degrees_json(v));
    doc["vectors"] = rows;
    emit(doc.dump(2) + "\n", opt, out);
  } else {
    std::ostringstream text;
    for (int i = 1; i <= params.codim; ++i) text << (i > 1 ? "," : "") << "a" << i;
    text << "\n";
    for (const auto& v : catalog.vectors) {
      for (std::size_t i = 0; i < v.size(); ++i) text << (i > 0 ? "," : "") << v[i];
      text << "\n";
    }
    emit(text.str(), opt, out);
    err << "admissible: " << catalog.vectors.size() << " of " << catalog.candidates
        << " nondecreasing candidates\n";
  }
  return exit_pass;
}

// ---- hilbert ----

int cmd_hilbert(const Options& opt, std::ostream& out) {
  const std::vector<Degree> a = checked_degrees(opt);
  const int rmax = opt.rmax < 0 ? 1 : opt.rmax;
  const HilbertProfile profile = hilbert_profile(a, opt.p, rmax);

  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = "exckit/1";
    doc["command"] = "hilbert";
    doc["p"] = profile.p;
    doc["a"] = degrees_json(a);
    doc["rmax"] = rmax;
    ordered_json values = ordered_json::array();
    for (const Int& v : profile.values) values.push_back(to_decimal(v));
    doc["values"] = values;
    doc["embedding_dimension"] = to_decimal(profile.embedding_dim);
    doc["rationality_established"] = profile.rational_established;
    emit(doc.dump(2) + "\n", opt, out);
  } else {
    std::ostringstream text;
    text << "p: " << profile.p << "  a: " << degrees_text(a) << "\n";
    for (std::size_t r = 0; r < profile.values.size(); ++r)
      text << "h(" << r << ") = " << to_decimal(profile.values[r]) << "\n";
    text << "embedding dimension: " << to_decimal(profile.embedding_dim) << "\n";
    text << "rationality established: " << (profile.rational_established ? "yes" : "no") << "\n";
    emit(text.str(), opt, out);
  }
  return exit_pass;
}

// ---- leading-coeff ----

int cmd_leading_coeff(const Options& opt, std::ostream& out) {
  const std::vector<Degree> a = checked_degrees(opt);
  const Geometry g(opt.p + static_cast<int>(a.size()), opt.p, a);

  ordered_json doc;
  doc["schema"] = "exckit/1";
  doc["command"] = "leading-coeff";
  doc["p"] = g.p;
  doc["codim"] = g.codim();
  doc["a"] = degrees_json(a);
  std::ostringstream text;
  text << "p: " << g.p << "  codim: " << g.codim() << "  a: " << degrees_text(a) << "\n";

  if (opt.h < 0) {
    const Rat lc = leading_coefficient(g);
    const Int msum = complete_homogeneous(a, g.p);
    if (Rat(lc * factorial(static_cast<unsigned long>(g.n))) != Rat(msum))
      throw std::logic_error("leading coefficient violates the monomial-sum identity");
    doc["h"] = nullptr;
    doc["leading_coefficient"] = rat_json(lc);
    doc["monomial_sum"] = to_decimal(msum);
    text << "leading coefficient: " << rat_text(lc) << "\n";
    text << "monomial sum: " << to_decimal(msum) << "\n";
    text << "n! * leading coefficient = monomial sum: confirmed\n";
  } else {
    const Rat lc = weighted_leading_coefficient(g, opt.h);
    const std::vector<Degree> doubled = DoublingPattern::prefix(opt.h).apply(a);
    const Int msum = complete_homogeneous(doubled, g.p);
    doc["h"] = opt.h;
    doc["leading_coefficient"] = rat_json(lc);
    doc["doubled_monomial_sum"] = to_decimal(msum);
    text << "weighted leading coefficient (h=" << opt.h << "): " << rat_text(lc) << "\n";
    text << "doubled monomial sum: " << to_decimal(msum) << "\n";
    if (sgn(msum) != 0) {
      const Rat ratio = lc / Rat(msum);
      if (sgn(ratio) <= 0)
        throw std::logic_error("weighted leading coefficient ratio is not positive");
      doc["ratio"] = rat_json(ratio);
      text << "ratio: " << rat_text(ratio) << "\n";
    } else {
      doc["ratio"] = nullptr;
    }
  }

  emit(opt.format == "json" ? doc.dump(2) + "\n" : text.str(), opt, out);
  return exit_pass;
}

// ---- verify ----

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

SuiteResult suite_finite_difference(int kmax) {
  SuiteResult s;
  s.name = "finite-difference";
  for (int k = 0; k <= kmax; ++k) {
    for (int j = 0; j <= k; ++j) {
      ++s.cases;
      const Int got = finite_difference(static_cast<unsigned>(k), static_cast<unsigned>(j));
      Int expected = 0;
      if (j == k) {
        expected = factorial(static_cast<unsigned long>(k));
        if (k % 2 == 1) expected = -expected;
      }
      if (got != expected)
        s.fail("finite_difference(" + std::to_string(k) + ", " + std::to_string(j) + ") = " +
               to_decimal(got) + ", expected " + to_decimal(expected));
    }
  }
  return s;
}

SuiteResult suite_shifted_difference(int kmax, int imax) {
  SuiteResult s;
  s.name = "shifted-difference";
  for (int k = 1; k <= kmax; ++k) {
    const Int expected = factorial(static_cast<unsigned long>(k));
    for (int i = 0; i <= imax; ++i) {
      ++s.cases;
      const Int got = shifted_difference(static_cast<unsigned>(k), static_cast<unsigned>(i));
      if (got != expected)
        s.fail("shifted_difference(" + std::to_string(k) + ", " + std::to_string(i) + ") = " +
               to_decimal(got) + ", expected " + to_decimal(expected));
    }
  }
  return s;
}

SuiteResult suite_comb_lemma(int kmax, int imax, int jmax) {
  SuiteResult s;
  s.name = "comb-lemma";
  for (int k = 1; k <= kmax; ++k) {
    PowerSumExpansion coeffs;
    try {
      ++s.cases;
      coeffs = power_sum_expansion(static_cast<unsigned>(k));
    } catch (const std::logic_error& e) {
      s.fail(std::string("power_sum_expansion(") + std::to_string(k) + "): " + e.what());
      continue;
    }
    for (int i = 1; i <= imax; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        ++s.cases;
        const Int direct = power_sum_compositions(static_cast<unsigned>(i),
                                                  static_cast<unsigned>(j),
                                                  static_cast<unsigned>(k));
        const Int expanded =
            coeffs.evaluate(static_cast<unsigned>(i), static_cast<unsigned>(j));
        if (direct != expanded)
          s.fail("power sums at (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                 ", k=" + std::to_string(k) + "): direct " + to_decimal(direct) +
                 ", expansion " + to_decimal(expanded));
      }
    }
  }
  return s;
}

TwistMultiset filtered_union(const Geometry& g, int h, int r, Parity parity) {
  const std::span<const Degree> a(g.conormal_degrees);
  const auto sub = a.first(static_cast<std::size_t>(h));
  const auto quot = a.subspan(static_cast<std::size_t>(h));
  TwistMultiset acc;
  for (int k = 0; k <= r; ++k) {
    const int sub_order = parity == Parity::odd ? 2 * k + 1 : 2 * k;
    acc += tensor_product(symmetric_power(sub, sub_order), symmetric_power(quot, r - k));
  }
  return acc;
}

SuiteResult suite_graded_pieces(int rmax) {
  SuiteResult s;
  s.name = "graded-pieces";
  static constexpr Degree kDegrees[] = {-2, -1, 1, 2};
  for (int codim = 2; codim <= 4; ++codim) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(codim), 0);
    for (;;) {
      std::vector<Degree> a(pick.size());
      for (std::size_t i = 0; i < pick.size(); ++i) a[i] = kDegrees[pick[i]];
      const Geometry g(1 + codim, 1, a);
      for (int h = 1; h <= codim - 1; ++h) {
        for (int r = 0; r <= rmax; ++r) {
          for (const Parity parity : {Parity::even, Parity::odd}) {
            ++s.cases;
            if (weighted_graded_piece(g, h, r, parity) != filtered_union(g, h, r, parity))
              s.fail("a=" + degrees_text(a) + ", h=" + std::to_string(h) +
                     ", r=" + std::to_string(r) + ", " +
                     (parity == Parity::odd ? "odd" : "even") +
                     ": direct piece and filtered union differ");
          }
        }
      }
      std::size_t idx = pick.size();
      while (idx > 0 && pick[idx - 1] == std::size(kDegrees) - 1) pick[--idx] = 0;
      if (idx == 0) break;
      ++pick[idx - 1];
    }
  }
  return s;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.kmax > 16 || opt.imax > 30 || opt.jmax > 30 || opt.rmax > 8)
    throw std::invalid_argument("verify: range caps are kmax 16, imax/jmax 30, rmax 8");

  std::vector<SuiteResult> results;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "finite-difference")
    results.push_back(suite_finite_difference(opt.kmax < 0 ? 10 : opt.kmax));
  if (all || opt.suite == "shifted-difference")
    results.push_back(
        suite_shifted_difference(opt.kmax < 0 ? 8 : opt.kmax, opt.imax < 0 ? 8 : opt.imax));
  if (all || opt.suite == "comb-lemma")
    results.push_back(suite_comb_lemma(opt.kmax < 0 ? 5 : opt.kmax, opt.imax < 0 ? 6 : opt.imax,
                                       opt.jmax < 0 ? 8 : opt.jmax));
  if (all || opt.suite == "graded-pieces")
    results.push_back(suite_graded_pieces(opt.rmax < 0 ? 3 : opt.rmax));

  bool overall = true;
  for (const auto& s : results) overall = overall && s.failures == 0;

  if (opt.format == "json") {
    ordered_json doc;
    doc["schema"] = "exckit/1";
    doc["command"] = "verify";
    ordered_json suites = ordered_json::array();
    for (const auto& s : results) {
      ordered_json row;
      row["name"] = s.name;
      row["cases"] = s.cases;
      row["failures"] = s.failures;
      row["counterexample"] =
          s.first_failure.empty() ? ordered_json(nullptr) : ordered_json(s.first_failure);
      suites.push_back(row);
    }
    doc["suites"] = suites;
    doc["overall"] = overall;
    emit(doc.dump(2) + "\n", opt, out);
  } else {
    std::ostringstream text;
    for (const auto& s : results) {
      text << s.name << ": " << s.cases << " cases, " << s.failures << " failures\n";
      if (!s.first_failure.empty()) text << "  first counterexample: " << s.first_failure << "\n";
    }
    text << "overall: " << (overall ? "pass" : "FAIL") << "\n";
    emit(text.str(), opt, out);
  }
  return overall ? exit_pass : exit_math_failure;
}

void add_format_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out_path, "write the report to this path instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"exact invariants of exceptional sets with filtered conormal bundles", "exckit"};
  app.require_subcommand(1);

  const std::string a_help =
      "comma-separated conormal twist degrees a_i (the split normal bundle is the sum of "
      "O(-a_i); negate normal-bundle degrees)";

  CLI::App* check = app.add_subcommand("check", "evaluate an inequality system for one geometry");
  check->add_option("--p", opt.p, "exceptional-set dimension")->capture_default_str();
  check->add_option("--codim", opt.codim, "codimension (checked against the length of --a)");
  check->add_option("--a", opt.a_text, a_help)->required();
  check->add_option("--system", opt.system, "inequality system (default: filtration)")
      ->check(CLI::IsMember({"filtration", "split"}));
  add_format_options(check, opt);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "catalog admissible degree vectors in a box");
  enumerate->add_option("--p", opt.p, "exceptional-set dimension")->capture_default_str();
  enumerate->add_option("--codim", opt.codim, "codimension of the degree vectors (default: 2)");
  enumerate->add_option("--bound", opt.bound, "scan [-bound, bound] per coordinate")
      ->capture_default_str();
  enumerate->add_option("--system", opt.system, "inequality system (default: split)")
      ->check(CLI::IsMember({"filtration", "split"}));
  enumerate->add_option("--filter", opt.filters, "extra admissibility filters")
      ->check(CLI::IsMember({"crepant", "nonnegative"}));
  add_format_options(enumerate, opt);

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Hilbert function and embedding dimension of the contraction");
  hilbert->add_option("--p", opt.p, "exceptional-set dimension")->capture_default_str();
  hilbert->add_option("--codim", opt.codim, "codimension (checked against the length of --a)");
  hilbert->add_option("--a", opt.a_text, a_help)->required();
  hilbert->add_option("--rmax", opt.rmax, "largest order r to report (default: 1)");
  add_format_options(hilbert, opt);

  CLI::App* leading =
      app.add_subcommand("leading-coeff", "leading coefficient of the partial-sum polynomial");
  leading->set_help_flag("--help", "print this help message and exit");
  leading->add_option("--p", opt.p, "exceptional-set dimension")->capture_default_str();
  leading->add_option("--codim", opt.codim, "codimension (checked against the length of --a)");
  leading->add_option("--a", opt.a_text, a_help)->required();
  leading->add_option("--h", opt.h, "filtration step for the weighted variant (default: plain)");
  add_format_options(leading, opt);

  CLI::App* verify = app.add_subcommand("verify", "run the identity cross-check suites");
  verify->add_option("--suite", opt.suite, "which suite to run")
      ->check(CLI::IsMember({"all", "finite-difference", "shifted-difference", "comb-lemma",
                             "graded-pieces", "none"}))
      ->capture_default_str();
  verify->add_option("--kmax", opt.kmax, "largest k (suite-specific default)");
  verify->add_option("--imax", opt.imax, "largest i (suite-specific default)");
  verify->add_option("--jmax", opt.jmax, "largest j (suite-specific default)");
  verify->add_option("--rmax", opt.rmax, "largest symmetric order for graded-pieces (default: 3)");
  add_format_options(verify, opt);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("exckit");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_pass : exit_usage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_pass : exit_usage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out, err);
    if (hilbert->parsed()) return cmd_hilbert(opt, out);
    if (leading->parsed()) return cmd_leading_coeff(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "identity failure: " << e.what() << "\n";
    return exit_math_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_math_failure;
  }
  return exit_usage;
}

}  // namespace exckit::cli
