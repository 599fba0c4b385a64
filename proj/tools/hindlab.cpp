// hindlab: command-line front end for the windowed set-family and
// spacing-shift laboratory.
//
// Exit status: 0 when every verdict passes, 1 when a verdict or assertion
// fails, 2 on bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hindlab/hindlab.hpp"

namespace {

using namespace hindlab;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct WindowArg {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

std::optional<WindowArg> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':', text[0] == '-' ? 1 : 0);
  if (colon == std::string::npos) throw Error(Errc::invalid_argument, "--window expects lo:hi");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const std::string left = text.substr(0, colon);
    const std::string right = text.substr(colon + 1);
    WindowArg w{std::stoll(left, &a), std::stoll(right, &b)};
    if (a != left.size() || b != right.size()) throw std::invalid_argument("trailing");
    if (w.lo > w.hi) throw Error(Errc::invalid_argument, "--window needs lo <= hi");
    return w;
  } catch (const std::logic_error&) {
    throw Error(Errc::invalid_argument, "--window expects integers lo:hi, got '" + text + "'");
  }
}

struct Common {
  std::string format = "text";
  std::string output;
  std::string window;

  [[nodiscard]] Format fmt() const { return format == "structured" ? Format::structured : Format::text; }
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + c.output);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SpacingShift load_shift(const std::string& path, std::int64_t full_n) {
  if (!path.empty()) return SpacingShift(read_set_file(path).set);
  if (full_n > 0) return SpacingShift::full(full_n);
  throw Error(Errc::invalid_argument, "give --p FILE or --full N");
}

// -- subcommands ---------------------------------------------------------------

struct ClassifyArgs {
  std::string file;
  ScaleParams scales;
};

int run_classify(const Common& c, const ClassifyArgs& a) {
  WindowedSet s = read_set_file(a.file).set;
  if (const auto w = parse_window(c.window)) s = s.restricted(w->lo, w->hi);
  emit(c, render(classify(s, a.scales), c.fmt()));
  return kPass;
}

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> params;
};

int run_construct(const Common& c, const ConstructArgs& a) {
  std::string text = a.kind;
  for (const auto& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || kv.find_first_of(" \t") != std::string::npos) {
      throw Error(Errc::invalid_argument, "--param expects key=value without spaces");
    }
    text += ' ' + kv;
  }
  // --window wins over a window= parameter.
  if (const auto w = parse_window(c.window)) text += " window=" + std::to_string(w->lo) + ":" + std::to_string(w->hi);
  ConstructionSpec spec = ConstructionSpec::parse(text);
  const ConstructionResult r = build(spec);
  emit(c, render(r, c.fmt()));
  return r.all_pass() ? kPass : kFail;
}

struct SpacingArgs {
  std::string p_file;
  std::int64_t full_n = 0;
  std::string u = "1";
  std::string v = "1";
  std::int64_t max_word_len = 5;
  std::string detector = "nonempty";
  bool ones_only = false;
  bool suite_sets = false;
};

int run_return_set(const Common& c, const SpacingArgs& a) {
  const SpacingShift p = load_shift(a.p_file, a.full_n);
  const Word u = Word::parse(a.u);
  const Word v = Word::parse(a.v);
  Window w = return_window(p, u, v);
  if (const auto o = parse_window(c.window)) w = {o->lo, o->hi};
  emit(c, render_return_set(return_set(p, u, v, w.lo, w.hi), u, v, c.fmt()));
  return kPass;
}

int run_nuv_check(const Common& c, const SpacingArgs& a) {
  std::vector<WindowedSet> sets;
  if (a.suite_sets) {
    sets = suite_spacing_sets(SuiteConfig{});
  } else {
    sets.push_back(load_shift(a.p_file, a.full_n).p_plus());
  }
  NuvSummary total;
  for (const auto& s : sets) {
    const NuvSummary one = nuv_check_all(SpacingShift(s), a.max_word_len);
    total.pairs += one.pairs;
    total.outside_mismatches += one.outside_mismatches;
    total.containment_violations += one.containment_violations;
    total.max_c_size = std::max(total.max_c_size, one.max_c_size);
    total.failures.insert(total.failures.end(), one.failures.begin(), one.failures.end());
  }
  emit(c, render(total, c.fmt()));
  return total.ok() ? kPass : kFail;
}

int run_mixing_report(const Common& c, const SpacingArgs& a) {
  const SpacingShift p = load_shift(a.p_file, a.full_n);
  std::optional<Window> w;
  if (const auto o = parse_window(c.window)) w = Window{o->lo, o->hi};
  const EvidenceReport r = mixing_evidence(p, Detector::parse(a.detector), a.max_word_len, w, a.ones_only);
  emit(c, render(r, c.fmt()));
  return r.all_pass() ? kPass : kFail;
}

struct ComplexityArgs {
  std::string p_file;
  std::int64_t full_n = 0;
  std::string cover = "auto";
  std::string seq = "all";
  std::int64_t n_max = 5;
  std::size_t solver_cap = kDefaultSolverCap;
};

int run_complexity(const Common& c, const ComplexityArgs& a) {
  const bool given = !a.p_file.empty() || a.full_n > 0;
  const SpacingShift p = given ? load_shift(a.p_file, a.full_n) : SpacingShift::full(64);
  const ClopenCover cover = a.cover == "auto" ? ClopenCover::canonical_two_cover() : ClopenCover::parse(read_text(a.cover));
  std::vector<std::int64_t> times;
  if (a.seq == "all") {
    for (std::int64_t i = 0; i < a.n_max; ++i) times.push_back(i);
  } else {
    times = times_from_set(read_set_file(a.seq).set);
  }
  emit(c, render(complexity_profile(p, cover, times, a.n_max, a.solver_cap), c.fmt()));
  return kPass;
}

int run_suite(const Common& c, const SuiteConfig& config) {
  const SuiteResult r = run_paper_suite(config, [&](const SuiteItem& item) {
    // Progress goes to stderr so stdout stays byte-stable.
    std::fprintf(stderr, "item %d %s %.2fs\n", item.id, item.pass ? "pass" : "FAIL", item.seconds);
  });
  emit(c, render(r, c.fmt()));
  return r.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Windowed set families, spacing shifts and cover complexity"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("-o,--output", common.output, "Write the report to this file instead of stdout");
  app.add_option("--window", common.window, "Window override lo:hi");

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Run the family detectors on a set file");
  classify_cmd->add_option("file", classify_args.file, "Set file")->required();
  classify_cmd->add_option("--thick-L", classify_args.scales.thick_L, "Thickness scale");
  classify_cmd->add_option("--syndetic-g", classify_args.scales.syndetic_g, "Syndetic gap scale");
  classify_cmd->add_option("--ps-L", classify_args.scales.ps_L, "Piecewise-syndetic interval length");
  classify_cmd->add_option("--delta-m", classify_args.scales.delta_order, "Order of the difference-set search");
  classify_cmd->add_option("--ip-k", classify_args.scales.ip_arity, "Arity of the finite-sums search");
  classify_cmd->add_option("--bound", classify_args.scales.search_bound, "Search bound");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build a witness set");
  construct_cmd->add_option("kind", construct_args.kind, "squares | rapid_growth | progressive_union | alternating_thick")
      ->required();
  construct_cmd->add_option("--param", construct_args.params, "key=value, repeatable");

  SpacingArgs spacing_args;
  auto* spacing_cmd = app.add_subcommand("spacing", "Spacing-shift queries");
  spacing_cmd->require_subcommand(1);
  auto add_shift_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", spacing_args.p_file, "Set file holding P+");
    cmd->add_option("--full", spacing_args.full_n, "Use the full shift with distances up to N");
  };
  auto* return_cmd = spacing_cmd->add_subcommand("return-set", "Return-time set N(U,V)");
  add_shift_opts(return_cmd);
  return_cmd->add_option("--u", spacing_args.u, "Word U as a binary string");
  return_cmd->add_option("--v", spacing_args.v, "Word V as a binary string");
  auto* nuv_cmd = spacing_cmd->add_subcommand("nuv-check", "Compare return sets with the shift-intersection formula");
  add_shift_opts(nuv_cmd);
  nuv_cmd->add_option("--max-word-len", spacing_args.max_word_len, "Longest word");
  nuv_cmd->add_flag("--suite-sets", spacing_args.suite_sets, "Check the 50 generated suite sets instead of --p");
  auto* mixing_cmd = spacing_cmd->add_subcommand("mixing-report", "Transitivity and mixing evidence");
  add_shift_opts(mixing_cmd);
  mixing_cmd->add_option("--detector", spacing_args.detector, "nonempty | thick:L= | syndetic:g= | ps:g=,L= | ts:g=,L= | cofinite:n0=");
  mixing_cmd->add_option("--max-word-len", spacing_args.max_word_len, "Longest word");
  mixing_cmd->add_flag("--ones-only", spacing_args.ones_only, "Skip words without a 1");

  ComplexityArgs complexity_args;
  auto* complexity_cmd = app.add_subcommand("complexity", "Cover complexity along a sequence");
  complexity_cmd->add_option("--p", complexity_args.p_file, "Set file holding P+ (default: full shift)");
  complexity_cmd->add_option("--full", complexity_args.full_n, "Full shift with distances up to N");
  complexity_cmd->add_option("--cover", complexity_args.cover, "Cover file, or auto");
  complexity_cmd->add_option("--seq", complexity_args.seq, "all, or a set file of times");
  complexity_cmd->add_option("--n-max", complexity_args.n_max, "Profile length");
  complexity_cmd->add_option("--solver-cap", complexity_args.solver_cap, "Largest reduced cover for the exact solver");

  SuiteConfig suite_config;
  auto* suite_cmd = app.add_subcommand("paper-suite", "Run the verification battery");
  suite_cmd->add_option("--seed", suite_config.seed, "Seed for the generated inputs");
  suite_cmd->add_option("--bound", suite_config.squares_bound, "Bound for the order-4 squares search");
  suite_cmd->add_option("--max-word-len", suite_config.nuv_max_len, "Longest word in the return-set checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*classify_cmd) return run_classify(common, classify_args);
    if (*construct_cmd) return run_construct(common, construct_args);
    if (*return_cmd) return run_return_set(common, spacing_args);
    if (*nuv_cmd) return run_nuv_check(common, spacing_args);
    if (*mixing_cmd) return run_mixing_report(common, spacing_args);
    if (*complexity_cmd) return run_complexity(common, complexity_args);
    if (*suite_cmd) return run_suite(common, suite_config);
  } catch (const Error& e) {
    std::cerr << "hindlab: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
