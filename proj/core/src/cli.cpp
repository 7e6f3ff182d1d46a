#include "skein/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "skein/error.hpp"
#include "skein/json_io.hpp"
#include "skein/ordering.hpp"
#include "skein/system.hpp"

namespace skein::cli {

namespace {

constexpr int kMaxStrandsGuard = 6;
constexpr int kMaxExpGuard = 8;

struct Common {
  std::string format = "text";
  std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--budget", c.budget, "Step budget (default: SKEIN_BUDGET or built-in)")
      ->check(CLI::PositiveNumber);
}

SignChoice parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "plus") return SignChoice::Plus;
  if (s == "-" || s == "-1" || s == "minus") return SignChoice::Minus;
  if (s == "both") return SignChoice::Both;
  throw InputError("--sign must be one of +, -, both");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed braid traces, invariants and band-move systems", "skein"};
  app.require_subcommand(1);

  Common common;
  std::string word_text;
  std::optional<int> strands;
  std::string left, right;
  int level = 0, max_strands = 0, max_exp = 1;
  std::string sign_text = "both";
  bool allow_large = false;
  unsigned threads = 0;

  auto* trace_cmd = app.add_subcommand("trace", "Markov trace of a mixed braid word");
  auto* inv_cmd = app.add_subcommand("invariant", "Invariant X of a mixed braid word");
  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a mixed braid word in the Hecke algebra");
  for (auto* sub : {trace_cmd, inv_cmd, reduce_cmd}) {
    sub->add_option("word", word_text, "Braid word, e.g. \"t^2 t1^-1 s1\"")->required();
    sub->add_option("--strands", strands, "Number of moving strands")->check(CLI::PositiveNumber);
    add_common(sub, common);
  }

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two s-monomials, e.g. \"s-5 s1 s1 s3\"");
  cmp_cmd->add_option("left", left)->required();
  cmp_cmd->add_option("right", right)->required();
  add_common(cmp_cmd, common);

  auto* system_cmd = app.add_subcommand("system", "Level-k truncated band-move system");
  auto* solve_cmd = app.add_subcommand("solve", "Ordered elimination of the level-k system");
  for (auto* sub : {system_cmd, solve_cmd}) {
    sub->add_option("--level", level, "Level k")->required();
    sub->add_option("--max-strands", max_strands, "Largest loop index M")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--max-exp", max_exp, "Largest |exponent| E")->required()->check(CLI::PositiveNumber);
    sub->add_option("--sign", sign_text, "Band move sign: +, - or both");
    sub->add_flag("--allow-large", allow_large, "Lift the M <= 6, E <= 8 guardrail");
    sub->add_option("--threads", threads, "Worker threads for equation generation (0: all cores)");
    add_common(sub, common);
  }

  std::vector<std::string> argv_store{"skein"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    bool json_out = common.format == "json";
    std::uint64_t budget = common.budget ? *common.budget : default_budget();
    nlohmann::json j;

    if (trace_cmd->parsed() || inv_cmd->parsed() || reduce_cmd->parsed()) {
      StepBudget guard(budget, "evaluating \"" + word_text + "\"");
      MixedBraidWord wd = parse_word(word_text, strands);
      std::string name = trace_cmd->parsed() ? "trace" : inv_cmd->parsed() ? "invariant" : "reduce";
      j = {{"command", name}, {"word", render(wd)}, {"strands", wd.n}};
      if (reduce_cmd->parsed()) {
        AlgebraElement x = to_algebra(wd);
        if (json_out) j["value"] = to_json(x);
        else out << x.str() << "\n";
      } else {
        TraceValue v = trace_cmd->parsed() ? markov_trace(wd) : invariant_X(wd);
        if (json_out) j["value"] = to_json(v);
        else out << v.str() << "\n";
      }
    } else if (cmp_cmd->parsed()) {
      SMonomial a = parse_smonomial(left), b = parse_smonomial(right);
      std::string r = to_string(cmp_s(a, b));
      j = {{"command", "cmp"}, {"left", to_json(a)}, {"right", to_json(b)}, {"result", r}};
      if (!json_out) out << r << "\n";
    } else {
      if (!allow_large && (max_strands > kMaxStrandsGuard || max_exp > kMaxExpGuard))
        throw InputError("bounds exceed the guardrail (max-strands <= 6, max-exp <= 8); pass --allow-large");
      BuildOptions opts;
      opts.signs = parse_sign(sign_text);
      opts.budget = budget;
      opts.threads = threads;
      LevelSystem sys = build_system(level, max_strands, max_exp, opts);
      if (system_cmd->parsed()) {
        if (json_out) j = {{"command", "system"}, {"system", to_json(sys)}};
        else out << render(sys);
      } else {
        SolvedSystem sol = eliminate(sys);
        if (json_out) j = {{"command", "solve"}, {"system", to_json(sys)}, {"solution", to_json(sol)}};
        else out << render(sys) << "\n" << render(sol);
      }
    }
    if (json_out) out << j.dump(2) << "\n";
    return kOk;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace skein::cli
