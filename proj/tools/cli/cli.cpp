#include "cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dreidel/analysis/differences.hpp"
#include "dreidel/analysis/fit.hpp"
#include "dreidel/analysis/report.hpp"
#include "dreidel/analysis/symbolic.hpp"
#include "dreidel/chain/cache_file.hpp"
#include "dreidel/chain/spin_table.hpp"
#include "dreidel/error.hpp"
#include "dreidel/games/gambler.hpp"
#include "dreidel/games/simulate.hpp"
#include "dreidel/keyeq/keyeq.hpp"

namespace dreidel::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string game;
  std::optional<int> a, p, b, win_at, ruin_at, total, max_sum, lo, hi, nuts;
  std::string mode;
  int digits = 30;
  std::string format;
  std::optional<std::string> cache;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double seconds_per_spin = 10.0;
  bool verify = false;
  long precision_bits = BigFloat::kDefaultPrecision;
};

long precision_from_env() {
  const char* env = std::getenv("DREIDEL_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return BigFloat::kDefaultPrecision;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 128) {
    throw UsageError("DREIDEL_PRECISION_BITS must be an integer >= 128");
  }
  return bits;
}

Game require_dreidel_game(const std::string& name) {
  const auto game = parse_game(name);
  if (!game) throw UsageError("--game must be simplified or full here, got '" + name + "'");
  return *game;
}

template <class T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required option ") + flag);
  return *value;
}

SolveMode resolve_mode(const RunConfig& cfg, Game game) {
  if (cfg.mode.empty()) return game == Game::kFull ? SolveMode::kHighPrecision : SolveMode::kExact;
  const auto mode = parse_solve_mode(cfg.mode);
  if (!mode) throw UsageError("--mode must be exact or hiprec");
  return *mode;
}

HiprecOptions hiprec_options(const RunConfig& cfg) {
  HiprecOptions options;
  options.precision_bits = cfg.precision_bits;
  options.tolerance = BigFloat::power_of_ten(-30, cfg.precision_bits);
  return options;
}

void load_cache(const RunConfig& cfg, SpinSolver& solver) {
  if (!cfg.cache || !std::filesystem::exists(*cfg.cache)) return;
  try {
    load_cache_file(*cfg.cache, solver);
  } catch (const Error& e) {
    throw UsageError("unusable cache file: " + std::string(e.what()));
  }
}

std::string render(const Number& value, int digits) { return value.to_string(digits); }

// ---- subcommands ----------------------------------------------------------

void cmd_solve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.game == "gambler") {
    const GamblerParams params{require(cfg.win_at, "--M"), require(cfg.ruin_at, "--N"),
                               require(cfg.a, "--a")};
    try {
      params.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const auto all = gambler_chain_expectations(params.win_at, params.ruin_at);
    out << all[static_cast<std::size_t>(params.start + params.ruin_at)].to_string() << '\n';
    return;
  }
  const Game game = require_dreidel_game(cfg.game);
  const GameState s{require(cfg.a, "--a"), cfg.p.value_or(2), require(cfg.b, "--b")};
  if (!s.is_valid()) throw UsageError("nut counts must be nonnegative");
  const SolveMode mode = resolve_mode(cfg, game);

  SpinSolver solver(hiprec_options(cfg));
  load_cache(cfg, solver);
  const std::size_t before = solver.solves_performed();
  const Number value = solver.expected_spins(game, s, mode);
  if (cfg.cache && solver.solves_performed() > before) {
    append_cache_file(*cfg.cache, table_records(*solver.table(game, s.total(), mode), cfg.digits));
  }
  out << render(value, cfg.digits) << '\n';
}

void cmd_table(const RunConfig& cfg, std::ostream& out) {
  const Game game = require_dreidel_game(cfg.game);
  const int total = require(cfg.total, "--total");
  if (total < 2) throw UsageError("--total must be at least 2");
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
  const SolveMode mode = resolve_mode(cfg, game);

  SpinSolver solver(hiprec_options(cfg));
  const auto table = solver.table(game, total, mode);
  const auto records = table_records(*table, cfg.digits);
  if (cfg.cache) append_cache_file(*cfg.cache, records);
  if (cfg.format == "json") {
    write_records(out, records);
    return;
  }
  out << "a,p,b,value\n";
  for (const auto& r : records) {
    out << r.state.a << ',' << r.state.p << ',' << r.state.b << ',' << render(r.value, cfg.digits)
        << '\n';
  }
}

int cmd_verify_key(const RunConfig& cfg, std::ostream& out) {
  const int max_sum = require(cfg.max_sum, "--max-sum");
  if (max_sum < 2) throw UsageError("--max-sum must be at least 2");
  SpinSolver solver;
  const KeyReport report = verify_key(max_sum, solver);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["max_sum"] = max_sum;
    j["checked"] = report.checked;
    j["passed"] = report.passed();
    j["worst_discrepancy"] = report.worst_discrepancy.to_string();
    nlohmann::ordered_json bad = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
      bad.push_back({{"a", v.a}, {"b", v.b}, {"chain", v.chain_value.to_string()},
                     {"key", v.key_value.to_string()}});
    }
    j["violations"] = bad;
    out << j.dump() << '\n';
  } else {
    for (const auto& [m, ok] : report.line_passed) {
      out << "line a+b=" << m << ": " << (ok ? "pass" : "FAIL") << '\n';
    }
    out << "checked " << report.checked << " identities, " << report.violations.size()
        << " violations\n";
  }
  return report.passed() ? kExitOk : kExitFailure;
}

void cmd_derive_constants(const RunConfig& cfg, std::ostream& out) {
  const ConstantDerivation d = derive_constants_recurrence();
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [u, expr] : d.solution.solved) j[std::string(to_string(u))] = expr.to_string();
    nlohmann::ordered_json free = nlohmann::ordered_json::array();
    for (Unknown u : d.solution.free) free.push_back(std::string(to_string(u)));
    j["free"] = free;
    out << j.dump() << '\n';
    return;
  }
  for (Unknown u : kPivotOrder) {
    if (auto it = d.solution.solved.find(u); it != d.solution.solved.end()) {
      out << to_string(u) << " = " << it->second.to_string() << '\n';
    }
  }
  out << "free:";
  for (Unknown u : d.solution.free) out << ' ' << to_string(u);
  out << '\n';
}

void cmd_verify_conjecture_key(const RunConfig&, std::ostream& out) {
  const KeyConjectureCheck check = verify_conjecture_in_key();
  for (const KeyCase* c : {&check.above, &check.below}) {
    out << "case " << c->name << ":";
    for (Unknown u : kPivotOrder) {
      if (auto it = c->solution.solved.find(u); it != c->solution.solved.end()) {
        out << ' ' << to_string(u) << " = " << it->second.to_string() << ';';
      }
    }
    out << " dropped tails in 4^-" << c->dropped.front().var << '\n';
  }
  out << (check.cases_agree ? "cases agree" : "cases DISAGREE") << '\n';
}

void cmd_fit(const RunConfig& cfg, std::ostream& out) {
  const Game game = require_dreidel_game(cfg.game);
  const int lo = require(cfg.lo, "--min");
  const int hi = require(cfg.hi, "--max");
  if (lo < 1 || hi < lo) throw UsageError("need 1 <= --min <= --max");
  GameValues values(hiprec_options(cfg));
  const GridBounds grid{lo, hi, lo, hi};
  const FitResult fit = game == Game::kSimplified ? fit_simplified(values, grid) : fit_full(values, grid);
  if (cfg.format == "json") {
    out << to_json(fit, cfg.digits) << '\n';
  } else if (cfg.format == "csv") {
    out << to_csv(values, game, fit, cfg.digits);
  } else {
    const auto& m = fit.coefficients;
    auto show = [&](const char* name, const Number& x) {
      out << name << " = "
          << (x.is_exact() ? BigFloat(x.exact(), 512).to_string(cfg.digits) : x.to_string(cfg.digits))
          << '\n';
    };
    show("c3", m.c3);
    show("c2", m.c2);
    show("c1", m.c1);
    show("c0", m.c0);
    out << "points = " << fit.points << "\nresidual_max = " << fit.residual_max.to_string(6)
        << "\nresidual_rms = " << fit.residual_rms.to_string(6) << '\n';
  }
}

void cmd_error(const RunConfig& cfg, std::ostream& out) {
  const Game game = require_dreidel_game(cfg.game);
  const int a = require(cfg.a, "--a");
  const int b = require(cfg.b, "--b");
  if (a < 1 || b < 1) throw UsageError("--a and --b must be at least 1");
  GameValues values(hiprec_options(cfg));
  const ModelCoefficients model = game == Game::kSimplified ? known_simplified_model(cfg.precision_bits)
                                                            : dreidel_conjecture_model(cfg.precision_bits);
  const BigFloat value = values.value(game, {a, 2, b}).to_bigfloat(cfg.precision_bits);
  const BigFloat approx = eval_model(model, a, b).to_bigfloat(cfg.precision_bits);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["value"] = value.to_string(cfg.digits);
    j["model"] = approx.to_string(cfg.digits);
    j["epsilon"] = (value - approx).to_string(6);
    out << j.dump() << '\n';
    return;
  }
  out << "value = " << value.to_string(cfg.digits) << "\nmodel = " << approx.to_string(cfg.digits)
      << "\nepsilon = " << (value - approx).to_string(6) << '\n';
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  SimOptions options;
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  SimResult result;
  if (cfg.game == "gambler") {
    const GamblerParams params{require(cfg.win_at, "--M"), require(cfg.ruin_at, "--N"),
                               require(cfg.a, "--a")};
    if (params.win_at < 1 || params.ruin_at < 1 || params.start <= -params.ruin_at ||
        params.start >= params.win_at) {
      throw UsageError("gambler start must satisfy -N < a < M");
    }
    result = simulate_gambler(params, options);
  } else {
    const Game game = require_dreidel_game(cfg.game);
    const GameState s{require(cfg.a, "--a"), cfg.p.value_or(2), require(cfg.b, "--b")};
    if (!s.is_valid() || s.is_absorbing()) throw UsageError("simulation needs a, b >= 1 and p >= 0");
    result = simulate(game, s, options);
  }
  out << to_json(result, cfg.digits) << '\n';
}

void cmd_duration(const RunConfig& cfg, std::ostream& out) {
  const int nuts = require(cfg.nuts, "--nuts");
  if (nuts < 2) throw UsageError("--nuts must be at least 2");
  if (!(cfg.seconds_per_spin > 0)) throw UsageError("--seconds-per-spin must be positive");
  GameValues values(hiprec_options(cfg));
  const BigFloat minutes = duration_report(values, nuts, BigFloat(cfg.seconds_per_spin, cfg.precision_bits));
  out << minutes.to_fixed(2) << '\n';
}

int cmd_gamblers(const RunConfig& cfg, std::ostream& out) {
  const GamblerParams params{require(cfg.win_at, "--M"), require(cfg.ruin_at, "--N"),
                             require(cfg.a, "--a")};
  try {
    params.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  out << gambler_closed_form(params).to_string() << '\n';
  if (!cfg.verify) return kExitOk;
  const auto chain = gambler_chain_expectations(params.win_at, params.ruin_at);
  bool ok = true;
  for (int a = -params.ruin_at; a <= params.win_at; ++a) {
    const GamblerParams at{params.win_at, params.ruin_at, a};
    ok = ok && chain[static_cast<std::size_t>(a + params.ruin_at)] == gambler_closed_form(at);
  }
  out << (ok ? "verified: chain solver matches (N+a)(M-a) for every start"
             : "MISMATCH between chain solver and (N+a)(M-a)")
      << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Expected game lengths for two-player Dreidel and gambler's ruin", "dreidel"};
  app.require_subcommand(1);
  app.add_option("--cache", cfg.cache, "JSON-lines cache of solved states (opt-in)");

  auto add_format = [&cfg](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* solve = app.add_subcommand("solve", "Expected spins from one state");
  solve->add_option("--game", cfg.game)->required()->check(CLI::IsMember({"simplified", "full", "gambler"}));
  solve->add_option("--a", cfg.a);
  solve->add_option("--p", cfg.p);
  solve->add_option("--b", cfg.b);
  solve->add_option("--M", cfg.win_at);
  solve->add_option("--N", cfg.ruin_at);
  solve->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "hiprec"}));
  solve->add_option("--digits", cfg.digits)->check(CLI::Range(1, 10000));

  auto* table = app.add_subcommand("table", "All expectations for one conserved total");
  table->add_option("--game", cfg.game)->required()->check(CLI::IsMember({"simplified", "full"}));
  table->add_option("--total", cfg.total)->required();
  table->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "hiprec"}));
  table->add_option("--digits", cfg.digits)->check(CLI::Range(1, 10000));
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify_key_cmd = app.add_subcommand("verify-key", "Check the Key identity against the chain solver");
  verify_key_cmd->add_option("--max-sum", cfg.max_sum)->required();
  add_format(verify_key_cmd, {"text", "json"});

  auto* derive = app.add_subcommand("derive-constants", "Solve the recurrence for the model constants");
  add_format(derive, {"text", "json"});

  auto* conj = app.add_subcommand("verify-conjecture-key", "Substitute the bilinear model into the Key identity");

  auto* fit = app.add_subcommand("fit", "Least-squares fit on a square grid");
  fit->add_option("--game", cfg.game)->required()->check(CLI::IsMember({"simplified", "full"}));
  fit->add_option("--min", cfg.lo)->required();
  fit->add_option("--max", cfg.hi)->required();
  fit->add_option("--digits", cfg.digits)->check(CLI::Range(1, 200));
  add_format(fit, {"text", "json", "csv"});

  auto* error = app.add_subcommand("error", "Model error at one pot-2 state");
  error->add_option("--game", cfg.game)->required()->check(CLI::IsMember({"simplified", "full"}));
  error->add_option("--a", cfg.a)->required();
  error->add_option("--b", cfg.b)->required();
  error->add_option("--digits", cfg.digits)->check(CLI::Range(1, 200));
  add_format(error, {"text", "json"});

  auto* sim = app.add_subcommand("simulate", "Monte Carlo game lengths");
  sim->add_option("--game", cfg.game)->required()->check(CLI::IsMember({"simplified", "full", "gambler"}));
  sim->add_option("--a", cfg.a);
  sim->add_option("--p", cfg.p);
  sim->add_option("--b", cfg.b);
  sim->add_option("--M", cfg.win_at);
  sim->add_option("--N", cfg.ruin_at);
  sim->add_option("--trials", cfg.trials)->required();
  sim->add_option("--seed", cfg.seed)->required();
  sim->add_option("--digits", cfg.digits)->check(CLI::Range(1, 200));

  auto* duration = app.add_subcommand("duration", "Average full-game length in minutes");
  duration->add_option("--nuts", cfg.nuts)->required();
  duration->add_option("--seconds-per-spin", cfg.seconds_per_spin)->required();

  auto* gamblers = app.add_subcommand("gamblers", "Gambler's ruin expected duration");
  gamblers->add_option("--M", cfg.win_at)->required();
  gamblers->add_option("--N", cfg.ruin_at)->required();
  gamblers->add_option("--a", cfg.a)->required();
  gamblers->add_flag("--verify", cfg.verify, "Cross-check against the chain solver");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  std::ostringstream buffer;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dreidel: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.format.empty()) cfg.format = *table ? "csv" : "text";

  int status = kExitOk;
  try {
    cfg.precision_bits = precision_from_env();
    if (*solve) cmd_solve(cfg, buffer);
    else if (*table) cmd_table(cfg, buffer);
    else if (*verify_key_cmd) status = cmd_verify_key(cfg, buffer);
    else if (*derive) cmd_derive_constants(cfg, buffer);
    else if (*conj) cmd_verify_conjecture_key(cfg, buffer);
    else if (*fit) cmd_fit(cfg, buffer);
    else if (*error) cmd_error(cfg, buffer);
    else if (*sim) cmd_simulate(cfg, buffer);
    else if (*duration) cmd_duration(cfg, buffer);
    else if (*gamblers) status = cmd_gamblers(cfg, buffer);
  } catch (const UsageError& e) {
    err << "dreidel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "dreidel: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitFailure;
  }
  out << buffer.str();
  return status;
}

}  // namespace dreidel::cli
