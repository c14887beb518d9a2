// ewa-lab: command-line experiments on top of the ewalab C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ewalab/ewalab.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitNumerical = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) { throw CliError{kExitUsage, msg}; }

void check(ewa_status s) {
  if (s == EWA_OK) return;
  std::string msg = std::string(ewa_status_name(s)) + ": " + ewa_last_error();
  if (s == EWA_ERR_DEGENERATE_GAME) throw CliError{kExitDegenerate, msg};
  if (s == EWA_ERR_NUMERICAL || s == EWA_ERR_INTERNAL) throw CliError{kExitNumerical, msg};
  throw CliError{kExitUsage, msg};
}

struct Table {
  ewa_table* ptr = nullptr;
  Table() = default;
  Table(const Table&) = delete;
  Table& operator=(const Table&) = delete;
  ~Table() { ewa_table_free(ptr); }
  ewa_table** out() { return &ptr; }

  std::size_t rows() const { return ewa_table_rows(ptr); }
  std::size_t column(const std::string& name) const {
    for (std::size_t j = 0; j < ewa_table_cols(ptr); ++j)
      if (name == ewa_table_column_name(ptr, j)) return j;
    throw CliError{kExitNumerical, "missing column " + name};
  }
  double at(std::size_t row, std::size_t col) const { return ewa_table_value(ptr, row, col); }
};

// 12 significant digits, the precision of every CSV.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return round12(v);
}

double from_json_number(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    usage_error("bad number in manifest: " + s);
  }
  return j.get<double>();
}

// Fully resolved experiment; serialised into the manifest.
struct Run {
  std::string command;
  std::string preset;
  ewa_payoffs payoffs{};
  bool have_payoffs = false;
  ewa_config cfg = ewa_default_config();
  ewa_point start{0.3, 0.4};
  std::size_t steps = 10000;
  std::size_t transient = 0;
  std::size_t renorm = 10;
  std::uint64_t seed = 1;
  bool have_scan = false;
  ewa_scan_spec scan{EWA_AXIS_ALPHA, 0.01, 1.0, 100};
  bool have_grid = false;
  ewa_grid_spec grid{};
  ewa_symmetry symmetry = EWA_SYMMETRIC;
  std::size_t samples = 10000;
  std::size_t max_lag = 50;
  std::string out_dir = "ewa-out";
  unsigned threads = 0;
};

json to_json(const ewa_payoffs& p) {
  return json{{"a", number(p.a)}, {"b", number(p.b)}, {"c", number(p.c)}, {"d", number(p.d)},
              {"e", number(p.e)}, {"f", number(p.f)}, {"g", number(p.g)}, {"h", number(p.h)}};
}

json to_json(const Run& r) {
  json j;
  j["preset"] = r.preset;
  if (r.have_payoffs) j["payoffs"] = to_json(r.payoffs);
  j["config"] = {{"alpha", number(r.cfg.alpha)},
                 {"beta", number(r.cfg.beta)},
                 {"kappa", number(r.cfg.kappa)},
                 {"delta", number(r.cfg.delta)},
                 {"T", r.cfg.batch_T == 0 ? json("inf") : json(r.cfg.batch_T)}};
  j["start"] = {number(r.start.x), number(r.start.y)};
  j["steps"] = r.steps;
  j["transient"] = r.transient;
  j["renorm_interval"] = r.renorm;
  j["seed"] = r.seed;
  if (r.have_scan)
    j["scan"] = {{"axis", r.scan.axis == EWA_AXIS_ALPHA ? "alpha" : "beta"},
                 {"lo", number(r.scan.lo)},
                 {"hi", number(r.scan.hi)},
                 {"points", r.scan.points}};
  if (r.have_grid)
    j["grid"] = {{"a", {number(r.grid.a_lo), number(r.grid.a_hi), r.grid.a_points}},
                 {"b", {number(r.grid.b_lo), number(r.grid.b_hi), r.grid.b_points}}};
  j["symmetry"] = r.symmetry == EWA_SYMMETRIC ? "symmetric" : "antisymmetric";
  j["samples"] = r.samples;
  j["max_lag"] = r.max_lag;
  return j;
}

Run run_from_json(const std::string& command, const json& j) {
  Run r;
  r.command = command;
  r.preset = j.value("preset", "");
  if (j.contains("payoffs")) {
    const json& p = j["payoffs"];
    r.payoffs = {from_json_number(p["a"]), from_json_number(p["b"]), from_json_number(p["c"]),
                 from_json_number(p["d"]), from_json_number(p["e"]), from_json_number(p["f"]),
                 from_json_number(p["g"]), from_json_number(p["h"])};
    r.have_payoffs = true;
  }
  const json& c = j.at("config");
  r.cfg.alpha = from_json_number(c["alpha"]);
  r.cfg.beta = from_json_number(c["beta"]);
  r.cfg.kappa = from_json_number(c["kappa"]);
  r.cfg.delta = from_json_number(c["delta"]);
  r.cfg.batch_T = c["T"].is_string() ? 0 : c["T"].get<std::uint64_t>();
  r.start = {from_json_number(j["start"][0]), from_json_number(j["start"][1])};
  r.steps = j.at("steps").get<std::size_t>();
  r.transient = j.at("transient").get<std::size_t>();
  r.renorm = j.at("renorm_interval").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("scan")) {
    const json& s = j["scan"];
    r.have_scan = true;
    r.scan = {s["axis"] == "alpha" ? EWA_AXIS_ALPHA : EWA_AXIS_BETA, from_json_number(s["lo"]),
              from_json_number(s["hi"]), s["points"].get<std::size_t>()};
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    r.have_grid = true;
    r.grid = {from_json_number(g["a"][0]), from_json_number(g["a"][1]), g["a"][2].get<std::size_t>(),
              from_json_number(g["b"][0]), from_json_number(g["b"][1]), g["b"][2].get<std::size_t>()};
  }
  r.symmetry = j.value("symmetry", "symmetric") == "symmetric" ? EWA_SYMMETRIC : EWA_ANTISYMMETRIC;
  r.samples = j.at("samples").get<std::size_t>();
  r.max_lag = j.at("max_lag").get<std::size_t>();
  return r;
}

// Raw flag values; unset fields keep preset or default values.
struct Flags {
  std::string preset, payoffs, game, out, axis, range, grid, symmetry, batch;
  double alpha = 0, beta = 0, kappa = 0, delta = 0, x0 = 0, y0 = 0, gamma = 0;
  std::size_t steps = 0, transient = 0, points = 0, samples = 0, max_lag = 0, renorm = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string manifest;
  std::map<std::string, CLI::Option*> opts;

  bool has(const std::string& name) const {
    auto it = opts.find(name);
    return it != opts.end() && it->second->count() > 0;
  }
};

void add_common(CLI::App* app, Flags& f) {
  f.opts["preset"] = app->add_option("--preset", f.preset, "Named parameter set");
  f.opts["payoffs"] = app->add_option("--payoffs", f.payoffs, "Payoffs a,b,c,d,e,f,g,h");
  f.opts["game"] = app->add_option("--game", f.game, "Payoff file (JSON object or CSV row)");
  f.opts["alpha"] = app->add_option("--alpha", f.alpha, "Memory loss");
  f.opts["beta"] = app->add_option("--beta", f.beta, "Intensity of choice");
  f.opts["kappa"] = app->add_option("--kappa", f.kappa, "Cumulative (1) vs average (0) reinforcement");
  f.opts["delta"] = app->add_option("--delta", f.delta, "Forgone-payoff weight");
  f.opts["T"] = app->add_option("--T", f.batch, "Batch size, or inf for the deterministic map");
  f.opts["steps"] = app->add_option("--steps", f.steps, "Steps (or recorded values per parameter)");
  f.opts["transient"] = app->add_option("--transient", f.transient, "Discarded transient steps");
  f.opts["seed"] = app->add_option("--seed", f.seed, "Random seed");
  f.opts["out"] = app->add_option("--out", f.out, "Output directory");
  f.opts["grid"] = app->add_option("--grid", f.grid, "lo:hi:n[,lo:hi:n]");
  f.opts["threads"] = app->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
  f.opts["x0"] = app->add_option("--x0", f.x0, "Initial probability of Row strategy 1");
  f.opts["y0"] = app->add_option("--y0", f.y0, "Initial probability of Column strategy 1");
  f.opts["axis"] = app->add_option("--axis", f.axis, "Scan axis: alpha or beta");
  f.opts["range"] = app->add_option("--range", f.range, "Scan range lo:hi");
  f.opts["points"] = app->add_option("--points", f.points, "Number of scan points");
  f.opts["gamma"] = app->add_option("--gamma", f.gamma, "Payoff correlation");
  f.opts["n"] = app->add_option("--n", f.samples, "Monte-Carlo samples (per node)");
  f.opts["max-lag"] = app->add_option("--max-lag", f.max_lag, "Largest autocorrelation lag");
  f.opts["renorm"] = app->add_option("--renorm", f.renorm, "Gram-Schmidt interval");
  f.opts["symmetry"] = app->add_option("--symmetry", f.symmetry, "symmetric or antisymmetric");
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (...) {
    usage_error("bad number '" + s + "' in " + what);
  }
  if (pos != s.size()) usage_error("bad number '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

void parse_axis_spec(const std::string& s, double& lo, double& hi, std::size_t& n) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) usage_error("grid axis must be lo:hi:n, got '" + s + "'");
  lo = parse_double(parts[0], "--grid");
  hi = parse_double(parts[1], "--grid");
  const double pts = parse_double(parts[2], "--grid");
  if (pts < 1 || pts != std::floor(pts)) usage_error("grid point count must be a positive integer");
  n = static_cast<std::size_t>(pts);
}

ewa_axis parse_axis(const std::string& s) {
  if (s == "alpha") return EWA_AXIS_ALPHA;
  if (s == "beta") return EWA_AXIS_BETA;
  usage_error("--axis must be alpha or beta");
}

unsigned env_threads() {
  const char* env = std::getenv("EWA_LAB_THREADS");
  if (!env || !*env) return 0;
  const double v = parse_double(env, "EWA_LAB_THREADS");
  if (v < 0 || v != std::floor(v)) usage_error("EWA_LAB_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run resolve(const std::string& command, const Flags& f) {
  Run r;
  r.command = command;
  r.threads = f.has("threads") ? f.threads : env_threads();

  ewa_preset p{};
  if (f.has("preset")) {
    check(ewa_preset_find(f.preset.c_str(), &p));
    r.preset = f.preset;
    r.payoffs = p.payoffs;
    r.have_payoffs = true;
    r.cfg = p.config;
    r.start = p.start;
    r.steps = p.steps;
    r.transient = p.transient;
    r.seed = p.seed;
    r.symmetry = p.symmetry;
    if (p.samples) r.samples = p.samples;
    if (p.has_grid) {
      r.have_grid = true;
      r.grid = p.grid;
    }
    if (p.has_scan) {
      r.have_scan = true;
      r.scan = p.scan;
      r.cfg = p.scan_config;
    }
    if (f.has("axis") && p.has_alt_scan && parse_axis(f.axis) == p.alt_scan.axis) {
      r.scan = p.alt_scan;
      r.cfg = p.alt_scan_config;
    }
  }

  if (f.has("payoffs") && f.has("game")) usage_error("--payoffs and --game are exclusive");
  if (f.has("payoffs")) {
    check(ewa_parse_payoffs(f.payoffs.c_str(), &r.payoffs));
    r.have_payoffs = true;
  }
  if (f.has("game")) {
    check(ewa_parse_payoffs(read_file(f.game).c_str(), &r.payoffs));
    r.have_payoffs = true;
  }
  if (f.has("alpha")) r.cfg.alpha = f.alpha;
  if (f.has("beta")) r.cfg.beta = f.beta;
  if (f.has("kappa")) r.cfg.kappa = f.kappa;
  if (f.has("delta")) r.cfg.delta = f.delta;
  if (f.has("T")) {
    if (f.batch == "inf") {
      r.cfg.batch_T = 0;
    } else {
      const double t = parse_double(f.batch, "--T");
      if (t < 1 || t != std::floor(t)) usage_error("--T must be a positive integer or inf");
      r.cfg.batch_T = static_cast<std::uint64_t>(t);
    }
  }
  if (command == "lyapunov" && !f.has("preset")) {
    r.steps = 100000;
    r.transient = 10000;
  }
  if (f.has("steps")) r.steps = f.steps;
  if (f.has("transient")) r.transient = f.transient;
  if (f.has("seed")) r.seed = f.seed;
  if (f.has("renorm")) r.renorm = f.renorm;
  if (f.has("x0")) r.start.x = f.x0;
  if (f.has("y0")) r.start.y = f.y0;
  if (f.has("n")) r.samples = f.samples;
  if (f.has("max-lag")) r.max_lag = f.max_lag;
  if (f.has("out")) r.out_dir = f.out;
  if (f.has("symmetry")) {
    if (f.symmetry == "symmetric")
      r.symmetry = EWA_SYMMETRIC;
    else if (f.symmetry == "antisymmetric")
      r.symmetry = EWA_ANTISYMMETRIC;
    else
      usage_error("--symmetry must be symmetric or antisymmetric");
  }
  if (f.has("grid")) {
    const auto axes = split(f.grid, ',');
    if (axes.empty() || axes.size() > 2) usage_error("--grid expects lo:hi:n[,lo:hi:n]");
    parse_axis_spec(axes[0], r.grid.a_lo, r.grid.a_hi, r.grid.a_points);
    parse_axis_spec(axes.back(), r.grid.b_lo, r.grid.b_hi, r.grid.b_points);
    r.have_grid = true;
  }
  if (f.has("axis")) {
    r.scan.axis = parse_axis(f.axis);
    r.have_scan = true;
  }
  if (f.has("range")) {
    const auto parts = split(f.range, ':');
    if (parts.size() != 2) usage_error("--range expects lo:hi");
    r.scan.lo = parse_double(parts[0], "--range");
    r.scan.hi = parse_double(parts[1], "--range");
    r.have_scan = true;
  }
  if (f.has("points")) {
    if (f.points < 1) usage_error("--points must be >= 1");
    r.scan.points = f.points;
    r.have_scan = true;
  }
  if (f.has("gamma")) {
    r.scan = {EWA_AXIS_ALPHA, f.gamma, f.gamma, 1};
    r.have_scan = true;
  }
  return r;
}

void require_payoffs(const Run& r) {
  if (!r.have_payoffs) usage_error("a game is required: use --payoffs, --game or --preset");
}

struct Output {
  fs::path dir;
  std::vector<std::string> files;

  void csv(const std::string& name, const Table& t) {
    fs::create_directories(dir);
    check(ewa_table_write_csv(t.ptr, (dir / name).string().c_str()));
    files.push_back(name);
  }
  void text(const std::string& name, const std::string& body) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    out << body;
    if (!out) throw CliError{kExitUsage, "failed writing " + (dir / name).string()};
    files.push_back(name);
  }
};

void write_manifest(const Run& r, Output& out) {
  json m;
  m["tool"] = "ewa-lab";
  m["version"] = ewa_version();
  m["command"] = r.command;
  m["parameters"] = to_json(r);
  m["outputs"] = out.files;
  fs::create_directories(out.dir);
  std::ofstream f(out.dir / "manifest.json", std::ios::binary);
  f << m.dump(2) << '\n';
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json classification_json(const ewa_payoffs& p, const ewa_classification& c) {
  json j;
  j["payoffs"] = to_json(p);
  j["class"] = ewa_game_class_name(c.game_class);
  j["params"] = {{"A", number(c.params.A)}, {"B", number(c.params.B)},
                 {"C", number(c.params.C)}, {"D", number(c.params.D)}};
  j["coordination"] = number(c.coordination);
  j["dominance"] = number(c.dominance);
  j["coordination_x16"] = number(c.coordination_x16);
  j["dominance_x16"] = number(c.dominance_x16);
  json ne = json::array();
  for (int i = 0; i < c.n_pure_ne; ++i) ne.push_back({c.pure_ne_row[i], c.pure_ne_col[i]});
  j["pure_ne"] = ne;
  j["mixed_ne"] = c.has_mixed_ne ? json{{"row", number(c.mixed_row)}, {"col", number(c.mixed_col)}}
                                 : json(nullptr);
  j["dominant_ne"] = c.dominant_row ? json{c.dominant_row, c.dominant_col} : json(nullptr);
  return j;
}

int cmd_classify(const Run& r, bool write_files) {
  require_payoffs(r);
  ewa_classification c{};
  check(ewa_classify(&r.payoffs, &c));
  const json j = classification_json(r.payoffs, c);
  print(j);
  if (write_files) {
    Output out{r.out_dir, {}};
    out.text("classify.json", j.dump(2) + "\n");
    write_manifest(r, out);
  }
  return kExitOk;
}

int cmd_fixed_points(const Run& r) {
  Output out{r.out_dir, {}};
  Table t;
  if (r.have_grid) {
    if (r.grid.a_points * r.grid.b_points == 0) usage_error("grid must have points on both axes");
    check(ewa_fixed_point_grid(r.symmetry, &r.grid, &r.cfg, r.threads, t.out()));
    out.csv("fixed_point_grid.csv", t);
  } else {
    require_payoffs(r);
    ewa_game_params gp{};
    check(ewa_game_params_of(&r.payoffs, &gp));
    check(ewa_fixed_points(&gp, &r.cfg, t.out()));
    out.csv("fixed_points.csv", t);
  }
  write_manifest(r, out);
  print({{"command", "fixed-points"}, {"rows", t.rows()}, {"outputs", out.files}});
  return kExitOk;
}

int cmd_simulate(const Run& r) {
  require_payoffs(r);
  if (r.steps < 1) usage_error("--steps must be >= 1");
  Output out{r.out_dir, {}};
  Table t;
  const bool stochastic = r.cfg.batch_T > 0;
  if (stochastic)
    check(ewa_simulate_stochastic(&r.payoffs, &r.cfg, r.start, r.steps, r.seed, t.out()));
  else
    check(ewa_trajectory(&r.payoffs, &r.cfg, r.start, r.steps, t.out()));
  out.csv(stochastic ? "run.csv" : "trajectory.csv", t);
  write_manifest(r, out);

  const std::size_t cx = t.column("x"), cy = t.column("y");
  double max_dx = 0.0;
  for (std::size_t i = 1; i < t.rows(); ++i)
    max_dx = std::max(max_dx, std::abs(t.at(i, cx) - t.at(i - 1, cx)));
  const std::size_t last = t.rows() - 1;
  print({{"command", "simulate"},
         {"steps", r.steps},
         {"final", {number(t.at(last, cx)), number(t.at(last, cy))}},
         {"max_step_dx", number(max_dx)},
         {"outputs", out.files}});
  return kExitOk;
}

json extrema(const Table& t, const std::string& col) {
  const std::size_t c = t.column(col);
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    lo = std::min(lo, t.at(i, c));
    hi = std::max(hi, t.at(i, c));
  }
  return {{"min", number(lo)}, {"max", number(hi)}};
}

int cmd_bifurcation(const Run& r) {
  require_payoffs(r);
  if (!r.have_scan) usage_error("bifurcation needs --axis and --range (or a preset)");
  Output out{r.out_dir, {}};
  Table t;
  check(ewa_bifurcation(&r.payoffs, &r.cfg, &r.scan, r.transient, r.steps, r.start, r.seed,
                        r.threads, t.out()));
  out.csv("bifurcation.csv", t);
  const json summary = {{"param_range", {number(r.scan.lo), number(r.scan.hi)}},
                        {"axis", r.scan.axis == EWA_AXIS_ALPHA ? "alpha" : "beta"},
                        {"n", r.steps},
                        {"transient", r.transient},
                        {"extrema", extrema(t, "x")}};
  out.text("summary.json", summary.dump(2) + "\n");
  write_manifest(r, out);
  print(summary);
  return kExitOk;
}

int cmd_lyapunov(const Run& run) {
  const ewa_lyapunov_opts opts{run.steps, run.transient, run.renorm};
  Output out{run.out_dir, {}};
  json summary;
  if (run.have_grid && !run.have_scan) {
    if (run.grid.a_points < 16 || run.grid.b_points < 16)
      usage_error("LLE grids need a resolution of at least 16");
    Table t;
    check(ewa_lle_grid(&run.grid, &run.cfg, run.start, &opts, run.threads, t.out()));
    out.csv("lle_grid.csv", t);
    summary = {{"grid", {"A", "B"}}, {"n", run.steps}, {"transient", run.transient},
               {"extrema", extrema(t, "lle")}};
  } else if (run.have_scan) {
    require_payoffs(run);
    Table t;
    check(ewa_lle_scan(&run.payoffs, &run.cfg, &run.scan, run.start, &opts, run.seed, run.threads,
                       t.out()));
    out.csv("lle_scan.csv", t);
    summary = {{"param_range", {number(run.scan.lo), number(run.scan.hi)}},
               {"axis", run.scan.axis == EWA_AXIS_ALPHA ? "alpha" : "beta"},
               {"n", run.steps},
               {"transient", run.transient},
               {"extrema", extrema(t, "lambda1")}};
  } else {
    require_payoffs(run);
    ewa_lyapunov_result res{};
    check(ewa_lyapunov(&run.payoffs, &run.cfg, run.start, &opts, run.seed, &res));
    summary = {{"lambda1", number(res.lambda1)},
               {"lambda2", number(res.lambda2)},
               {"kaplan_yorke", number(res.kaplan_yorke)},
               {"n", run.steps},
               {"transient", run.transient},
               {"renorm_interval", run.renorm}};
  }
  out.text("summary.json", summary.dump(2) + "\n");
  write_manifest(run, out);
  print(summary);
  return kExitOk;
}

int cmd_ensemble(const Run& r) {
  Output out{r.out_dir, {}};
  Table t;
  json summary;
  if (r.have_grid && !r.have_scan) {
    check(ewa_dominance_grid(&r.grid, r.samples, r.seed, r.threads, t.out()));
    out.csv("dominance_grid.csv", t);
    summary = {{"grid", {"ac", "bd_abs"}}, {"n_per_cell", r.samples}, {"rows", t.rows()}};
  } else {
    const ewa_scan_spec s = r.have_scan ? r.scan : ewa_scan_spec{EWA_AXIS_ALPHA, 0.0, 0.0, 1};
    check(ewa_ensemble(s.lo, s.hi, s.points, r.samples, r.seed, r.threads, t.out()));
    out.csv("ensemble.csv", t);
    json rows = json::array();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      json row;
      for (const char* name : {"gamma", "frac_dominance", "frac_coordination",
                               "frac_anticoordination", "frac_discoordination"})
        row[name] = number(t.at(i, t.column(name)));
      rows.push_back(row);
    }
    summary = {{"n", r.samples}, {"seed", r.seed}, {"fractions", rows}};
  }
  write_manifest(r, out);
  print(summary);
  return kExitOk;
}

int cmd_autocorr(const Run& r) {
  require_payoffs(r);
  if (r.cfg.batch_T == 0) usage_error("autocorr needs stochastic play: set --T");
  Output out{r.out_dir, {}};
  Table run;
  check(ewa_simulate_stochastic(&r.payoffs, &r.cfg, r.start, r.steps, r.seed, run.out()));
  out.csv("run.csv", run);
  const std::size_t cr = run.column("move_row"), cc = run.column("move_col");
  std::vector<std::uint8_t> row(run.rows()), col(run.rows());
  for (std::size_t i = 0; i < run.rows(); ++i) {
    row[i] = static_cast<std::uint8_t>(run.at(i, cr));
    col[i] = static_cast<std::uint8_t>(run.at(i, cc));
  }
  Table ac;
  check(ewa_autocorrelation(row.data(), col.data(), row.size(), r.max_lag, ac.out()));
  out.csv("autocorr.csv", ac);
  write_manifest(r, out);
  const double band = 3.0 / std::sqrt(static_cast<double>(row.size()));
  std::size_t inside = 0;
  const std::size_t c_row = ac.column("r_row"), c_col = ac.column("r_col");
  for (std::size_t k = 0; k < ac.rows(); ++k)
    inside += (std::abs(ac.at(k, c_row)) < band) + (std::abs(ac.at(k, c_col)) < band);
  print({{"n", row.size()},
         {"max_lag", r.max_lag},
         {"white_noise_band", number(band)},
         {"fraction_inside_band", number(static_cast<double>(inside) / (2.0 * ac.rows()))},
         {"outputs", out.files}});
  return kExitOk;
}

int dispatch(const Run& r, bool classify_files) {
  if (r.command == "classify") return cmd_classify(r, classify_files);
  if (r.command == "fixed-points") return cmd_fixed_points(r);
  if (r.command == "simulate") return cmd_simulate(r);
  if (r.command == "bifurcation") return cmd_bifurcation(r);
  if (r.command == "lyapunov") return cmd_lyapunov(r);
  if (r.command == "ensemble") return cmd_ensemble(r);
  if (r.command == "autocorr") return cmd_autocorr(r);
  usage_error("unknown command " + r.command);
}

int cmd_replay(const Flags& f) {
  if (f.manifest.empty()) usage_error("replay needs --manifest");
  json m;
  try {
    m = json::parse(read_file(f.manifest));
  } catch (const json::exception& e) {
    usage_error(std::string("bad manifest: ") + e.what());
  }
  Run r;
  try {
    r = run_from_json(m.at("command").get<std::string>(), m.at("parameters"));
  } catch (const json::exception& e) {
    usage_error(std::string("bad manifest: ") + e.what());
  }
  r.out_dir = f.has("out") ? f.out : fs::path(f.manifest).parent_path().string();
  r.threads = f.has("threads") ? f.threads : env_threads();
  return dispatch(r, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EWA learning experiments on 2x2 games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ewa_version()));

  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "Classify a game and report its parameters and equilibria"},
      {"fixed-points", "Fixed points of one game or of an (A, B) grid"},
      {"simulate", "Deterministic or stochastic trajectory"},
      {"bifurcation", "Bifurcation diagram along alpha or beta"},
      {"lyapunov", "Lyapunov exponents at a point, along an axis or on a grid"},
      {"ensemble", "Class fractions of random games"},
      {"autocorr", "Autocorrelation of sampled moves"},
  };
  Flags flags;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, flags);
    subs.emplace_back(name, sub);
  }
  CLI::App* replay = app.add_subcommand("replay", "Re-run the experiment recorded in a manifest");
  replay->add_option("--manifest", flags.manifest, "manifest.json to replay")->required();
  CLI::Option* replay_out = replay->add_option("--out", flags.out, "Output directory");
  CLI::Option* replay_threads = replay->add_option("--threads", flags.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (replay->parsed()) {
      flags.opts["out"] = replay_out;
      flags.opts["threads"] = replay_threads;
      return cmd_replay(flags);
    }
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      // Option handles were overwritten by later subcommands; rebind.
      for (auto& [key, opt] : flags.opts) opt = sub->get_option("--" + key);
      const Run r = resolve(name, flags);
      return dispatch(r, flags.has("out"));
    }
  } catch (const CliError& e) {
    std::cerr << "ewa-lab: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "ewa-lab: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
