#include "gst/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gst/catalog.hpp"
#include "gst/transform.hpp"
#include "gst/verify.hpp"

namespace gst {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitSpec = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitImaginary = 4;

struct CliSpec {
  std::string pair;
  std::string tabulated;
  std::string grid = "1:1:1";
  std::string form = "eq9";
  std::string out;
  std::string format = "csv";
  std::string suite = "all";
  double rho = 0.0;       // 0 = take from the pair spec
  double alpha = 0.5;     // admissibility exponent for tabulated sources
  double rel_tol = 0.0;   // 0 = library default
  bool best_effort = false;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4)
    throw DomainError("grid: expected start:stop:count[:log]");
  bool log = parts.size() == 4;
  if (log && parts[3] != "log")
    throw DomainError("grid: trailing field must be 'log'");
  double start, stop;
  long count;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    count = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw DomainError("grid: could not parse numbers in '" + s + "'");
  }
  if (count < 1) throw DomainError("grid: count must be >= 1");
  if (log && !(start > 0.0)) throw DomainError("grid: log spacing requires start > 0");
  std::vector<double> g;
  if (count == 1) {
    g.push_back(start);
    return g;
  }
  for (long i = 0; i < count; ++i) {
    double f = static_cast<double>(i) / (count - 1);
    g.push_back(log ? start * std::pow(stop / start, f)
                    : start + f * (stop - start));
  }
  return g;
}

std::map<std::string, double> parse_kv(const std::string& s) {
  std::map<std::string, double> kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw DomainError("pair: expected key=value, got '" + item + "'");
    try {
      kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("pair: bad number in '" + item + "'");
    }
  }
  return kv;
}

double take(std::map<std::string, double>& kv, const std::string& key,
            std::optional<double> fallback = {}) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw DomainError("pair: missing parameter '" + key + "'");
  }
  double v = it->second;
  kv.erase(it);
  return v;
}

TransformPair resolve_pair(const CliSpec& spec) {
  auto colon = spec.pair.find(':');
  std::string family = spec.pair.substr(0, colon);
  std::map<std::string, double> kv =
      colon == std::string::npos ? std::map<std::string, double>{}
                                 : parse_kv(spec.pair.substr(colon + 1));
  std::optional<double> rho_flag;
  if (spec.rho > 0.0) rho_flag = spec.rho;
  TransformPair pair;
  if (family == "power") {
    double nu = take(kv, "nu");
    pair = pair_power(nu, take(kv, "rho", rho_flag));
  } else if (family == "power_continued") {
    double nu = take(kv, "nu");
    pair = pair_power_continued(nu, take(kv, "rho", rho_flag));
  } else if (family == "point") {
    double t = take(kv, "t");
    pair = pair_point_mass(t, take(kv, "rho", rho_flag));
  } else if (family == "hyper") {
    double nu = take(kv, "nu");
    double lambda = take(kv, "lambda");
    pair = pair_power_hyper(nu, lambda, take(kv, "rho", rho_flag));
  } else {
    throw DomainError("pair: unknown family '" + family + "'");
  }
  if (!kv.empty())
    throw DomainError("pair: unknown parameter '" + kv.begin()->first + "'");
  if (rho_flag && std::abs(*rho_flag - pair.rho) > 1e-12)
    throw DomainError("--rho conflicts with the rho in the pair spec");
  return pair;
}

SourceFunction resolve_source(const CliSpec& spec, double* rho_out) {
  if (!spec.tabulated.empty()) {
    if (!spec.pair.empty())
      throw DomainError("give either --pair or --tabulated, not both");
    if (!(spec.rho > 0.0))
      throw DomainError("--tabulated requires --rho");
    std::ifstream in(spec.tabulated);
    if (!in) throw DomainError("cannot open " + spec.tabulated);
    std::string line;
    if (!std::getline(in, line))
      throw DomainError("tabulated file is empty");
    std::vector<double> ys, fs;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto comma = line.find(',');
      if (comma == std::string::npos)
        throw DomainError("tabulated file: expected 'y,F' rows");
      try {
        ys.push_back(std::stod(line.substr(0, comma)));
        fs.push_back(std::stod(line.substr(comma + 1)));
      } catch (const std::exception&) {
        throw DomainError("tabulated file: bad number in '" + line + "'");
      }
    }
    *rho_out = spec.rho;
    return make_tabulated_source(ys, fs, spec.alpha);
  }
  if (spec.pair.empty()) throw DomainError("--pair or --tabulated is required");
  TransformPair pair = resolve_pair(spec);
  *rho_out = pair.rho;
  return pair.F;
}

struct Row {
  std::vector<double> values;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
  std::string tag_column;  // optional trailing constant string column
  std::string tag_value;
};

void write_table(const Table& t, const CliSpec& spec) {
  std::ostringstream os;
  if (spec.format == "csv") {
    for (size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << t.columns[i];
    if (!t.tag_column.empty()) os << "," << t.tag_column;
    os << "\n";
    for (const Row& r : t.rows) {
      for (size_t i = 0; i < r.values.size(); ++i)
        os << (i ? "," : "") << fmt(r.values[i]);
      if (!t.tag_column.empty()) os << "," << t.tag_value;
      os << "\n";
    }
  } else {
    json arr = json::array();
    for (const Row& r : t.rows) {
      json obj;
      for (size_t i = 0; i < r.values.size(); ++i)
        obj[t.columns[i]] = r.values[i];
      if (!t.tag_column.empty()) obj[t.tag_column] = t.tag_value;
      arr.push_back(obj);
    }
    os << arr.dump(2) << "\n";
  }
  if (spec.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(spec.out);
    if (!f) throw DomainError("cannot write " + spec.out);
    f << os.str();
  }
}

TransformParams make_params(const CliSpec& spec, double rho) {
  TransformParams tp;
  tp.rho = rho;
  if (spec.rel_tol > 0.0) tp.quad.rel_tol = spec.rel_tol;
  return tp;
}

int run_forward(const CliSpec& spec) {
  double rho = 0.0;
  SourceFunction F = resolve_source(spec, &rho);
  TransformParams tp = make_params(spec, rho);
  std::vector<double> grid = parse_grid(spec.grid);
  Table t;
  t.columns = {"z_re", "z_im", "G_re", "G_im", "err_estimate"};
  bool degraded = false;
  for (double z : grid) {
    double err = 0.0;
    Cplx g;
    try {
      g = forward_gst(F, tp, Cplx(z, 0.0), &err);
    } catch (const NonConvergence& nc) {
      if (!spec.best_effort) throw;
      g = nc.best_value;
      err = nc.err_estimate;
      degraded = true;
    }
    t.rows.push_back({{z, 0.0, g.real(), g.imag(), err}});
  }
  write_table(t, spec);
  return degraded ? kExitNumerical : kExitOk;
}

int run_inverse(const CliSpec& spec, bool disc_only) {
  if (!spec.tabulated.empty())
    throw DomainError(
        "tabulated input is refused for inverse transforms: real-axis samples "
        "cannot supply G on the complex plane");
  TransformPair pair = resolve_pair(spec);
  TransformParams tp = make_params(spec, pair.rho);
  std::vector<double> grid = parse_grid(spec.grid);
  for (double y : grid)
    if (!(y > 0.0)) throw DomainError("inverse grids require y > 0");

  Table t;
  t.tag_column = "form";
  t.tag_value = disc_only ? "disc" : spec.form;
  t.columns = {disc_only ? "t" : "y", disc_only ? "delta" : "F",
               "err_estimate"};
  if (!disc_only) {
    if (spec.form == "eq15" && !(pair.rho > 1.0))
      throw DomainError("form eq15 requires rho > 1");
    if (spec.form == "disc-rho1" && std::abs(pair.rho - 1.0) > 1e-12)
      throw DomainError("form disc-rho1 requires rho = 1");
    if (spec.form == "abel") {
      if (!pair.delta.eval)
        throw DomainError("form abel requires a pair with a closed-form delta");
      if (!(pair.rho > 1.0)) throw DomainError("form abel requires rho > 1");
    }
  }
  bool degraded = false;
  for (double y : grid) {
    double err = 0.0, v = 0.0;
    try {
      if (disc_only) {
        v = discontinuity(pair.G, tp, y, &err);
      } else if (spec.form == "eq9") {
        v = inverse_gst(pair.G, tp, y, &err);
      } else if (spec.form == "eq14") {
        v = inverse_gst_zplane(pair.G, tp, y, &err);
      } else if (spec.form == "eq15") {
        v = inverse_gst_ibp(pair.G, tp, y, &err);
      } else if (spec.form == "abel") {
        v = abel_inverse_from_delta(pair.delta, tp, y);
      } else if (spec.form == "disc-rho1") {
        v = stieltjes_disc_inverse(pair.G, tp, y, &err);
      } else {
        throw DomainError("unknown form '" + spec.form + "'");
      }
    } catch (const NonConvergence& nc) {
      if (!spec.best_effort) throw;
      v = nc.best_value.real();
      err = nc.err_estimate;
      degraded = true;
    }
    t.rows.push_back({{y, v, err}});
  }
  write_table(t, spec);
  return degraded ? kExitNumerical : kExitOk;
}

int run_verify(const CliSpec& spec) {
  std::vector<CheckRecord> records = run_suite(spec.suite, spec.rho);
  json arr = json::array();
  size_t failed = 0;
  for (const CheckRecord& r : records) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    arr.push_back({{"check", r.check},
                   {"params", params},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_err", r.abs_err},
                   {"rel_err", r.rel_err},
                   {"pass", r.pass}});
    if (!r.pass) ++failed;
  }
  std::string text = arr.dump(2) + "\n";
  if (spec.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(spec.out);
    if (!f) throw DomainError("cannot write " + spec.out);
    f << text;
  }
  std::cerr << records.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFail;
}

int run_pairs() {
  std::cout << "power:nu=<nu>,rho=<rho>             F = y^(nu-1), 0 < nu < rho\n"
            << "power_continued:nu=<nu>,rho=<rho>   analytic continuation of "
               "the power pair (closed-form G only)\n"
            << "point:t=<t>,rho=<rho>               F = delta(y - t), t > 0\n"
            << "hyper:nu=<nu>,lambda=<l>,rho=<rho>  F = y^(nu-1)(1+y)^(-l), "
               "0 < nu < rho + l\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"generalized Stieltjes transform toolkit"};
  app.require_subcommand(1);
  CliSpec spec;

  auto add_common = [&](CLI::App* sub, bool wants_form) {
    sub->add_option("--rho", spec.rho, "transform index");
    sub->add_option("--pair", spec.pair, "pair spec, e.g. power:nu=0.5,rho=1.5");
    sub->add_option("--grid", spec.grid, "start:stop:count[:log]");
    sub->add_option("--out", spec.out, "output path (default stdout)");
    sub->add_option("--format", spec.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--rel-tol", spec.rel_tol, "quadrature relative tolerance");
    sub->add_flag("--best-effort", spec.best_effort,
                  "emit best values instead of failing on non-convergence");
    if (wants_form)
      sub->add_option("--form", spec.form, "eq9|eq14|eq15|abel|disc-rho1")
          ->check(CLI::IsMember({"eq9", "eq14", "eq15", "abel", "disc-rho1"}));
  };

  CLI::App* fwd = app.add_subcommand("forward", "evaluate G on a z grid");
  add_common(fwd, false);
  fwd->add_option("--tabulated", spec.tabulated, "two-column CSV y,F");
  fwd->add_option("--alpha", spec.alpha, "admissibility exponent for tabulated F");

  CLI::App* inv = app.add_subcommand("inverse", "recover F on a y grid");
  add_common(inv, true);
  CLI::App* disc = app.add_subcommand("disc", "cut discontinuity on a t grid");
  add_common(disc, false);

  CLI::App* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", spec.suite, "kernel|sifting|roundtrip|forms|laplace|abel|radial|all");
  ver->add_option("--rho", spec.rho, "restrict kernel grids to one rho");
  ver->add_option("--out", spec.out, "report path (default stdout)");
  ver->add_option("--format", spec.format, "json")
      ->check(CLI::IsMember({"json"}));

  app.add_subcommand("pairs", "list pair families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitSpec;
  }

  try {
    if (fwd->parsed()) return run_forward(spec);
    if (inv->parsed()) return run_inverse(spec, false);
    if (disc->parsed()) return run_inverse(spec, true);
    if (ver->parsed()) return run_verify(spec);
    return run_pairs();
  } catch (const ResidualImaginaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitImaginary;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace gst
