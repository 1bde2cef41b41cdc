// floq_main.cpp — command-line front end for the two-spin Floquet toolkit
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "floq/dissipation.hpp"
#include "floq/floquet_analytic.hpp"
#include "floq/floquet_numeric.hpp"
#include "floq/model.hpp"
#include "floq/parallel.hpp"
#include "floq/phases.hpp"
#include "floq/version.hpp"
#include "floq/work.hpp"

namespace {

using floq::kPi;
using json = nlohmann::ordered_json;

struct Sweep {
  std::string axis;
  double lo = 0.0, hi = 0.0;
  int steps = 0;
};

Sweep parse_sweep(const std::string& spec) {
  Sweep s;
  std::istringstream in(spec);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ':')) parts.push_back(part);
  if (parts.size() != 4)
    throw std::invalid_argument("sweep spec must be axis:lo:hi:steps, got '" + spec + "'");
  s.axis = parts[0];
  try {
    s.lo = std::stod(parts[1]);
    s.hi = std::stod(parts[2]);
    s.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw std::invalid_argument("sweep spec has non-numeric fields: '" + spec + "'");
  }
  if (s.steps < 2) throw std::invalid_argument("sweep needs steps >= 2: '" + spec + "'");
  if (!(s.hi > s.lo)) throw std::invalid_argument("sweep needs hi > lo: '" + spec + "'");
  return s;
}

double sweep_value(const Sweep& s, int i) { return s.lo + (s.hi - s.lo) * i / (s.steps - 1); }

struct RunConfig {
  double lambda = 1.0;
  double f = 0.5;
  std::vector<double> betas = {1.0};  // initial-state inverse temperatures
  double beta_bath = 1.0;
  double j0 = 1.0;
  std::vector<std::string> sweep_specs;
  std::string format = "csv";
  std::string out;
  double tol_integrator = 1e-10;
  double tol_boundary = 1e-9;  // classification tolerance and rate-divergence guard
  int lmax = 1;
  int threads = 0;  // 0 = all hardware threads
  std::string boundary = "b0";
  std::vector<double> offsets = {1e-2, 1e-3, 1e-4};
  std::string config_path;
};

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_cell(const json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return csv_escape(cell.get<std::string>());
  if (cell.is_number_float()) return fmt17(cell.get<double>());
  if (cell.is_number_integer()) return std::to_string(cell.get<long long>());
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  return csv_escape(cell.dump());
}

void write_csv_table(std::ostream& os, const json& columns, const json& rows) {
  for (size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(columns[i].get<std::string>());
  os << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

json config_json(const RunConfig& cfg, const std::string& command) {
  json j;
  j["command"] = command;
  j["lambda"] = cfg.lambda;
  j["f"] = cfg.f;
  j["beta"] = cfg.betas;
  j["beta_bath"] = cfg.beta_bath;
  j["j0"] = cfg.j0;
  j["sweep"] = cfg.sweep_specs;
  j["format"] = cfg.format;
  j["out"] = cfg.out;
  j["tol_integrator"] = cfg.tol_integrator;
  j["tol_boundary"] = cfg.tol_boundary;
  j["lmax"] = cfg.lmax;
  j["threads"] = cfg.threads;
  j["boundary"] = cfg.boundary;
  j["offsets"] = cfg.offsets;
  return j;
}

json make_report(const RunConfig& cfg, const std::string& command, json columns, json rows) {
  json report;
  report["command"] = command;
  report["version"] = floq::kVersion;
  report["config"] = config_json(cfg, command);
  report["columns"] = std::move(columns);
  report["rows"] = std::move(rows);
  return report;
}

// emits the report: JSON as-is; CSV as the columns/rows table plus any tables
// listed under report["csv_extra_tables"] (sidecar files when --out is set)
void emit(const RunConfig& cfg, const json& report) {
  const bool to_file = !cfg.out.empty();
  std::ofstream file;
  if (to_file) {
    file.open(cfg.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
  }
  std::ostream& os = to_file ? static_cast<std::ostream&>(file) : std::cout;

  if (cfg.format == "json") {
    os << report.dump(2) << '\n';
    return;
  }
  write_csv_table(os, report.at("columns"), report.at("rows"));
  if (report.contains("csv_extra_tables")) {
    for (const auto& table : report.at("csv_extra_tables")) {
      const std::string name = table.at("name").get<std::string>();
      if (to_file) {
        std::ofstream side(cfg.out + "." + name + ".csv", std::ios::binary);
        if (!side) throw std::runtime_error("cannot open sidecar output for " + name);
        write_csv_table(side, table.at("columns"), table.at("rows"));
      } else {
        os << '\n';
        write_csv_table(os, table.at("columns"), table.at("rows"));
      }
    }
  }
}

floq::Boundary boundary_from_name(const std::string& name) {
  for (int i = 0; i < 5; ++i)
    if (name == floq::kBoundaryNames[i]) return static_cast<floq::Boundary>(i);
  throw std::invalid_argument("unknown boundary name: " + name + " (expected b0..b4)");
}

// bisection of a boundary function along f at fixed lambda (axis-f sweeps)
double refine_crossing_f(double lambda, int bi, double flo, double fhi) {
  double vlo = floq::boundary_values(lambda, flo)[bi];
  for (int it = 0; it < 200; ++it) {
    const double fm = 0.5 * (flo + fhi);
    const double vm = floq::boundary_values(lambda, fm)[bi];
    if (std::abs(vm) < 1e-12 || fhi - flo < 1e-15) return fm;
    if ((vm > 0.0) == (vlo > 0.0)) {
      flo = fm;
      vlo = vm;
    } else {
      fhi = fm;
    }
  }
  return 0.5 * (flo + fhi);
}

int cmd_quasienergies(const RunConfig& cfg) {
  if (cfg.sweep_specs.size() != 1)
    throw std::invalid_argument("quasienergies needs exactly one --sweep over lambda or f");
  const Sweep sweep = parse_sweep(cfg.sweep_specs[0]);
  if (sweep.axis != "lambda" && sweep.axis != "f")
    throw std::invalid_argument("quasienergies sweep axis must be lambda or f");

  json rows = json::array();
  json crossings = json::array();
  std::array<double, 5> prev_b{};
  bool have_prev = false;
  double prev_x = 0.0;

  for (int i = 0; i < sweep.steps; ++i) {
    const double x = sweep_value(sweep, i);
    const double lambda = sweep.axis == "lambda" ? x : cfg.lambda;
    const double f = sweep.axis == "f" ? x : cfg.f;
    const auto eps = floq::quasienergies(lambda, f);

    std::string marker;
    json location;
    if (lambda > 0.0 && f > 0.0) {
      const auto b = floq::boundary_values(lambda, f);
      if (have_prev) {
        for (int bi = 0; bi < 5; ++bi) {
          if ((b[bi] > 0.0) == (prev_b[bi] > 0.0)) continue;
          double lstar;
          if (sweep.axis == "lambda")
            lstar = floq::find_boundary(f, static_cast<floq::Boundary>(bi), {prev_x, x});
          else
            lstar = refine_crossing_f(lambda, bi, prev_x, x);
          if (!marker.empty()) marker += '|';
          marker += floq::kBoundaryNames[bi];
          if (location.is_null()) location = lstar;
          crossings.push_back(
              {{"boundary", floq::kBoundaryNames[bi]}, {"axis", sweep.axis}, {"location", lstar}});
        }
      }
      prev_b = b;
      have_prev = true;
      prev_x = x;
    }
    rows.push_back({lambda, f, eps[0], eps[1], eps[2], eps[3], marker, location});
  }

  json report = make_report(cfg, "quasienergies",
                            {"lambda", "f", "eps1", "eps2", "eps3", "eps4", "crossing",
                             "crossing_location"},
                            std::move(rows));
  report["crossings"] = std::move(crossings);
  emit(cfg, report);
  return 0;
}

int cmd_work(const RunConfig& cfg) {
  json rows = json::array();
  json columns;

  if (cfg.sweep_specs.size() == 2) {
    Sweep sl = parse_sweep(cfg.sweep_specs[0]);
    Sweep sf = parse_sweep(cfg.sweep_specs[1]);
    if (sl.axis == "f" && sf.axis == "lambda") std::swap(sl, sf);
    if (sl.axis != "lambda" || sf.axis != "f")
      throw std::invalid_argument("work 2D mode needs sweeps over lambda and f");
    const double beta = cfg.betas.empty() ? 0.0 : cfg.betas.front();
    columns = {"lambda", "f", "beta", "mean_work", "jarzynski_residual"};
    const int total = sl.steps * sf.steps;
    const auto cells = floq::parallel_map<std::array<double, 2>>(total, cfg.threads, [&](int idx) {
      const double lambda = sweep_value(sl, idx % sl.steps);
      const double f = sweep_value(sf, idx / sl.steps);
      const floq::ModelParams p(lambda, f, beta);
      const double w = floq::mean_work(p);
      const double jr = std::abs(floq::jarzynski_moment(floq::work_distribution(p)) - 1.0);
      return std::array<double, 2>{w, jr};
    });
    for (int idx = 0; idx < total; ++idx) {
      rows.push_back({sweep_value(sl, idx % sl.steps), sweep_value(sf, idx / sl.steps), beta,
                      cells[idx][0], cells[idx][1]});
    }
  } else if (cfg.sweep_specs.size() == 1) {
    const Sweep sd = parse_sweep(cfg.sweep_specs[0]);
    if (sd.axis != "diag")
      throw std::invalid_argument(
          "work takes either two sweeps (lambda, f) or one 'diag' sweep along lambda = f");
    columns = {"f", "beta", "mean_work", "asymptote", "jarzynski_residual"};
    for (int i = 0; i < sd.steps; ++i) {
      const double f = sweep_value(sd, i);
      for (const double beta : cfg.betas) {
        const floq::ModelParams p(f, f, beta);
        const double w = floq::mean_work(p);
        const double asym = 0.5 * f * std::pow(std::sin(std::sqrt(2.0) * kPi * f), 2);
        const double jr = std::abs(floq::jarzynski_moment(floq::work_distribution(p)) - 1.0);
        rows.push_back({f, beta, w, asym, jr});
      }
    }
  } else {
    throw std::invalid_argument("work needs one 'diag' sweep or two sweeps (lambda and f)");
  }

  emit(cfg, make_report(cfg, "work", std::move(columns), std::move(rows)));
  return 0;
}

int cmd_ness(const RunConfig& cfg) {
  if (cfg.sweep_specs.size() != 1)
    throw std::invalid_argument("ness needs exactly one --sweep over lambda");
  const Sweep sweep = parse_sweep(cfg.sweep_specs[0]);
  if (sweep.axis != "lambda") throw std::invalid_argument("ness sweep axis must be lambda");

  const auto scan = floq::ness_scan(cfg.f, {sweep.lo, sweep.hi}, sweep.steps, cfg.beta_bath,
                                    cfg.threads, cfg.tol_boundary);

  json rows = json::array();
  json errors = json::array();
  int ok_count = 0;
  for (const auto& row : scan) {
    if (row.ok) {
      ++ok_count;
      rows.push_back({row.lambda, row.label.str(), row.p(0), row.p(1), row.p(2), row.p(3),
                      row.residual});
    } else {
      rows.push_back({row.lambda, row.label.str(), nullptr, nullptr, nullptr, nullptr, nullptr});
      errors.push_back({{"lambda", row.lambda}, {"message", row.error}});
    }
  }

  json report = make_report(cfg, "ness",
                            {"lambda", "phase", "p1", "p2", "p3", "p4", "residual"},
                            std::move(rows));
  report["errors"] = errors;
  emit(cfg, report);

  // sidecar error list for CSV consumers, plus stderr for visibility
  if (!errors.empty()) {
    if (!cfg.out.empty() && cfg.format == "csv") {
      std::ofstream side(cfg.out + ".errors", std::ios::binary);
      for (const auto& e : errors)
        side << fmt17(e.at("lambda").get<double>()) << '\t'
             << e.at("message").get<std::string>() << '\n';
    }
    for (const auto& e : errors)
      std::cerr << "ness: lambda=" << fmt17(e.at("lambda").get<double>()) << ": "
                << e.at("message").get<std::string>() << '\n';
  }
  return ok_count >= static_cast<int>(0.9 * sweep.steps + 0.5) ? 0 : 3;
}

int cmd_phase_diagram(const RunConfig& cfg) {
  Sweep sl{"lambda", 3.0 / 200, 3.0, 200};
  Sweep sf{"f", 3.0 / 200, 3.0, 200};
  if (!cfg.sweep_specs.empty()) {
    if (cfg.sweep_specs.size() != 2)
      throw std::invalid_argument("phase-diagram needs zero or two --sweep specs");
    sl = parse_sweep(cfg.sweep_specs[0]);
    sf = parse_sweep(cfg.sweep_specs[1]);
    if (sl.axis == "f" && sf.axis == "lambda") std::swap(sl, sf);
    if (sl.axis != "lambda" || sf.axis != "f")
      throw std::invalid_argument("phase-diagram sweeps must cover lambda and f");
  }

  const floq::PhaseDiagram diagram = floq::phase_diagram(
      {sl.lo, sl.hi}, {sf.lo, sf.hi}, sl.steps, sf.steps, cfg.tol_boundary, cfg.threads);

  json rows = json::array();
  for (int jf = 0; jf < sf.steps; ++jf)
    for (int il = 0; il < sl.steps; ++il)
      rows.push_back({diagram.lambdas[il], diagram.fs[jf],
                      diagram.labels[il + static_cast<size_t>(jf) * sl.steps].str()});

  json report = make_report(cfg, "phase-diagram", {"lambda", "f", "phase"}, std::move(rows));
  json curve_rows = json::array();
  json curves_obj;
  for (int bi = 0; bi < 5; ++bi) {
    json pts = json::array();
    for (const auto& [lambda, f] : diagram.curves[bi]) {
      pts.push_back({lambda, f});
      curve_rows.push_back({floq::kBoundaryNames[bi], lambda, f});
    }
    curves_obj[floq::kBoundaryNames[bi]] = std::move(pts);
  }
  report["curves"] = std::move(curves_obj);
  report["metadata"] = {
      {"phase_letter_convention",
       "letters A-D / E-G anchored by the f=1/2 and f=6/5 scan lines; H denotes the remaining "
       "sign-vector class (all five boundary functions positive)"}};
  report["csv_extra_tables"] =
      json::array({{{"name", "boundaries"},
                    {"columns", {"boundary", "lambda", "f"}},
                    {"rows", std::move(curve_rows)}}});
  emit(cfg, report);
  return 0;
}

int cmd_boundary_report(const RunConfig& cfg) {
  if (cfg.format != "json")
    throw std::invalid_argument("boundary-report emits a JSON report; use --format json");
  const floq::Boundary which = boundary_from_name(cfg.boundary);
  const floq::BoundaryReport rep =
      floq::boundary_behavior(cfg.f, which, cfg.beta_bath, cfg.offsets);

  const auto vec4 = [](const floq::Vec4r& v) { return json{v(0), v(1), v(2), v(3)}; };
  json samples = json::array();
  for (const auto& s : rep.samples) {
    samples.push_back({{"delta", s.delta},
                       {"ok_left", s.ok_left},
                       {"ok_right", s.ok_right},
                       {"error", s.error},
                       {"p_left", vec4(s.p_left)},
                       {"p_right", vec4(s.p_right)},
                       {"pair_gap_left", s.pair_gap_left},
                       {"pair_gap_right", s.pair_gap_right},
                       {"continuity", s.continuity}});
  }
  json report;
  report["command"] = "boundary-report";
  report["version"] = floq::kVersion;
  report["config"] = config_json(cfg, "boundary-report");
  report["boundary"] = cfg.boundary;
  report["f"] = rep.f_fixed;
  report["beta_bath"] = rep.beta_bath;
  report["lambda_star"] = rep.lambda_star;
  report["designated_pair"] = rep.designated_pair;
  report["observed_pair"] = rep.observed_pair;
  report["left_is_uniform"] = rep.left_is_uniform;
  report["right_is_uniform"] = rep.right_is_uniform;
  report["exactly_two_coincide"] = rep.exactly_two;
  report["samples"] = std::move(samples);
  report["slope_left"] = vec4(rep.slope_left);
  report["slope_right"] = vec4(rep.slope_right);
  report["slope_gaps"] = rep.slope_gaps;
  report["slope_gap"] = rep.slope_gap;
  emit(cfg, report);
  return 0;
}

int cmd_propagator(const RunConfig& cfg) {
  Sweep sweep{"t", 0.0, 2.0 * kPi, 65};
  if (!cfg.sweep_specs.empty()) {
    if (cfg.sweep_specs.size() != 1)
      throw std::invalid_argument("propagator needs zero or one --sweep over t");
    sweep = parse_sweep(cfg.sweep_specs[0]);
    if (sweep.axis != "t") throw std::invalid_argument("propagator sweep axis must be t");
  }
  if (sweep.lo < 0.0) throw std::invalid_argument("propagator sweep needs t >= 0");

  json columns = json::array({"t"});
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) {
      columns.push_back("re" + std::to_string(r) + std::to_string(c));
      columns.push_back("im" + std::to_string(r) + std::to_string(c));
    }
  json rows = json::array();
  for (int i = 0; i < sweep.steps; ++i) {
    const double t = sweep_value(sweep, i);
    const floq::Mat4c psi = floq::propagator(cfg.lambda, cfg.f, t);
    json row = json::array({t});
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        row.push_back(psi(r, c).real());
        row.push_back(psi(r, c).imag());
      }
    rows.push_back(std::move(row));
  }
  emit(cfg, make_report(cfg, "propagator", std::move(columns), std::move(rows)));
  return 0;
}

int cmd_rates(const RunConfig& cfg) {
  const floq::ModelParams p(cfg.lambda, cfg.f, 0.0, cfg.beta_bath, cfg.j0);
  const floq::RateMatrix rates =
      floq::twospin_rates(p, cfg.lmax, cfg.tol_boundary);
  const floq::MatXr gt = floq::effective_generator(rates);

  json rows = json::array();
  for (int from = 1; from <= 4; ++from)
    for (int to = 1; to <= 4; ++to)
      rows.push_back({from, to, rates.gamma(to - 1, from - 1), gt(to - 1, from - 1)});

  json report =
      make_report(cfg, "rates", {"from", "to", "gamma", "gamma_tilde"}, std::move(rows));
  const auto eps = floq::quasienergies(p);
  report["quasienergies"] = {eps[0], eps[1], eps[2], eps[3]};
  report["lmax"] = rates.lmax;
  report["truncation_defect"] = rates.truncation_defect;
  report["irreducible"] = floq::check_irreducible(rates);
  emit(cfg, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"floq: exact and numerical Floquet dynamics, work statistics, and driven-bath "
               "steady states of a two-spin model"};
  app.require_subcommand(1);

  auto* o_lambda = app.add_option("--lambda", cfg.lambda, "exchange coupling (> 0)");
  auto* o_f = app.add_option("--f", cfg.f, "drive amplitude (>= 0)");
  auto* o_beta = app.add_option("--beta", cfg.betas, "initial-state inverse temperature(s)");
  auto* o_bbath = app.add_option("--beta-bath", cfg.beta_bath, "bath inverse temperature (> 0)");
  auto* o_j0 = app.add_option("--j0", cfg.j0, "bath spectral density (> 0)");
  auto* o_sweep =
      app.add_option("--sweep", cfg.sweep_specs, "sweep spec axis:lo:hi:steps (repeatable)");
  auto* o_format = app.add_option("--format", cfg.format, "output format: csv or json")
                       ->check(CLI::IsMember({"csv", "json"}));
  auto* o_out = app.add_option("--out", cfg.out, "output path (default stdout)");
  auto* o_ti = app.add_option("--tol-integrator", cfg.tol_integrator, "ODE tolerance");
  auto* o_tb = app.add_option("--tol-boundary", cfg.tol_boundary,
                              "phase-classification / rate-divergence tolerance");
  auto* o_lmax = app.add_option("--lmax", cfg.lmax, "Fourier sideband truncation");
  auto* o_threads = app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--config", cfg.config_path, "JSON config file (flags override it)");

  auto* sub_q = app.add_subcommand("quasienergies", "quasienergy curves with boundary markers");
  auto* sub_w = app.add_subcommand("work", "mean work and Jarzynski residual datasets");
  auto* sub_n = app.add_subcommand("ness", "steady-state occupation scan along lambda");
  auto* sub_p = app.add_subcommand("phase-diagram", "phase-letter grid plus boundary polylines");
  auto* sub_b = app.add_subcommand("boundary-report", "coincidence/kink report at a boundary");
  auto* sub_u = app.add_subcommand("propagator", "one-period propagator matrix entries over t");
  auto* sub_r = app.add_subcommand("rates", "golden-rule rate and generator matrices");
  auto* o_boundary =
      sub_b->add_option("--boundary", cfg.boundary, "boundary name b0..b4 (default b0)");
  auto* o_offsets =
      sub_b->add_option("--offsets", cfg.offsets, "probe offsets, positive decreasing");
  for (auto* sub : {sub_q, sub_w, sub_n, sub_p, sub_b, sub_u, sub_r}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (!cfg.config_path.empty()) {
      std::ifstream in(cfg.config_path);
      if (!in) throw std::invalid_argument("cannot open config file: " + cfg.config_path);
      const json file = json::parse(in);
      const auto load = [&](const char* key, const CLI::Option* opt, auto& target) {
        if (file.contains(key) && opt->count() == 0)
          target = file.at(key).get<std::decay_t<decltype(target)>>();
      };
      load("lambda", o_lambda, cfg.lambda);
      load("f", o_f, cfg.f);
      load("beta", o_beta, cfg.betas);
      load("beta_bath", o_bbath, cfg.beta_bath);
      load("j0", o_j0, cfg.j0);
      load("sweep", o_sweep, cfg.sweep_specs);
      load("format", o_format, cfg.format);
      load("out", o_out, cfg.out);
      load("tol_integrator", o_ti, cfg.tol_integrator);
      load("tol_boundary", o_tb, cfg.tol_boundary);
      load("lmax", o_lmax, cfg.lmax);
      load("threads", o_threads, cfg.threads);
      load("boundary", o_boundary, cfg.boundary);
      load("offsets", o_offsets, cfg.offsets);
      if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("config format must be csv or json");
    }

    if (app.got_subcommand(sub_q)) return cmd_quasienergies(cfg);
    if (app.got_subcommand(sub_w)) return cmd_work(cfg);
    if (app.got_subcommand(sub_n)) return cmd_ness(cfg);
    if (app.got_subcommand(sub_p)) return cmd_phase_diagram(cfg);
    if (app.got_subcommand(sub_b)) return cmd_boundary_report(cfg);
    if (app.got_subcommand(sub_u)) return cmd_propagator(cfg);
    if (app.got_subcommand(sub_r)) return cmd_rates(cfg);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return 3;
  }
}
