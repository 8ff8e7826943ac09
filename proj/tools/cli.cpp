#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "l12glasso/baselines.hpp"
#include "l12glasso/csv.hpp"
#include "l12glasso/evaluation.hpp"
#include "l12glasso/simulator.hpp"
#include "l12glasso/solver.hpp"

namespace l12::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string> kModels = {"lasso", "mrce", "gflasso",
                                          "iclasso", "l12glasso"};

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + dir + "'");
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::vector<double> parse_grid_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw UsageError("bad grid value '" + field + "'");
    }
  }
  if (values.empty()) throw UsageError("empty grid list");
  return values;
}

void standardize_columns(DenseMatrix& m) {
  const double n = static_cast<double>(m.rows());
  for (Index j = 0; j < m.cols(); ++j) {
    const double mean = m.col(j).mean();
    m.col(j).array() -= mean;
    const double sd = std::sqrt(m.col(j).squaredNorm() / n);
    if (sd > 0.0) m.col(j) /= sd;
  }
}

json metrics_json(const SupportMetrics& m) {
  return json{{"precision", m.precision},   {"recall", m.recall},
              {"f1", m.f1},                 {"threshold", m.threshold},
              {"nnz_estimated", m.nnz_estimated}, {"nnz_true", m.nnz_true}};
}

// Hyperparameter assembly: config.json (keys mirror the Hyperparams fields)
// is the base layer, explicit CLI flags override it, and tau falls back to
// lambda1/ratio for the l12glasso model.
struct HyperFlags {
  std::string config_path;
  double lambda1 = 0.1, lambda2 = 0.1, gamma = 0.05, tau = 0.0, ratio = 10.0;
  double step_nu = 0.0, outer_tol = 1e-6, inner_tol = 1e-6;
  int outer_max_iter = 100, inner_max_iter = 500;
  CLI::Option* opt_lambda1 = nullptr;
  CLI::Option* opt_lambda2 = nullptr;
  CLI::Option* opt_gamma = nullptr;
  CLI::Option* opt_tau = nullptr;
  CLI::Option* opt_ratio = nullptr;
  CLI::Option* opt_step_nu = nullptr;
  CLI::Option* opt_outer_tol = nullptr;
  CLI::Option* opt_inner_tol = nullptr;
  CLI::Option* opt_outer_max = nullptr;
  CLI::Option* opt_inner_max = nullptr;
};

void add_hyper_flags(CLI::App* cmd, HyperFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON file with Hyperparams fields");
  f.opt_lambda1 = cmd->add_option("--lambda1", f.lambda1, "l1 weight on B");
  f.opt_lambda2 = cmd->add_option("--lambda2", f.lambda2, "l1 weight on Theta");
  f.opt_gamma = cmd->add_option("--gamma", f.gamma, "fusion weight");
  f.opt_tau = cmd->add_option("--tau", f.tau, "l2,1 subtraction weight");
  f.opt_ratio = cmd->add_option("--ratio", f.ratio, "lambda1/tau ratio (derives tau)");
  f.opt_step_nu = cmd->add_option("--step-nu", f.step_nu, "B-step size (0 = auto)");
  f.opt_outer_tol = cmd->add_option("--outer-tol", f.outer_tol, "outer relative tolerance");
  f.opt_inner_tol = cmd->add_option("--inner-tol", f.inner_tol, "inner relative tolerance");
  f.opt_outer_max = cmd->add_option("--outer-max-iter", f.outer_max_iter, "outer iteration cap");
  f.opt_inner_max = cmd->add_option("--inner-max-iter", f.inner_max_iter, "inner iteration cap");
}

Hyperparams assemble_hyperparams(const HyperFlags& f, const std::string& model) {
  Hyperparams hp;
  bool config_has_tau = false;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw UsageError("cannot open config '" + f.config_path + "'");
    json cfg;
    try {
      in >> cfg;
    } catch (const json::exception& e) {
      throw UsageError("config '" + f.config_path + "': " + e.what());
    }
    if (cfg.contains("lambda1")) hp.lambda1 = cfg["lambda1"].get<double>();
    if (cfg.contains("lambda2")) hp.lambda2 = cfg["lambda2"].get<double>();
    if (cfg.contains("gamma")) hp.gamma = cfg["gamma"].get<double>();
    if (cfg.contains("tau")) {
      hp.tau = cfg["tau"].get<double>();
      config_has_tau = true;
    }
    if (cfg.contains("step_nu")) hp.step_nu = cfg["step_nu"].get<double>();
    if (cfg.contains("outer_tol")) hp.outer_tol = cfg["outer_tol"].get<double>();
    if (cfg.contains("inner_tol")) hp.inner_tol = cfg["inner_tol"].get<double>();
    if (cfg.contains("outer_max_iter")) hp.outer_max_iter = cfg["outer_max_iter"].get<int>();
    if (cfg.contains("inner_max_iter")) hp.inner_max_iter = cfg["inner_max_iter"].get<int>();
  } else {
    hp.lambda1 = f.lambda1;
    hp.lambda2 = f.lambda2;
    hp.gamma = f.gamma;
  }

  if (f.opt_lambda1->count()) hp.lambda1 = f.lambda1;
  if (f.opt_lambda2->count()) hp.lambda2 = f.lambda2;
  if (f.opt_gamma->count()) hp.gamma = f.gamma;
  if (f.opt_step_nu->count()) hp.step_nu = f.step_nu;
  if (f.opt_outer_tol->count()) hp.outer_tol = f.outer_tol;
  if (f.opt_inner_tol->count()) hp.inner_tol = f.inner_tol;
  if (f.opt_outer_max->count()) hp.outer_max_iter = f.outer_max_iter;
  if (f.opt_inner_max->count()) hp.inner_max_iter = f.inner_max_iter;

  if (model == "l12glasso") {
    if (f.opt_tau->count()) {
      hp.tau = f.tau;
    } else if (f.opt_ratio->count() || !config_has_tau) {
      if (!(f.ratio > 0.0)) throw UsageError("--ratio must be > 0");
      hp.tau = hp.lambda1 / f.ratio;
    }
  } else {
    hp.tau = 0.0;  // iclasso and the baselines have no l2,1 term
  }
  return hp;
}

json hyperparams_json(const Hyperparams& hp) {
  return json{{"lambda1", hp.lambda1},
              {"lambda2", hp.lambda2},
              {"gamma", hp.gamma},
              {"tau", hp.tau},
              {"step_nu", hp.step_nu},
              {"outer_tol", hp.outer_tol},
              {"inner_tol", hp.inner_tol},
              {"outer_max_iter", hp.outer_max_iter},
              {"inner_max_iter", hp.inner_max_iter}};
}

// ---- simulate ----

struct SimulateArgs {
  SimulationConfig cfg;
  int case_index = 1;
  std::string perturb = "uniform";
  std::string out_dir = ".";
  std::uint64_t seed = 0;
};

int cmd_simulate(SimulateArgs& a) {
  if (a.perturb != "normal" && a.perturb != "uniform") {
    throw UsageError("--perturb must be 'uniform' or 'normal'");
  }
  // from_case decides the (T, E) regime; everything else is user input.
  const double rho = a.cfg.rho_perturb;
  const double t_scale = a.cfg.t_scale;
  const double e_scale = a.cfg.e_scale;
  a.cfg = SimulationConfig::from_case(a.case_index, a.cfg.n, a.cfg.p, a.cfg.q,
                                       a.cfg.module_size, a.cfg.snps_per_module,
                                       a.seed);
  a.cfg.rho_perturb = rho;
  a.cfg.t_scale = t_scale;
  a.cfg.e_scale = e_scale;
  a.cfg.perturb = a.perturb == "normal" ? PerturbKind::normal : PerturbKind::uniform;

  const SimulationTruth truth = make_truth(a.cfg);
  const Dataset data = sample_dataset(truth, a.cfg);

  ensure_dir(a.out_dir);
  const fs::path dir(a.out_dir);
  save_matrix_csv((dir / "X.csv").string(), data.X);
  save_matrix_csv((dir / "Y.csv").string(), data.Y);
  save_matrix_csv((dir / "B_true.csv").string(), truth.B_true);
  save_matrix_csv((dir / "Theta_true.csv").string(), truth.Theta_true.matrix());
  save_matrix_csv((dir / "T.csv").string(), truth.T.matrix());
  save_matrix_csv((dir / "E.csv").string(), truth.E.matrix());

  json manifest{
      {"n", a.cfg.n},
      {"p", a.cfg.p},
      {"q", a.cfg.q},
      {"module_size", a.cfg.module_size},
      {"snps_per_module", a.cfg.snps_per_module},
      {"case", a.case_index},
      {"t_case", to_string(a.cfg.t_case)},
      {"e_case", to_string(a.cfg.e_case)},
      {"t_scale", a.cfg.t_scale},
      {"e_scale", a.cfg.e_scale},
      {"rho_perturb", a.cfg.rho_perturb},
      {"perturb", to_string(a.cfg.perturb)},
      {"seed", a.cfg.seed},
      {"module_of_gene", truth.structure.module_of_gene},
      {"snps_of_module", truth.structure.snps_of_module},
      {"major_gene_of_module", truth.structure.major_gene_of_module},
      {"files",
       {{"X", "X.csv"},
        {"Y", "Y.csv"},
        {"B_true", "B_true.csv"},
        {"Theta_true", "Theta_true.csv"},
        {"T", "T.csv"},
        {"E", "E.csv"}}}};
  write_json_file((dir / "manifest.json").string(), manifest);
  std::cerr << "simulate: wrote " << a.cfg.n << "x" << a.cfg.p << " X and "
            << a.cfg.n << "x" << a.cfg.q << " Y under " << a.out_dir << "\n";
  return 0;
}

// ---- fit ----

struct FitArgs {
  std::string x_path, y_path, model = "l12glasso", graph_path, out_dir = ".";
  bool has_header = false;
  bool standardize = false;
  bool theta_first = false;
  HyperFlags hyper;
};

int cmd_fit(FitArgs& a) {
  Dataset data;
  data.X = load_matrix_csv(a.x_path, a.has_header);
  data.Y = load_matrix_csv(a.y_path, a.has_header);
  if (a.standardize) {
    standardize_columns(data.X);
    standardize_columns(data.Y);
  }
  data.validate();
  const Hyperparams hp = assemble_hyperparams(a.hyper, a.model);

  DenseMatrix B;
  std::optional<SpdMatrix> theta;
  std::vector<double> trace;
  bool converged = true;
  if (a.model == "lasso") {
    B = fit_multitask_lasso(data, hp.lambda1, &trace);
  } else if (a.model == "gflasso") {
    DenseMatrix graph = a.graph_path.empty()
                            ? correlation_graph(data.Y)
                            : load_matrix_csv(a.graph_path, a.has_header);
    B = fit_gflasso(data, graph, hp.lambda1, hp.gamma, hp, &trace);
  } else if (a.model == "mrce") {
    ModelEstimate est = fit_mrce(data, hp.lambda1, hp.lambda2, hp);
    B = std::move(est.B);
    theta = std::move(est.Theta);
    trace = std::move(est.objective_trace);
    converged = est.converged;
  } else {
    ModelEstimate est = fit(data, hp, std::nullopt,
                            a.theta_first ? FitOrder::theta_first
                                          : FitOrder::b_first);
    B = std::move(est.B);
    theta = std::move(est.Theta);
    trace = std::move(est.objective_trace);
    converged = est.converged;
  }

  ensure_dir(a.out_dir);
  const fs::path dir(a.out_dir);
  save_matrix_csv((dir / "B.csv").string(), B);
  if (theta) save_matrix_csv((dir / "Theta.csv").string(), theta->matrix());
  json trace_json{{"model", a.model},
                  {"hyperparams", hyperparams_json(hp)},
                  {"objective_trace", trace},
                  {"iterations", trace.size()},
                  {"converged", converged}};
  write_json_file((dir / "trace.json").string(), trace_json);
  std::cerr << "fit: model=" << a.model << " iterations=" << trace.size()
            << " converged=" << (converged ? "yes" : "no") << "\n";
  return 0;
}

// ---- eval ----

struct EvalArgs {
  std::string b_path, theta_path, b_true_path, theta_true_path;
  std::string test_x_path, test_y_path, out_dir = ".";
  bool has_header = false;
  double threshold = 1e-4;
};

int cmd_eval(EvalArgs& a) {
  if (a.b_path.empty()) throw UsageError("eval: --b is required");
  const DenseMatrix B = load_matrix_csv(a.b_path, a.has_header);
  json out;
  out["threshold"] = a.threshold;

  if (!a.b_true_path.empty()) {
    const DenseMatrix B_true = load_matrix_csv(a.b_true_path, a.has_header);
    out["b"] = metrics_json(support_f1(B, B_true, a.threshold));
  }
  if (!a.theta_path.empty() && !a.theta_true_path.empty()) {
    const DenseMatrix theta = load_matrix_csv(a.theta_path, a.has_header);
    const DenseMatrix theta_true = load_matrix_csv(a.theta_true_path, a.has_header);
    out["theta"] = metrics_json(
        support_f1(theta, theta_true, a.threshold, /*skip_diagonal=*/true));
  }
  if (!a.test_x_path.empty() || !a.test_y_path.empty()) {
    if (a.test_x_path.empty() || a.test_y_path.empty()) {
      throw UsageError("eval: --test-x and --test-y go together");
    }
    Dataset test;
    test.X = load_matrix_csv(a.test_x_path, a.has_header);
    test.Y = load_matrix_csv(a.test_y_path, a.has_header);
    out["regression_error"] = regression_error(test, B);
  }
  if (out.size() <= 1) {
    throw UsageError("eval: nothing to score (give truth and/or test data)");
  }

  ensure_dir(a.out_dir);
  write_json_file((fs::path(a.out_dir) / "metrics.json").string(), out);
  return 0;
}

// ---- sweep ----

struct SweepArgs {
  std::string x_path, y_path, model = "l12glasso", out_dir = ".";
  std::string b_true_path, theta_true_path;
  std::string lambda1_grid = "0.1", lambda2_grid = "0.1", gamma_grid = "0.05",
              ratio_grid = "10";
  bool has_header = false;
  bool standardize = false;
  double train_fraction = 0.75;
  double threshold = 1e-4;
  std::uint64_t seed = 0;
  int jobs = 1;
  HyperFlags hyper;
};

std::string csv_field(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_sweep(SweepArgs& a) {
  Dataset data;
  data.X = load_matrix_csv(a.x_path, a.has_header);
  data.Y = load_matrix_csv(a.y_path, a.has_header);
  if (a.standardize) {
    standardize_columns(data.X);
    standardize_columns(data.Y);
  }
  data.validate();

  GridSpec grid;
  grid.lambda1s = parse_grid_list(a.lambda1_grid);
  grid.lambda2s = parse_grid_list(a.lambda2_grid);
  grid.gammas = parse_grid_list(a.gamma_grid);
  grid.ratios = parse_grid_list(a.ratio_grid);

  SweepOptions opts;
  opts.model = a.model;
  opts.train_fraction = a.train_fraction;
  opts.seed = a.seed;
  opts.support_threshold = a.threshold;
  opts.jobs = a.jobs;
  opts.base = assemble_hyperparams(a.hyper, a.model);
  if (!a.b_true_path.empty()) {
    opts.B_true = load_matrix_csv(a.b_true_path, a.has_header);
  }
  if (!a.theta_true_path.empty()) {
    opts.Theta_true = load_matrix_csv(a.theta_true_path, a.has_header);
  }

  const auto started = std::chrono::steady_clock::now();
  const SweepReport report = grid_sweep(data, grid, opts);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  ensure_dir(a.out_dir);
  const fs::path dir(a.out_dir);

  std::ofstream csv((dir / "sweep.csv").string(), std::ios::binary);
  if (!csv) throw UsageError("cannot write sweep.csv");
  csv << "lambda1,lambda2,gamma,ratio,tau,status,val_error,nnz_b,"
         "precision_b,recall_b,f1_b,precision_theta,recall_theta,f1_theta\n";
  json rows = json::array();
  for (const SweepRow& row : report.rows) {
    csv << csv_field(row.lambda1) << ',' << csv_field(row.lambda2) << ','
        << csv_field(row.gamma) << ',' << csv_field(row.ratio) << ','
        << csv_field(row.tau) << ',' << (row.ok ? "ok" : "error") << ',';
    if (row.ok) csv << csv_field(row.val_error);
    csv << ',';
    if (row.ok) csv << row.nnz_b;
    for (const auto& m : {row.f1_b, row.f1_theta}) {
      if (m) {
        csv << ',' << csv_field(m->precision) << ',' << csv_field(m->recall)
            << ',' << csv_field(m->f1);
      } else {
        csv << ",,,";
      }
    }
    csv << '\n';

    json r{{"lambda1", row.lambda1}, {"lambda2", row.lambda2},
           {"gamma", row.gamma},     {"ratio", row.ratio},
           {"tau", row.tau},         {"status", row.ok ? "ok" : "error"}};
    if (row.ok) {
      r["val_error"] = row.val_error;
      r["nnz_b"] = row.nnz_b;
      if (row.f1_b) r["b"] = metrics_json(*row.f1_b);
      if (row.f1_theta) r["theta"] = metrics_json(*row.f1_theta);
    } else {
      r["error"] = row.error;
    }
    rows.push_back(std::move(r));
  }
  csv.close();

  json out{{"model", a.model},
           {"train_fraction", a.train_fraction},
           {"seed", a.seed},
           {"threshold", a.threshold},
           {"rows", std::move(rows)},
           {"best_index", report.best_index}};
  if (report.best_index >= 0) {
    const SweepRow& best = report.rows[static_cast<std::size_t>(report.best_index)];
    out["best"] = {{"lambda1", best.lambda1}, {"lambda2", best.lambda2},
                   {"gamma", best.gamma},     {"ratio", best.ratio},
                   {"tau", best.tau},         {"val_error", best.val_error}};
  }
  write_json_file((dir / "sweep.json").string(), out);
  std::cerr << "sweep: " << report.rows.size() << " points in " << elapsed
            << " ms, best_index=" << report.best_index << "\n";
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"L1-2 regularized multi-task graphical lasso toolkit"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "generate a synthetic dataset");
  simulate->add_option("--n", sim.cfg.n, "samples")->required();
  simulate->add_option("--p", sim.cfg.p, "SNPs (inputs)")->required();
  simulate->add_option("--q", sim.cfg.q, "genes (outputs)")->required();
  simulate->add_option("--module-size", sim.cfg.module_size, "genes per module")->required();
  simulate->add_option("--snps-per-module", sim.cfg.snps_per_module, "SNPs per module")->required();
  simulate->add_option("--case", sim.case_index, "covariance regime 1..4");
  simulate->add_option("--rho", sim.cfg.rho_perturb, "coefficient perturbation scale");
  simulate->add_option("--t-scale", sim.cfg.t_scale, "scale of T");
  simulate->add_option("--e-scale", sim.cfg.e_scale, "scale of E");
  simulate->add_option("--perturb", sim.perturb, "uniform | normal");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--out", sim.out_dir, "output directory");

  FitArgs fit_args;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit a model to X/Y CSV data");
  fit_cmd->add_option("--x", fit_args.x_path, "input matrix CSV")->required();
  fit_cmd->add_option("--y", fit_args.y_path, "output matrix CSV")->required();
  fit_cmd->add_option("--model", fit_args.model)->check(CLI::IsMember(kModels));
  fit_cmd->add_option("--graph", fit_args.graph_path, "fixed graph CSV (gflasso)");
  fit_cmd->add_flag("--has-header", fit_args.has_header, "inputs carry a header row");
  fit_cmd->add_flag("--standardize", fit_args.standardize, "z-score X and Y columns");
  fit_cmd->add_flag("--theta-first", fit_args.theta_first,
                    "open each outer iteration with the Theta step");
  fit_cmd->add_option("--out", fit_args.out_dir, "output directory");
  add_hyper_flags(fit_cmd, fit_args.hyper);

  EvalArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("eval", "score an estimate");
  eval_cmd->add_option("--b", eval_args.b_path, "estimated B CSV")->required();
  eval_cmd->add_option("--theta", eval_args.theta_path, "estimated Theta CSV");
  eval_cmd->add_option("--b-true", eval_args.b_true_path, "true B CSV");
  eval_cmd->add_option("--theta-true", eval_args.theta_true_path, "true Theta CSV");
  eval_cmd->add_option("--test-x", eval_args.test_x_path, "held-out X CSV");
  eval_cmd->add_option("--test-y", eval_args.test_y_path, "held-out Y CSV");
  eval_cmd->add_flag("--has-header", eval_args.has_header);
  eval_cmd->add_option("--threshold", eval_args.threshold, "relative support threshold");
  eval_cmd->add_option("--out", eval_args.out_dir, "output directory");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "hyperparameter grid sweep");
  sweep_cmd->add_option("--x", sweep_args.x_path)->required();
  sweep_cmd->add_option("--y", sweep_args.y_path)->required();
  sweep_cmd->add_option("--model", sweep_args.model)->check(CLI::IsMember(kModels));
  sweep_cmd->add_option("--lambda1-grid", sweep_args.lambda1_grid, "comma list");
  sweep_cmd->add_option("--lambda2-grid", sweep_args.lambda2_grid, "comma list");
  sweep_cmd->add_option("--gamma-grid", sweep_args.gamma_grid, "comma list");
  sweep_cmd->add_option("--ratio-grid", sweep_args.ratio_grid, "comma list");
  sweep_cmd->add_option("--b-true", sweep_args.b_true_path, "true B CSV for F1");
  sweep_cmd->add_option("--theta-true", sweep_args.theta_true_path, "true Theta CSV for F1");
  sweep_cmd->add_flag("--has-header", sweep_args.has_header);
  sweep_cmd->add_flag("--standardize", sweep_args.standardize);
  sweep_cmd->add_option("--train-fraction", sweep_args.train_fraction);
  sweep_cmd->add_option("--threshold", sweep_args.threshold);
  sweep_cmd->add_option("--seed", sweep_args.seed, "split seed");
  sweep_cmd->add_option("--jobs", sweep_args.jobs, "worker threads");
  sweep_cmd->add_option("--out", sweep_args.out_dir, "output directory");
  add_hyper_flags(sweep_cmd, sweep_args.hyper);

  std::vector<const char*> argv;
  argv.push_back("l12glasso");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (simulate->parsed()) return cmd_simulate(sim);
    if (fit_cmd->parsed()) return cmd_fit(fit_args);
    if (eval_cmd->parsed()) return cmd_eval(eval_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
    throw UsageError("no subcommand given");
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const StepSizeUnderflow& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const NonFiniteObjective& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const FactorizationFailed& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace l12::cli
