// Command-line front end: configuration I/O, named generators, energy and
// curve reports, certification, optimization, classification, and grid
// sweeps. Data goes to stdout or files; warnings go to stderr.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riesz/certifier.hpp"
#include "riesz/energy.hpp"
#include "riesz/named_configs.hpp"
#include "riesz/optimizer.hpp"
#include "riesz/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCollision = 3;
constexpr int kExitConditionNotMet = 4;

struct InputFlags {
  std::string input_path;
  std::string named;
  int d = 1;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> alpha;
};

struct LoadedConfig {
  riesz::Configuration config;
  double alpha;
  std::map<std::string, std::string> meta;
};

void add_input_flags(CLI::App* cmd, InputFlags* flags, bool allow_named) {
  auto* input = cmd->add_option("--input", flags->input_path, "configuration JSON file");
  if (allow_named) {
    auto* named = cmd->add_option(
        "--named", flags->named, "named configuration (antipodal|simplex|cross-polytope|ngon|random)");
    named->excludes(input);
    input->excludes(named);
    cmd->add_option("--d", flags->d, "sphere dimension for --named");
    cmd->add_option("--n", flags->n, "point count for --named");
  } else {
    input->required();
  }
  cmd->add_option("--alpha", flags->alpha, "Riesz exponent; overrides the file's value")
      ->delimiter(',');
}

double single_alpha(const InputFlags& flags, std::optional<double> fallback) {
  if (flags.alpha.size() > 1) {
    throw std::invalid_argument("this command takes a single --alpha value");
  }
  if (!flags.alpha.empty()) return riesz::parse_decimal(flags.alpha.front());
  if (fallback) return *fallback;
  return 1.0;
}

LoadedConfig load_input(const InputFlags& flags) {
  if (!flags.input_path.empty()) {
    riesz::ParsedConfig parsed = riesz::read_config_file(flags.input_path);
    if (parsed.max_renorm_delta > riesz::kRenormWarn) {
      std::cerr << "warning: input points renormalized by up to "
                << riesz::format_shortest(parsed.max_renorm_delta) << "\n";
    }
    return LoadedConfig{std::move(parsed.config), single_alpha(flags, parsed.alpha),
                        std::move(parsed.meta)};
  }
  if (!flags.named.empty()) {
    riesz::NamedConfigSpec spec;
    spec.kind = riesz::named_kind_from_string(flags.named);
    spec.d = flags.d;
    spec.n = flags.n;
    spec.seed = flags.seed;
    return LoadedConfig{riesz::generate_named(spec), single_alpha(flags, std::nullopt), {}};
  }
  throw std::invalid_argument("provide --input or --named");
}

std::string sibling_path(const std::string& out, const std::string& suffix) {
  std::string stem = out;
  if (stem.size() > 5 && stem.substr(stem.size() - 5) == ".json") {
    stem = stem.substr(0, stem.size() - 5);
  }
  return stem + suffix;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream stream(path, std::ios::binary | std::ios::trunc);
  if (!stream) throw std::runtime_error("cannot open '" + path + "' for writing");
  stream << text;
}

// ---------------------------------------------------------------------------
// energy

int cmd_energy(const InputFlags& flags) {
  const LoadedConfig loaded = load_input(flags);
  const riesz::RieszParams params(loaded.alpha);
  const riesz::EnergyValue value = riesz::energy(loaded.config, params);

  double min_inner = 1.0;
  double max_inner = -1.0;
  for (int i = 0; i < loaded.config.size(); ++i) {
    for (int j = i + 1; j < loaded.config.size(); ++j) {
      const double t = loaded.config[i].coords().dot(loaded.config[j].coords());
      min_inner = std::min(min_inner, t);
      max_inner = std::max(max_inner, t);
    }
  }

  std::cout << "n: " << loaded.config.size() << "\n"
            << "d: " << loaded.config.dim() << "\n"
            << "alpha: " << riesz::format_shortest(loaded.alpha) << "\n"
            << "raw_energy: " << riesz::format_shortest(value.raw) << "\n"
            << "scaled_energy: " << riesz::format_shortest(value.scaled) << "\n"
            << "min_inner_product: " << riesz::format_shortest(min_inner) << "\n"
            << "max_inner_product: " << riesz::format_shortest(max_inner) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const InputFlags& flags, const std::string& out_path) {
  const LoadedConfig loaded = load_input(flags);
  const riesz::RieszParams params(loaded.alpha);
  const riesz::Certificate cert =
      riesz::certify_not_max(loaded.config, params, flags.seed);
  riesz::write_certificate_file(out_path, cert);

  std::cout << "kind: " << riesz::to_string(cert.kind) << "\n"
            << "gradient_norm: " << riesz::format_sig17(cert.gradient_norm) << "\n";
  if (cert.point_index >= 0) std::cout << "point_index: " << cert.point_index << "\n";
  if (cert.second_variation_value) {
    std::cout << "second_variation: " << riesz::format_sig17(*cert.second_variation_value)
              << "\n";
  }
  if (cert.fd_confirmation) {
    std::cout << "fd_confirmation: " << riesz::format_sig17(*cert.fd_confirmation) << "\n";
  }
  std::cout << "certificate: " << out_path << "\n";
  return cert.kind == riesz::CertificateKind::ConditionNotMet ? kExitConditionNotMet : kExitOk;
}

// ---------------------------------------------------------------------------
// optimize / classify

nlohmann::json report_json(const riesz::MinimizeResult& result, double alpha,
                           const std::optional<riesz::CriticalPointReport>& report) {
  nlohmann::json object;
  object["converged"] = result.converged;
  object["step_collapsed"] = result.step_collapsed;
  object["iterations"] = result.iterations;
  object["gradient_norm"] = riesz::format_sig17(result.gradient_norm);
  object["scaled_energy"] = riesz::format_sig17(result.scaled_energy);
  object["raw_energy"] =
      riesz::format_sig17(result.scaled_energy * std::exp2(-alpha / 2.0));
  object["d"] = result.config.dim();
  object["n"] = result.config.size();
  object["alpha"] = riesz::format_shortest(alpha);
  if (report) {
    object["classification"] = riesz::to_string(report->classification);
    object["zero_tol"] = riesz::format_sig17(report->zero_tol);
    object["num_positive"] = report->num_positive;
    object["num_zero"] = report->num_zero;
    object["num_negative"] = report->num_negative;
    nlohmann::json values = nlohmann::json::array();
    for (Eigen::Index k = 0; k < report->eigenvalues.size(); ++k) {
      values.push_back(riesz::format_sig17(report->eigenvalues[k]));
    }
    object["eigenvalues"] = std::move(values);
  }
  return object;
}

std::string spectrum_csv(const riesz::CriticalPointReport& report) {
  std::ostringstream csv;
  csv << "index,eigenvalue\n";
  for (Eigen::Index k = 0; k < report.eigenvalues.size(); ++k) {
    csv << k << "," << riesz::format_shortest(report.eigenvalues[k]) << "\n";
  }
  return csv.str();
}

int cmd_optimize(const InputFlags& flags, const riesz::OptimizerSettings& settings,
                 const std::string& out_path) {
  const LoadedConfig loaded = load_input(flags);
  const riesz::RieszParams params(loaded.alpha);
  const riesz::MinimizeResult result = riesz::minimize(loaded.config, params, settings);

  std::optional<riesz::CriticalPointReport> report;
  if (result.gradient_norm <= riesz::kGradTol) {
    report = riesz::classify(result.config, params);
  }

  std::map<std::string, std::string> meta = loaded.meta;
  meta["optimized"] = "riesz optimize";
  riesz::write_config_file(out_path, result.config, loaded.alpha, meta);
  write_text(sibling_path(out_path, ".report.json"),
             report_json(result, loaded.alpha, report).dump(2) + "\n");
  if (report) {
    write_text(sibling_path(out_path, ".spectrum.csv"), spectrum_csv(*report));
  }

  std::cout << "converged: " << (result.converged ? "true" : "false") << "\n"
            << "iterations: " << result.iterations << "\n"
            << "gradient_norm: " << riesz::format_sig17(result.gradient_norm) << "\n"
            << "scaled_energy: " << riesz::format_sig17(result.scaled_energy) << "\n";
  if (report) {
    std::cout << "classification: " << riesz::to_string(report->classification) << "\n";
  }
  std::cout << "output: " << out_path << "\n";
  return kExitOk;
}

int cmd_classify(const InputFlags& flags, const std::string& out_path) {
  const LoadedConfig loaded = load_input(flags);
  const riesz::RieszParams params(loaded.alpha);
  const riesz::CriticalPointReport report = riesz::classify(loaded.config, params);

  std::cout << "classification: " << riesz::to_string(report.classification) << "\n"
            << "gradient_norm: " << riesz::format_sig17(report.gradient_norm) << "\n"
            << "num_positive: " << report.num_positive << "\n"
            << "num_zero: " << report.num_zero << "\n"
            << "num_negative: " << report.num_negative << "\n";
  if (!out_path.empty()) {
    riesz::MinimizeResult shim{loaded.config, report.gradient_norm,
                               riesz::energy(loaded.config, params).scaled, 0, true, false, {}};
    write_text(out_path, report_json(shim, loaded.alpha, report).dump(2) + "\n");
    std::cout << "report: " << out_path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// curve

int cmd_curve(const InputFlags& flags, int index, double t_min, double t_max, int samples,
              const std::string& out_path) {
  if (samples < 3) throw std::invalid_argument("curve: --samples must be >= 3");
  if (!(t_min < t_max)) throw std::invalid_argument("curve: need --t-min < --t-max");
  const LoadedConfig loaded = load_input(flags);
  const riesz::RieszParams params(loaded.alpha);
  if (index < 0 || index >= loaded.config.size()) {
    throw std::invalid_argument("curve: --index out of range");
  }

  riesz::Rng rng(riesz::derive_seed(flags.seed, 0x63757276u));
  const riesz::TangentVector h = riesz::sample_equator(loaded.config[index], rng);
  const riesz::Perturbation pert =
      riesz::one_hot_perturbation(loaded.config, index, h.direction);

  const riesz::Perturbation grad = riesz::riemannian_gradient(loaded.config, params);
  const double f_prime =
      grad.tangents[static_cast<size_t>(index)].direction.dot(h.direction);
  const double f_second =
      2.0 * riesz::single_point_second_variation(loaded.config, params, index, h);
  const riesz::AveragedSecondVariation means =
      riesz::averaged_second_variation(loaded.config, params, index);

  std::vector<std::string> rows;
  std::vector<double> collision_ts;
  rows.reserve(static_cast<size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double u = static_cast<double>(k) / (samples - 1);
    const double t = t_min * (1.0 - u) + t_max * u;
    std::string scaled = "nan";
    std::string raw = "nan";
    try {
      const riesz::EnergyValue value = riesz::curve_energy(loaded.config, params, pert, t);
      scaled = riesz::format_shortest(value.scaled);
      raw = riesz::format_shortest(value.raw);
    } catch (const riesz::KernelSingularity&) {
      collision_ts.push_back(t);
    }
    rows.push_back(riesz::format_shortest(t) + "," + scaled + "," + raw);
  }

  std::ostringstream csv;
  csv << "# riesz curve: point " << index << ", seed " << flags.seed << ", alpha "
      << riesz::format_shortest(loaded.alpha) << "\n";
  csv << "# f_prime_0: " << riesz::format_sig17(f_prime) << "\n";
  csv << "# f_second_0: " << riesz::format_sig17(f_second) << "\n";
  csv << "# equator_mean_terms:";
  for (double term : means.closed_form_terms) csv << " " << riesz::format_sig17(term);
  csv << "\n";
  if (collision_ts.empty()) {
    csv << "# collisions: none\n";
  } else {
    csv << "# collisions:";
    for (double t : collision_ts) csv << " " << riesz::format_shortest(t);
    csv << "\n";
  }
  csv << "t,scaled_energy,raw_energy\n";
  for (const std::string& row : rows) csv << row << "\n";

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    write_text(out_path, csv.str());
    std::cout << "curve: " << out_path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepRow {
  std::string text;
  bool counts_for_aggregate = false;
  bool is_maximum = false;
};

int cmd_sweep(const std::vector<int>& ds, const std::vector<int>& ns,
              const std::vector<std::string>& alphas, int restarts, std::uint64_t seed,
              const std::string& out_dir, int jobs) {
  if (ds.empty() || ns.empty() || alphas.empty()) {
    throw std::invalid_argument("sweep: --d, --n and --alpha must be nonempty lists");
  }
  if (restarts < 1) throw std::invalid_argument("sweep: --restarts must be >= 1");
  std::vector<double> alpha_values;
  alpha_values.reserve(alphas.size());
  for (const std::string& text : alphas) alpha_values.push_back(riesz::parse_decimal(text));

  struct Task {
    int d;
    int n;
    size_t alpha_index;
    int restart;
  };
  std::vector<Task> tasks;
  for (int d : ds) {
    for (int n : ns) {
      for (size_t a = 0; a < alphas.size(); ++a) {
        for (int restart = 0; restart < restarts; ++restart) {
          tasks.push_back(Task{d, n, a, restart});
        }
      }
    }
  }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      const Task& task = tasks[k];
      const double alpha = alpha_values[task.alpha_index];
      const std::uint64_t task_seed =
          riesz::derive_seed(seed, static_cast<std::uint64_t>(task.d),
                             static_cast<std::uint64_t>(task.n),
                             static_cast<std::uint64_t>(task.alpha_index),
                             static_cast<std::uint64_t>(task.restart));
      std::ostringstream row;
      row << "result," << task.d << "," << task.n << "," << alphas[task.alpha_index] << ","
          << task.restart << ",";
      try {
        const riesz::RieszParams params(alpha);
        riesz::NamedConfigSpec start_spec{riesz::NamedKind::Random, task.d, task.n, task_seed};
        riesz::OptimizerSettings settings;
        settings.seed = task_seed;
        const riesz::MinimizeResult result =
            riesz::minimize(riesz::generate_named(start_spec), params, settings);
        const riesz::EnergyValue value = riesz::energy(result.config, params);

        std::string classification = "NotCritical";
        int num_negative = -1, num_zero = -1, num_positive = -1;
        if (result.gradient_norm <= riesz::kGradTol) {
          const riesz::CriticalPointReport report = riesz::classify(result.config, params);
          classification = riesz::to_string(report.classification);
          num_negative = report.num_negative;
          num_zero = report.num_zero;
          num_positive = report.num_positive;
        }
        const riesz::Certificate cert =
            riesz::certify_not_max(result.config, params, task_seed);

        row << (result.converged ? "true" : "false") << "," << result.iterations << ","
            << riesz::format_shortest(value.raw) << "," << riesz::format_shortest(value.scaled)
            << "," << riesz::format_shortest(result.gradient_norm) << ",";
        if (num_negative >= 0) {
          row << num_negative << "," << num_zero << "," << num_positive;
        } else {
          row << ",,";
        }
        row << "," << classification << "," << riesz::to_string(cert.kind) << ",";
        rows[k].counts_for_aggregate =
            riesz::certifiable(alpha, task.d) && num_negative >= 0;
        rows[k].is_maximum = classification == std::string("Maximum");
      } catch (const std::exception& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), ',', ';');
        std::replace(what.begin(), what.end(), '\n', ' ');
        row << ",,,,,,,,," << what;
      }
      rows[k].text = row.str();
    }
  };

  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  const size_t thread_count =
      std::min(tasks.size(), static_cast<size_t>(jobs > 0 ? jobs : static_cast<int>(hardware)));
  std::vector<std::thread> pool;
  for (size_t w = 0; w + 1 < thread_count; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();

  size_t maxima = 0;
  size_t condition_rows = 0;
  for (const SweepRow& row : rows) {
    if (row.counts_for_aggregate) {
      ++condition_rows;
      if (row.is_maximum) ++maxima;
    }
  }

  std::filesystem::create_directories(out_dir);
  const std::string csv_path = (std::filesystem::path(out_dir) / "summary.csv").string();
  std::ostringstream csv;
  csv << "# riesz sweep: seed " << seed << ", restarts " << restarts << "\n";
  csv << "# d:";
  for (int d : ds) csv << " " << d;
  csv << "\n# n:";
  for (int n : ns) csv << " " << n;
  csv << "\n# alpha:";
  for (const std::string& a : alphas) csv << " " << a;
  csv << "\n";
  csv << "kind,d,n,alpha,restart,converged,iterations,raw_energy,scaled_energy,"
         "gradient_norm,num_negative,num_zero,num_positive,classification,certificate,note\n";
  for (const SweepRow& row : rows) csv << row.text << "\n";
  csv << "aggregate,,,,,,,,,,,,,"
      << (maxima == 0 ? "NoMaximum" : "MaximumFound") << ",,"
      << "maximum_classifications=" << maxima << " condition_met_rows=" << condition_rows
      << "\n";
  write_text(csv_path, csv.str());

  std::cout << "rows: " << rows.size() << "\n"
            << "maximum_classifications: " << maxima << "\n"
            << "summary: " << csv_path << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const std::string& named, int d, int n, std::uint64_t seed,
            const std::vector<std::string>& alpha, const std::string& out_path) {
  riesz::NamedConfigSpec spec;
  spec.kind = riesz::named_kind_from_string(named);
  spec.d = d;
  spec.n = n;
  spec.seed = seed;
  const riesz::Configuration config = riesz::generate_named(spec);
  double alpha_value = 1.0;
  if (!alpha.empty()) {
    if (alpha.size() > 1) throw std::invalid_argument("gen takes a single --alpha value");
    alpha_value = riesz::parse_decimal(alpha.front());
  }

  std::map<std::string, std::string> meta;
  meta["generator"] = riesz::to_string(spec.kind);
  if (spec.kind == riesz::NamedKind::Random) meta["seed"] = std::to_string(seed);

  const std::string text = riesz::config_to_json(config, alpha_value, meta);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
    std::cout << "config: " << out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riesz energies, second variations, and non-maximality certificates on S^d"};
  app.require_subcommand(1);

  InputFlags energy_flags;
  auto* energy_cmd = app.add_subcommand("energy", "energy of a configuration");
  add_input_flags(energy_cmd, &energy_flags, false);

  InputFlags certify_flags;
  std::string certify_out = "certificate.json";
  auto* certify_cmd =
      app.add_subcommand("certify", "certify that a configuration is not a local maximum");
  add_input_flags(certify_cmd, &certify_flags, false);
  certify_cmd->add_option("--seed", certify_flags.seed, "random seed");
  certify_cmd->add_option("--out", certify_out, "certificate output path");

  InputFlags optimize_flags;
  std::string optimize_out = "optimized.json";
  riesz::OptimizerSettings optimize_settings;
  auto* optimize_cmd = app.add_subcommand("optimize", "Riemannian descent to a critical point");
  add_input_flags(optimize_cmd, &optimize_flags, true);
  optimize_cmd->add_option("--seed", optimize_flags.seed, "seed for --named random");
  optimize_cmd->add_option("--out", optimize_out, "optimized configuration output path");
  optimize_cmd->add_option("--max-iters", optimize_settings.max_iters, "iteration cap");
  optimize_cmd->add_option("--step-init", optimize_settings.step_init, "initial step size");
  optimize_cmd->add_option("--grad-stop", optimize_settings.grad_stop,
                           "gradient norm stopping threshold");

  InputFlags classify_flags;
  std::string classify_out;
  auto* classify_cmd =
      app.add_subcommand("classify", "Hessian spectrum and critical-point classification");
  add_input_flags(classify_cmd, &classify_flags, false);
  classify_cmd->add_option("--out", classify_out, "report JSON output path");

  InputFlags curve_flags;
  int curve_index = 0;
  double curve_t_min = -0.5;
  double curve_t_max = 0.5;
  int curve_samples = 101;
  std::string curve_out;
  auto* curve_cmd =
      app.add_subcommand("curve", "sample the energy along a random equator direction");
  add_input_flags(curve_cmd, &curve_flags, false);
  curve_cmd->add_option("--index", curve_index, "point to perturb");
  curve_cmd->add_option("--seed", curve_flags.seed, "random seed");
  curve_cmd->add_option("--t-min", curve_t_min, "curve parameter lower bound");
  curve_cmd->add_option("--t-max", curve_t_max, "curve parameter upper bound");
  curve_cmd->add_option("--samples", curve_samples, "number of samples (>= 3)");
  curve_cmd->add_option("--out", curve_out, "CSV output path (default stdout)");

  std::vector<int> sweep_d;
  std::vector<int> sweep_n;
  std::vector<std::string> sweep_alpha;
  int sweep_restarts = 5;
  std::uint64_t sweep_seed = 0;
  std::string sweep_out = "sweep";
  int sweep_jobs = 0;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "optimize/classify/certify over a (d, N, alpha) grid");
  sweep_cmd->add_option("--d", sweep_d, "sphere dimensions")->delimiter(',')->required();
  sweep_cmd->add_option("--n", sweep_n, "point counts")->delimiter(',')->required();
  sweep_cmd->add_option("--alpha", sweep_alpha, "Riesz exponents")->delimiter(',')->required();
  sweep_cmd->add_option("--restarts", sweep_restarts, "random restarts per cell");
  sweep_cmd->add_option("--seed", sweep_seed, "master seed");
  sweep_cmd->add_option("--out", sweep_out, "output directory");
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (default: hardware)");

  std::string gen_named;
  int gen_d = 1;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::vector<std::string> gen_alpha;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a named configuration file");
  gen_cmd->add_option("--named", gen_named, "configuration name")->required();
  gen_cmd->add_option("--d", gen_d, "sphere dimension");
  gen_cmd->add_option("--n", gen_n, "point count");
  gen_cmd->add_option("--seed", gen_seed, "seed for random");
  gen_cmd->add_option("--alpha", gen_alpha, "exponent stored in the file")->delimiter(',');
  gen_cmd->add_option("--out", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (app.got_subcommand(energy_cmd)) return cmd_energy(energy_flags);
    if (app.got_subcommand(certify_cmd)) return cmd_certify(certify_flags, certify_out);
    if (app.got_subcommand(optimize_cmd)) {
      return cmd_optimize(optimize_flags, optimize_settings, optimize_out);
    }
    if (app.got_subcommand(classify_cmd)) return cmd_classify(classify_flags, classify_out);
    if (app.got_subcommand(curve_cmd)) {
      return cmd_curve(curve_flags, curve_index, curve_t_min, curve_t_max, curve_samples,
                       curve_out);
    }
    if (app.got_subcommand(sweep_cmd)) {
      return cmd_sweep(sweep_d, sweep_n, sweep_alpha, sweep_restarts, sweep_seed, sweep_out,
                       sweep_jobs);
    }
    if (app.got_subcommand(gen_cmd)) {
      return cmd_gen(gen_named, gen_d, gen_n, gen_seed, gen_alpha, gen_out);
    }
  } catch (const riesz::KernelSingularity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCollision;
  } catch (const riesz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitInput;
}
