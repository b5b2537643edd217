// Command-line front end: each subcommand writes one CSV plus its manifest.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "exciton/cli.hpp"
#include "exciton/types.hpp"

namespace {

using exciton::cli::RunManifest;

std::vector<double> parse_ratios(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw CLI::ValidationError("--ratios", "bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--ratios", "empty list");
  return out;
}

void emit(const RunManifest& manifest, const std::string& gnuplot_path) {
  const std::string csv = exciton::cli::render(manifest);
  if (manifest.output == "-") {
    std::cout << csv;
    return;
  }
  exciton::cli::write_outputs(manifest, csv);
  if (!gnuplot_path.empty()) {
    std::string script;
    if (manifest.command == "trace") script = exciton::cli::trace_gnuplot(manifest.output);
    if (manifest.command == "maxscan") script = exciton::cli::maxscan_gnuplot(manifest.output);
    if (manifest.command == "envelope") script = exciton::cli::envelope_gnuplot(manifest.output);
    std::ofstream(gnuplot_path) << script;
  }
  std::cerr << "wrote " << manifest.output << " and "
            << exciton::cli::manifest_path(manifest.output) << '\n';
}

RunManifest make_manifest(std::string command, nlohmann::json parameters,
                          std::string output) {
  return {std::move(command), std::move(parameters), exciton::cli::version(),
          std::move(output), exciton::cli::utc_timestamp()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-mode Kerr exciton dynamics: entanglement, imbalance, "
               "maximum-entropy envelopes"};
  app.set_version_flag("--version", exciton::cli::version());
  app.require_subcommand(1);

  std::string out_path;
  std::string gnuplot_path;

  exciton::cli::TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "Time trace of entropy and populations");
  trace_cmd->add_option("--p", trace.p, "Initial excitons in A")->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--q", trace.q, "Initial excitons in B")->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--chi-over-g", trace.chi_over_g, "Kerr ratio chi/g")
      ->check(CLI::NonNegativeNumber);
  trace_cmd->add_option("--g", trace.g, "Linear coupling g")->check(CLI::PositiveNumber);
  trace_cmd->add_option("--omega", trace.omega, "Transition frequency");
  trace_cmd->add_option("--t-max", trace.t_max, "End of the gt range")
      ->check(CLI::PositiveNumber);
  trace_cmd->add_option("--steps", trace.steps, "Grid intervals")->check(CLI::Range(2, 100000000));

  exciton::cli::MaxScanArgs scan;
  std::string ratios_text = "0,0.01,0.34,0.8";
  auto* scan_cmd = app.add_subcommand("maxscan", "Maximal entanglement table over L and chi/g");
  scan_cmd->add_option("--l-max", scan.l_max, "Largest L (rows L = 1..l_max)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--ratios", ratios_text, "Comma-separated chi/g list");
  scan_cmd->add_option("--t-max", scan.t_max, "Search horizon in gt")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--threads", scan.threads, "Worker threads (0 = all cores)");

  exciton::cli::EnvelopeArgs env;
  auto* env_cmd = app.add_subcommand("envelope", "Entropy vs imbalance scatter and Jaynes envelope");
  env_cmd->add_option("--l", env.total, "Total exciton number (start |L,0>)")
      ->check(CLI::NonNegativeNumber);
  env_cmd->add_option("--chi-over-g", env.chi_over_g, "Kerr ratio chi/g")
      ->check(CLI::NonNegativeNumber);
  env_cmd->add_option("--t-max", env.t_max, "End of the gt range")->check(CLI::PositiveNumber);
  env_cmd->add_option("--steps", env.steps, "Time grid intervals")->check(CLI::Range(2, 100000000));
  env_cmd->add_option("--grid", env.grid, "Envelope grid points")->check(CLI::Range(201, 1000000));

  for (auto* cmd : {trace_cmd, scan_cmd, env_cmd}) {
    cmd->add_option("--out", out_path, "Output CSV ('-' for stdout)");
    cmd->add_option("--gnuplot", gnuplot_path, "Also write a gnuplot script here");
  }

  bool quick = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_flag("--quick", quick, "Restrict sweeps to L <= 5");

  std::string manifest_in;
  auto* replay_cmd = app.add_subcommand("replay", "Regenerate an output from its manifest");
  replay_cmd->add_option("--manifest", manifest_in, "Manifest JSON")->required();
  replay_cmd->add_option("--out", out_path, "Override the output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) return exciton::cli::verify(quick, std::cout);

    RunManifest manifest;
    if (trace_cmd->parsed()) {
      manifest = make_manifest("trace", trace,
                               out_path.empty() ? exciton::cli::default_output("trace.csv") : out_path);
    } else if (scan_cmd->parsed()) {
      scan.ratios = parse_ratios(ratios_text);
      manifest = make_manifest("maxscan", scan,
                               out_path.empty() ? exciton::cli::default_output("maxscan.csv") : out_path);
    } else if (env_cmd->parsed()) {
      manifest = make_manifest("envelope", env,
                               out_path.empty() ? exciton::cli::default_output("envelope.csv") : out_path);
    } else {
      manifest = exciton::cli::read_manifest(manifest_in);
      if (!out_path.empty()) manifest.output = out_path;
      manifest.timestamp = exciton::cli::utc_timestamp();
    }
    emit(manifest, gnuplot_path);
  } catch (const exciton::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
