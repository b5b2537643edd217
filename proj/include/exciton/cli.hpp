#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace exciton::cli {

std::string version();

// Shortest round-trip-free rendering with 15 significant digits, '.' decimal
// point regardless of the global locale.
std::string format_number(double v);

struct TraceArgs {
  int p = 1;
  int q = 0;
  double chi_over_g = 0.34;
  double g = 1.0;
  double omega = 0.0;
  double t_max = 12.0;
  int steps = 2400;
};

struct MaxScanArgs {
  int l_max = 10;
  std::vector<double> ratios = {0.0, 0.01, 0.34, 0.8};
  double t_max = 600.0;
  unsigned threads = 0;
};

struct EnvelopeArgs {
  int total = 2;
  double chi_over_g = 0.34;
  double t_max = 60.0;
  int steps = 10000;
  int grid = 201;
};

void to_json(nlohmann::json& j, const TraceArgs& a);
void from_json(const nlohmann::json& j, TraceArgs& a);
void to_json(nlohmann::json& j, const MaxScanArgs& a);
void from_json(const nlohmann::json& j, MaxScanArgs& a);
void to_json(nlohmann::json& j, const EnvelopeArgs& a);
void from_json(const nlohmann::json& j, EnvelopeArgs& a);

// Columns: gt,entropy,n1,n2,delta_n
std::string trace_csv(const TraceArgs& args);
// Columns: L,ratio,e_star,t_star,ln_Lplus1,gap
std::string maxscan_csv(const MaxScanArgs& args);
// Block `delta_n,entropy` (time sweep), blank line, block
// `delta_n_grid,e_jaynes` (envelope).
std::string envelope_csv(const EnvelopeArgs& args);

std::string trace_gnuplot(const std::string& csv_path);
std::string maxscan_gnuplot(const std::string& csv_path);
std::string envelope_gnuplot(const std::string& csv_path);

/// Sidecar record that lets an output file be regenerated.
struct RunManifest {
  std::string command;
  nlohmann::json parameters;
  std::string version;
  std::string output;
  std::string timestamp;
};

void to_json(nlohmann::json& j, const RunManifest& m);
void from_json(const nlohmann::json& j, RunManifest& m);

std::string manifest_path(const std::string& output);
std::string utc_timestamp();

// Regenerates the CSV text a manifest describes.
std::string render(const RunManifest& manifest);

// Writes `csv` to manifest.output and the manifest beside it.
void write_outputs(const RunManifest& manifest, const std::string& csv);

RunManifest read_manifest(const std::string& path);

// Default output location: $OUT_DIR/<name> if set, else ./<name>.
std::string default_output(const std::string& name);

// Acceptance report; returns the process exit code.
int verify(bool quick, std::ostream& out);

}  // namespace exciton::cli
