#include "exciton/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "exciton/acceptance.hpp"
#include "exciton/experiments.hpp"
#include "exciton/jaynes.hpp"

#ifndef EXCITON_VERSION
#define EXCITON_VERSION "0.0.0"
#endif

namespace exciton::cli {

std::string version() { return EXCITON_VERSION; }

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

void to_json(nlohmann::json& j, const TraceArgs& a) {
  j = {{"p", a.p},         {"q", a.q},         {"chi_over_g", a.chi_over_g},
       {"g", a.g},         {"omega", a.omega}, {"t_max", a.t_max},
       {"steps", a.steps}};
}

void from_json(const nlohmann::json& j, TraceArgs& a) {
  j.at("p").get_to(a.p);
  j.at("q").get_to(a.q);
  j.at("chi_over_g").get_to(a.chi_over_g);
  j.at("g").get_to(a.g);
  j.at("omega").get_to(a.omega);
  j.at("t_max").get_to(a.t_max);
  j.at("steps").get_to(a.steps);
}

void to_json(nlohmann::json& j, const MaxScanArgs& a) {
  j = {{"l_max", a.l_max}, {"ratios", a.ratios}, {"t_max", a.t_max}};
}

void from_json(const nlohmann::json& j, MaxScanArgs& a) {
  j.at("l_max").get_to(a.l_max);
  j.at("ratios").get_to(a.ratios);
  j.at("t_max").get_to(a.t_max);
}

void to_json(nlohmann::json& j, const EnvelopeArgs& a) {
  j = {{"l", a.total},     {"chi_over_g", a.chi_over_g}, {"t_max", a.t_max},
       {"steps", a.steps}, {"grid", a.grid}};
}

void from_json(const nlohmann::json& j, EnvelopeArgs& a) {
  j.at("l").get_to(a.total);
  j.at("chi_over_g").get_to(a.chi_over_g);
  j.at("t_max").get_to(a.t_max);
  j.at("steps").get_to(a.steps);
  j.at("grid").get_to(a.grid);
}

namespace {

void row(std::ostringstream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_number(v);
    first = false;
  }
  out << '\n';
}

}  // namespace

std::string trace_csv(const TraceArgs& args) {
  experiments::TraceConfig config{FockPair{args.p, args.q},
                                  ModelParams::from_ratio(args.chi_over_g, args.g, args.omega),
                                  0.0, args.t_max, args.steps};
  std::ostringstream out;
  out << "gt,entropy,n1,n2,delta_n\n";
  for (const auto& s : experiments::trace(config)) {
    row(out, {s.t, s.entropy, s.n1, s.n2, s.delta_n});
  }
  return out.str();
}

std::string maxscan_csv(const MaxScanArgs& args) {
  std::ostringstream out;
  out << "L,ratio,e_star,t_star,ln_Lplus1,gap\n";
  for (const auto& r : experiments::max_table(args.l_max, args.ratios, args.t_max, args.threads)) {
    row(out, {static_cast<double>(r.total), r.ratio, r.result.e_star, r.result.t_star,
              r.ln_l_plus_1(), r.result.gap});
  }
  return out.str();
}

std::string envelope_csv(const EnvelopeArgs& args) {
  experiments::TraceConfig config{FockPair{args.total, 0},
                                  ModelParams::from_ratio(args.chi_over_g), 0.0,
                                  args.t_max, args.steps};
  const auto samples = experiments::trace(config);
  const auto curve = jaynes::envelope(args.total, args.grid);
  std::ostringstream out;
  out << "delta_n,entropy\n";
  for (const auto& s : samples) row(out, {s.delta_n, s.entropy});
  out << "\ndelta_n_grid,e_jaynes\n";
  for (const auto& p : curve) row(out, {p.delta_n, p.entropy});
  return out.str();
}

std::string trace_gnuplot(const std::string& csv_path) {
  return "set datafile separator ','\n"
         "set key autotitle columnhead\n"
         "set xlabel 'gt'\n"
         "set multiplot layout 2,1\n"
         "plot '" + csv_path + "' using 1:2 with lines\n"
         "plot '" + csv_path + "' using 1:5 with lines\n"
         "unset multiplot\n";
}

std::string maxscan_gnuplot(const std::string& csv_path) {
  return "set datafile separator ','\n"
         "set xlabel 'L'\nset ylabel 'E_max'\n"
         "plot '" + csv_path + "' every ::1 using 1:3 with points title 'E_max', \\\n"
         "     '' every ::1 using 1:5 with linespoints dashtype 2 title 'ln(L+1)'\n";
}

std::string envelope_gnuplot(const std::string& csv_path) {
  return "set datafile separator ','\n"
         "set xlabel 'delta_n'\nset ylabel 'entropy'\n"
         "plot '" + csv_path + "' index 0 every ::1 using 1:2 with dots title 'trajectory', \\\n"
         "     '' index 1 every ::1 using 1:2 with lines title 'Jaynes envelope'\n";
}

void to_json(nlohmann::json& j, const RunManifest& m) {
  j = {{"command", m.command},
       {"parameters", m.parameters},
       {"version", m.version},
       {"output", m.output},
       {"timestamp", m.timestamp}};
}

void from_json(const nlohmann::json& j, RunManifest& m) {
  j.at("command").get_to(m.command);
  m.parameters = j.at("parameters");
  j.at("version").get_to(m.version);
  j.at("output").get_to(m.output);
  m.timestamp = j.value("timestamp", "");
}

std::string manifest_path(const std::string& output) { return output + ".manifest.json"; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render(const RunManifest& manifest) {
  if (manifest.command == "trace") return trace_csv(manifest.parameters.get<TraceArgs>());
  if (manifest.command == "maxscan") return maxscan_csv(manifest.parameters.get<MaxScanArgs>());
  if (manifest.command == "envelope") {
    return envelope_csv(manifest.parameters.get<EnvelopeArgs>());
  }
  throw std::invalid_argument("unknown manifest command '" + manifest.command + "'");
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

void write_outputs(const RunManifest& manifest, const std::string& csv) {
  const std::filesystem::path parent = std::filesystem::path(manifest.output).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  write_file(manifest.output, csv);
  write_file(manifest_path(manifest.output), nlohmann::json(manifest).dump(2) + "\n");
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
  return nlohmann::json::parse(in).get<RunManifest>();
}

std::string default_output(const std::string& name) {
  const char* dir = std::getenv("OUT_DIR");
  if (dir == nullptr || *dir == '\0') return name;
  std::string base(dir);
  if (base.back() != '/') base += '/';
  return base + name;
}

int verify(bool quick, std::ostream& out) {
  acceptance::Options opts;
  opts.quick = quick;
  int failures = 0;
  for (const auto& r : acceptance::run_all(opts)) {
    out << acceptance::format(r) << '\n';
    if (!r.passed) ++failures;
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
      << (quick ? " (quick: L <= 5)" : "") << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace exciton::cli
