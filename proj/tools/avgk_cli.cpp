// Command-line front end: Gauss-Laguerre rules, average-kernel prefactors,
// convergence sweeps, and comparison reports against the closed-form values.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "avgk/error_model.hpp"
#include "avgk/exact_ref.hpp"
#include "avgk/kernels.hpp"
#include "avgk/laguerre.hpp"
#include "avgk/report.hpp"

namespace {

std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_weight(double w) {
  char buf[64];
  if (w >= 1e-4)
    std::snprintf(buf, sizeof buf, "%.4f", w);
  else
    std::snprintf(buf, sizeof buf, "%.1E", w);
  return buf;
}

// Optional key=value config: keys cap, window, fit. CLI flags override.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// Writes to a temporary file and renames on success, so a failed run leaves
// no partial output behind.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    out << content;
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write to '" + tmp + "' failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average-kernel prefactors via double Gauss-Laguerre quadrature"};
  app.require_subcommand(1);

  int cap = avgk::kDefaultNodeCap;
  int window = 10;
  std::string fit_name = "lsq";
  std::string config_path;

  app.add_option("--config", config_path, "key=value config file (cap, window, fit)");
  app.add_option("--cap", cap, "node-count stability cap")
      ->check(CLI::Range(1, avgk::kMaxNodeCap));

  // nodes
  auto* nodes_cmd = app.add_subcommand("nodes", "print the n-point rule");
  int nodes_n = 10;
  std::string nodes_format = "text";
  nodes_cmd->add_option("n", nodes_n, "node count")->required();
  nodes_cmd->add_option("--format", nodes_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // integrate
  auto* int_cmd = app.add_subcommand("integrate", "double quadrature of one kernel");
  std::string int_kernel;
  int int_n = 99;
  int_cmd->add_option("--kernel", int_kernel, "cr|sc|fm|sd|const|add|mul")->required();
  int_cmd->add_option("--n", int_n, "node count");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "convergence trace as CSV");
  std::string sweep_kernel, sweep_out;
  int sweep_min = 2, sweep_max = 99;
  sweep_cmd->add_option("--kernel", sweep_kernel, "cr|sc|fm|sd|const|add|mul")->required();
  sweep_cmd->add_option("--n-min", sweep_min, "first node count");
  sweep_cmd->add_option("--n-max", sweep_max, "last node count");
  sweep_cmd->add_option("--out", sweep_out, "output path (stdout if omitted)");

  // report
  auto* report_cmd = app.add_subcommand("report", "GL vs closed-form comparison table");
  int report_n = 99;
  std::string report_format = "markdown";
  report_cmd->add_option("--n", report_n, "node count");
  report_cmd->add_option("--format", report_format, "csv|json|markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  report_cmd->add_option("--fit", fit_name, "two-point|lsq");
  report_cmd->add_option("--window", window, "slope-fit window");

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "closed-form double-integral values");
  std::string exact_kernel;
  exact_cmd->add_option("--kernel", exact_kernel, "restrict to one kernel");

  // Config values act as defaults; pre-scan so explicit flags still win.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        for (const auto& [key, value] : load_config(argv[i + 1])) {
          if (key == "cap") cap = std::stoi(value);
          else if (key == "window") window = std::stoi(value);
          else if (key == "fit") fit_name = value;
          else throw std::runtime_error("unknown config key '" + key + "'");
        }
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
      }
      break;
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (nodes_cmd->parsed()) {
      const avgk::QuadratureRule rule = avgk::gauss_laguerre_rule(nodes_n, cap);
      if (nodes_format == "csv") {
        std::cout << "i,x,w\n";
        for (int i = 0; i < rule.n; ++i)
          std::cout << i + 1 << ',' << fmt_full(rule.nodes[i]) << ','
                    << fmt_full(rule.weights[i]) << '\n';
      } else if (nodes_format == "json") {
        std::cout << "{\"n\": " << rule.n << ", \"nodes\": [";
        for (int i = 0; i < rule.n; ++i)
          std::cout << (i ? ", " : "") << fmt_full(rule.nodes[i]);
        std::cout << "], \"weights\": [";
        for (int i = 0; i < rule.n; ++i)
          std::cout << (i ? ", " : "") << fmt_full(rule.weights[i]);
        std::cout << "]}\n";
      } else {
        std::printf("%4s %12s %12s\n", "i", "x", "w");
        for (int i = 0; i < rule.n; ++i)
          std::printf("%4d %12.4f %12s\n", i + 1, rule.nodes[i],
                      fmt_weight(rule.weights[i]).c_str());
      }
    } else if (int_cmd->parsed()) {
      const avgk::Kernel kernel = avgk::builtin(int_kernel);
      const avgk::QuadratureRule rule = avgk::gauss_laguerre_rule(int_n, cap);
      const double Q = avgk::integrate_2d(rule, kernel.beta);
      const std::string qs = avgk::q_string(kernel.q_num, kernel.q_den);
      std::printf("kernel   %s\n", kernel.name.c_str());
      std::printf("n        %d\n", int_n);
      std::printf("Q        %.4f\n", Q);
      std::printf("p        %.4f\n", Q / 2.0);
      std::printf("q        %s\n", qs.c_str());
      if (qs == "0")
        std::printf("avg      %.4f\n", Q / 2.0);
      else
        std::printf("avg      %.4f*u^%s\n", Q / 2.0, qs.c_str());
    } else if (sweep_cmd->parsed()) {
      const avgk::Kernel kernel = avgk::builtin(sweep_kernel);
      const avgk::ConvergenceTrace trace =
          avgk::build_trace(kernel, sweep_min, sweep_max, cap);
      std::ostringstream os;
      avgk::write_trace_csv(trace, os);
      if (sweep_out.empty())
        std::cout << os.str();
      else
        write_file_atomic(sweep_out, os.str());
    } else if (report_cmd->parsed()) {
      avgk::ReportOptions opt;
      opt.n = report_n;
      opt.window = window;
      opt.fit = avgk::fit_method_from_string(fit_name);
      opt.cap = cap;
      const auto rows = avgk::build_report(opt);
      if (report_format == "csv")
        avgk::write_report_csv(rows, std::cout);
      else if (report_format == "json")
        avgk::write_report_json(rows, std::cout);
      else
        avgk::write_report_markdown(rows, std::cout);
    } else if (exact_cmd->parsed()) {
      std::vector<avgk::KernelId> ids;
      if (exact_kernel.empty())
        ids = avgk::reference_kernels();
      else
        ids.push_back(avgk::builtin(exact_kernel).id);
      std::printf("%-8s %-14s %-10s\n", "kernel", "II", "p_DC");
      for (avgk::KernelId id : ids) {
        if (id == avgk::KernelId::Custom)
          throw std::invalid_argument("exact: no closed form for custom kernels");
        const avgk::ExactValue v = avgk::exact_II(id);
        std::printf("%-8s %.8f     %.8f\n", v.kernel_id.c_str(), v.II, v.II / 2.0);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
