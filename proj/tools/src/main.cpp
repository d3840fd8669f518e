#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "k3lat/cli/calc.hpp"
#include "k3lat/cli/replay.hpp"
#include "k3lat/cli/session.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int finish(const k3lat::cli::Report& report, const std::string& format) {
  using k3lat::cli::Status;
  if (format == "json") k3lat::cli::emit_json(report, std::cout);
  else k3lat::cli::emit_text(report, std::cout);
  if (const auto flagged = report.count(Status::Flagged))
    std::cerr << "warning: " << flagged << " flagged check(s) record known discrepancies\n";
  return report.all_pass() ? kExitPass : kExitFail;
}

std::optional<k3lat::Integer> degree_cap(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const k3lat::Integer n = k3lat::parse_integer(text);
  if (n <= 0) throw k3lat::Error(k3lat::ErrorKind::RangeError, "--max-degree must be positive");
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice arithmetic and divisor-class checks on K3 Picard lattices"};
  app.set_version_flag("--version", std::string(k3lat::kVersion));
  app.require_subcommand(1);

  std::string format = "text";
  std::string max_degree;
  bool no_timing = false;

  auto* check = app.add_subcommand("check", "Evaluate the assertions of a scenario file");
  std::string path;
  check->add_option("file", path, "Scenario file")->required();
  check->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--max-degree", max_degree, "Cap on enumeration degree windows");
  check->add_flag("--no-timing", no_timing, "Omit wall times so that output is byte-stable");

  auto* replay = app.add_subcommand("replay", "Run the built-in check registry");
  std::string lemma = "all";
  bool list = false;
  replay->add_option("--lemma", lemma, "Selector name or 'all'");
  replay->add_flag("--list", list, "List the selectors and exit");
  replay->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  replay->add_option("--max-degree", max_degree, "Cap on enumeration degree windows");
  replay->add_flag("--no-timing", no_timing, "Omit wall times so that output is byte-stable");

  auto* calc = app.add_subcommand("calc", "Evaluate a numerology operation");
  std::string op;
  std::vector<std::string> args;
  calc->add_option("op", op, "Operation name, or 'list'")->required();
  calc->add_option("args", args, "Integer arguments");
  calc->allow_extras(false);
  calc->positionals_at_end();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitUsage;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      k3lat::cli::RunOptions options;
      options.max_degree = degree_cap(max_degree);
      options.timing = !no_timing;
      return finish(k3lat::cli::run_scenario(buffer.str(), path, options), format);
    }
    if (replay->parsed()) {
      if (list) {
        for (const auto& s : k3lat::cli::replay_selectors()) {
          std::cout << s.name;
          for (const auto& a : s.aliases) std::cout << " (alias " << a << ")";
          std::cout << ": " << s.description << "\n";
        }
        return kExitPass;
      }
      if (!k3lat::cli::resolve_selector(lemma)) {
        std::cerr << "error: unknown selector '" << lemma << "' (see k3lat replay --list)\n";
        return kExitUsage;
      }
      k3lat::cli::ReplayOptions options;
      options.max_degree = degree_cap(max_degree);
      options.timing = !no_timing;
      return finish(k3lat::cli::replay(lemma, options), format);
    }
    if (calc->parsed()) {
      if (op == "list") {
        for (const auto& c : k3lat::cli::calc_operations())
          std::cout << c.name << " " << c.usage << ": " << c.description << "\n";
        return kExitPass;
      }
      std::cout << k3lat::cli::run_calc(op, args) << "\n";
      return kExitPass;
    }
  } catch (const k3lat::cli::ScenarioError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const k3lat::Error& e) {
    std::cerr << "error: " << k3lat::to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
