#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "uga/cli/cli.hpp"
#include "uga/errors.hpp"

namespace uga::cli {

namespace {

json parse_json_arg(const std::string& flag, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, flag + " is not valid JSON: " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_arg(path, buffer.str());
}

std::vector<std::string> split_probes(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  // Probes are separated by ';' so that "(1,-2)" style elements survive.
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

json error_envelope(const std::string& command, const std::string& kind, const std::string& message) {
  return json{{"command", command}, {"status", "error"}, {"error", json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group algebras, regular representations and Baer reductions over finite and p-adic fields"};
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false, compact = false, timing = false;
  app.add_flag("--pretty", pretty, "Indented JSON");
  app.add_flag("--json", compact, "Compact JSON (default)");
  app.add_flag("--timing", timing, "Add wall-clock time to the report (breaks byte-identical output)");

  std::string group_text, family_text, algebra_text, probes_text, scenario, stages_path;
  std::uint32_t p = 0;
  unsigned k = 1;
  std::uint64_t budget = 0;
  std::size_t samples = 0, cap = 1000, length_cap = 40;
  bool split = false;

  auto* analyze = app.add_subcommand("analyze", "Conjugacy classes, center, semisimplicity, Wedderburn, Baer and type");
  analyze->add_option("--group", group_text, "Group spec as JSON")->required();
  analyze->add_option("--p", p, "Field characteristic")->required();
  analyze->add_option("--k", k, "Extension degree")->capture_default_str();
  analyze->add_option("--budget", budget, "Largest q^dim scanned exhaustively (default UGA_BUDGET or 2^20)");
  analyze->add_option("--samples", samples, "Sample this many elements when over budget");

  auto* factor = app.add_subcommand("factor-check", "Conjugacy orbits of probes in an infinite group family");
  factor->add_option("--family", family_text, "Family spec as JSON")->required();
  factor->add_option("--probes", probes_text, "Probe elements separated by ',' or ';'");
  factor->add_option("--cap", cap, "Orbit size cap")->capture_default_str();
  factor->add_option("--length-cap", length_cap, "Longest normal form explored")->capture_default_str();

  auto* convergence = app.add_subcommand("convergence", "Strong convergence check on finitely many stages");
  auto* scenario_opt = convergence->add_option("--scenario", scenario, "scalar-decay, column-shift or unbounded-growth");
  convergence->add_option("--stages", stages_path, "JSON stage file")->excludes(scenario_opt);

  auto* wedderburn = app.add_subcommand("wedderburn", "Primitive central idempotents and Wedderburn components");
  auto* baer = app.add_subcommand("baer", "Annihilator lattice, Baer property and Kaplansky type");
  for (auto* sub : {wedderburn, baer}) {
    auto* g = sub->add_option("--group", group_text, "Group spec as JSON");
    sub->add_option("--algebra", algebra_text, "Structure constants as JSON")->excludes(g);
    sub->add_option("--p", p, "Field characteristic (with --group)");
    sub->add_option("--k", k, "Extension degree")->capture_default_str();
  }
  wedderburn->add_flag("--split", split, "Require every component to be split over F_q");
  baer->add_option("--budget", budget, "Largest q^dim scanned exhaustively (default UGA_BUDGET or 2^20)");
  baer->add_option("--samples", samples, "Sample this many elements when over budget");

  std::string command = "uga";
  auto emit = [&](const json& report) { out << (pretty ? report.dump(2) : report.dump()) << '\n'; };
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << '\n';
      emit(error_envelope(command, "Usage", e.what()));
      return 1;
    }
    const auto* sub = app.get_subcommands().front();
    command = sub->get_name();
    const auto started = std::chrono::steady_clock::now();
    BudgetOptions options{budget > 0 ? budget : default_budget(), std::nullopt};
    if (samples > 0) options.samples = samples;
    auto optional_json = [&](const std::string& flag, const std::string& text) -> std::optional<json> {
      if (text.empty()) return std::nullopt;
      return parse_json_arg(flag, text);
    };

    json report;
    if (sub == analyze) {
      report = cmd_analyze_group(parse_json_arg("--group", group_text), p, k, options);
    } else if (sub == factor) {
      report = cmd_factor_check(parse_json_arg("--family", family_text), split_probes(probes_text), cap, length_cap);
    } else if (sub == convergence) {
      std::optional<std::string> sc;
      if (!scenario.empty()) sc = scenario;
      std::optional<json> st;
      if (!stages_path.empty()) st = read_json_file(stages_path);
      report = cmd_convergence(sc, st);
    } else if (sub == wedderburn) {
      report = cmd_wedderburn(optional_json("--group", group_text), optional_json("--algebra", algebra_text), p, k, split);
    } else {
      report = cmd_baer(optional_json("--group", group_text), optional_json("--algebra", algebra_text), p, k, options);
    }
    if (timing)
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    emit(report);
    return 0;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    auto report = error_envelope(command, to_string(e.kind()), e.what());
    report["error"]["required"] = e.required();
    report["error"]["budget"] = e.budget();
    emit(report);
    return 2;
  } catch (const NeedsFieldExtension& e) {
    err << "error: " << e.what() << '\n';
    auto report = error_envelope(command, to_string(e.kind()), e.what());
    report["error"]["degree"] = e.degree();
    emit(report);
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    emit(error_envelope(command, to_string(e.kind()), e.what()));
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    emit(error_envelope(command, "InvalidArgument", e.what()));
    return 1;
  }
}

}  // namespace uga::cli
