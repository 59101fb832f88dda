// Batch front end: evaluate scenario files into JSON-line reports, or print a
// single characteristic class. Exit codes: 0 all checks passed, 1 some check
// failed or hit a domain error (e.g. localization failure), 2 parse/IO error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hodgecc/verify.hpp"

using namespace hodgecc;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A scenario file is a JSON array, a single JSON object, or JSON lines.
std::vector<json> load_scenarios(const std::string &path) {
  const std::string text = read_file(path);
  try {
    json j = json::parse(text);
    if (j.is_array())
      return std::vector<json>(j.begin(), j.end());
    return {std::move(j)};
  } catch (const json::parse_error &) {
    // fall through to JSON-lines
  }
  std::vector<json> scenarios;
  std::istringstream lines(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      scenarios.push_back(json::parse(line));
    } catch (const json::parse_error &e) {
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": malformed JSON: " + e.what());
    }
  }
  if (scenarios.empty())
    throw parse_error(path + ": no scenarios found");
  return scenarios;
}

int run_verify(const std::vector<std::string> &files, const std::string &out,
               bool fail_fast, bool verbose) {
  std::vector<std::pair<std::string, json>> scenarios;
  for (const auto &f : files) {
    auto list = load_scenarios(f);
    const std::string stem = std::filesystem::path(f).stem().string();
    for (size_t i = 0; i < list.size(); ++i)
      scenarios.emplace_back(stem + ":" + std::to_string(i),
                             std::move(list[i]));
  }

  std::ofstream file_out;
  if (!out.empty()) {
    file_out.open(out);
    if (!file_out)
      throw parse_error("cannot open output file: " + out);
  }
  std::ostream &os = out.empty() ? std::cout : file_out;

  long passed = 0, failed = 0, errored = 0;
  for (size_t i = 0; i < scenarios.size(); ++i) {
    const Report r = evaluate_scenario(scenarios[i].second, scenarios[i].first);
    os << report_to_json(r).dump() << "\n";
    if (r.errored)
      ++errored;
    else if (r.equal)
      ++passed;
    else
      ++failed;
    if (verbose)
      std::cerr << "[" << (i + 1) << "/" << scenarios.size() << "] " << r.id
                << " " << (r.errored ? "ERROR" : (r.equal ? "ok" : "FAIL"))
                << (r.notes.empty() ? "" : ": " + r.notes.front()) << "\n";
    if (fail_fast && (r.errored || !r.equal))
      break;
  }
  os << json{{"passed", passed}, {"failed", failed}, {"errored", errored}}.dump()
     << "\n";
  return (failed > 0 || errored > 0) ? 1 : 0;
}

int run_compute(const std::string &kind, const std::string &path) {
  json payload;
  try {
    payload = json::parse(read_file(path));
  } catch (const json::parse_error &e) {
    throw parse_error(path + ": malformed JSON: " + std::string(e.what()));
  }

  GradedElement result = [&] {
    if (kind == "ch") {
      const VarietyModel X = variety_from_json(payload.at("variety"));
      return chern_character(bundle_from_json(payload.at("bundle"), X));
    }
    if (kind == "td") {
      const json &vj = payload.contains("variety") ? payload.at("variety")
                                                   : payload;
      return todd_class(variety_from_json(vj));
    }
    if (kind == "euler")
      return equivariant_euler(fixed_component_from_json(payload));
    if (kind == "eqch")
      return equivariant_ch(equivariant_bundle_from_json(payload));
    throw parse_error("unknown compute kind: " + kind +
                      " (expected ch | td | euler | eqch)");
  }();
  std::cout << element_to_json(result).dump() << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact characteristic classes and Riemann-Roch identity checks "
               "on products of projective spaces"};
  app.require_subcommand(1);

  auto *verify = app.add_subcommand(
      "verify", "evaluate scenario files, emit one JSON report per line");
  std::vector<std::string> files;
  std::string out;
  bool fail_fast = false;
  bool verbose = false;
  verify
      ->add_option("files", files,
                   "scenario files (JSON array, object, or JSON lines)")
      ->required();
  verify->add_option("--out", out, "write reports to this file instead of stdout");
  verify->add_flag("--fail-fast", fail_fast, "stop after the first failing scenario");
  verify->add_flag("-v,--verbose", verbose, "print progress to stderr");

  auto *compute = app.add_subcommand(
      "compute", "print one class (ch | td | euler | eqch) as canonical JSON");
  std::string kind;
  std::string payload_path;
  compute->add_option("kind", kind, "ch | td | euler | eqch")->required();
  compute->add_option("payload", payload_path, "payload JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return run_verify(files, out, fail_fast, verbose);
    return run_compute(kind, payload_path);
  } catch (const parse_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception &e) {
    std::cerr << "error: malformed payload: " << e.what() << "\n";
    return 2;
  } catch (const math_error &e) {
    // compute-path domain problems are payload problems from the CLI's view
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
