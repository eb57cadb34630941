// catkit: validate and run spec files, emit fixtures, reformat reports.
//
// Exit status: 0 all pass, 1 a check failed, 2 parse or schema error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "catkit/harness.hpp"

namespace {

using namespace catkit;
using namespace catkit::harness;

constexpr int exit_pass = 0;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << bytes)) throw InputError("cannot write " + path);
}

int report_parse_error(const std::string& file, const SpecParseError& e) {
  for (const auto& issue : e.issues()) std::cerr << file << ": " << issue.describe() << "\n";
  return e.resource_limited() ? exit_resource : exit_usage;
}

int cmd_validate(const std::string& file) {
  std::string text = read_input(file);
  try {
    SpecFile s = parse_spec_file(text);
    std::cout << file << ": ok (" << s.categories.size() << " categories, " << s.functors.size() << " functors, "
              << s.natural_transformations.size() << " natural transformations, " << s.monads.size() << " monads, "
              << s.adjunctions.size() << " adjunctions, " << s.one_cells.size() << " one-cells, "
              << s.parametric_adjunctions.size() << " parametric adjunctions, " << s.tasks.size() << " tasks)\n";
    return exit_pass;
  } catch (const SpecParseError& e) {
    return report_parse_error(file, e);
  }
}

int cmd_run(const std::string& file, const std::optional<std::string>& task, const std::string& format,
            const std::string& out) {
  std::string text = read_input(file);
  SpecFile spec;
  try {
    spec = parse_spec_file(text);
  } catch (const SpecParseError& e) {
    return report_parse_error(file, e);
  }
  if (task && std::none_of(spec.tasks.begin(), spec.tasks.end(), [&](const TaskDecl& t) { return t.name == *task; })) {
    std::cerr << file << ": no task named \"" << *task << "\"\n";
    return exit_usage;
  }
  RunReport r = run_check_suite(spec, text, task);
  write_output(out, emit_report(r, format));
  return r.exit_code();
}

int cmd_fixture(const std::string& name, const std::string& out) {
  std::string text;
  try {
    text = fixture_text(name);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }
  write_output(out, text);
  return exit_pass;
}

int cmd_report(const std::string& file, const std::string& format, const std::string& out) {
  RunReport r;
  try {
    r = report_from_json(nlohmann::json::parse(read_input(file)));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << file << ": not a report: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << file << ": not a report: " << e.what() << "\n";
    return exit_usage;
  }
  write_output(out, emit_report(r, format));
  return r.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite category, monad and Hopf-cell checker"};
  app.set_version_flag("--version", std::string(engine_name) + " " + engine_version);
  app.require_subcommand(1);

  std::size_t max_morphisms = morphism_limit();
  app.add_option("--max-morphisms", max_morphisms, "Size guard for constructed categories")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> formats = {"json", "text"};
  std::string file, format = "json", out, name;
  std::optional<std::string> task;

  auto* validate = app.add_subcommand("validate", "Parse and resolve a spec file");
  validate->add_option("file", file, "Spec file, or - for stdin")->required();

  auto* run = app.add_subcommand("run", "Run the tasks of a spec file and print a report");
  run->add_option("file", file, "Spec file, or - for stdin")->required();
  run->add_option("--task", task, "Run only the task with this name");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember(formats));
  run->add_option("--out", out, "Write the report here instead of stdout");

  auto* fixture = app.add_subcommand("fixture", "Write a built-in fixture as a spec file");
  fixture->add_option("--name", name, "Fixture name")->required();
  fixture->add_option("--out", out, "Output file (default stdout)");
  fixture->footer("Fixtures: one, two, bool4, z2, closure1, bool4-nucleus, meetcell, id-monad(C) for C a category fixture");

  auto* report = app.add_subcommand("report", "Re-emit a JSON report");
  report->add_option("file", file, "Report file, or - for stdin")->default_val("-");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  report->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  set_morphism_limit(max_morphisms);
  try {
    if (validate->parsed()) return cmd_validate(file);
    if (run->parsed()) return cmd_run(file, task, format, out);
    if (fixture->parsed()) return cmd_fixture(name, out);
    return cmd_report(file, format, out);
  } catch (const InputError& e) {
    std::cerr << "catkit: " << e.what() << "\n";
    return exit_usage;
  } catch (const ResourceError& e) {
    std::cerr << "catkit: " << e.what() << "\n";
    return exit_resource;
  }
}
