// crdiam: critical degrees and diameters of complete resolutions over Artinian complete intersections.

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "crdiam/cli.hpp"
#include "crdiam/errors.hpp"

namespace {

struct Flags {
  std::string input = "-";
  std::vector<int> window;
  int ext_degree = 0;
  int max_ext_degree = 0;
  int max_period = 0;
  bool audit = false;
  bool json = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw crdiam::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("input", f.input, "job file (JSON); '-' or nothing reads stdin");
  cmd->add_option("--window", f.window, "window LO HI")->expected(2)->allow_extra_args(false);
  cmd->add_option("--ext-degree", f.ext_degree, "start the linear forms over F_{p^E}")->check(CLI::PositiveNumber);
  cmd->add_option("--max-ext-degree", f.max_ext_degree, "stop escalating at this degree")->check(CLI::PositiveNumber);
  cmd->add_option("--max-period", f.max_period, "longest period searched for")->check(CLI::PositiveNumber);
  cmd->add_flag("--audit", f.audit, "dump lifted matrices and cofactors of the operators");
  cmd->add_flag("--json", f.json, "machine-readable report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical degree, cocritical degree and critical diameter of complete resolutions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", crdiam::kToolVersion);
  Flags flags;
  std::vector<std::pair<CLI::App*, std::vector<crdiam::Task>>> commands;
  auto add = [&](const std::string& name, const std::string& help, std::vector<crdiam::Task> tasks) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_flags(cmd, flags);
    commands.emplace_back(cmd, std::move(tasks));
  };
  using crdiam::Task;
  add("resolve", "Betti numbers and the complete resolution", {Task::Resolve});
  add("cioperators", "build and audit the CI operators", {Task::Cioperators});
  add("crdeg", "critical degree", {Task::Crdeg});
  add("cocrdeg", "cocritical degree", {Task::Cocrdeg});
  add("diameter", "critical diameter", {Task::Diameter});
  add("verify", "run the law suite on the module", {Task::Verify});
  add("show", "print the complete resolution", {Task::Show});
  add("run", "run the tasks listed in the job", {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    crdiam::JobSpec spec = crdiam::parse_job(read_input(flags.input));
    for (const auto& [cmd, tasks] : commands)
      if (cmd->parsed() && !tasks.empty()) spec.tasks = tasks;
    if (flags.window.size() == 2) {
      spec.lo = flags.window[0];
      spec.hi = flags.window[1];
    }
    if (flags.ext_degree > 0) spec.ext_degree = flags.ext_degree;
    if (flags.max_ext_degree > 0) spec.max_ext_degree = flags.max_ext_degree;
    if (flags.max_period > 0) spec.max_period = flags.max_period;
    if (flags.audit) spec.audit = true;
    const crdiam::Report report = crdiam::run(spec);
    std::cout << (flags.json ? crdiam::serialize(report) : crdiam::render_text(report));
    return 0;
  } catch (const std::exception& e) {
    const int code = crdiam::exit_code(e);
    std::cerr << "crdiam: " << (code == 5 ? "internal error: " : "") << e.what() << "\n";
    return code;
  }
}
