// relweyl <verb> [--input file] [--output file] [--format json|text|csv]
//              [--cap n] [--jobs n]
// Reads a JSON problem (stdin when --input is absent) and writes the report
// envelope. Exit codes: 0 ok, 2 schema error, 3 rejection, 4 invariant failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "relweyl/cli.hpp"

namespace {

int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "relweyl: cannot write " << path << "\n";
    return relweyl::cli::schema_error;
  }
  out << text;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Weyl groups, R-groups and irreducibility of principal series"};
  app.set_version_flag("--version", std::string(RELWEYL_VERSION));
  std::string verb, input, output, format = "json";
  std::uint64_t cap = 0;
  unsigned jobs = 1;
  app.add_option("verb", verb, "decompose | decide-ps | decide-gps | verify | atlas | product-count | predict")
      ->required()
      ->check(CLI::IsMember(relweyl::cli::modes()));
  app.add_option("--input,-i", input, "problem file (default: stdin)");
  app.add_option("--output,-o", output, "report file (default: stdout)");
  app.add_option("--format,-f", format, "output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--cap", cap, "Weyl group enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--jobs,-j", jobs, "worker threads for atlas")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : relweyl::cli::schema_error;
  }

  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "relweyl: cannot read " << input << "\n";
      return relweyl::cli::schema_error;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  relweyl::cli::RunOptions opt;
  opt.mode = verb;
  if (cap)
    opt.cap = cap;
  opt.jobs = jobs;

  relweyl::cli::RunResult res;
  relweyl::Json problem = relweyl::Json::parse(text, nullptr, false);
  if (problem.is_discarded()) {
    res.exit_code = relweyl::cli::schema_error;
    res.envelope = {{"status", "error"},
                    {"error", {{"kind", "schema"}, {"message", "input is not valid JSON"}, {"details", relweyl::Json::array()}}}};
  } else {
    res = relweyl::cli::run(problem, opt);
  }

  auto rendered = relweyl::cli::render(res.envelope, format);
  if (!rendered) {
    std::cerr << "relweyl: csv output is only available for a successful atlas\n";
    rendered = relweyl::cli::render(res.envelope, "json");
  }
  if (res.envelope["status"] == "error")
    std::cerr << "relweyl: " << res.envelope["error"]["kind"].get<std::string>() << ": "
              << res.envelope["error"]["message"].get<std::string>() << "\n";
  int io = emit(*rendered, output);
  return res.exit_code ? res.exit_code : io;
}
