#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eqk/cli.hpp"

int main(int argc, char** argv) {
  using namespace eqk::cli;
  CLI::App app{"Equivariant K-theory of toric varieties and toroidal group embeddings"};
  std::string input, command, payload_path, format = "json";
  int threads = 0;
  app.add_option("--input", input, "problem JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("--command", command, "analysis to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("--payload", payload_path, "command payload JSON file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "worker threads (0 keeps the default)")->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  eqk::set_thread_count(threads);
  Report report;
  report.command = command;
  try {
    const Problem problem = load_problem_file(input);
    Json payload;
    if (!payload_path.empty()) {
      std::ifstream in(payload_path);
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        payload = Json::parse(ss.str());
      } catch (const Json::parse_error& e) {
        throw ProblemError("/payload", std::string("parse error: ") + e.what());
      }
    }
    report = run(problem, command, payload);
  } catch (const ProblemError& e) {
    report.status = Status::Fail;
    report.payload["error"] = e.what();
    report.payload["pointer"] = e.pointer;
  }
  std::cout << render(report, format);
  return report.exit_code();
}
