#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqk/exec.hpp"
#include "eqk/fan.hpp"
#include "eqk/weyl.hpp"
#include "json.hpp"

namespace eqk::cli {

using Json = nlohmann::ordered_json;

// Input error carrying a JSON pointer to the offending value.
struct ProblemError : std::invalid_argument {
  ProblemError(const std::string& pointer, const std::string& message)
      : std::invalid_argument(pointer + ": " + message), pointer(pointer) {}
  std::string pointer;
};

struct Problem {
  RootDatum root_datum;
  Fan fan_plus;
  std::optional<IntVec> nu0;
  std::optional<IntVec> nu2;
  Json payload;  // "payload" member of the problem, if any
};

Problem load_problem(const Json& j);
Problem load_problem_text(const std::string& text);
Problem load_problem_file(const std::string& path);

enum class Status { Ok, Fail, ConsistencyFailure };
const char* to_string(Status s);

struct Report {
  std::string command;
  Status status = Status::Ok;
  Json payload = Json::object();
  int exit_code() const { return int(status); }
  Json to_json() const;
};

const std::vector<std::string>& commands();

// The payload argument overrides the problem's embedded payload.
Report run(const Problem& problem, const std::string& command, const Json& payload = Json(), Exec exec = Exec::Parallel);

std::string render(const Report& report, const std::string& format);

}  // namespace eqk::cli
