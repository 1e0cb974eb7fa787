#include <string>

#include "doctest.h"
#include "eqk/cli.hpp"

using namespace eqk;
using namespace eqk::cli;

namespace {

const std::string kA1 = R"({"root_datum":{"type":"A1"},"fan_plus":{"ambient_rank":1,"cones":[[[1]]]}})";

std::string data(const std::string& name) { return std::string(EQK_DATA_DIR) + "/" + name + ".json"; }

std::string pointer_of(const std::string& text) {
  try {
    load_problem_text(text);
  } catch (const ProblemError& e) {
    return e.pointer;
  }
  return "<none>";
}

}  // namespace

TEST_CASE("loading problems") {
  const Problem a1 = load_problem_text(kA1);
  CHECK(a1.root_datum.rank() == 1);
  CHECK(a1.fan_plus.maximal().size() == 1);
  CHECK_FALSE(a1.nu0);

  CHECK(pointer_of(R"({"root_datum":{"type":"A1"},"fan_plus":{"ambient_rank":1,"cones":[[[-1]]]}})") ==
        "/fan_plus/cones/0/0");
  CHECK(pointer_of(R"({"root_datum":{"type":"A2"},"fan_plus":{"ambient_rank":2,"cones":[[[1,1],[2,1]],[[2,-1],[1,2]]]}})") ==
        "/fan_plus/cones/1/0");
  CHECK(pointer_of(R"({"root_datum":{"type":"Q7"},"fan_plus":{"ambient_rank":1,"cones":[[[1]]]}})") == "/root_datum/type");
  CHECK(pointer_of(R"({"root_datum":{"cartan":[[2,1],[-1,2]]},"fan_plus":{"ambient_rank":2,"cones":[[[1,1]]]}})") ==
        "/root_datum/cartan");
  CHECK(pointer_of(R"({"root_datum":{"type":"A1"},"fan_plus":{"ambient_rank":2,"cones":[[[1]]]}})") ==
        "/fan_plus/ambient_rank");
  CHECK(pointer_of(R"({"fan_plus":{}})") == "/root_datum");
  CHECK(pointer_of("{not json") == "");
  CHECK(pointer_of(R"({"root_datum":{"type":"A1"},"fan_plus":{"ambient_rank":1,"cones":[[[1]]]},"psg":{"nu0":[1,2]}})") ==
        "/psg/nu0");

  const Problem b2 = load_problem_file(data("b2_wonderful"));
  CHECK(b2.root_datum.cartan == IntMatrix::from_rows({{2, -1}, {-2, 2}}));
  for (const char* name : {"a1_wonderful", "a2_wonderful", "a1xa1_split", "a2_split"})
    CHECK_NOTHROW(load_problem_file(data(name)));
}

TEST_CASE("commands on the gallery") {
  const Problem a1 = load_problem_file(data("a1_wonderful"));
  Report r = run(a1, "ordinary-rank");
  CHECK(r.status == Status::Ok);
  CHECK(r.payload["rank"] == 4);

  r = run(a1, "gkm-graph");
  CHECK(r.payload["vertex_count"] == 4);
  CHECK(r.payload["edge_count"] == 6);
  CHECK(r.payload["edge_kinds"]["simple_wall"] == 2);

  r = run(a1, "transfer-psg");
  CHECK(r.payload["N"] == 2);
  CHECK(r.payload["nu1"] == Json::array({2}));
  CHECK(r.payload["nu2"] == Json::array({-1}));

  r = run(a1, "orientation-check");
  CHECK(r.status == Status::Ok);
  CHECK(r.payload["max_out_degree"] == 3);

  const Problem a2 = load_problem_file(data("a2_wonderful"));
  r = run(a2, "steinberg");
  CHECK(r.status == Status::Ok);
  CHECK(r.payload["basis"].size() == 6);
  std::vector<int> sizes;
  for (const auto& s : r.payload["c_sets"]) sizes.push_back(s["size"].get<int>());
  CHECK(sizes == std::vector<int>{1, 2, 2, 1});
  CHECK(run(a2, "gkm-graph").payload["vertex_count"] == 36);

  const Problem split = load_problem_file(data("a1xa1_split"));
  r = run(split, "gkm-graph");
  CHECK(r.payload["vertex_count"] == 32);
  CHECK(r.payload["edge_kinds"]["interior_wall"] == 16);
  CHECK(run(split, "ordinary-rank").payload["rank"] == 32);
  CHECK(run(split, "relwond-check").status == Status::Ok);
  CHECK(run(split, "multstr-check", Json{{"pairs", {{"s1", "s2"}, {3, 3}}}}).payload["pairs_checked"] == 2);
  CHECK(run(split, "gkm-graph", Json{{"graph", "orbit"}}).payload["vertex_count"] == 8);
}

TEST_CASE("classes through the CLI") {
  const Problem a1 = load_problem_file(data("a1_wonderful"));
  Report r = run(a1, "membership", Json{{"class", {"1*e[(2,-2)]"}}});
  CHECK(r.status == Status::Ok);
  CHECK(r.payload["valid"] == true);
  r = run(a1, "membership", Json{{"class", {"1*e[(0,1)]"}}});
  CHECK(r.status == Status::Fail);
  CHECK(r.exit_code() == 1);
  CHECK(r.payload.contains("witness"));

  r = run(a1, "decompose", Json{{"class", {"1"}}});
  REQUIRE(r.status == Status::Ok);
  CHECK(r.payload["terms"][0]["coefficients"][0] == "1*e[(0,0)]");
  CHECK(r.payload["terms"][1]["coefficients"][0] == "0");
  CHECK(run(a1, "decompose", Json{{"class", {"1*e[(0,1)]"}}}).status == Status::Fail);

  r = run(a1, "multiply", Json{{"a", {"1*e[(1,-1)]"}}, {"b", {"1*e[(-1,1)] + 1*e[(1,-1)]"}}});
  CHECK(r.status == Status::Ok);
  CHECK(r.payload["product_valid"] == true);

  r = run(a1, "symmetrize", Json{{"class", {"1*e[(1)]"}}});
  CHECK(r.payload["cones"].size() == 2);
  CHECK(r.payload["cones"][1]["value"] == "1*e[(-1)]");

  r = run(a1, "membership", Json{{"full", {"1", "1", "1", "2"}}});
  CHECK(r.status == Status::Fail);
  CHECK(run(a1, "membership", Json{{"toric", {"3"}}}).status == Status::Ok);
}

TEST_CASE("errors and determinism") {
  const Problem a1 = load_problem_text(kA1);
  Report r = run(a1, "no-such-command");
  CHECK(r.status == Status::Fail);
  r = run(a1, "decompose");
  CHECK(r.status == Status::Fail);
  CHECK(r.payload["pointer"] == "/payload/class");
  r = run(a1, "transfer-psg", Json{{"nu0", {0}}});
  CHECK(r.status == Status::Fail);
  CHECK(Report{"x", Status::ConsistencyFailure, {}}.exit_code() == 2);
  CHECK(std::string(to_string(Status::ConsistencyFailure)) == "paper-consistency-failure");

  const Problem split = load_problem_file(data("a2_split"));
  for (const auto& cmd : commands()) {
    if (cmd == "membership" || cmd == "symmetrize" || cmd == "decompose" || cmd == "multiply") continue;
    CAPTURE(cmd);
    const std::string serial = render(run(split, cmd, Json(), Exec::Serial), "json");
    const std::string parallel = render(run(split, cmd, Json(), Exec::Parallel), "json");
    CHECK(serial == parallel);
    CHECK(render(run(split, cmd), "json") == parallel);
  }
  const std::string text = render(run(a1, "ordinary-rank"), "text");
  CHECK(text.find("rank: 4") != std::string::npos);
}
