#pragma once

#include <string>
#include <vector>

#include "eqk/fan.hpp"

namespace fixtures {

struct NamedFan {
  std::string name;
  int n;
  std::vector<std::vector<eqk::IntVec>> cones;
};

inline std::vector<NamedFan> toric_fans() {
  return {
      {"P1", 1, {{{1}}, {{-1}}}},
      {"P2", 2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}}},
      {"F1", 2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 1}}, {{-1, 1}, {0, -1}}, {{0, -1}, {1, 0}}}},
      {"P112", 2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, -2}}, {{-1, -2}, {1, 0}}}},
      {"A2-orbit-coroot", 2,
       {{{2, 1}, {1, 2}}, {{1, 2}, {-1, 1}}, {{-1, 1}, {-2, -1}}, {{-2, -1}, {-1, -2}}, {{-1, -2}, {1, -1}},
        {{1, -1}, {2, 1}}}},
      {"quadrant-split", 2, {{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}}},
      {"P1xP1", 2, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}, {{-1, 0}, {0, -1}}, {{0, -1}, {1, 0}}}},
      {"P3", 3,
       {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}},
        {{1, 0, 0}, {0, 0, 1}, {-1, -1, -1}},
        {{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}}},
  };
}

}  // namespace fixtures
