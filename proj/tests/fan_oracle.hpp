#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "eqk/fan.hpp"
#include "oracles.hpp"

namespace oracle {

// Cells by scanning faces and dual cones in a box; ordering by trying every permutation.
struct OracleReport {
  std::vector<std::vector<int>> tau;  // ray indices into each maximal cone
  std::vector<bool> smooth;
  bool order_exists = false;
  bool verdict = false;
};

inline OracleReport brute_force_report(const eqk::Fan& fan, const eqk::IntVec& v) {
  const int n = fan.ambient_rank();
  const std::size_t m = fan.maximal().size();
  OracleReport r;
  for (const eqk::Cone& s : fan.maximal()) {
    std::vector<std::vector<eqk::Int>> rays(s.rays().begin(), s.rays().end());
    auto fs = faces_by_scan(rays, n, 3);
    std::vector<int> best;
    bool found = false;
    for (auto& g : fs)
      if (qualifies_by_scan(rays, g, v, n, 3) && (!found || g.size() < best.size())) best = g, found = true;
    if (!found) throw std::runtime_error("oracle found no qualifying face");
    r.tau.push_back(best);
    r.smooth.push_back(quotient_smooth_by_minors(rays, best, n));
  }
  auto tau_in = [&](std::size_t i, std::size_t j) {
    for (int k : r.tau[i]) {
      const eqk::IntVec& ray = fan.maximal()[i].rays()[k];
      auto& rj = fan.maximal()[j].rays();
      if (std::find(rj.begin(), rj.end(), ray) == rj.end()) return false;
    }
    return true;
  };
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> pos(m);
    for (std::size_t p = 0; p < m; ++p) pos[perm[p]] = int(p);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j)
        if (i != j && tau_in(i, j) && pos[i] > pos[j]) ok = false;
    if (ok) {
      r.order_exists = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.verdict = r.order_exists && std::all_of(r.smooth.begin(), r.smooth.end(), [](bool b) { return b; });
  return r;
}

}  // namespace oracle
