#include "eqk/cli.hpp"

#include <fstream>
#include <sstream>

#include "eqk/errors.hpp"
#include "eqk/gkm.hpp"
#include "eqk/toroidal.hpp"

namespace eqk::cli {

namespace {

using eqk::to_string;

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t k) { return ptr + "/" + std::to_string(k); }

const Json& member(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw ProblemError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ProblemError(child(ptr, key), "missing");
  return *it;
}

Int integer(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw ProblemError(ptr, "expected an integer");
  return j.get<Int>();
}

IntVec int_vec(const Json& j, const std::string& ptr, int rank = -1) {
  if (!j.is_array()) throw ProblemError(ptr, "expected an array of integers");
  IntVec v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(integer(j[k], child(ptr, k)));
  if (rank >= 0 && int(v.size()) != rank)
    throw ProblemError(ptr, "expected " + std::to_string(rank) + " entries, got " + std::to_string(v.size()));
  return v;
}

LaurentPoly laurent(const Json& j, int rank, const std::string& ptr) {
  if (j.is_number_integer()) return LaurentPoly::constant(rank, j.get<Int>());
  if (!j.is_string()) throw ProblemError(ptr, "expected a Laurent polynomial string");
  const std::string& s = j.get_ref<const std::string&>();
  try {
    std::size_t used = 0;
    const Int c = std::stoll(s, &used);
    if (used == s.size()) return LaurentPoly::constant(rank, c);
  } catch (const std::exception&) {
  }
  try {
    return parse_laurent(s, rank);
  } catch (const std::exception& e) {
    throw ProblemError(ptr, e.what());
  }
}

// A list of polynomials, or an object keyed by decimal index.
std::vector<LaurentPoly> poly_list(const Json& j, std::size_t count, int rank, const std::string& ptr) {
  std::vector<LaurentPoly> out(count, LaurentPoly(rank));
  if (j.is_array()) {
    if (j.size() != count)
      throw ProblemError(ptr, "expected " + std::to_string(count) + " values, got " + std::to_string(j.size()));
    for (std::size_t k = 0; k < count; ++k) out[k] = laurent(j[k], rank, child(ptr, k));
    return out;
  }
  if (!j.is_object()) throw ProblemError(ptr, "expected an array or an index-keyed object");
  std::vector<char> seen(count, 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ProblemError(child(ptr, it.key()), "key is not an index");
    }
    if (k >= count) throw ProblemError(child(ptr, it.key()), "index out of range");
    out[k] = laurent(it.value(), rank, child(ptr, it.key()));
    seen[k] = 1;
  }
  for (std::size_t k = 0; k < count; ++k)
    if (!seen[k]) throw ProblemError(child(ptr, k), "missing");
  return out;
}

RootDatum parse_root_datum(const Json& j, const std::string& ptr) {
  if (!j.is_object()) throw ProblemError(ptr, "expected an object");
  int central = 0;
  if (j.contains("central_rank")) {
    const Int c = integer(j["central_rank"], child(ptr, "central_rank"));
    if (c < 0 || c > 16) throw ProblemError(child(ptr, "central_rank"), "out of range");
    central = int(c);
  }
  try {
    if (j.contains("type")) {
      if (!j["type"].is_string()) throw ProblemError(child(ptr, "type"), "expected a string");
      return build_root_datum(j["type"].get<std::string>(), central);
    }
  } catch (const ProblemError&) {
    throw;
  } catch (const std::exception& e) {
    throw ProblemError(child(ptr, "type"), e.what());
  }
  if (!j.contains("cartan")) throw ProblemError(ptr, "needs a type or a cartan matrix");
  const Json& c = j["cartan"];
  const std::string cptr = child(ptr, "cartan");
  if (!c.is_array() || c.empty()) throw ProblemError(cptr, "expected a nonempty square matrix");
  std::vector<IntVec> rows;
  for (std::size_t k = 0; k < c.size(); ++k) rows.push_back(int_vec(c[k], child(cptr, k), int(c.size())));
  try {
    return build_root_datum(IntMatrix::from_rows(rows), central,
                            j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom");
  } catch (const std::exception& e) {
    throw ProblemError(cptr, e.what());
  }
}

Fan parse_fan_plus(const Json& j, const RootDatum& rd, const std::string& ptr) {
  const Int n = integer(member(j, "ambient_rank", ptr), child(ptr, "ambient_rank"));
  if (n != rd.rank())
    throw ProblemError(child(ptr, "ambient_rank"), "is " + std::to_string(n) + " but the root datum has rank " +
                                                       std::to_string(rd.rank()));
  const Json& cones = member(j, "cones", ptr);
  const std::string cptr = child(ptr, "cones");
  if (!cones.is_array() || cones.empty()) throw ProblemError(cptr, "expected a nonempty list of cones");
  std::vector<std::vector<IntVec>> gens;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::string kptr = child(cptr, k);
    if (!cones[k].is_array()) throw ProblemError(kptr, "expected a list of rays");
    std::vector<IntVec> rays;
    for (std::size_t r = 0; r < cones[k].size(); ++r) {
      IntVec ray = int_vec(cones[k][r], child(kptr, r), int(n));
      if (!rd.dominant(ray)) throw ProblemError(child(kptr, r), "ray " + to_string(ray) + " lies outside the dominant chamber");
      rays.push_back(std::move(ray));
    }
    gens.push_back(std::move(rays));
  }
  try {
    return Fan::from_maximal(int(n), gens);
  } catch (const std::exception& e) {
    throw ProblemError(cptr, e.what());
  }
}

Json to_json(const IntVec& v) { return Json(v); }

Json poly_json(const std::vector<LaurentPoly>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

Json mask_json(SubsetMask m, int rank) {
  Json a = Json::array();
  for (int i = 0; i < rank; ++i)
    if (m >> i & 1) a.push_back(i + 1);
  return a;
}

Json cone_json(const Cone& c) {
  Json a = Json::array();
  for (const auto& r : c.rays()) a.push_back(r);
  return a;
}

int element(const WeylGroup& W, const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) {
    const Int k = j.get<Int>();
    if (k < 0 || k >= Int(W.size())) throw ProblemError(ptr, "element index out of range");
    return int(k);
  }
  if (j.is_string())
    for (std::size_t w = 0; w < W.size(); ++w)
      if (word_string(W[w]) == j.get<std::string>()) return int(w);
  throw ProblemError(ptr, "expected an element index or a reduced word such as \"s1*s2\"");
}

std::optional<IntVec> optional_vec(const Json& payload, const std::string& key, int rank) {
  if (payload.is_object() && payload.contains(key)) return int_vec(payload[key], "/payload/" + key, rank);
  return std::nullopt;
}

// Helper bundle for a single run.
struct Context {
  const Problem& problem;
  const Json& payload;
  Exec exec;
  ToroidalInstance X;
  int l = 0;

  const WeylGroup& W() const { return *X.W; }
  std::size_t m() const { return X.cone_count(); }

  const Json& need(const std::string& key) const {
    if (!payload.is_object() || !payload.contains(key)) throw ProblemError("/payload/" + key, "missing");
    return payload[key];
  }
  ReducedClass reduced(const std::string& key) const { return poly_list(need(key), m(), 2 * l, "/payload/" + key); }
  IntVec nu0() const {
    if (auto v = optional_vec(payload, "nu0", l)) return *v;
    if (problem.nu0) return *problem.nu0;
    return find_generic_nu0(X);
  }
  std::optional<IntVec> nu2() const {
    if (auto v = optional_vec(payload, "nu2", l)) return v;
    return problem.nu2;
  }
  Json word(int w) const { return word_string(W()[w]); }
};

Json gg_json(const GGReport& r) {
  Json j;
  j["valid"] = r.ok;
  if (!r.ok) j["witness"] = r.witness;
  return j;
}

Json membership_json(const GKMGraph& g, const Membership& r) {
  Json j;
  j["valid"] = r.ok;
  if (!r.ok) {
    const auto& e = g.edges[*r.edge];
    j["witness"] = {{"edge", *r.edge}, {"from", g.labels[e.i]}, {"to", g.labels[e.j]},
                    {"character", to_json(e.chi)}, {"residue", to_string(r.residue)}};
  }
  return j;
}

Json graph_json(const GKMGraph& g, bool toroidal) {
  Json j;
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edges.size();
  j["torus_rank"] = g.torus_rank;
  if (toroidal) {
    Json kinds = Json::object();
    for (int k = ClosedOrbitLeft; k <= InteriorWall; ++k) kinds[edge_kind_name(k)] = 0;
    for (const auto& e : g.edges) kinds[edge_kind_name(e.kind)] = kinds[edge_kind_name(e.kind)].get<int>() + 1;
    j["edge_kinds"] = kinds;
  }
  j["vertices"] = g.labels;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json x = {{"i", e.i}, {"j", e.j}, {"character", to_json(e.chi)}};
    if (toroidal) x["kind"] = edge_kind_name(e.kind);
    edges.push_back(x);
  }
  j["edges"] = edges;
  return j;
}

Json orientation_json(const OrientationReport& o) {
  Json j;
  j["acyclic"] = o.acyclic;
  j["unique_sink"] = o.unique_sink;
  j["unique_source"] = o.unique_source;
  j["max_out_degree"] = o.max_out_degree;
  j["expected_dimension"] = o.expected_dimension;
  j["out_degree_sum"] = o.out_degree_sum;
  j["histogram"] = o.histogram;
  if (o.order) j["order"] = *o.order;
  j["ok"] = o.ok();
  return j;
}

Status run_command(const Context& c, const std::string& cmd, Json& out) {
  const WeylGroup& W = c.W();
  const int l = c.l;
  if (cmd == "check-cellular") {
    const IntVec nu0 = c.nu0();
    const OrbitFan orbit = orbit_fan(W, c.X.f_plus);
    const CellularityReport rep = cellularity_report(orbit.fan, nu0);
    const CellularityTransfer t = cellularity_transfer(c.X, nu0);
    out["nu0"] = nu0;
    out["cone_count"] = orbit.fan.maximal().size();
    Json cells = Json::array();
    for (std::size_t k = 0; k < rep.cells.size(); ++k)
      cells.push_back({{"cone", cone_json(orbit.fan.maximal()[k])},
                       {"face", cone_json(rep.cells[k].tau)},
                       {"quotient_smooth", rep.cells[k].quotient_smooth},
                       {"cell_dim", rep.cells[k].cell_dim}});
    out["cells"] = cells;
    if (rep.order) out["order"] = *rep.order;
    out["cellular"] = rep.verdict;
    out["toroidal_cellular"] = t.toroidal_verdict;
    out["toroidal_psg"] = {{"N", t.psg.N}, {"nu1", t.psg.nu1}, {"nu2", t.psg.nu2}};
    if (!t.agree()) return Status::ConsistencyFailure;
    return rep.verdict ? Status::Ok : Status::Fail;
  }
  if (cmd == "gkm-graph") {
    std::string which = "toroidal";
    if (c.payload.is_object() && c.payload.contains("graph")) {
      if (!c.payload["graph"].is_string()) throw ProblemError("/payload/graph", "expected a string");
      which = c.payload["graph"].get<std::string>();
    }
    out["graph"] = which;
    if (which == "toroidal") out.update(graph_json(toroidal_gkm_graph(c.X).graph, true));
    else if (which == "plus") out.update(graph_json(c.X.plus_graph, false));
    else if (which == "orbit") out.update(graph_json(toric_gkm_graph(orbit_fan(W, c.X.f_plus).fan), false));
    else throw ProblemError("/payload/graph", "expected toroidal, plus or orbit");
    return Status::Ok;
  }
  if (cmd == "membership") {
    Json r;
    if (c.payload.is_object() && c.payload.contains("full")) {
      const ToroidalGraph G = toroidal_gkm_graph(c.X);
      const FullClass a = poly_list(c.payload["full"], G.vertices.size(), 2 * l, "/payload/full");
      out["form"] = "full";
      r = membership_json(G.graph, is_tt_class(G, a, c.exec));
    } else if (c.payload.is_object() && c.payload.contains("toric")) {
      const GKMClass a = poly_list(c.payload["toric"], c.m(), l, "/payload/toric");
      out["form"] = "toric";
      r = membership_json(c.X.plus_graph, is_gkm_class(c.X.plus_graph, a, c.exec));
    } else {
      out["form"] = "reduced";
      r = gg_json(is_gg_class(c.X, c.reduced("class"), c.exec));
    }
    out.update(r);
    return out["valid"].get<bool>() ? Status::Ok : Status::Fail;
  }
  if (cmd == "symmetrize") {
    const GKMClass a = poly_list(c.need("class"), c.m(), l, "/payload/class");
    const Symmetrized s = symmetrize(W, c.X.f_plus, a, c.exec);
    Json cones = Json::array();
    for (std::size_t k = 0; k < s.values.size(); ++k)
      cones.push_back({{"cone", cone_json(s.orbit.fan.maximal()[k])},
                       {"element", c.word(s.orbit.origin[k].first)},
                       {"plus_cone", s.orbit.origin[k].second},
                       {"value", to_string(s.values[k])}});
    out["cones"] = cones;
    return Status::Ok;
  }
  if (cmd == "decompose") {
    const DecompositionResult d = decompose(c.X, c.reduced("class"), c.exec);
    Json terms = Json::array();
    for (std::size_t v = 0; v < W.size(); ++v)
      terms.push_back({{"element", c.word(int(v))},
                       {"index_set", mask_json(d.index_set[v], W.root_datum().semisimple_rank)},
                       {"coefficients", poly_json(d.coefficients[v])}});
    out["coordinates"] = "uv";
    out["terms"] = terms;
    return Status::Ok;
  }
  if (cmd == "multiply") {
    const ReducedClass a = c.reduced("a"), b = c.reduced("b");
    const GGReport va = is_gg_class(c.X, a, c.exec), vb = is_gg_class(c.X, b, c.exec);
    out["a"] = gg_json(va);
    out["b"] = gg_json(vb);
    if (!va.ok || !vb.ok) return Status::Fail;
    const ReducedClass p = multiply(a, b);
    out["product"] = poly_json(p);
    const GGReport vp = is_gg_class(c.X, p, c.exec);
    out["product_valid"] = vp.ok;
    return vp.ok ? Status::Ok : Status::ConsistencyFailure;
  }
  if (cmd == "multstr-check") {
    std::vector<std::pair<int, int>> pairs;
    if (c.payload.is_object() && c.payload.contains("pairs")) {
      const Json& p = c.payload["pairs"];
      if (!p.is_array()) throw ProblemError("/payload/pairs", "expected a list of pairs");
      for (std::size_t k = 0; k < p.size(); ++k) {
        const std::string ptr = "/payload/pairs/" + std::to_string(k);
        if (!p[k].is_array() || p[k].size() != 2) throw ProblemError(ptr, "expected a pair");
        pairs.emplace_back(element(W, p[k][0], ptr + "/0"), element(W, p[k][1], ptr + "/1"));
      }
    } else {
      for (std::size_t v = 0; v < W.size(); ++v)
        for (std::size_t vp = 0; vp < W.size(); ++vp) pairs.emplace_back(int(v), int(vp));
    }
    bool all = true;
    Json results = Json::array();
    for (auto [v, vp] : pairs) {
      const MultstrResult r = multstr_check(c.X, v, vp, c.exec);
      Json x = {{"v", c.word(v)}, {"v_prime", c.word(vp)}, {"ok", r.ok}};
      if (!r.ok) x["witness"] = r.witness;
      all = all && r.ok;
      results.push_back(x);
    }
    out["pairs_checked"] = pairs.size();
    out["ok"] = all;
    out["results"] = results;
    return all ? Status::Ok : Status::ConsistencyFailure;
  }
  if (cmd == "relwond-check") {
    unsigned seed = 1;
    if (c.payload.is_object() && c.payload.contains("seed")) seed = unsigned(integer(c.payload["seed"], "/payload/seed"));
    const RelwondReport r = relwond_check(c.X, seed, c.exec);
    out["products_valid"] = r.products_valid;
    out["basis_recovered"] = r.basis_recovered;
    out["rank_matches"] = r.rank_matches;
    out["pullback_compatible"] = r.pullback_compatible;
    out["rank"] = r.rank;
    out["ok"] = r.ok();
    if (!r.ok()) out["witness"] = r.witness;
    return r.ok() ? Status::Ok : Status::ConsistencyFailure;
  }
  if (cmd == "ordinary-rank") {
    const OrdinaryK k = ordinary_k(c.X);
    out["rank"] = k.rank;
    out["vertex_count"] = k.vertex_count;
    out["cells_by_dimension"] = k.out_degree_histogram;
    out["consistent"] = k.consistent;
    Json gens = Json::array();
    for (const auto& g : k.generators) gens.push_back({c.word(g[0]), g[1], c.word(g[2])});
    out["generators"] = gens;
    return k.consistent ? Status::Ok : Status::ConsistencyFailure;
  }
  if (cmd == "steinberg") {
    const SteinbergData& S = *c.X.steinberg;
    const int ss = W.root_datum().semisimple_rank;
    out["convention"] = to_string(S.convention());
    out["size"] = W.size();
    out["verification"] = {{"invariance", S.verification().invariance}, {"unit_ratio", S.verification().unit_ratio}};
    Json basis = Json::array();
    for (std::size_t v = 0; v < W.size(); ++v)
      basis.push_back({{"element", c.word(int(v))}, {"index_set", mask_json(S.c_index(int(v)), ss)},
                       {"f", to_string(S.f()[v])}});
    out["basis"] = basis;
    Json sets = Json::array();
    for (const auto& [mask, elems] : S.c_sets()) {
      Json words = Json::array();
      for (int w : elems) words.push_back(c.word(w));
      sets.push_back({{"index_set", mask_json(mask, ss)}, {"size", elems.size()}, {"elements", words}});
    }
    out["c_sets"] = sets;
    if (c.payload.is_object() && c.payload.contains("decompose")) {
      const LaurentPoly g = laurent(c.payload["decompose"], l, "/payload/decompose");
      out["coefficients"] = poly_json(steinberg_decompose(S, g, c.exec));
    }
    return S.verification().ok() ? Status::Ok : Status::ConsistencyFailure;
  }
  if (cmd == "transfer-psg") {
    std::string dir = "to-toroidal";
    if (c.payload.is_object() && c.payload.contains("direction")) {
      if (!c.payload["direction"].is_string()) throw ProblemError("/payload/direction", "expected a string");
      dir = c.payload["direction"].get<std::string>();
    }
    out["direction"] = dir;
    if (dir == "to-toroidal") {
      const IntVec nu0 = c.nu0();
      const ToroidalPSG p = transfer_to_toroidal(c.X, nu0, c.nu2());
      const ToricPSG back = transfer_to_toric(c.X, p.nu1, p.nu2);
      IntVec scaled = nu0;
      for (auto& x : scaled) x = checked_mul(x, p.N);
      const bool close = psg_perturbation(orbit_fan(W, c.X.f_plus).fan, scaled, back.lambda);
      out["nu0"] = nu0;
      out["N"] = p.N;
      out["nu1"] = p.nu1;
      out["nu2"] = p.nu2;
      out["round_trip"] = {{"lambda", back.lambda}, {"within_perturbation_bound", close}};
      return close ? Status::Ok : Status::ConsistencyFailure;
    }
    if (dir == "to-toric") {
      const IntVec nu1 = int_vec(c.need("nu1"), "/payload/nu1", l), nu2 = int_vec(c.need("nu2"), "/payload/nu2", l);
      const ToricPSG t = transfer_to_toric(c.X, nu1, nu2);
      out["w1"] = c.word(t.w1);
      out["w2"] = c.word(t.w2);
      out["lambda"] = t.lambda;
      return Status::Ok;
    }
    throw ProblemError("/payload/direction", "expected to-toroidal or to-toric");
  }
  if (cmd == "orientation-check") {
    IntVec nu1, nu2;
    if (c.payload.is_object() && c.payload.contains("nu1")) {
      nu1 = int_vec(c.payload["nu1"], "/payload/nu1", l);
      nu2 = int_vec(c.need("nu2"), "/payload/nu2", l);
    } else {
      const ToroidalPSG p = transfer_to_toroidal(c.X, c.nu0(), c.nu2());
      nu1 = p.nu1;
      nu2 = p.nu2;
    }
    const ToroidalGraph G = toroidal_gkm_graph(c.X);
    const OrientationReport o = orientation_check(c.X, G, nu1, nu2);
    out["nu1"] = nu1;
    out["nu2"] = nu2;
    out.update(orientation_json(o));
    return o.ok() ? Status::Ok : Status::Fail;
  }
  throw ProblemError("/command", "unknown command " + cmd);
}

}  // namespace

Problem load_problem(const Json& j) {
  if (!j.is_object()) throw ProblemError("", "expected a JSON object");
  Problem p;
  p.root_datum = parse_root_datum(member(j, "root_datum", ""), "/root_datum");
  p.fan_plus = parse_fan_plus(member(j, "fan_plus", ""), p.root_datum, "/fan_plus");
  if (j.contains("psg")) {
    const Json& psg = j["psg"];
    if (!psg.is_object()) throw ProblemError("/psg", "expected an object");
    if (psg.contains("nu0")) p.nu0 = int_vec(psg["nu0"], "/psg/nu0", p.root_datum.rank());
    if (psg.contains("nu2")) p.nu2 = int_vec(psg["nu2"], "/psg/nu2", p.root_datum.rank());
  }
  if (j.contains("payload")) p.payload = j["payload"];
  return p;
}

Problem load_problem_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ProblemError("", std::string("parse error: ") + e.what());
  }
  return load_problem(j);
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_problem_text(ss.str());
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Fail: return "fail";
    case Status::ConsistencyFailure: return "paper-consistency-failure";
  }
  return "?";
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["status"] = to_string(status);
  j["payload"] = payload;
  return j;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "check-cellular", "gkm-graph",     "membership",    "symmetrize", "decompose",    "multiply",
      "multstr-check",  "relwond-check", "ordinary-rank", "steinberg",  "transfer-psg", "orientation-check"};
  return names;
}

Report run(const Problem& problem, const std::string& command, const Json& payload, Exec exec) {
  Report r;
  r.command = command;
  const Json& p = payload.is_null() ? problem.payload : payload;
  try {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      throw ProblemError("/command", "unknown command " + command);
    Context c{problem, p, exec, make_instance(problem.root_datum, problem.fan_plus, exec), problem.root_datum.rank()};
    r.status = run_command(c, command, r.payload);
  } catch (const ConsistencyError& e) {
    r.status = Status::ConsistencyFailure;
    r.payload["error"] = e.what();
  } catch (const InvalidGraph& e) {
    r.status = Status::ConsistencyFailure;
    r.payload["error"] = e.what();
  } catch (const ProblemError& e) {
    r.status = Status::Fail;
    r.payload["error"] = e.what();
    r.payload["pointer"] = e.pointer;
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.payload["error"] = e.what();
  }
  return r;
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.to_json().dump(2) + "\n";
  if (format != "text") throw std::invalid_argument("unknown format " + format);
  std::ostringstream os;
  os << "command: " << report.command << "\nstatus: " << to_string(report.status) << "\n";
  for (auto it = report.payload.begin(); it != report.payload.end(); ++it)
    os << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
  return os.str();
}

}  // namespace eqk::cli
