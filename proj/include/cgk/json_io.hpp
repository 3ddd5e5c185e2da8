#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgk/action.hpp"
#include "cgk/chartab.hpp"
#include "cgk/decomp.hpp"
#include "cgk/ktheory.hpp"

namespace cgk {

using nlohmann::json;

namespace detail {

inline void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail(Errc::ParseError, where + ": expected an object");
}

inline void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                        const std::string& where) {
  expect_object(j, where);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) fail(Errc::ParseError, where + ": unknown field \"" + it.key() + "\"");
  }
}

inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(Errc::ParseError, where + ": missing field \"" + key + "\"");
  return j.at(key);
}

inline Perm perm_from_map(const json& map, const std::vector<std::string>& names,
                          const std::string& where) {
  expect_object(map, where);
  if (map.size() != names.size())
    fail(Errc::ParseError, where + ": map must cover every name exactly once");
  std::vector<int> img(names.size(), -1);
  for (auto it = map.begin(); it != map.end(); ++it) {
    int from = -1, to = -1;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == it.key()) from = static_cast<int>(i);
      if (it.value().is_string() && names[i] == it.value().get<std::string>())
        to = static_cast<int>(i);
    }
    if (from < 0) fail(Errc::ParseError, where + ": unknown name \"" + it.key() + "\"");
    if (to < 0) fail(Errc::ParseError, where + ": bad image for \"" + it.key() + "\"");
    img[from] = to;
  }
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] == img[j]) fail(Errc::ParseError, where + ": map is not a bijection");
  }
  return Perm(img);
}

inline Cyc cyc_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Cyc(BigInt(j.get<long>()));
  expect_keys(j, {"m", "coeffs"}, where);
  long m = require(j, "m", where).get<long>();
  Poly coeffs;
  for (const auto& c : require(j, "coeffs", where)) coeffs.emplace_back(c.get<long>());
  return Cyc(m, std::move(coeffs));
}

inline json cyc_to_json(const Cyc& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_long(c));
  return json{{"m", v.modulus()}, {"coeffs", coeffs}};
}

}  // namespace detail

// ---- problem files -----------------------------------------------------------

struct RepSpec {
  bool edges = false;          // permutation representation on the edge set
  std::vector<Cyc> values;     // otherwise: one value per canonical class
};

struct ProblemFile {
  Graph graph;
  std::vector<GeneratorImages> gens;
  std::optional<std::vector<Perm>> abstract_gens;  // with its degree below
  int abstract_degree = 0;
  std::optional<Cocycle> cocycle;
  std::optional<RepSpec> representation;
};

inline Graph graph_from_json(const json& jg) {
  detail::expect_keys(jg, {"vertices", "edges"}, "graph");
  Graph g;
  for (const auto& v : detail::require(jg, "vertices", "graph")) {
    if (!v.is_string()) fail(Errc::ParseError, "graph: vertex names must be strings");
    g.vertices.push_back(v.get<std::string>());
  }
  for (const auto& je : detail::require(jg, "edges", "graph")) {
    detail::expect_keys(je, {"name", "src", "rng"}, "edge");
    std::string name = detail::require(je, "name", "edge").get<std::string>();
    std::string src = detail::require(je, "src", "edge").get<std::string>();
    std::string rng = detail::require(je, "rng", "edge").get<std::string>();
    int si = g.find_vertex(src), ri = g.find_vertex(rng);
    if (si < 0 || ri < 0) fail(Errc::ParseError, "edge " + name + ": unknown endpoint");
    g.edges.push_back({name, si, ri});
  }
  g.validate();
  return g;
}

inline json graph_to_json(const Graph& g) {
  json jv = json::array(), je = json::array();
  for (const auto& v : g.vertices) jv.push_back(v);
  for (const auto& e : g.edges)
    je.push_back({{"name", e.name}, {"src", g.vertices[e.src]}, {"rng", g.vertices[e.rng]}});
  return json{{"vertices", jv}, {"edges", je}};
}

inline ProblemFile problem_from_json(const json& j) {
  detail::expect_keys(j, {"graph", "action", "cocycle", "representation"}, "problem");
  ProblemFile pf;
  pf.graph = graph_from_json(detail::require(j, "graph", "problem"));

  const json& ja = detail::require(j, "action", "problem");
  detail::expect_keys(ja, {"generators", "abstract_group"}, "action");
  std::vector<std::string> edge_names;
  for (const auto& e : pf.graph.edges) edge_names.push_back(e.name);
  for (const auto& jg : detail::require(ja, "generators", "action")) {
    detail::expect_keys(jg, {"name", "vertex_map", "edge_map"}, "generator");
    GeneratorImages gi;
    if (jg.contains("name")) gi.name = jg.at("name").get<std::string>();
    gi.vperm = detail::perm_from_map(detail::require(jg, "vertex_map", "generator"),
                                     pf.graph.vertices, "vertex_map");
    gi.eperm = detail::perm_from_map(detail::require(jg, "edge_map", "generator"), edge_names,
                                     "edge_map");
    pf.gens.push_back(std::move(gi));
  }
  if (pf.gens.empty()) fail(Errc::ParseError, "action: needs at least one generator");

  if (ja.contains("abstract_group")) {
    const json& jag = ja.at("abstract_group");
    detail::expect_keys(jag, {"degree", "generators"}, "abstract_group");
    pf.abstract_degree = detail::require(jag, "degree", "abstract_group").get<int>();
    std::vector<Perm> gens;
    for (const auto& jp : detail::require(jag, "generators", "abstract_group")) {
      std::vector<int> img;
      for (const auto& v : jp) img.push_back(v.get<int>());
      if (static_cast<int>(img.size()) != pf.abstract_degree)
        fail(Errc::ParseError, "abstract_group: generator degree mismatch");
      try {
        gens.emplace_back(std::move(img));
      } catch (const std::invalid_argument&) {
        fail(Errc::ParseError, "abstract_group: generator is not a permutation");
      }
    }
    if (gens.empty()) fail(Errc::ParseError, "abstract_group: needs generators");
    pf.abstract_gens = std::move(gens);
  }

  if (j.contains("cocycle")) {
    const json& jc = j.at("cocycle");
    detail::expect_keys(jc, {"abelian", "assignment"}, "cocycle");
    Cocycle c;
    for (const auto& m : detail::require(jc, "abelian", "cocycle")) c.abelian.push_back(m.get<long>());
    const json& asg = detail::require(jc, "assignment", "cocycle");
    detail::expect_object(asg, "cocycle.assignment");
    for (auto it = asg.begin(); it != asg.end(); ++it) {
      std::vector<long> tuple;
      for (const auto& k : it.value()) tuple.push_back(k.get<long>());
      c.assignment[it.key()] = std::move(tuple);
    }
    pf.cocycle = std::move(c);
  }

  if (j.contains("representation")) {
    const json& jr = j.at("representation");
    RepSpec rs;
    if (jr.is_string()) {
      if (jr.get<std::string>() != "edges")
        fail(Errc::ParseError, "representation: unknown keyword \"" + jr.get<std::string>() + "\"");
      rs.edges = true;
    } else {
      detail::expect_keys(jr, {"character"}, "representation");
      const json& jc = detail::require(jr, "character", "representation");
      detail::expect_keys(jc, {"values_mod_classes"}, "representation.character");
      for (const auto& v : detail::require(jc, "values_mod_classes", "character"))
        rs.values.push_back(detail::cyc_from_json(v, "character value"));
    }
    pf.representation = std::move(rs);
  }
  return pf;
}

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open input file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return problem_from_json(j);
}

/// Build the validated action a problem file describes.
inline GroupAction action_of(const ProblemFile& pf, std::size_t bound = 20000) {
  std::optional<PermGroup> abstract;
  if (pf.abstract_gens) abstract = PermGroup::close(*pf.abstract_gens, bound);
  return validate_action(pf.graph, pf.gens, abstract, bound);
}

/// The representation character a problem file describes (throws MissingInput
/// if there is none).
inline ClassFunction representation_character(const ProblemFile& pf, const GroupAction& act) {
  if (!pf.representation) fail(Errc::MissingInput, "problem file has no representation section");
  if (pf.representation->edges)
    return perm_character(act.group, act.graph.edge_count(),
                          [&act](int g, int e) { return act.eact(g, e); });
  ClassFunction cf;
  cf.domain = Subgroup::whole(act.group);
  cf.classes = conjugacy_classes(act.group);
  if (pf.representation->values.size() != cf.classes.count())
    fail(Errc::ParseError, "representation: expected " + std::to_string(cf.classes.count()) +
                               " class values, got " +
                               std::to_string(pf.representation->values.size()));
  cf.values = pf.representation->values;
  return cf;
}

// ---- serializers ---------------------------------------------------------------

inline json ktheory_to_json(const KTheory& k) {
  json torsion = json::array();
  for (const auto& d : k.k0_torsion) torsion.push_back(to_long(d));
  return json{{"K0", {{"free", k.k0_free_rank}, {"torsion", torsion}}},
              {"K1", {{"free", k.k1_rank}}}};
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(to_long(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::ParseError, where + ": expected an array of rows");
  long rows = static_cast<long>(j.size());
  long cols = rows ? static_cast<long>(j.at(0).size()) : 0;
  IntMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (static_cast<long>(j.at(i).size()) != cols) fail(Errc::ParseError, where + ": ragged rows");
    for (long c = 0; c < cols; ++c) m.at(i, c) = BigInt(j.at(i).at(c).get<long>());
  }
  return m;
}

inline json chartable_to_json(const CharTable& t) {
  const PermGroup& G = *t.domain.parent;
  json classes = json::array();
  for (std::size_t k = 0; k < t.classes.count(); ++k) {
    json rep = json::array();
    for (int v : G.element(t.classes.reps[k]).images()) rep.push_back(v);
    classes.push_back({{"rep", rep},
                       {"size", t.classes.sizes[k]},
                       {"order", G.element_order(t.classes.reps[k])}});
  }
  json irr = json::array();
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    json values = json::array();
    for (const auto& v : t.irreducibles[i].values) values.push_back(detail::cyc_to_json(v));
    irr.push_back({{"degree", t.degrees[i]}, {"values", values}});
  }
  return json{{"group_order", t.domain.order()}, {"classes", classes}, {"irreducibles", irr}};
}

inline json corr_to_json(const CorrGraph& cg, const Graph& graph) {
  json blocks = json::array();
  for (const Block& b : cg.blocks)
    blocks.push_back({{"index", b.index},
                      {"orbit", b.vertex_orbit},
                      {"rep", graph.vertices[b.rep_vertex]},
                      {"stabilizer_order", b.stabilizer.order()},
                      {"irr", b.irr_index},
                      {"degree", b.degree},
                      {"size", b.size}});
  json edges = json::array();
  for (const CorrEdge& e : cg.edges)
    edges.push_back(
        {{"orbit", e.orbit}, {"from", e.from_block}, {"to", e.to_block}, {"mult", e.mult}});
  return json{{"group_order", cg.group_order},
              {"n_vertices", cg.n_vertices},
              {"n_edges", cg.n_edges},
              {"edge_orbit_sizes", cg.edge_orbit_sizes},
              {"blocks", blocks},
              {"edges", edges},
              {"matrix", matrix_to_json(cg.matrix)}};
}

/// Rebuild a CorrGraph from its serialization. Stabilizer subgroups are not
/// part of the wire format; the result carries everything the skeleton, audit
/// and DOT emitters need.
inline CorrGraph corr_from_json(const json& j) {
  detail::expect_keys(j, {"group_order", "n_vertices", "n_edges", "edge_orbit_sizes", "blocks",
                          "edges", "matrix"},
                      "corr");
  CorrGraph cg;
  cg.group_order = detail::require(j, "group_order", "corr").get<long>();
  cg.n_vertices = detail::require(j, "n_vertices", "corr").get<long>();
  cg.n_edges = detail::require(j, "n_edges", "corr").get<long>();
  for (const auto& s : detail::require(j, "edge_orbit_sizes", "corr"))
    cg.edge_orbit_sizes.push_back(s.get<long>());
  for (const auto& jb : detail::require(j, "blocks", "corr")) {
    Block b;
    b.index = jb.at("index").get<int>();
    b.vertex_orbit = jb.at("orbit").get<int>();
    b.rep_vertex = -1;
    b.irr_index = jb.at("irr").get<int>();
    b.degree = jb.at("degree").get<long>();
    b.size = jb.at("size").get<long>();
    cg.blocks.push_back(std::move(b));
  }
  for (const auto& je : detail::require(j, "edges", "corr"))
    cg.edges.push_back({je.at("orbit").get<int>(), je.at("from").get<int>(),
                        je.at("to").get<int>(), je.at("mult").get<long>()});
  cg.matrix = matrix_from_json(detail::require(j, "matrix", "corr"), "corr.matrix");
  return cg;
}

inline json orbits_to_json(const GroupAction& act) {
  OrbitPartition vo = act.vertex_orbits(), eo = act.edge_orbits();
  json jv = json::array(), je = json::array();
  for (const auto& orb : vo.orbits) {
    json names = json::array();
    for (int v : orb) names.push_back(act.graph.vertices[v]);
    jv.push_back(names);
  }
  for (const auto& orb : eo.orbits) {
    json names = json::array();
    for (int e : orb) names.push_back(act.graph.edges[e].name);
    je.push_back(names);
  }
  return json{{"vertex_orbits", jv}, {"edge_orbits", je}};
}

}  // namespace cgk
