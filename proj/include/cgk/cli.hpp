#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cgk/dot.hpp"
#include "cgk/json_io.hpp"
#include "cgk/oracle.hpp"

namespace cgk::cli {

namespace detail {

inline std::string graph_text(const Graph& g) {
  std::string s = "vertices (" + std::to_string(g.vertex_count()) + "):";
  for (const auto& v : g.vertices) s += " " + v;
  s += "\nedges (" + std::to_string(g.edge_count()) + "):\n";
  for (const auto& e : g.edges)
    s += "  " + e.name + ": " + g.vertices[e.src] + " -> " + g.vertices[e.rng] + "\n";
  return s;
}

inline std::string block_list_text(const std::vector<Block>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += " + ";
    s += cgk::detail::block_label(blocks[i].size);
  }
  return s;
}

struct Ctx {
  std::string path;
  bool as_json = false;
  std::string dot_path;
  bool use_skeleton = false;
  bool use_dr = false;
  long max_group = 20000;
  long max_oracle = 5000;

  ProblemFile problem() const { return load_problem(path); }
  GroupAction action(const ProblemFile& pf) const {
    return action_of(pf, static_cast<std::size_t>(max_group));
  }
};

inline void add_common(CLI::App* cmd, Ctx& ctx, bool with_json = true) {
  cmd->add_option("input", ctx.path, "problem file (JSON)")->required();
  if (with_json) cmd->add_flag("--json", ctx.as_json, "emit JSON instead of text");
  cmd->add_option("--max-group-order", ctx.max_group, "group closure bound");
  cmd->add_option("--max-oracle-dim", ctx.max_oracle, "crossed-product dimension bound");
}

inline void cmd_validate(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  OrbitPartition vo = act.vertex_orbits(), eo = act.edge_orbits();
  bool free = is_free(act);
  if (ctx.as_json) {
    out << json{{"ok", true},
                {"group_order", act.group.order()},
                {"degree", act.group.degree()},
                {"vertex_orbits", vo.orbits.size()},
                {"edge_orbits", eo.orbits.size()},
                {"free", free}}
               .dump(2)
        << "\n";
  } else {
    out << "ok: group order " << act.group.order() << ", " << vo.orbits.size()
        << " vertex orbit(s), " << eo.orbits.size() << " edge orbit(s), free action: "
        << (free ? "yes" : "no") << "\n";
  }
}

inline void cmd_orbits(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  if (ctx.as_json) {
    out << orbits_to_json(act).dump(2) << "\n";
    return;
  }
  OrbitPartition vo = act.vertex_orbits(), eo = act.edge_orbits();
  out << "vertex orbits:\n";
  for (std::size_t k = 0; k < vo.orbits.size(); ++k) {
    out << "  " << k << ":";
    for (int v : vo.orbits[k]) out << " " << act.graph.vertices[v];
    out << "\n";
  }
  out << "edge orbits:\n";
  for (std::size_t k = 0; k < eo.orbits.size(); ++k) {
    out << "  " << k << ":";
    for (int e : eo.orbits[k]) out << " " << act.graph.edges[e].name;
    out << "\n";
  }
}

inline void cmd_quotient(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  Graph q = quotient_graph(ctx.action(pf));
  if (ctx.as_json) out << graph_to_json(q).dump(2) << "\n";
  else out << graph_text(q);
}

inline void cmd_skew(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  if (!pf.cocycle) fail(Errc::MissingInput, "skew requires a cocycle section");
  Graph sk = skew_product(pf.graph, *pf.cocycle);
  if (ctx.as_json) out << graph_to_json(sk).dump(2) << "\n";
  else out << graph_text(sk);
}

inline void cmd_chartable(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  CharTable t = character_table(act.group);
  if (ctx.as_json) {
    out << chartable_to_json(t).dump(2) << "\n";
    return;
  }
  out << "group order " << act.group.order() << ", " << t.classes.count() << " classes\n";
  for (std::size_t k = 0; k < t.classes.count(); ++k)
    out << "class " << k << ": size " << t.classes.sizes[k] << ", element order "
        << act.group.element_order(t.classes.reps[k]) << "\n";
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    out << "irreducible " << i << ": degree " << t.degrees[i] << ", values";
    for (const auto& v : t.irreducibles[i].values) out << " " << v.to_string();
    out << "\n";
  }
}

inline void cmd_blocks(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  std::vector<Block> blocks = vertex_algebra_summary(act);
  if (ctx.as_json) {
    json jb = json::array();
    for (const Block& b : blocks)
      jb.push_back({{"index", b.index},
                    {"orbit", b.vertex_orbit},
                    {"rep", act.graph.vertices[b.rep_vertex]},
                    {"stabilizer_order", b.stabilizer.order()},
                    {"irr", b.irr_index},
                    {"degree", b.degree},
                    {"size", b.size}});
    out << json{{"blocks", jb}}.dump(2) << "\n";
    return;
  }
  int orbit = -1;
  for (const Block& b : blocks) {
    if (b.vertex_orbit != orbit) {
      orbit = b.vertex_orbit;
      std::vector<Block> of_orbit;
      for (const Block& c : blocks)
        if (c.vertex_orbit == orbit) of_orbit.push_back(c);
      out << "orbit " << orbit << " (rep " << act.graph.vertices[b.rep_vertex]
          << ", stabilizer order " << b.stabilizer.order() << "): " << block_list_text(of_orbit)
          << "\n";
    }
  }
  out << "algebra: " << block_list_text(blocks) << "\n";
}

inline void cmd_decompose(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  CorrGraph cg = corr_graph(act);
  if (!ctx.dot_path.empty()) {
    std::ofstream dot(ctx.dot_path);
    if (!dot) fail(Errc::MissingInput, "cannot write DOT file: " + ctx.dot_path);
    dot << emit_dot(cg);
  }
  if (ctx.as_json) {
    out << corr_to_json(cg, act.graph).dump(2) << "\n";
    return;
  }
  out << "blocks:";
  for (const Block& b : cg.blocks) out << " " << b.size;
  out << "\nmatrix:\n" << cg.matrix.to_string() << "\n";
  out << "edges:\n";
  for (const CorrEdge& e : cg.edges)
    out << "  orbit " << e.orbit << ": b" << e.from_block << " -> b" << e.to_block << " mult "
        << e.mult << " ("
        << cgk::detail::corr_label(cg.blocks[e.from_block].size, cg.blocks[e.to_block].size,
                                   e.mult)
        << ")\n";
  AuditReport audit = dimension_audit(cg);
  out << "audit: " << (audit.ok ? "ok" : "FAILED " + audit.detail) << "\n";
}

inline void cmd_ktheory(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  KTheory k;
  if (ctx.use_dr) {
    GroupAction act = ctx.action(pf);
    k = dr_k_theory(act.group, representation_character(pf, act));
  } else if (ctx.use_skeleton) {
    GroupAction act = ctx.action(pf);
    k = graph_k_theory(skeleton(corr_graph(act)));
  } else {
    k = graph_k_theory(pf.graph);
  }
  if (ctx.as_json) out << ktheory_to_json(k).dump(2) << "\n";
  else out << k.to_string() << "\n";
}

inline void cmd_dimgroup(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  IntMatrix B = ctx.use_dr ? dr_matrix(act.group, representation_character(pf, act))
                           : vertex_matrix(skeleton(corr_graph(act)));
  DimGroupPresentation p = dim_group(B);
  if (ctx.as_json) {
    out << json{{"k", p.k}, {"B", matrix_to_json(p.B)}, {"stable_rank", p.stable_rank}}.dump(2)
        << "\n";
    return;
  }
  out << "stationary system (Z^" << p.k << ", B), stable rank " << p.stable_rank << "\n";
  out << "B:\n" << p.B.to_string() << "\n";
}

inline void cmd_props(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  Graph g = pf.graph;
  if (ctx.use_skeleton) g = skeleton(corr_graph(ctx.action(pf)));
  GraphAlgebraProps p = graph_algebra_props(g);
  if (ctx.as_json)
    out << json{{"simple", p.simple}, {"purely_infinite", p.purely_infinite}}.dump(2) << "\n";
  else
    out << "simple: " << (p.simple ? "yes" : "no")
        << ", purely infinite: " << (p.purely_infinite ? "yes" : "no") << "\n";
}

inline void cmd_oracle_check(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  OracleResult res = oracle_check(act, ctx.max_oracle);
  CorrGraph cg = corr_graph(act);
  json sizes = json::array();
  for (const Block& b : res.blocks) sizes.push_back(b.size);
  out << json{{"blocks", sizes},
              {"corner_dims", matrix_to_json(res.corner_dims)},
              {"multiplicities", matrix_to_json(res.multiplicities)},
              {"match", res.multiplicities == cg.matrix}}
             .dump(2)
      << "\n";
}

inline void cmd_report(const Ctx& ctx, std::ostream& out) {
  ProblemFile pf = ctx.problem();
  GroupAction act = ctx.action(pf);
  out << "== action ==\n";
  out << "group order " << act.group.order() << ", graph: " << act.graph.vertex_count()
      << " vertices, " << act.graph.edge_count() << " edges, free: "
      << (is_free(act) ? "yes" : "no") << "\n";
  OrbitPartition vo = act.vertex_orbits(), eo = act.edge_orbits();
  out << vo.orbits.size() << " vertex orbit(s), " << eo.orbits.size() << " edge orbit(s)\n";
  out << "\n== quotient graph ==\n" << graph_text(quotient_graph(act));
  out << "\n== blocks ==\n";
  std::vector<Block> blocks = vertex_algebra_summary(act);
  out << block_list_text(blocks) << "\n";
  CorrGraph cg = corr_graph(act);
  out << "\n== decomposition ==\nmatrix:\n" << cg.matrix.to_string() << "\n";
  AuditReport audit = dimension_audit(cg);
  out << "audit: " << (audit.ok ? "ok" : "FAILED " + audit.detail) << "\n";
  Graph sk = skeleton(cg);
  out << "\n== skeleton ==\n" << graph_text(sk);
  out << "\n== K-theory ==\n";
  out << "input graph:  " << graph_k_theory(pf.graph).to_string() << "\n";
  out << "skeleton:     " << graph_k_theory(sk).to_string() << "\n";
  GraphAlgebraProps props = graph_algebra_props(sk);
  out << "skeleton algebra simple: " << (props.simple ? "yes" : "no")
      << ", purely infinite: " << (props.purely_infinite ? "yes" : "no") << "\n";
  DimGroupPresentation p = dim_group(vertex_matrix(sk));
  out << "stationary system (Z^" << p.k << ", skeleton matrix), stable rank " << p.stable_rank
      << "\n";
  if (pf.representation) {
    ClassFunction rho = representation_character(pf, act);
    IntMatrix B = dr_matrix(act.group, rho);
    out << "\n== Doplicher-Roberts ==\nB:\n" << B.to_string() << "\n";
    out << "K-theory: " << graph_k_theory(dr_graph(B)).to_string() << "\n";
    out << "stable rank of (Z^" << B.rows() << ", B): " << dim_group(B).stable_rank << "\n";
  }
  long adim = static_cast<long>(act.group.order()) * act.graph.vertex_count();
  long hdim = static_cast<long>(act.group.order()) * act.graph.edge_count();
  if (adim <= ctx.max_oracle && hdim <= ctx.max_oracle) {
    OracleResult res = oracle_check(act, ctx.max_oracle);
    out << "\n== oracle ==\nmultiplicities match: "
        << (res.multiplicities == cg.matrix ? "yes" : "NO") << "\n";
  }
}

}  // namespace detail

/// Entry point shared by the binary and the test suite. Returns the process
/// exit code: 0 success, 1 domain error, 2 parse error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact decomposition toolkit for finite group actions on graph algebras", "cgk"};
  app.require_subcommand(1);

  detail::Ctx ctx;
  auto* validate = app.add_subcommand("validate", "check that the input describes an action");
  detail::add_common(validate, ctx);
  auto* orbits = app.add_subcommand("orbits", "vertex and edge orbits");
  detail::add_common(orbits, ctx);
  auto* quotient = app.add_subcommand("quotient", "quotient graph E/G");
  detail::add_common(quotient, ctx);
  auto* skew = app.add_subcommand("skew", "skew product graph E(c) from the cocycle");
  detail::add_common(skew, ctx);
  auto* chartable = app.add_subcommand("chartable", "character table of the acting group");
  detail::add_common(chartable, ctx);
  auto* blocks = app.add_subcommand("blocks", "block decomposition of C0(E^0) x| G");
  detail::add_common(blocks, ctx);
  auto* decompose = app.add_subcommand("decompose", "graph of minimal correspondences");
  detail::add_common(decompose, ctx);
  decompose->add_option("--dot", ctx.dot_path, "write Graphviz DOT to this path");
  auto* ktheory = app.add_subcommand("ktheory", "K-theory of the input graph algebra");
  detail::add_common(ktheory, ctx);
  ktheory->add_flag("--skeleton", ctx.use_skeleton, "K-theory of the decomposed skeleton");
  ktheory->add_flag("--dr", ctx.use_dr, "Doplicher-Roberts K-theory of the representation");
  auto* dimgroup = app.add_subcommand("dimgroup", "stationary dimension group presentation");
  detail::add_common(dimgroup, ctx);
  dimgroup->add_flag("--dr", ctx.use_dr, "use the Doplicher-Roberts matrix");
  auto* props = app.add_subcommand("props", "simplicity and pure infiniteness");
  detail::add_common(props, ctx);
  props->add_flag("--skeleton", ctx.use_skeleton, "inspect the decomposed skeleton");
  auto* oracle = app.add_subcommand("oracle-check", "first-principles corner-dimension check");
  detail::add_common(oracle, ctx, /*with_json=*/false);
  auto* report = app.add_subcommand("report", "full human-readable report");
  detail::add_common(report, ctx, /*with_json=*/false);

  std::reverse(args.begin(), args.end());  // CLI11 wants reversed argument lists
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) detail::cmd_validate(ctx, out);
    else if (orbits->parsed()) detail::cmd_orbits(ctx, out);
    else if (quotient->parsed()) detail::cmd_quotient(ctx, out);
    else if (skew->parsed()) detail::cmd_skew(ctx, out);
    else if (chartable->parsed()) detail::cmd_chartable(ctx, out);
    else if (blocks->parsed()) detail::cmd_blocks(ctx, out);
    else if (decompose->parsed()) detail::cmd_decompose(ctx, out);
    else if (ktheory->parsed()) detail::cmd_ktheory(ctx, out);
    else if (dimgroup->parsed()) detail::cmd_dimgroup(ctx, out);
    else if (props->parsed()) detail::cmd_props(ctx, out);
    else if (oracle->parsed()) detail::cmd_oracle_check(ctx, out);
    else if (report->parsed()) detail::cmd_report(ctx, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cgk::cli
