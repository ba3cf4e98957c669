// Command-line front end: solvers, reduction workbench, oracles, benchmarks.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cover3/bench.hpp"
#include "cover3/cover3.hpp"
#include "cover3/io.hpp"
#include "cover3/kcenter.hpp"
#include "cover3/oracles.hpp"
#include "cover3/reductions.hpp"

using json = nlohmann::ordered_json;
using namespace cover3;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

OracleBudget budget_from_env(long long budget_ms_flag) {
  OracleBudget b;
  if (const char* env = std::getenv("COVER3_BUDGET_MS")) b.wall_ms = std::atoll(env);
  if (budget_ms_flag > 0) b.wall_ms = budget_ms_flag;
  return b;
}

Variant variant_from(const std::string& s) {
  for (Variant v : {Variant::Auto, Variant::Basic, Variant::Unweighted, Variant::WeightedRect,
                    Variant::UnitWeighted, Variant::UnitUnweighted, Variant::Oracle})
    if (s == to_string(v)) return v;
  throw Error(Error::Code::InvalidArgument, "unknown variant '" + s + "'");
}

json stats_json(const SolveStats& st) {
  json j;
  j["n"] = st.n;
  j["m"] = st.m;
  j["g"] = st.g;
  j["wall_ms"] = st.wall_ms;
  j["step1_pairs"] = st.step1_pairs;
  j["step2_pairs"] = st.step2_pairs;
  j["step3_configs"] = st.step3_configs;
  j["case1_queries"] = st.case1_queries;
  j["case2_configs"] = st.case2_configs;
  j["case3_configs"] = st.case3_configs;
  j["pair_queries"] = st.pair_queries;
  return j;
}

int emit(const json& j, int code) {
  std::cout << j.dump() << "\n";
  return code;
}

int cmd_cover3(const std::string& points_path, const std::string& rects_path,
               const std::string& variant_str, int grid, int threads, bool oracle_check,
               long long budget_ms) {
  auto pf = parse_instance_file(points_path);
  auto rf = parse_instance_file(rects_path);
  if (pf.kind != FileKind::Points || rf.kind != FileKind::Ranges)
    throw Error(Error::Code::InvalidArgument, "cover3 needs a points file and a ranges file");
  Variant v = variant_from(variant_str);
  json out;
  if (v == Variant::Oracle) {
    auto res = brute_cover_k(pf.points, rf.ranges, 3, rf.weighted, budget_from_env(budget_ms));
    if (!res) {
      out["status"] = "infeasible";
      return emit(out, kExitInfeasible);
    }
    out["status"] = "ok";
    out["weight"] = res->weight.str();
    out["witness"] = res->ids;
    out["provenance"] = "ORACLE";
    return emit(out, kExitOk);
  }
  SolveOptions opt;
  if (grid > 0) opt.grid_size = grid;
  opt.threads = std::max(1, threads);
  Cover3Solver solver(pf.points, rf.ranges, opt);
  if (v == Variant::Auto) {
    v = solver.unit() ? (solver.weighted() ? Variant::UnitWeighted : Variant::UnitUnweighted)
                      : (solver.weighted() ? Variant::WeightedRect : Variant::Unweighted);
  }
  SolveStats st;
  auto sol = solver.solve(v, &st);
  out["status"] = sol ? "ok" : "infeasible";
  if (sol) {
    out["weight"] = sol->weight.str();
    out["witness"] = sol->ids;
    out["provenance"] = to_string(sol->provenance);
  }
  if (oracle_check) {
    auto oracle = brute_cover_k(pf.points, rf.ranges, 3, rf.weighted, budget_from_env(budget_ms));
    bool match =
        oracle.has_value() == sol.has_value() && (!oracle || oracle->weight == sol->weight);
    out["oracle_match"] = match;
  }
  out["stats"] = stats_json(st);
  return emit(out, sol ? kExitOk : kExitInfeasible);
}

int cmd_d3c(const std::string& points_path, const std::string& supply_path,
            const std::string& radius_str, int grid, int threads, bool materialize) {
  auto pf = parse_instance_file(points_path);
  if (pf.kind != FileKind::Points)
    throw Error(Error::Code::InvalidArgument, "d3c needs a points file");
  std::optional<InstanceFile> sf;
  if (!supply_path.empty()) sf = parse_instance_file(supply_path);
  const std::vector<PointD>* supply = sf ? &sf->points : nullptr;
  D3cOptions opt;
  if (grid > 0) opt.grid_size = grid;
  opt.threads = std::max(1, threads);
  opt.materialize_candidates = materialize;
  json out;
  if (!radius_str.empty()) {
    Rational r = parse_rational(radius_str);
    auto dec = rect_d3c_decide(pf.points, r, supply, opt);
    out["status"] = dec ? "ok" : "infeasible";
    out["radius"] = r.str();
    if (dec) out["witness"] = *dec;
    return emit(out, dec ? kExitOk : kExitInfeasible);
  }
  auto res = rect_d3c_optimize(pf.points, supply, opt);
  out["status"] = "ok";
  out["radius"] = res.radius.str();
  out["witness"] = res.centers;
  return emit(out, kExitOk);
}

ReductionInstance generate(ReductionKind kind, const InstanceFile* gf, const InstanceFile* hf,
                           int kappa) {
  switch (kind) {
    case ReductionKind::WeightedTriangleR2: return gen_weighted_triangle_r2(gf->graph);
    case ReductionKind::TriangleBoxesR3: return gen_triangle_boxes_r3(gf->graph);
    case ReductionKind::TriangleOrthantsR4: return gen_triangle_orthants_r4(gf->graph);
    case ReductionKind::D3cR4: return gen_d3c_r4(gf->graph);
    case ReductionKind::Clique4Cover6R2: return gen_4clique_cover6_r2(gf->graph);
    case ReductionKind::HypercliqueD2cR13: return gen_hyperclique_d2c_r13(hf->hypergraph);
    case ReductionKind::HypercliqueDkc: return gen_hyperclique_dkc(hf->hypergraph, kappa);
    case ReductionKind::Maxcov2R12: return gen_maxcov2_r12(hf->hypergraph);
  }
  throw Error(Error::Code::InvalidArgument, "bad kind");
}

bool kind_uses_graph(ReductionKind k) {
  return k == ReductionKind::WeightedTriangleR2 || k == ReductionKind::TriangleBoxesR3 ||
         k == ReductionKind::TriangleOrthantsR4 || k == ReductionKind::D3cR4 ||
         k == ReductionKind::Clique4Cover6R2;
}

int cmd_gen(const std::string& kind_str, const std::string& source_path, int kappa,
            const std::string& out_points, const std::string& out_ranges) {
  auto kind = reduction_kind_from(kind_str);
  if (!kind) throw Error(Error::Code::InvalidArgument, "unknown kind '" + kind_str + "'");
  auto src = parse_instance_file(source_path);
  bool graph = kind_uses_graph(*kind);
  if (graph && src.kind != FileKind::Graph)
    throw Error(Error::Code::InvalidArgument, "this kind needs a graph source");
  if (!graph && src.kind != FileKind::Hypergraph)
    throw Error(Error::Code::InvalidArgument, "this kind needs a hypergraph source");
  auto inst = generate(*kind, &src, &src, kappa);
  json out;
  out["status"] = "ok";
  out["kind"] = to_string(*kind);
  out["threshold"] = inst.threshold.str();
  out["points"] =
      inst.kind == ReductionKind::HypercliqueDkc ? inst.ext_points.size() : inst.points.size();
  out["ranges"] = inst.ranges.size();
  if (!out_points.empty()) {
    write_instance_file(out_points, points_file_of(inst));
    out["points_file"] = out_points;
  }
  if (!out_ranges.empty() && !inst.ranges.empty()) {
    write_instance_file(out_ranges, ranges_file_of(inst));
    out["ranges_file"] = out_ranges;
  }
  return emit(out, kExitOk);
}

int cmd_verify(const std::string& kind_str, const std::string& source_path, int kappa,
               const std::string& inst_points, const std::string& inst_ranges,
               long long budget_ms) {
  auto kind = reduction_kind_from(kind_str);
  if (!kind) throw Error(Error::Code::InvalidArgument, "unknown kind '" + kind_str + "'");
  auto src = parse_instance_file(source_path);
  auto inst = generate(*kind, &src, &src, kappa);
  if (!inst_points.empty()) {
    auto provided = parse_instance_file(inst_points);
    if (print_instance(provided) != print_instance(points_file_of(inst)))
      throw Error(Error::Code::InvalidArgument, "provided instance does not match the generator");
  }
  if (!inst_ranges.empty()) {
    auto provided = parse_instance_file(inst_ranges);
    if (print_instance(provided) != print_instance(ranges_file_of(inst)))
      throw Error(Error::Code::InvalidArgument, "provided instance does not match the generator");
  }
  auto rep = verify_reduction(*kind, &src.graph, &src.hypergraph, inst, budget_from_env(budget_ms));
  json out;
  out["status"] = "ok";
  out["kind"] = to_string(*kind);
  out["agree"] = rep.agree;
  out["graph_side"] = rep.graph_side;
  out["geometry_side"] = rep.geometry_side;
  return emit(out, kExitOk);
}

int cmd_oracle(const std::string& problem, const std::string& points_path,
               const std::string& rects_path, int k, const std::string& metric_str,
               long long budget_ms) {
  OracleBudget budget = budget_from_env(budget_ms);
  json out;
  auto pf = parse_instance_file(points_path);
  if (problem == "cover") {
    auto rf = parse_instance_file(rects_path);
    auto res = brute_cover_k(pf.points, rf.ranges, k, rf.weighted, budget);
    if (!res) {
      out["status"] = "infeasible";
      return emit(out, kExitInfeasible);
    }
    out["status"] = "ok";
    out["weight"] = res->weight.str();
    out["witness"] = res->ids;
    return emit(out, kExitOk);
  }
  if (problem == "kcenter") {
    Metric metric = metric_str == "l2" ? Metric::L2 : Metric::Linf;
    if (pf.ext_sqrt39) {
      Ext39 r2 = dkc_brute_ring(pf.ext_points, k);
      out["status"] = "ok";
      out["squared_radius"] = r2.a.str() + (r2.b.is_zero() ? "" : " + " + r2.b.str() + "*sqrt(39)");
      return emit(out, kExitOk);
    }
    auto res = brute_discrete_kcenter(pf.points, k, metric, nullptr, budget);
    out["status"] = "ok";
    out[metric == Metric::L2 ? "squared_radius" : "radius"] = res.radius.str();
    out["witness"] = res.centers;
    return emit(out, kExitOk);
  }
  if (problem == "maxcov2") {
    auto rf = parse_instance_file(rects_path);
    auto res = brute_maxcov(pf.points, rf.ranges, budget);
    out["status"] = "ok";
    out["count"] = res.count;
    out["witness"] = {res.a, res.b};
    return emit(out, kExitOk);
  }
  throw Error(Error::Code::InvalidArgument, "unknown oracle problem '" + problem + "'");
}

int cmd_bench(const std::string& variant_str, const std::string& sizes_str, std::uint64_t seed,
              int runs, int threads, bool oracle_check, bool weighted) {
  std::vector<int> sizes;
  std::stringstream ss(sizes_str);
  std::string tok;
  while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
  if (variant_str == "structures") {
    std::cout << StructureBench::csv_header() << "\n";
    for (int n : sizes)
      for (int r = 0; r < runs; ++r)
        std::cout << bench_structures(seed * 7919ull + r, n).csv_line() << "\n";
    return kExitOk;
  }
  Variant v = variant_from(variant_str);
  std::cout << BenchRecord::csv_header() << "\n";
  bool unit = v == Variant::UnitWeighted || v == Variant::UnitUnweighted;
  for (int n : sizes) {
    for (int r = 0; r < runs; ++r) {
      std::uint64_t s = seed * 1000003ull + static_cast<std::uint64_t>(n) * 131ull + r;
      RandomInstance inst = unit ? make_unit_instance(s, n, n, weighted, false)
                                 : make_rect_instance(s, n, n, weighted, false);
      SolveOptions opt;
      opt.threads = std::max(1, threads);
      BenchRecord rec = run_one(inst, v, opt, oracle_check);
      std::cout << rec.csv_line() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact size-3 rectangle cover, rectilinear discrete 3-center, and reduction workbench"};
  app.require_subcommand(1);

  std::string points_path, rects_path, supply_path, variant_str = "auto", radius_str;
  std::string kind_str, source_path, inst_points, inst_ranges, problem, metric_str = "linf";
  std::string sizes_str = "64,128,256";
  int grid = 0, threads = 1, kappa = 2, k = 3, runs = 1;
  long long budget_ms = 0;
  std::uint64_t seed = 1;
  bool oracle_check = false, materialize = false, weighted = false;

  auto* cover = app.add_subcommand("cover3", "minimum-weight cover of points by 3 rectangles");
  cover->add_option("--points", points_path)->required();
  cover->add_option("--rects", rects_path)->required();
  cover->add_option("--variant", variant_str);
  cover->add_option("--grid", grid);
  cover->add_option("--threads", threads);
  cover->add_option("--budget-ms", budget_ms);
  cover->add_flag("--oracle-check", oracle_check);

  auto* d3c = app.add_subcommand("d3c", "rectilinear discrete 3-center");
  d3c->add_option("--points", points_path)->required();
  d3c->add_option("--supply", supply_path);
  d3c->add_option("--radius", radius_str, "decide at this radius instead of optimizing");
  d3c->add_option("--grid", grid);
  d3c->add_option("--threads", threads);
  d3c->add_flag("--materialize", materialize, "sort all candidate radii (cross-check mode)");

  auto* gen = app.add_subcommand("gen", "generate a reduction instance from a graph/hypergraph");
  gen->add_option("--kind", kind_str)->required();
  gen->add_option("--source", source_path)->required();
  gen->add_option("--kappa", kappa);
  gen->add_option("--out-points", inst_points);
  gen->add_option("--out-ranges", inst_ranges);

  auto* verify = app.add_subcommand("verify", "check a reduction equivalence with both-side oracles");
  verify->add_option("--kind", kind_str)->required();
  verify->add_option("--source", source_path)->required();
  verify->add_option("--kappa", kappa);
  verify->add_option("--instance-points", inst_points);
  verify->add_option("--instance-ranges", inst_ranges);
  verify->add_option("--budget-ms", budget_ms);

  auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
  oracle->add_option("--problem", problem, "cover | kcenter | maxcov2")->required();
  oracle->add_option("--points", points_path)->required();
  oracle->add_option("--rects", rects_path);
  oracle->add_option("--k", k);
  oracle->add_option("--metric", metric_str, "linf | l2");
  oracle->add_option("--budget-ms", budget_ms);

  auto* bench = app.add_subcommand("bench", "seeded scaling benchmark, CSV on stdout");
  bench->add_option("--variant", variant_str, "solver variant, or 'structures'")->required();
  bench->add_option("--sizes", sizes_str);
  bench->add_option("--seed", seed);
  bench->add_option("--runs", runs);
  bench->add_option("--threads", threads);
  bench->add_flag("--oracle-check", oracle_check);
  bench->add_flag("--weighted", weighted);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cover->parsed())
      return cmd_cover3(points_path, rects_path, variant_str, grid, threads, oracle_check, budget_ms);
    if (d3c->parsed())
      return cmd_d3c(points_path, supply_path, radius_str, grid, threads, materialize);
    if (gen->parsed()) return cmd_gen(kind_str, source_path, kappa, inst_points, inst_ranges);
    if (verify->parsed())
      return cmd_verify(kind_str, source_path, kappa, inst_points, inst_ranges, budget_ms);
    if (oracle->parsed())
      return cmd_oracle(problem, points_path, rects_path, k, metric_str, budget_ms);
    if (bench->parsed())
      return cmd_bench(variant_str, sizes_str, seed, runs, threads, oracle_check, weighted);
  } catch (const std::exception& e) {
    json out;
    out["status"] = "error";
    out["message"] = e.what();
    std::cout << out.dump() << "\n";
    return kExitError;
  }
  return kExitError;
}
