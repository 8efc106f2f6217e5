#include "cli.hpp"

#include <hypercol/hypercol.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace hypercol::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

  struct Common {
    unsigned threads = 1;
    std::uint64_t budget = 0;
    bool no_symmetry = false;
    std::string manifest;
    std::string format = "json";
  };

  struct Context {
    std::vector<std::string> command;
    Common common;
    Manifest manifest;
    std::ostream & out;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    auto solver() const -> SolverOptions
    {
      SolverOptions options;
      if (common.budget > 0)
        options.node_budget = common.budget;
      else if (const char * env = std::getenv("HYPERCOL_NODE_BUDGET")) {
        try {
          options.node_budget = std::stoull(env);
        }
        catch (const std::exception &) {
          throw InputError("HYPERCOL_NODE_BUDGET is not a number");
        }
      }
      options.threads = std::max(1u, common.threads);
      options.symmetry_breaking = ! common.no_symmetry;
      return options;
    }

    auto input(const fs::path & path) -> void { manifest.inputs.push_back(digest_file(path)); }
    auto output(const fs::path & path) -> void { manifest.outputs.push_back(digest_file(path)); }
    auto verdict(const std::string & key, const json & value) -> void { manifest.verdicts[key] = value.dump(); }

    auto emit(const json & result) -> void { out << result.dump(2) << '\n'; }

    auto finish(const fs::path & manifest_path) -> void
    {
      manifest.command = command;
      manifest.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      io::write_text(manifest_path, manifest.to_json());
    }
  };

  auto add_common(CLI::App * sub, Common & common) -> void
  {
    sub->add_option("--threads", common.threads, "solver / verifier worker threads (default 1)");
    sub->add_option("--budget", common.budget, "solver node budget (overrides HYPERCOL_NODE_BUDGET)");
    sub->add_flag("--no-symmetry", common.no_symmetry, "disable color symmetry breaking");
    sub->add_option("--manifest", common.manifest, "write a reproducibility manifest here");
    sub->add_option("--format", common.format, "hypergraph output format")->check(CLI::IsMember({"json", "dimacs"}));
  }

  auto colors_json(const Coloring & c) -> json
  {
    return c.colors();
  }

  auto points_json(const PointSet & points) -> json
  {
    return json::parse(io::pointset_to_json(points))["points"];
  }

  auto write_hypergraph(Context & ctx, const fs::path & path, const Hypergraph & h) -> void
  {
    if (ctx.common.format == "dimacs") {
      std::ostringstream text;
      io::write_dimacs(text, h);
      io::write_text(path, text.str());
    }
    else
      io::write_text(path, io::hypergraph_to_json(h));
    ctx.output(path);
  }

  auto load_hypergraph(Context & ctx, const std::string & path) -> Hypergraph
  {
    auto h = io::read_hypergraph(path);
    ctx.input(path);
    require_well_formed(h);
    return h;
  }

  auto load_points(Context & ctx, const std::string & file, const std::string & name,
      const std::vector<std::size_t> & params) -> PointSet
  {
    if (! file.empty() && ! name.empty())
      throw InputError("give either a point file or a built-in point set name, not both");
    if (! file.empty()) {
      ctx.input(file);
      return io::read_pointset(file);
    }
    if (! name.empty())
      return builtin_pointset(name, params);
    throw InputError("no point set given");
  }

  auto summary(const Hypergraph & h) -> json
  {
    json j{{"vertices", h.vertex_count()}, {"edges", h.edge_count()}};
    if (auto m = uniformity(h))
      j["uniformity"] = *m;
    return j;
  }

  auto seed_or_random(const std::optional<std::uint64_t> & seed) -> std::uint64_t
  {
    if (seed)
      return *seed;
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) | rd();
  }

} // namespace

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
  CLI::App app{"Constructions and exact coloring checks for geometric hypergraphs", "hypercol"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  Context ctx{args, {}, {}, out};
  if (! ctx.command.empty())
    ctx.command.front() = "hypercol";
  auto & common = ctx.common;

  std::string input, output, coloring_file, gons_file, points_file, pointset, current_file, strategy = "library";
  std::string norm_name = "l2", mode = "euclidean", x_file, y_file, svg_out;
  std::vector<std::size_t> params;
  double tol = default_tolerance;
  int k = 0;
  std::size_t target_m = 0, m = 0, t = 0, d = 2, target_k = 0;
  std::optional<int> lift_k;
  std::optional<double> eps;
  std::optional<int> modulus;
  double safety = 0.99;
  std::uint64_t samples = 100000, budget_candidates = 64;
  std::optional<std::uint64_t> seed;
  bool verify = false, points_only = false, with_chi = false, tiling = false;

  auto * build = app.add_subcommand("build", "build a named point set and its unit distance graph");
  build->add_option("--name", pointset, "point set name")->required();
  build->add_option("--param", params, "integer parameters of the point set");
  build->add_option("--norm", norm_name, "norm for unit distances");
  build->add_option("--tol", tol, "distance tolerance");
  build->add_option("--out", output, "output file");
  build->add_flag("--points-only", points_only, "write the point set instead of the graph");

  auto * chi = app.add_subcommand("chi", "exact chromatic number");
  chi->add_option("--input", input, "hypergraph file")->required();

  auto * kcolor = app.add_subcommand("kcolor", "decide k-colorability");
  kcolor->add_option("--input", input, "hypergraph file")->required();
  kcolor->add_option("--k", k, "number of colors")->required();
  kcolor->add_option("--out", output, "write the coloring here when one exists");

  auto * check = app.add_subcommand("check", "check a coloring for properness");
  check->add_option("--input", input, "hypergraph file")->required();
  check->add_option("--coloring", coloring_file, "coloring file")->required();

  auto * lift_cmd = app.add_subcommand("lift", "raise uniformity while keeping the chromatic number");
  lift_cmd->add_option("--input", input, "uniform hypergraph file")->required();
  lift_cmd->add_option("--target-m", target_m, "target uniformity")->required();
  lift_cmd->add_option("--out", output, "output directory")->required();
  lift_cmd->add_option("--k", lift_k, "number of copies (default: the chromatic number)");
  lift_cmd->add_flag("--verify", verify, "recompute the chromatic number of every stage");

  auto * inst = app.add_subcommand("instantiate", "edges congruent to a gon family inside a finite window");
  inst->add_option("--gons", gons_file, "gon set file")->required();
  inst->add_option("--points", points_file, "point set file");
  inst->add_option("--pointset", pointset, "built-in point set name");
  inst->add_option("--param", params, "built-in point set parameters");
  inst->add_option("--mode", mode, "euclidean | translation");
  inst->add_option("--norm", norm_name, "norm");
  inst->add_option("--tol", tol, "tolerance");
  inst->add_option("--out", output, "output hypergraph file");
  inst->add_flag("--chi", with_chi, "also compute the chromatic number");

  auto * gm = app.add_subcommand("gm", "m-subsets containing a unit pair");
  gm->add_option("--points", points_file, "point set file");
  gm->add_option("--pointset", pointset, "built-in point set name");
  gm->add_option("--param", params, "built-in point set parameters");
  gm->add_option("--m", m, "subset size")->required();
  gm->add_option("--norm", norm_name, "norm");
  gm->add_option("--tol", tol, "tolerance");
  gm->add_option("--out", output, "output hypergraph file");
  gm->add_flag("--chi", with_chi, "also compute the chromatic number");

  auto * aug_t = app.add_subcommand("augment-t", "grow every edge by t outside vertices");
  aug_t->add_option("--input", input, "hypergraph file")->required();
  aug_t->add_option("--t", t, "number of added vertices")->required();
  aug_t->add_option("--out", output, "output hypergraph file");

  auto * aug_g = app.add_subcommand("augment-gons", "S + {X + {z}} for X in M, z in F");
  aug_g->add_option("--current", current_file, "current (m+1)-gon set (default: empty)");
  aug_g->add_option("--gons", gons_file, "base m-gon set")->required();
  aug_g->add_option("--points", points_file, "point set file");
  aug_g->add_option("--pointset", pointset, "built-in point set name");
  aug_g->add_option("--param", params, "built-in point set parameters");
  aug_g->add_option("--tol", tol, "tolerance");
  aug_g->add_option("--out", output, "output gon set file");

  auto * wit = app.add_subcommand("witness", "heuristic search for a finite point set forcing many colors");
  wit->add_option("--gons", gons_file, "gon set file")->required();
  wit->add_option("--target-k", target_k, "required chromatic number")->required();
  wit->add_option("--strategy", strategy, "library | lattice | random-augment");
  wit->add_option("--budget", budget_candidates, "number of candidate point sets");
  wit->add_option("--seed", seed, "random seed");
  wit->add_option("--tol", tol, "tolerance");
  wit->add_option("--out", output, "write the witness point set here");

  auto * tile = app.add_subcommand("tile", "periodic coloring parameters");
  tile->add_option("--norm", norm_name, "norm");
  tile->add_option("--d", d, "dimension");
  tile->add_option("--eps", eps, "cell side override");
  tile->add_option("--m", modulus, "modulus override");
  tile->add_option("--safety", safety, "eps safety factor in (0,1)");
  tile->add_option("--svg", svg_out, "render one period (d = 2)");

  auto * vtile = app.add_subcommand("verify-tiling", "sample unit-distance pairs against a periodic coloring");
  vtile->add_option("--norm", norm_name, "norm");
  vtile->add_option("--d", d, "dimension");
  vtile->add_option("--eps", eps, "cell side override");
  vtile->add_option("--m", modulus, "modulus override");
  vtile->add_option("--safety", safety, "eps safety factor in (0,1)");
  vtile->add_option("--samples", samples, "number of sampled pairs");
  vtile->add_option("--seed", seed, "random seed");

  auto * cong = app.add_subcommand("congruent", "Euclidean congruence of two point sets");
  cong->add_option("--x", x_file, "first point set")->required();
  cong->add_option("--y", y_file, "second point set")->required();
  cong->add_option("--tol", tol, "tolerance");

  auto * render = app.add_subcommand("render", "SVG drawing of a planar hypergraph or tiling");
  render->add_option("--input", input, "hypergraph file");
  render->add_flag("--tiling", tiling, "draw a tiling instead (uses --norm, --eps, --m)");
  render->add_option("--norm", norm_name, "norm");
  render->add_option("--eps", eps, "cell side override");
  render->add_option("--m", modulus, "modulus override");
  render->add_option("--out", output, "output SVG")->required();

  // the shared --budget flag is the solver budget; witness's --budget counts candidates
  for (auto * sub : {build, chi, kcolor, check, lift_cmd, inst, gm, aug_t, aug_g, tile, vtile, cong, render})
    add_common(sub, common);
  wit->add_option("--threads", common.threads, "solver threads");
  wit->add_option("--node-budget", common.budget, "per-candidate solver node budget");
  wit->add_option("--manifest", common.manifest, "write a reproducibility manifest here");

  std::vector<const char *> argv;
  for (const auto & a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  }
  catch (const CLI::ParseError & e) {
    return app.exit(e, out, err) == 0 ? success : input_error;
  }

  auto tiling_from_flags = [&] {
    auto norm = Norm::parse(norm_name);
    auto pc = tiling_params(norm, d, safety);
    if (eps)
      pc.eps = *eps;
    if (modulus)
      pc.m = *modulus;
    if (! (pc.eps > 0.0) || pc.m < 1)
      throw InputError("eps and m must be positive");
    return pc;
  };

  int code = success;
  try {
    if (build->parsed()) {
      auto norm = Norm::parse(norm_name);
      auto points = builtin_pointset(pointset, params);
      auto pairs = unit_distance_pairs(points, norm, tol);
      auto h = Hypergraph::from_pairs(points.size(), pairs, points);
      json result{{"name", pointset}, {"points", points.size()}, {"unit_pairs", pairs.size()}};
      if (! output.empty()) {
        if (points_only) {
          io::write_text(output, io::pointset_to_json(points));
          ctx.output(output);
        }
        else
          write_hypergraph(ctx, output, h);
        result["out"] = output;
      }
      else
        result["hypergraph"] = json::parse(io::hypergraph_to_json(h));
      ctx.emit(result);
    }
    else if (chi->parsed()) {
      auto h = load_hypergraph(ctx, input);
      auto r = chromatic_number(h, ctx.solver());
      ctx.manifest.solver_nodes = r.stats.nodes;
      ctx.verdict("chi", r.chi);
      ctx.emit({{"chi", r.chi}, {"witness", colors_json(r.witness)}, {"nodes", r.stats.nodes},
          {"seconds", r.stats.wall_seconds}});
    }
    else if (kcolor->parsed()) {
      auto h = load_hypergraph(ctx, input);
      SolverStats stats;
      auto c = is_k_colorable(h, k, ctx.solver(), &stats);
      ctx.manifest.solver_nodes = stats.nodes;
      ctx.verdict("colorable", c.has_value());
      json result{{"k", k}, {"colorable", c.has_value()}, {"nodes", stats.nodes}};
      if (c) {
        result["coloring"] = colors_json(*c);
        if (! output.empty()) {
          io::write_text(output, io::coloring_to_json(*c));
          ctx.output(output);
        }
      }
      ctx.emit(result);
      if (! c)
        code = negative_verdict;
    }
    else if (check->parsed()) {
      auto h = load_hypergraph(ctx, input);
      auto phi = io::read_coloring(coloring_file);
      ctx.input(coloring_file);
      auto r = is_proper(h, phi);
      ctx.verdict("proper", r.proper);
      json result{{"proper", r.proper}};
      if (r.witness)
        result["witness_edge"] = *r.witness;
      ctx.emit(result);
      if (! r.proper)
        code = negative_verdict;
    }
    else if (lift_cmd->parsed()) {
      auto h = load_hypergraph(ctx, input);
      fs::create_directories(output);
      auto ext = common.format == "dimacs" ? ".dimacs" : ".json";
      auto stage_path = [&](std::size_t i) { return fs::path(output) / ("stage_" + std::to_string(i) + ext); };

      ChainOptions options;
      options.verify_each = verify;
      options.lift.solver = ctx.solver();
      LiftChain chain;
      bool partial = false;
      std::string partial_reason;

      if (lift_k) {
        // explicit number of copies; the chromatic-number guarantee only
        // holds when it equals chi(H)
        auto m0 = uniformity(h);
        if (! m0)
          throw InputError("lift needs a nonempty uniform hypergraph");
        if (target_m < *m0)
          throw InputError("target uniformity is below the input's");
        chain.stages.push_back({*m0, h.vertex_count(), h.edge_count(), *lift_k, std::nullopt, h});
        if (verify)
          chain.stages.back().chi = chromatic_number(h, options.lift.solver).chi;
        for (auto mm = *m0; mm < target_m; ++mm) {
          LiftOptions lo = options.lift;
          auto next = lift(chain.stages.back().graph, lift_k, lo);
          LiftStage stage{mm + 1, next.lifted.vertex_count(), next.lifted.edge_count(), *lift_k, std::nullopt,
              std::move(next.lifted)};
          if (verify)
            stage.chi = chromatic_number(stage.graph, options.lift.solver).chi;
          chain.stages.push_back(std::move(stage));
        }
      }
      else {
        try {
          chain = iterated_lift(h, target_m, options);
        }
        catch (const ChainBudgetExceeded & e) {
          chain = e.partial();
          partial = true;
          partial_reason = e.what();
        }
      }

      json stages = json::array();
      bool preserved = true;
      auto base_chi = chain.stages.front().chi;
      for (std::size_t i = 0; i < chain.stages.size(); ++i) {
        const auto & s = chain.stages[i];
        write_hypergraph(ctx, stage_path(i), s.graph);
        json js{{"file", stage_path(i).filename().string()}, {"uniformity", s.uniformity},
            {"vertices", s.vertices}, {"edges", s.edges}, {"k", s.k}};
        js["chi"] = s.chi ? json(*s.chi) : json(nullptr);
        if (i > 0)
          js["expected_edges"] = lifted_edge_count(chain.stages[i - 1].edges, chain.stages[i - 1].vertices, s.k);
        if (verify && s.chi && base_chi && *s.chi != *base_chi)
          preserved = false;
        stages.push_back(js);
      }
      json result{{"stages", stages}, {"complete", ! partial}};
      ctx.verdict("stages", stages);
      ctx.verdict("complete", ! partial);
      if (verify) {
        result["chi_preserved"] = preserved;
        ctx.verdict("chi_preserved", preserved);
      }
      if (partial)
        result["error"] = partial_reason;
      ctx.finish(fs::path(output) / "manifest.json");
      ctx.emit(result);
      if (partial)
        code = resource_exhausted;
      else if (verify && ! preserved)
        code = negative_verdict;
    }
    else if (inst->parsed()) {
      auto gons = io::read_gonset(gons_file);
      ctx.input(gons_file);
      auto points = load_points(ctx, points_file, pointset, params);
      InstantiateOptions options;
      options.mode = parse_congruence_mode(mode);
      options.norm = Norm::parse(norm_name);
      options.tol = tol;
      auto h = instantiate(gons, points, options);
      json result = summary(h);
      if (with_chi)
        result["chi"] = chromatic_number(h, ctx.solver()).chi;
      if (! output.empty())
        write_hypergraph(ctx, output, h);
      else
        result["edge_list"] = h.edges();
      ctx.emit(result);
    }
    else if (gm->parsed()) {
      auto points = load_points(ctx, points_file, pointset, params);
      auto h = gm_hypergraph(points, Norm::parse(norm_name), m, tol);
      json result = summary(h);
      if (with_chi)
        result["chi"] = chromatic_number(h, ctx.solver()).chi;
      if (! output.empty())
        write_hypergraph(ctx, output, h);
      else
        result["edge_list"] = h.edges();
      ctx.emit(result);
    }
    else if (aug_t->parsed()) {
      auto h = load_hypergraph(ctx, input);
      auto report = augment_t_report(h, t, ctx.solver());
      json result = summary(report.augmented);
      result["chi_base"] = report.chi_base;
      result["chi_augmented"] = report.chi_augmented;
      bool holds = report.chi_augmented <= report.chi_base;
      result["chi_not_increased"] = holds;
      ctx.verdict("chi_not_increased", holds);
      if (! output.empty())
        write_hypergraph(ctx, output, report.augmented);
      ctx.emit(result);
      if (! holds)
        code = negative_verdict;
    }
    else if (aug_g->parsed()) {
      auto base = io::read_gonset(gons_file);
      ctx.input(gons_file);
      GonSet current(base.dimension(), base.arity() + 1);
      if (! current_file.empty()) {
        current = io::read_gonset(current_file);
        ctx.input(current_file);
      }
      auto points = load_points(ctx, points_file, pointset, params);
      auto r = augment_gons(current, base, points, tol);
      json result{{"gons", r.gons.size()}, {"m", r.gons.arity()}, {"d", r.gons.dimension()}};
      result["shift"] = r.shift ? points_json({*r.shift})[0] : json(nullptr);
      if (! output.empty()) {
        io::write_text(output, io::gonset_to_json(r.gons));
        ctx.output(output);
      }
      else
        result["gon_set"] = json::parse(io::gonset_to_json(r.gons));
      ctx.emit(result);
    }
    else if (wit->parsed()) {
      auto gons = io::read_gonset(gons_file);
      ctx.input(gons_file);
      WitnessOptions options;
      options.strategy = parse_witness_strategy(strategy);
      options.budget = budget_candidates;
      options.seed = seed_or_random(seed);
      options.tol = tol;
      options.solver = ctx.solver();
      ctx.manifest.seed = options.seed;
      auto w = witness_search(gons, target_k, options);
      json result{{"found", w.has_value()}, {"target_k", target_k}, {"strategy", to_string(options.strategy)},
          {"seed", options.seed}};
      ctx.verdict("found", w.has_value());
      if (w) {
        result["source"] = w->source;
        result["points"] = points_json(w->points);
        result["edges"] = w->graph.edge_count();
        result["certificate_nodes"] = w->certificate_nodes;
        ctx.manifest.solver_nodes = w->certificate_nodes;
        if (! output.empty()) {
          io::write_text(output, io::pointset_to_json(w->points));
          ctx.output(output);
        }
      }
      ctx.emit(result);
      if (! w)
        code = resource_exhausted;
    }
    else if (tile->parsed()) {
      auto pc = tiling_from_flags();
      auto [c, C] = equivalence_constants(pc.norm, pc.d);
      json result{{"norm", pc.norm.name()}, {"d", pc.d}, {"eps", pc.eps}, {"m", pc.m},
          {"colors", pc.color_count()}, {"c", c}, {"C", C}, {"cube_diameter_ok", pc.cube_diameter_ok()},
          {"cross_cell_ok", pc.cross_cell_ok()}};
      if (! svg_out.empty()) {
        io::write_text(svg_out, svg::render_tiling(pc));
        ctx.output(svg_out);
        result["svg"] = svg_out;
      }
      ctx.emit(result);
    }
    else if (vtile->parsed()) {
      auto pc = tiling_from_flags();
      auto s = seed_or_random(seed);
      ctx.manifest.seed = s;
      auto report = verify_forbids(pc, samples, s, std::max(1u, common.threads));
      json result{{"norm", pc.norm.name()}, {"d", pc.d}, {"eps", pc.eps}, {"m", pc.m},
          {"colors", pc.color_count()}, {"violations", report.violations},
          {"pairs_checked", report.pairs_checked}, {"rejected", report.rejected}, {"seed", report.seed},
          {"workers", report.workers}};
      ctx.verdict("violations", report.violations);
      ctx.emit(result);
      if (report.violations > 0)
        code = negative_verdict;
    }
    else if (cong->parsed()) {
      auto xs = io::read_pointset(x_file);
      auto ys = io::read_pointset(y_file);
      ctx.input(x_file);
      ctx.input(y_file);
      auto f = congruent_euclidean(xs, ys, tol);
      ctx.verdict("congruent", f.has_value());
      json result{{"congruent", f.has_value()}};
      if (f)
        result["map"] = *f;
      ctx.emit(result);
      if (! f)
        code = negative_verdict;
    }
    else if (render->parsed()) {
      std::string svg_text;
      if (tiling) {
        d = 2;
        svg_text = svg::render_tiling(tiling_from_flags());
      }
      else {
        if (input.empty())
          throw InputError("render needs --input or --tiling");
        svg_text = svg::render_hypergraph(load_hypergraph(ctx, input));
      }
      io::write_text(output, svg_text);
      ctx.output(output);
      ctx.emit({{"out", output}});
    }

    if (! common.manifest.empty())
      ctx.finish(common.manifest);
  }
  catch (const InputError & e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  }
  catch (const ResourceError & e) {
    err << "resource limit: " << e.what() << '\n';
    return resource_exhausted;
  }
  catch (const ConsistencyError & e) {
    err << "consistency error: " << e.what() << '\n';
    return negative_verdict;
  }
  catch (const ConstructionError & e) {
    err << "construction error: " << e.what() << '\n';
    return input_error;
  }
  catch (const fs::filesystem_error & e) {
    err << "file error: " << e.what() << '\n';
    return input_error;
  }
  return code;
}

} // namespace hypercol::cli
