#include <cstdio>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbs/errors.hpp"
#include "pbs/exact.hpp"
#include "pbs/generator.hpp"
#include "pbs/io.hpp"
#include "pbs/star_cover.hpp"
#include "pbs/svg.hpp"

namespace {

using nlohmann::json;

pbs::ToleranceSpec apply_overrides(pbs::ToleranceSpec tol, double delta,
                                   double eps) {
  if (delta > 0.0) tol = pbs::ToleranceSpec::with_default_eps(delta);
  if (eps >= 0.0) tol.eps = eps;
  pbs::check_tolerance(tol);
  return tol;
}

void emit_report(const std::string& path, const json& j) {
  if (!path.empty()) pbs::write_file(path, j.dump(2) + "\n");
}

int run(int argc, char** argv) {
  CLI::App app{"polyline bundle simplification"};
  app.require_subcommand(1);

  // simplify
  auto* simplify = app.add_subcommand("simplify", "simplify a bundle");
  std::string algo = "greedy-star", input, output, report_path;
  double delta_override = -1.0, eps_override = -1.0;
  int max_k = 24, max_n = 20;
  bool reverse_all = false;
  simplify->add_option("--algo", algo)
      ->check(CLI::IsMember({"per-polyline", "greedy-star", "fpt", "brute"}));
  simplify->add_option("--input", input)->required();
  simplify->add_option("--output", output);
  simplify->add_option("--report", report_path);
  simplify->add_option("--delta", delta_override);
  simplify->add_option("--eps", eps_override);
  simplify->add_option("--max-k", max_k);
  simplify->add_option("--max-n", max_n);
  simplify->add_flag("--reverse-all", reverse_all);

  // validate
  auto* validate = app.add_subcommand("validate", "validate a solution");
  std::string v_input, v_solution, v_report;
  double v_factor = 1.0, v_eps = -1.0, v_delta = -1.0;
  validate->add_option("--input", v_input)->required();
  validate->add_option("--solution", v_solution)->required();
  validate->add_option("--factor", v_factor);
  validate->add_option("--delta", v_delta);
  validate->add_option("--eps", v_eps);
  validate->add_option("--report", v_report);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "build a bundle from a graph");
  std::string r_graph, r_output, r_meta;
  double r_delta = 1.0, r_gamma = 0.0, r_spacing = 0.0;
  bool r_two = false;
  reduce->add_option("--graph", r_graph)->required();
  reduce->add_option("--delta", r_delta);
  reduce->add_option("--gamma", r_gamma);
  reduce->add_option("--x-spacing", r_spacing);
  reduce->add_flag("--two-polylines", r_two);
  reduce->add_option("--output", r_output)->required();
  reduce->add_option("--meta", r_meta)->required();

  // verify-gadgets
  auto* verify = app.add_subcommand("verify-gadgets", "check gadget structure");
  std::string g_bundle, g_meta;
  bool g_appendix = false, g_strict = false;
  verify->add_option("--bundle", g_bundle)->required();
  verify->add_option("--meta", g_meta)->required();
  verify->add_flag("--appendix", g_appendix);
  verify->add_flag("--strict", g_strict);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random bundle");
  pbs::GenParams gp;
  std::string gen_output;
  gen->add_option("--seed", gp.seed);
  gen->add_option("--n", gp.n);
  gen->add_option("--l", gp.l);
  gen->add_option("--share-fraction", gp.share_fraction);
  gen->add_option("--delta", gp.delta);
  gen->add_option("--output", gen_output)->required();

  // render
  auto* render = app.add_subcommand("render", "render a bundle to SVG");
  std::string rd_input, rd_solution, rd_output;
  pbs::RenderOptions rd_opt;
  bool rd_no_markers = false;
  render->add_option("--input", rd_input)->required();
  render->add_option("--solution", rd_solution);
  render->add_option("--output", rd_output)->required();
  render->add_option("--scale", rd_opt.scale);
  render->add_option("--stroke-width", rd_opt.stroke_width);
  render->add_flag("--no-markers", rd_no_markers);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "print instance statistics");
  std::string s_input;
  stats_cmd->add_option("--input", s_input)->required();

  CLI11_PARSE(app, argc, argv);

  if (simplify->parsed()) {
    auto [bundle, tol] = pbs::parse_bundle(input);
    tol = apply_overrides(tol, delta_override, eps_override);
    std::vector<int> retained;
    json report{{"algo", algo}};
    if (algo == "greedy-star") {
      retained = pbs::bicriteria_simplify(bundle, tol, reverse_all);
      const auto oriented = pbs::orient_bundle(bundle, reverse_all);
      const auto graphs = pbs::build_shortcut_graphs(oriented, tol);
      const auto cs = pbs::cover_stats(oriented, graphs);
      report["t"] = cs.t;
      report["w"] = cs.w;
      report["cover_size"] =
          pbs::greedy_star_cover(oriented, graphs).stars.size();
    } else if (algo == "fpt") {
      pbs::SolveStats st;
      retained = pbs::fpt_solve(bundle, tol, max_k, &st);
      report["k"] = st.k;
      report["subsets_searched"] = st.subsets_searched;
    } else if (algo == "brute") {
      retained = pbs::brute_force(bundle, tol, max_n);
    } else {  // per-polyline: independent optima, may clash on shared parts
      std::set<int> keep;
      json sizes = json::array();
      for (int li = 0; li < bundle.polyline_count(); ++li) {
        const auto part = pbs::optimal_single_polyline(bundle, li, tol);
        sizes.push_back(part.size());
        keep.insert(part.begin(), part.end());
      }
      report["per_polyline_sizes"] = sizes;
      retained.assign(keep.begin(), keep.end());
    }
    report["retained_size"] = retained.size();
    if (!output.empty()) pbs::write_solution(output, retained);
    emit_report(report_path, report);
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  if (validate->parsed()) {
    auto [bundle, tol] = pbs::parse_bundle(v_input);
    tol = apply_overrides(tol, v_delta, v_eps);
    const auto retained = pbs::parse_solution(v_solution);
    const auto rep = pbs::validate_simplification(bundle, tol, retained, v_factor);
    json j{{"valid", rep.valid}, {"factor", v_factor}};
    j["violations"] = json::array();
    for (const auto& v : rep.violations) {
      j["violations"].push_back({{"polyline", v.polyline},
                                 {"from", v.from_bend},
                                 {"to", v.to_bend},
                                 {"distance", v.distance}});
    }
    emit_report(v_report, j);
    std::cout << j.dump(2) << "\n";
    return rep.valid ? 0 : 1;
  }

  if (reduce->parsed()) {
    const auto graph = pbs::parse_graph(r_graph);
    pbs::ReductionParams params;
    params.delta = r_delta;
    params.gamma = r_gamma;
    params.x_spacing = r_spacing;
    params.two_polylines = r_two;
    auto [bundle, layout] = pbs::build_pbs_from_graph(graph, params);
    pbs::verify_gadget_claims(bundle, layout);  // builder rejects bad layouts
    pbs::write_bundle(r_output, bundle, params.delta);
    pbs::write_layout(r_meta, layout);
    std::cout << "bends: " << bundle.bend_count()
              << " polylines: " << bundle.polyline_count()
              << " shared: " << pbs::shared_bends(bundle).size() << "\n";
    return 0;
  }

  if (verify->parsed()) {
    const auto bf = pbs::parse_bundle(g_bundle);
    const auto layout = pbs::parse_layout(g_meta);
    const auto rep = pbs::verify_gadget_claims(bf.bundle, layout, g_strict);
    std::cout << "claims ok: " << rep.vertex_gadgets << " vertex, "
              << rep.edge_gadgets << " edge, " << rep.neighborhood_gadgets
              << " neighborhood gadgets\n";
    if (g_appendix) {
      const auto ar = pbs::verify_appendix_distances(bf.bundle, layout);
      for (const auto& row : ar.edges) {
        std::printf(
            "edge %d: r'=%.6g d1=%.9g (<= %.9g) d2=%.9g (closed %.9g) "
            "d3=%.9g (closed %.9g, lower %.9g)\n",
            row.index, row.r_prime, row.d1, row.d1_bound, row.d2,
            row.d2_closed, row.d3, row.d3_closed, row.d3_lower);
      }
      for (const auto& row : ar.neighborhoods) {
        std::printf(
            "neighborhood %d: r'=%.6g d4=%.9g (angle form %.9g, radical form "
            "%.9g)\n",
            row.index, row.r_prime, row.d4, row.d4_angle_form,
            row.d4_radical_form);
      }
    }
    return 0;
  }

  if (gen->parsed()) {
    const auto bundle = pbs::gen_random_bundle(gp);
    pbs::write_bundle(gen_output, bundle, gp.delta);
    std::cout << "bends: " << bundle.bend_count()
              << " polylines: " << bundle.polyline_count()
              << " shared: " << pbs::shared_bends(bundle).size() << "\n";
    return 0;
  }

  if (render->parsed()) {
    const auto bf = pbs::parse_bundle(rd_input);
    rd_opt.show_retained = !rd_no_markers;
    std::vector<int> retained;
    const std::vector<int>* sol = nullptr;
    if (!rd_solution.empty()) {
      retained = pbs::parse_solution(rd_solution);
      sol = &retained;
    }
    pbs::write_file(rd_output, pbs::render_svg(bf.bundle, sol, rd_opt));
    return 0;
  }

  if (stats_cmd->parsed()) {
    const auto bf = pbs::parse_bundle(s_input);
    const auto graphs = pbs::build_shortcut_graphs(bf.bundle, bf.tol);
    const auto cs = pbs::cover_stats(bf.bundle, graphs);
    json j{{"n", bf.bundle.bend_count()},
           {"l", bf.bundle.polyline_count()},
           {"k", pbs::shared_bends(bf.bundle).size()},
           {"delta", bf.tol.delta},
           {"t", cs.t},
           {"w", cs.w}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pbs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
