#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "pbs/errors.hpp"
#include "pbs/generator.hpp"
#include "pbs/io.hpp"
#include "pbs/reduction.hpp"
#include "pbs/svg.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("pbs_io_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("bundle parsing") {
  SUBCASE("minimal valid file") {
    const auto bf = pbs::parse_bundle_text(
        R"({"delta":1,"bends":[[0,0],[1,0]],"polylines":[[0,1]]})");
    CHECK(bf.bundle.bend_count() == 2);
    CHECK(bf.bundle.polyline_count() == 1);
    CHECK(bf.tol.delta == 1.0);
    CHECK(bf.tol.eps == doctest::Approx(1e-9));
  }
  SUBCASE("repeated index violates simplicity") {
    CHECK_THROWS_AS(pbs::parse_bundle_text(
                        R"({"delta":1,"bends":[[0,0]],"polylines":[[0,0,0]]})"),
                    pbs::InvariantViolation);
  }
  SUBCASE("isolated bend") {
    CHECK_THROWS_AS(
        pbs::parse_bundle_text(
            R"({"delta":1,"bends":[[0,0],[1,0],[2,0]],"polylines":[[0,1]]})"),
        pbs::InvariantViolation);
  }
  SUBCASE("bad json") {
    CHECK_THROWS_AS(pbs::parse_bundle_text("{nope"), pbs::ParseError);
    CHECK_THROWS_AS(pbs::parse_bundle_text(R"({"delta":1,"bends":[[0]]})"),
                    pbs::ParseError);
  }
  SUBCASE("non-positive delta") {
    CHECK_THROWS_AS(pbs::parse_bundle_text(
                        R"({"delta":0,"bends":[[0,0],[1,0]],"polylines":[[0,1]]})"),
                    pbs::InvariantViolation);
  }
}

TEST_CASE("bundle round trip is exact") {
  pbs::GenParams gp;
  gp.seed = 4242;
  gp.n = 17;
  gp.l = 3;
  gp.share_fraction = 0.37;
  gp.delta = 0.125 + 1e-13;  // awkward mantissa on purpose
  const auto bundle = pbs::gen_random_bundle(gp);

  const std::string text = pbs::bundle_to_json(bundle, gp.delta);
  const auto parsed = pbs::parse_bundle_text(text);
  REQUIRE(parsed.bundle.bend_count() == bundle.bend_count());
  for (int i = 0; i < bundle.bend_count(); ++i) {
    CHECK(parsed.bundle.bends[i].x == bundle.bends[i].x);
    CHECK(parsed.bundle.bends[i].y == bundle.bends[i].y);
  }
  CHECK(parsed.bundle.polylines == bundle.polylines);
  CHECK(parsed.tol.delta == gp.delta);
  // write -> parse -> write is byte identical
  CHECK(pbs::bundle_to_json(parsed.bundle, parsed.tol.delta) == text);
}

TEST_CASE("generation is deterministic and honors sharing") {
  pbs::GenParams gp;
  gp.seed = 7;
  gp.n = 20;
  gp.l = 3;
  gp.share_fraction = 0.5;
  const auto a = pbs::gen_random_bundle(gp);
  const auto b = pbs::gen_random_bundle(gp);
  CHECK(pbs::bundle_to_json(a, gp.delta) == pbs::bundle_to_json(b, gp.delta));

  for (int seed = 0; seed < 100; ++seed) {
    pbs::GenParams p = gp;
    p.seed = seed;
    const auto bundle = pbs::gen_random_bundle(p);
    CHECK(bundle.bend_count() == p.n);
    CHECK(!pbs::shared_bends(bundle).empty());
  }

  pbs::GenParams no_share = gp;
  no_share.share_fraction = 0.0;
  CHECK(pbs::shared_bends(pbs::gen_random_bundle(no_share)).empty());

  pbs::GenParams bad = gp;
  bad.n = 2;
  CHECK_THROWS_AS(pbs::gen_random_bundle(bad), pbs::InfeasibleParameters);
}

TEST_CASE("solution round trip") {
  TempDir tmp;
  const std::vector<int> retained{0, 3, 5, 9};
  pbs::write_solution(tmp.file("sol.json"), retained);
  CHECK(pbs::parse_solution(tmp.file("sol.json")) == retained);
}

TEST_CASE("graph parsing") {
  const auto g = pbs::parse_graph_text("3 2\n0 1\n2 1\n");
  CHECK(g.n == 3);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(pbs::parse_graph_text("3\n"), pbs::ParseError);
  CHECK_THROWS_AS(pbs::parse_graph_text("3 1\n0 0\n"), pbs::InvariantViolation);
  CHECK_THROWS_AS(pbs::parse_graph_text("3 2\n0 1\n"), pbs::ParseError);
}

TEST_CASE("layout round trip preserves the reduction metadata") {
  pbs::Graph k2{2, {{0, 1}}};
  auto [bundle, layout] = pbs::build_pbs_from_graph(k2, {});
  const auto text = pbs::layout_to_json(layout);
  const auto parsed = pbs::layout_from_json(text);
  CHECK(parsed.graph.n == layout.graph.n);
  CHECK(parsed.graph.edges == layout.graph.edges);
  CHECK(parsed.delta == layout.delta);
  CHECK(parsed.gamma == layout.gamma);
  CHECK(parsed.two_polylines == layout.two_polylines);
  REQUIRE(parsed.vertex_gadgets.size() == layout.vertex_gadgets.size());
  CHECK(parsed.vertex_gadgets[1].bends == layout.vertex_gadgets[1].bends);
  REQUIRE(parsed.edge_gadgets.size() == 1);
  CHECK(parsed.edge_gadgets[0].bends == layout.edge_gadgets[0].bends);
  CHECK(parsed.edge_gadgets[0].r == layout.edge_gadgets[0].r);
  REQUIRE(parsed.neighborhood_gadgets.size() == 2);
  CHECK(parsed.neighborhood_gadgets[1].shared_positions ==
        layout.neighborhood_gadgets[1].shared_positions);

  // verification still works from the reloaded metadata
  CHECK_NOTHROW(pbs::verify_gadget_claims(bundle, parsed));
}

TEST_CASE("svg rendering") {
  pbs::PolylineBundle b;
  b.bends = {{0, 0}, {2, 1}};
  b.polylines = {{0, 1}};
  SUBCASE("bundle only") {
    const auto svg = pbs::render_svg(b, nullptr);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("viewBox") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
  SUBCASE("with a solution, dropped bends are hollow") {
    pbs::PolylineBundle c;
    c.bends = {{0, 0}, {1, 1}, {2, 0}};
    c.polylines = {{0, 1, 2}};
    const std::vector<int> retained{0, 2};
    const auto svg = pbs::render_svg(c, &retained);
    CHECK(svg.find("fill=\"white\"") != std::string::npos);
    CHECK(svg.find("fill=\"#333\"") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 4);
  }
}
