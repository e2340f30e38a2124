#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbs/errors.hpp"
#include "pbs/generator.hpp"
#include "oracles.hpp"

using pbs::PolylineBundle;
using pbs::Point;
using pbs::ToleranceSpec;

namespace {

PolylineBundle two_polyline_shared() {
  PolylineBundle b;
  b.bends = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}};
  b.polylines = {{0, 1, 2}, {3, 1, 4}};
  return b;
}

}  // namespace

TEST_CASE("shared bends") {
  SUBCASE("disjoint polylines") {
    PolylineBundle b;
    b.bends = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    b.polylines = {{0, 1}, {2, 3}};
    CHECK(pbs::shared_bends(b).empty());
  }
  SUBCASE("single polyline") {
    PolylineBundle b;
    b.bends = {{0, 0}, {1, 0}, {2, 0}};
    b.polylines = {{0, 1, 2}};
    CHECK(pbs::shared_bends(b).empty());
  }
  SUBCASE("one common bend") {
    CHECK(pbs::shared_bends(two_polyline_shared()) == std::vector<int>{1});
  }
}

TEST_CASE("bundle invariants") {
  PolylineBundle b;
  b.bends = {{0, 0}, {1, 0}, {2, 0}};
  SUBCASE("repeated index within a polyline") {
    b.polylines = {{0, 1, 0}, {1, 2}};
    CHECK_THROWS_AS(pbs::check_bundle(b), pbs::InvariantViolation);
  }
  SUBCASE("index out of range") {
    b.polylines = {{0, 1, 7}};
    CHECK_THROWS_AS(pbs::check_bundle(b), pbs::InvariantViolation);
  }
  SUBCASE("isolated bend") {
    b.polylines = {{0, 1}};
    CHECK_THROWS_AS(pbs::check_bundle(b), pbs::InvariantViolation);
  }
  SUBCASE("too-short polyline") {
    b.polylines = {{0}, {1, 2}};
    CHECK_THROWS_AS(pbs::check_bundle(b), pbs::InvariantViolation);
  }
  SUBCASE("coincident coordinates are legal") {
    b.bends = {{0, 0}, {1, 0}, {0, 0}};
    b.polylines = {{0, 1}, {2, 1}};
    CHECK_NOTHROW(pbs::check_bundle(b));
    CHECK(pbs::shared_bends(b) == std::vector<int>{1});
  }
}

TEST_CASE("tolerance invariants") {
  CHECK_NOTHROW(pbs::check_tolerance(ToleranceSpec::with_default_eps(2.0)));
  CHECK_THROWS_AS(pbs::check_tolerance({0.0, 0.0}), pbs::InvariantViolation);
  CHECK_THROWS_AS(pbs::check_tolerance({1.0, 1.5}), pbs::InvariantViolation);
}

TEST_CASE("induced simplification") {
  PolylineBundle b;
  b.bends = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  b.polylines = {{0, 1, 2, 3}};
  SUBCASE("endpoints only") {
    CHECK(pbs::induced_simplification(b, {0, 3}) ==
          std::vector<std::vector<int>>{{0, 3}});
  }
  SUBCASE("identity") {
    CHECK(pbs::induced_simplification(b, {0, 1, 2, 3}) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});
  }
  SUBCASE("missing endpoint") {
    CHECK_THROWS_AS(pbs::induced_simplification(b, {0, 1}),
                    pbs::MissingEndpoint);
  }
  SUBCASE("shared bend dropped consistently") {
    PolylineBundle s;
    s.bends = {{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 1}};
    s.polylines = {{0, 1, 2}, {2, 1, 4}};
    const auto induced = pbs::induced_simplification(s, {0, 2, 4});
    CHECK(induced == std::vector<std::vector<int>>{{0, 2}, {2, 4}});
  }
}

TEST_CASE("validate simplification") {
  const ToleranceSpec tol01 = ToleranceSpec::with_default_eps(0.1);
  SUBCASE("collinear endpoints-only is valid") {
    PolylineBundle b;
    b.bends = {{0, 0}, {1, 0}, {2, 0}};
    b.polylines = {{0, 1, 2}};
    const auto rep = pbs::validate_simplification(b, tol01, {0, 2});
    CHECK(rep.valid);
    CHECK(rep.violations.empty());
  }
  SUBCASE("apex violation reports distance 1") {
    PolylineBundle b;
    b.bends = {{0, 0}, {1, 1}, {2, 0}};
    b.polylines = {{0, 1, 2}};
    const ToleranceSpec tol = ToleranceSpec::with_default_eps(0.5);
    const auto rep = pbs::validate_simplification(b, tol, {0, 2});
    REQUIRE_FALSE(rep.valid);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].polyline == 0);
    CHECK(rep.violations[0].from_bend == 0);
    CHECK(rep.violations[0].to_bend == 2);
    CHECK(rep.violations[0].distance == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(pbs::validate_simplification(b, tol, {0, 2}, 2.0).valid);
  }
  SUBCASE("missing endpoint throws") {
    PolylineBundle b;
    b.bends = {{0, 0}, {1, 1}, {2, 0}};
    b.polylines = {{0, 1, 2}};
    CHECK_THROWS_AS(pbs::validate_simplification(b, tol01, {0, 1}),
                    pbs::MissingEndpoint);
  }
}

TEST_CASE("validation properties on random bundles") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    pbs::GenParams gp;
    gp.seed = 1000 + trial;
    gp.n = 8 + static_cast<int>(oracle::below(rng, 6));
    gp.l = 2;
    gp.share_fraction = 0.4;
    gp.delta = 1.0;
    const auto bundle = pbs::gen_random_bundle(gp);
    const ToleranceSpec tol = ToleranceSpec::with_default_eps(
        0.5 + 2.0 * oracle::uniform01(rng));

    // retained = all bends is valid at any delta
    std::vector<int> all(bundle.bend_count());
    for (int i = 0; i < bundle.bend_count(); ++i) all[i] = i;
    CHECK(pbs::validate_simplification(bundle, tol, all).valid);

    // random endpoint-containing subset: monotone in the factor, order
    // preserved, dropped shared bends vanish everywhere
    std::vector<int> retained = pbs::endpoint_bends(bundle);
    for (int bnd = 0; bnd < bundle.bend_count(); ++bnd) {
      if (oracle::uniform01(rng) < 0.5) retained.push_back(bnd);
    }
    std::sort(retained.begin(), retained.end());
    retained.erase(std::unique(retained.begin(), retained.end()),
                   retained.end());

    const auto induced = pbs::induced_simplification(bundle, retained);
    const auto mask = pbs::retained_mask(bundle, retained);
    for (int li = 0; li < bundle.polyline_count(); ++li) {
      // subsequence of the original in original order
      size_t at = 0;
      for (int idx : bundle.polylines[li]) {
        if (at < induced[li].size() && induced[li][at] == idx) ++at;
      }
      CHECK(at == induced[li].size());
      for (int idx : induced[li]) CHECK(mask[idx]);
    }
    for (int idx = 0; idx < bundle.bend_count(); ++idx) {
      if (mask[idx]) continue;
      for (const auto& simple : induced) {
        CHECK(std::find(simple.begin(), simple.end(), idx) == simple.end());
      }
    }

    const bool v1 = pbs::validate_simplification(bundle, tol, retained).valid;
    const bool v2 =
        pbs::validate_simplification(bundle, tol, retained, 2.0).valid;
    const bool v4 =
        pbs::validate_simplification(bundle, tol, retained, 4.0).valid;
    if (v1) CHECK(v2);
    if (v2) CHECK(v4);
    CHECK(pbs::is_valid_simplification(bundle, tol, retained) == v1);
  }
}
