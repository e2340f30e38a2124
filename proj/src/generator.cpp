#include "pbs/generator.hpp"

#include <cmath>
#include <random>
#include <string>

#include "pbs/errors.hpp"

namespace pbs {

namespace {

// Derive doubles from raw engine output; keeps generation independent of
// library distribution internals.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

Point step(std::mt19937_64& rng, double delta) {
  const double angle = 2.0 * M_PI * uniform01(rng);
  const double len = delta * (0.5 + 2.0 * uniform01(rng));
  return {len * std::cos(angle), len * std::sin(angle)};
}

}  // namespace

PolylineBundle gen_random_bundle(const GenParams& p) {
  if (p.l < 1) throw InfeasibleParameters("gen: need at least one polyline");
  if (p.n < 2 * p.l) {
    throw InfeasibleParameters("gen: need n >= 2 * l, got n = " +
                               std::to_string(p.n) + ", l = " +
                               std::to_string(p.l));
  }
  if (!(p.share_fraction >= 0.0 && p.share_fraction <= 1.0)) {
    throw InfeasibleParameters("gen: share_fraction must lie in [0, 1]");
  }
  if (!(p.delta > 0.0)) throw InfeasibleParameters("gen: delta must be > 0");

  std::mt19937_64 rng(p.seed);
  PolylineBundle bundle;
  auto add_bend = [&](Point pt) {
    bundle.bends.push_back(pt);
    return static_cast<int>(bundle.bends.size()) - 1;
  };

  std::vector<int> fresh(p.l, p.n / p.l);
  for (int i = 0; i < p.n % p.l; ++i) ++fresh[i];

  for (int li = 0; li < p.l; ++li) {
    std::vector<int> shared_block;
    if (li > 0 && p.share_fraction > 0.0) {
      const auto& src =
          bundle.polylines[below(rng, static_cast<std::uint64_t>(li))];
      int want = std::max<int>(1, std::llround(p.share_fraction * fresh[li]));
      want = std::min<int>(want, static_cast<int>(src.size()));
      const int start =
          static_cast<int>(below(rng, src.size() - want + 1));
      shared_block.assign(src.begin() + start, src.begin() + start + want);
    }

    std::vector<int> poly;
    if (shared_block.empty()) {
      Point cur{20.0 * p.delta * (uniform01(rng) - 0.5),
                20.0 * p.delta * (uniform01(rng) - 0.5)};
      poly.push_back(add_bend(cur));
      for (int i = 1; i < fresh[li]; ++i) {
        cur = cur + step(rng, p.delta);
        poly.push_back(add_bend(cur));
      }
    } else {
      const int prefix =
          static_cast<int>(below(rng, static_cast<std::uint64_t>(fresh[li]) + 1));
      // prefix walks backward from the block start so the junction is smooth
      Point cur = bundle.bends[shared_block.front()];
      std::vector<int> pre;
      for (int i = 0; i < prefix; ++i) {
        cur = cur + step(rng, p.delta);
        pre.push_back(add_bend(cur));
      }
      poly.assign(pre.rbegin(), pre.rend());
      poly.insert(poly.end(), shared_block.begin(), shared_block.end());
      cur = bundle.bends[shared_block.back()];
      for (int i = prefix; i < fresh[li]; ++i) {
        cur = cur + step(rng, p.delta);
        poly.push_back(add_bend(cur));
      }
    }
    bundle.polylines.push_back(std::move(poly));
  }
  check_bundle(bundle);
  return bundle;
}

}  // namespace pbs
