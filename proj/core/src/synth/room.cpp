#include "vam/synth/room.hpp"

#include <cmath>

namespace vam::synth {

double RoomSpec::diagonal() const {
  return std::sqrt(lx * lx + ly * ly + lz * lz);
}

void RoomSpec::validate() const {
  auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  if (!in(lx, 2.0, 20.0) || !in(ly, 2.0, 20.0) || !in(lz, 2.0, 20.0))
    throw ConfigError("RoomSpec: dimensions must lie in [2, 20] m");
  if (absorption <= 0.0)
    throw ConfigError("RoomSpec: absorption must be positive");
  if (!in(absorption, 0.02, 0.6))
    throw ConfigError("RoomSpec: absorption must lie in [0.02, 0.6]");
  if (distance <= 0.0 || distance >= diagonal())
    throw ConfigError("RoomSpec: distance must be in (0, room diagonal)");
}

double sabine_rt60(const RoomSpec& spec) {
  if (spec.absorption <= 0.0)
    throw ConfigError("sabine_rt60: absorption must be positive");
  return 0.161 * spec.volume() / (spec.surface() * spec.absorption);
}

double drr_for_distance(double distance_m) {
  return -20.0 * std::log10(std::max(distance_m, 0.05));
}

RoomSpec RoomSampler::sample(Rng& rng) const {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RoomSpec s;
    s.lx = rng.uniform(2.5, 15.0);
    s.ly = rng.uniform(2.5, 15.0);
    s.lz = rng.uniform(2.2, 6.0);
    s.absorption = rng.uniform(0.02, 0.6);
    s.distance = rng.uniform(dist_lo, std::min(dist_hi, 0.9 * s.diagonal()));
    const double t = sabine_rt60(s);
    if (t < rt60_lo || t > rt60_hi) continue;
    s.validate();
    return s;
  }
  throw ConfigError("RoomSampler: rejection sampling failed; check bounds");
}

}  // namespace vam::synth
