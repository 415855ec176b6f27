#pragma once

#include "vam/common.hpp"

namespace vam::synth {

// Parametric shoebox room; acoustics follow the Sabine model.
struct RoomSpec {
  double lx = 5.0, ly = 4.0, lz = 3.0;  // meters, 2..20 each
  double absorption = 0.2;              // mean absorption, 0.02..0.6
  double distance = 1.5;                // source-listener distance, meters

  double volume() const { return lx * ly * lz; }
  double surface() const { return 2.0 * (lx * ly + lx * lz + ly * lz); }
  double diagonal() const;
  void validate() const;
};

// RT60 = 0.161 * V / (S * absorption).
double sabine_rt60(const RoomSpec& spec);

// Distance law used by the RIR synthesizer: louder direct path close up.
double drr_for_distance(double distance_m);

// Rejection-samples a RoomSpec whose Sabine RT60 lies in [rt60_lo, rt60_hi]
// and whose distance keeps the direct-path step small enough for clean
// Schroeder fits on the synthesized RIR.
struct RoomSampler {
  double rt60_lo = 0.1;
  double rt60_hi = 1.5;
  double dist_lo = 0.7;
  double dist_hi = 4.0;
  RoomSpec sample(Rng& rng) const;
};

}  // namespace vam::synth
