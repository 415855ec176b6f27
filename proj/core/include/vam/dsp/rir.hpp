#pragma once

#include <vector>

#include "vam/dsp/waveform.hpp"

namespace vam::dsp {

// Room impulse response at 16 kHz with ground-truth decay annotations.
struct Rir {
  std::vector<double> samples;
  double rt60_true = 0.0;   // seconds, > 0
  double drr_true = 0.0;    // dB
  int direct_delay = 0;     // samples, >= 0

  std::size_t size() const { return samples.size(); }
};

struct ConvolveResult {
  Waveform wav;
  double gain = 1.0;  // normalization gain applied after convolution
};

// Full linear convolution truncated to len(w), then peak-renormalized.
ConvolveResult convolve_rir(const Waveform& w, const Rir& r, double peak = 0.95);

// Schroeder backward-integration RT60: line fit on the -5 dB -> -25 dB
// segment of the energy-decay curve, extrapolated to -60 dB.
// Throws EstimationError when the decay range is under 35 dB.
double schroeder_rt60(const Rir& r);

// Energy-decay curve in dB, normalized so edc[0] == 0.
std::vector<double> energy_decay_curve_db(const std::vector<double>& h);

// Direct-to-reverberant ratio in dB with a +-2.5 ms direct window around
// direct_delay. Returns +infinity when the reverberant part carries no energy.
double drr(const Rir& r);

}  // namespace vam::dsp
