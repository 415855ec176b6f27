#pragma once

#include <vector>

#include "vam/dsp/rir.hpp"

namespace vam::dsp {

// Baseline-training augmentation: colored noise (always), polarity inversion
// with p_invert, convolution with a random RIR from the pool with p_rir.
// Not used by the main training path.
struct AugmentConfig {
  double noise_beta_lo = 0.0;   // 1/f^beta spectral exponent range
  double noise_beta_hi = 2.0;
  double snr_db_lo = 10.0;      // noise level relative to signal
  double snr_db_hi = 30.0;
  double noise_gain = 1.0;      // 0 disables the noise component
  double p_invert = 0.5;
  double p_rir = 0.9;
  const std::vector<Rir>* rir_pool = nullptr;
};

struct AugmentResult {
  Waveform wav;
  bool inverted = false;
  bool rir_applied = false;
  int rir_index = -1;
  double noise_beta = 0.0;
  double noise_snr_db = 0.0;
};

// Gaussian noise with a 1/f^beta magnitude spectrum, unit RMS.
Waveform colored_noise(std::size_t n, double beta, Rng& rng);

AugmentResult augment(const Waveform& w, const AugmentConfig& cfg, Rng& rng);

}  // namespace vam::dsp
