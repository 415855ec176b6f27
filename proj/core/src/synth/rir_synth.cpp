#include "vam/synth/rir_synth.hpp"

#include <cmath>

namespace vam::synth {

dsp::Rir synth_rir(const RoomSpec& spec, Rng& rng) {
  spec.validate();
  const double rt60 = sabine_rt60(spec);
  const double drr_db = drr_for_distance(spec.distance);

  const int delay = static_cast<int>(std::lround(spec.distance / 343.0 * kSampleRate));
  const int tail_start = delay + static_cast<int>(std::lround(0.003 * kSampleRate));
  const int tail_len = std::min(static_cast<int>(std::ceil(1.3 * rt60 * kSampleRate)),
                                kClipSamples - tail_start);

  dsp::Rir r;
  r.samples.assign(static_cast<std::size_t>(tail_start + tail_len), 0.0);
  r.direct_delay = delay;
  r.rt60_true = rt60;
  r.drr_true = drr_db;

  const double direct_amp = 1.0;
  r.samples[static_cast<std::size_t>(delay)] = direct_amp;

  // raw tail, then scale so direct/tail energy hits the DRR budget
  double tail_energy = 0.0;
  const double rate = kDecay60 / rt60;
  for (int i = 0; i < tail_len; ++i) {
    const double t = static_cast<double>(i) / kSampleRate;
    const double v = rng.normal() * std::exp(-rate * t);
    r.samples[static_cast<std::size_t>(tail_start + i)] = v;
    tail_energy += v * v;
  }
  if (tail_energy > 0.0) {
    const double target_tail = direct_amp * direct_amp * std::pow(10.0, -drr_db / 10.0);
    const double g = std::sqrt(target_tail / tail_energy);
    for (int i = 0; i < tail_len; ++i)
      r.samples[static_cast<std::size_t>(tail_start + i)] *= g;
  }

  // keep stored RIRs inside WAV range; DRR and RT60 are gain-invariant
  double peak = 0.0;
  for (double v : r.samples) peak = std::max(peak, std::fabs(v));
  if (peak > 0.0)
    for (auto& v : r.samples) v *= 0.97 / peak;
  return r;
}

}  // namespace vam::synth
