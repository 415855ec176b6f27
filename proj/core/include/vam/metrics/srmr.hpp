#pragma once

#include "vam/dsp/waveform.hpp"

namespace vam::metrics {

// Simplified speech-to-reverberation modulation energy ratio.
//
// Pipeline: 8 log-spaced bands over 125 Hz..8 kHz; per-band amplitude
// envelope by full-wave rectification and low-pass filtering; modulation
// spectrum of each envelope; score = energy in modulation bands centered
// 4..32 Hz over energy in bands centered 64..128 Hz. Dry speech scores
// higher than reverberant speech.
//
// Throws EstimationError on silent input.
double srmr(const dsp::Waveform& w);

// srmr clipped at kSrmrMax and scaled into [0, 1].
inline constexpr double kSrmrMax = 20.0;
double srmr_norm(const dsp::Waveform& w);

}  // namespace vam::metrics
