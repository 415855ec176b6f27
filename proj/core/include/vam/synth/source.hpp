#pragma once

#include "vam/dsp/waveform.hpp"

namespace vam::synth {

// 2.56 s speech-like clip: harmonic carrier with a randomized pitch contour,
// formant-shaped spectrum, and a syllabic on/off envelope. Every clip has at
// least two silent gaps of >= 50 ms so decay tails are observable after
// reverberation.
dsp::Waveform synth_source(Rng& rng);

// Longest runs of sub-threshold envelope, in samples (used by tests and by
// the gap guarantee inside synth_source).
std::vector<int> silence_runs(const dsp::Waveform& w, double threshold_db = -40.0);

}  // namespace vam::synth
