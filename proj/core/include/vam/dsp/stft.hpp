#pragma once

#include <vector>

#include "vam/dsp/waveform.hpp"

namespace vam::dsp {

// Analysis/synthesis configuration. The default (512/128, Hann) gives
// 257 frequency bins and exact weighted-overlap-add inversion.
struct StftConfig {
  int fft_size = 512;
  int hop = 128;

  int bins() const { return fft_size / 2 + 1; }
  int frames_for(std::size_t n_samples) const {
    if (static_cast<int>(n_samples) < fft_size) return 0;
    return static_cast<int>((n_samples - static_cast<std::size_t>(fft_size)) /
                            static_cast<std::size_t>(hop)) + 1;
  }

  // Hann window evaluated at half-sample offsets so every sample, including
  // the first and last of the signal, carries nonzero analysis weight.
  std::vector<double> window() const;
};

struct Spectrogram {
  // bins x frames, stored column-major as frames of `bins` values.
  int bins = 0;
  int frames = 0;
  std::vector<double> magnitudes;  // >= 0
  std::vector<double> phases;      // radians; empty if discarded
  StftConfig config;

  bool has_phases() const { return !phases.empty(); }
  double& mag(int bin, int frame) { return magnitudes[static_cast<std::size_t>(frame) * bins + bin]; }
  double mag(int bin, int frame) const { return magnitudes[static_cast<std::size_t>(frame) * bins + bin]; }
  double& phase(int bin, int frame) { return phases[static_cast<std::size_t>(frame) * bins + bin]; }
  double phase(int bin, int frame) const { return phases[static_cast<std::size_t>(frame) * bins + bin]; }
};

// No padding: frames = floor((len - fft_size)/hop) + 1. Throws ContractError
// if the signal is shorter than one frame.
Spectrogram stft(const Waveform& w, const StftConfig& c);

// Weighted-overlap-add inversion; requires phases. Output length is
// (frames-1)*hop + fft_size, which equals the analysis length when the
// signal length satisfies (len - fft_size) % hop == 0.
Waveform istft(const Spectrogram& s);

// Signal-to-noise ratio of `test` against `ref` in dB (equal lengths).
double snr_db(const Waveform& ref, const Waveform& test);

}  // namespace vam::dsp
