#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "vam/common.hpp"

namespace vam::dsp {

// Mono time-domain audio at 16 kHz.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = kSampleRate;

  Waveform() = default;
  explicit Waveform(std::size_t n, int rate = kSampleRate)
      : samples(n, 0.0), sample_rate(rate) {}
  Waveform(std::vector<double> s, int rate = kSampleRate)
      : samples(std::move(s)), sample_rate(rate) {}

  std::size_t size() const { return samples.size(); }
  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }

  double peak() const {
    double p = 0.0;
    for (double v : samples) p = std::max(p, std::fabs(v));
    return p;
  }

  double rms() const {
    if (samples.empty()) return 0.0;
    double e = 0.0;
    for (double v : samples) e += v * v;
    return std::sqrt(e / static_cast<double>(samples.size()));
  }

  bool is_silent(double threshold = 1e-8) const { return peak() < threshold; }

  // Scales so the peak equals `target`; returns the gain applied.
  double peak_normalize(double target = 0.95) {
    const double p = peak();
    if (p <= 0.0) return 1.0;
    const double g = target / p;
    for (double& v : samples) v *= g;
    return g;
  }

  // Right-pads with zeros or truncates to exactly n samples.
  Waveform fit_length(std::size_t n) const {
    Waveform out(*this);
    out.samples.resize(n, 0.0);
    return out;
  }

  void check_finite(const std::string& what) const {
    for (double v : samples)
      if (!std::isfinite(v)) throw ContractError(what + ": non-finite sample");
  }
};

// WAV I/O, PCM 16-bit signed little-endian mono.
Waveform read_wav(const std::string& path);
void write_wav(const std::string& path, const Waveform& w);

// Observers for read_wav, used by the self-supervision audit: every path
// passed to read_wav is reported before the file is opened.
using WavReadHook = std::function<void(const std::string& path)>;
void set_wav_read_hook(WavReadHook hook);  // empty function clears
void clear_wav_read_hook();

}  // namespace vam::dsp
