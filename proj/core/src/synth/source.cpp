#include "vam/synth/source.hpp"

#include <cmath>

namespace vam::synth {

namespace {
constexpr double kTwoPi = 6.283185307179586;

struct Formant {
  double center;
  double bandwidth;
  double gain;
};

// short-window RMS envelope, ~10 ms
std::vector<double> rms_envelope(const dsp::Waveform& w, int win) {
  std::vector<double> env(w.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w.samples[i] * w.samples[i];
    if (i >= static_cast<std::size_t>(win))
      acc -= w.samples[i - static_cast<std::size_t>(win)] * w.samples[i - static_cast<std::size_t>(win)];
    env[i] = std::sqrt(std::max(acc, 0.0) / win);
  }
  return env;
}

}  // namespace

std::vector<int> silence_runs(const dsp::Waveform& w, double threshold_db) {
  const double peak = w.peak();
  if (peak <= 0.0) return {static_cast<int>(w.size())};
  const double thr = peak * std::pow(10.0, threshold_db / 20.0);
  const auto env = rms_envelope(w, kSampleRate / 100);

  std::vector<int> runs;
  int run = 0;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i] < thr) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  return runs;
}

dsp::Waveform synth_source(Rng& rng) {
  const int n = kClipSamples;

  for (int attempt = 0; attempt < 64; ++attempt) {
    dsp::Waveform out(static_cast<std::size_t>(n));

    Formant formants[3] = {
        {rng.uniform(300.0, 800.0), rng.uniform(80.0, 200.0), 1.0},
        {rng.uniform(900.0, 1800.0), rng.uniform(120.0, 300.0), rng.uniform(0.4, 0.9)},
        {rng.uniform(2000.0, 3400.0), rng.uniform(150.0, 400.0), rng.uniform(0.15, 0.5)},
    };

    double f0 = rng.uniform(80.0, 300.0);
    double phase = rng.uniform(0.0, kTwoPi);

    // syllable/gap timeline; syllable rate lands in the 2-8 Hz range
    const int fade = kSampleRate / 100;       // 10 ms raised-cosine edges
    const int tail_gap = static_cast<int>(rng.uniform(0.15, 0.3) * kSampleRate);
    int pos = static_cast<int>(rng.uniform(0.0, 0.05) * kSampleRate);
    int long_gaps = 0;

    while (pos < n - tail_gap) {
      const int syl = static_cast<int>(rng.uniform(0.08, 0.28) * kSampleRate);
      const int gap = static_cast<int>(rng.uniform(0.03, 0.2) * kSampleRate);
      if (gap >= kSampleRate / 20) ++long_gaps;

      const int end = std::min(pos + syl, n - tail_gap);
      const double loud = rng.uniform(0.5, 1.0);

      // per-syllable pitch drift and harmonic weights
      const double drift = rng.uniform(-0.15, 0.15);
      const int n_harm = std::max(3, static_cast<int>(4000.0 / f0));
      std::vector<double> amp(static_cast<std::size_t>(n_harm) + 1, 0.0);
      for (int h = 1; h <= n_harm; ++h) {
        const double freq = h * f0;
        double a = std::pow(200.0 / std::max(freq, 200.0), 0.5);
        double res = 0.0;
        for (const auto& fo : formants) {
          const double d = (freq - fo.center) / fo.bandwidth;
          res += fo.gain / (1.0 + d * d);
        }
        amp[static_cast<std::size_t>(h)] = a * res;
      }

      for (int i = pos; i < end; ++i) {
        const double u = static_cast<double>(i - pos) / std::max(end - pos, 1);
        const double f = f0 * (1.0 + drift * u);
        phase += kTwoPi * f / kSampleRate;
        if (phase > kTwoPi) phase -= kTwoPi;

        double env = 1.0;
        if (i - pos < fade) env = 0.5 * (1.0 - std::cos(kTwoPi / 2.0 * (i - pos) / fade));
        if (end - i < fade) env = std::min(env, 0.5 * (1.0 - std::cos(kTwoPi / 2.0 * (end - i) / fade)));

        double s = 0.0;
        for (int h = 1; h <= n_harm; ++h)
          s += amp[static_cast<std::size_t>(h)] * std::sin(h * phase);
        s += 0.01 * rng.normal();  // breath noise
        out.samples[static_cast<std::size_t>(i)] = loud * env * s;
      }

      f0 = std::clamp(f0 * rng.uniform(0.9, 1.1), 80.0, 300.0);
      pos = end + gap;
    }

    if (long_gaps < 2) continue;  // need observable decay gaps
    out.peak_normalize(0.95);

    // verify >= 2 gaps of >= 50 ms at -40 dBFS
    int found = 0;
    for (int r : silence_runs(out))
      if (r >= kSampleRate / 20) ++found;
    if (found >= 2) return out;
  }
  throw Error("synth_source: failed to construct a gapped clip");
}

}  // namespace vam::synth
