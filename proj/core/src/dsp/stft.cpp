#include "vam/dsp/stft.hpp"

#include <cmath>
#include <complex>

#include "vam/dsp/fft.hpp"

namespace vam::dsp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> StftConfig::window() const {
  std::vector<double> w(static_cast<std::size_t>(fft_size));
  for (int n = 0; n < fft_size; ++n) {
    const double s = std::sin(kPi * (n + 0.5) / fft_size);
    w[static_cast<std::size_t>(n)] = s * s;
  }
  return w;
}

Spectrogram stft(const Waveform& w, const StftConfig& c) {
  const int n_frames = c.frames_for(w.size());
  if (n_frames < 1)
    throw ContractError("stft: signal shorter than one analysis frame");

  const std::vector<double> win = c.window();
  const int bins = c.bins();

  Spectrogram s;
  s.bins = bins;
  s.frames = n_frames;
  s.config = c;
  s.magnitudes.resize(static_cast<std::size_t>(bins) * n_frames);
  s.phases.resize(static_cast<std::size_t>(bins) * n_frames);

  std::vector<double> frame(static_cast<std::size_t>(c.fft_size));
  for (int f = 0; f < n_frames; ++f) {
    const std::size_t off = static_cast<std::size_t>(f) * c.hop;
    for (int n = 0; n < c.fft_size; ++n)
      frame[static_cast<std::size_t>(n)] =
          w.samples[off + static_cast<std::size_t>(n)] * win[static_cast<std::size_t>(n)];
    const auto spec = rfft(frame);
    for (int k = 0; k < bins; ++k) {
      s.mag(k, f) = std::abs(spec[static_cast<std::size_t>(k)]);
      s.phase(k, f) = std::arg(spec[static_cast<std::size_t>(k)]);
    }
  }
  return s;
}

Waveform istft(const Spectrogram& s) {
  if (!s.has_phases())
    throw ContractError("istft: spectrogram has no phases");

  const StftConfig& c = s.config;
  const std::vector<double> win = c.window();
  const std::size_t out_len =
      static_cast<std::size_t>(s.frames - 1) * c.hop + static_cast<std::size_t>(c.fft_size);

  std::vector<double> acc(out_len, 0.0);
  std::vector<double> norm(out_len, 0.0);
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(s.bins));

  for (int f = 0; f < s.frames; ++f) {
    for (int k = 0; k < s.bins; ++k)
      spec[static_cast<std::size_t>(k)] =
          std::polar(s.mag(k, f), s.phase(k, f));
    const auto frame = irfft(spec, c.fft_size);
    const std::size_t off = static_cast<std::size_t>(f) * c.hop;
    for (int n = 0; n < c.fft_size; ++n) {
      acc[off + static_cast<std::size_t>(n)] += frame[static_cast<std::size_t>(n)] * win[static_cast<std::size_t>(n)];
      norm[off + static_cast<std::size_t>(n)] += win[static_cast<std::size_t>(n)] * win[static_cast<std::size_t>(n)];
    }
  }
  for (std::size_t i = 0; i < out_len; ++i)
    acc[i] = norm[i] > 1e-300 ? acc[i] / norm[i] : 0.0;
  return Waveform(std::move(acc), kSampleRate);
}

double snr_db(const Waveform& ref, const Waveform& test) {
  if (ref.size() != test.size())
    throw ContractError("snr_db: length mismatch");
  double sig = 0.0, err = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    sig += ref.samples[i] * ref.samples[i];
    const double d = ref.samples[i] - test.samples[i];
    err += d * d;
  }
  if (err <= 0.0) return 300.0;  // exact reconstruction
  if (sig <= 0.0) return -300.0;
  return 10.0 * std::log10(sig / err);
}

}  // namespace vam::dsp
