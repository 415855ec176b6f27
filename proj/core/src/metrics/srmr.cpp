#include "vam/metrics/srmr.hpp"

#include <cmath>
#include <complex>

#include "vam/dsp/fft.hpp"

namespace vam::metrics {

namespace {

constexpr int kNumBands = 8;
constexpr double kBandLo = 125.0;
constexpr double kBandHi = 8000.0;

// envelope processing; the 12.5 ms average nulls pitch-rate ripple (>= 80 Hz)
// so the modulation bands see syllable structure and tail noise, not beats
constexpr int kEnvDecimation = 16;            // 16 kHz -> 1 kHz envelope rate
constexpr int kEnvSmooth = 200;               // one pass of a 12.5 ms average

// modulation bands are octave-wide around their centers
constexpr double kLowModCenters[] = {4.0, 8.0, 16.0, 32.0};
constexpr double kHighModCenters[] = {64.0, 128.0};
constexpr double kSqrt2 = 1.4142135623730951;

// Calibration divisor placing typical scores in [0, kSrmrMax]: moderately
// reverberant speech lands around 5-8, dry speech around 10-20.
constexpr double kRatioScale = 20.0;

std::vector<double> bandpass_fft(const std::vector<std::complex<double>>& spec,
                                 std::size_t nfft, std::size_t n, double f_lo,
                                 double f_hi) {
  std::vector<std::complex<double>> band(nfft, {0.0, 0.0});
  const double hz_per_bin = static_cast<double>(vam::kSampleRate) / static_cast<double>(nfft);
  const std::size_t k_lo = static_cast<std::size_t>(std::ceil(f_lo / hz_per_bin));
  const std::size_t k_hi = std::min(nfft / 2, static_cast<std::size_t>(std::floor(f_hi / hz_per_bin)));
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    band[k] = spec[k];
    if (k > 0 && k < nfft / 2) band[nfft - k] = std::conj(spec[k]);
  }
  dsp::fft(band, true);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = band[i].real();
  return out;
}

// full-wave rectification, triangular smoothing, decimation
std::vector<double> envelope(const std::vector<double>& x) {
  std::vector<double> a(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) a[i] = std::fabs(x[i]);

  {
    std::vector<double> s(a.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc += a[i];
      if (i >= static_cast<std::size_t>(kEnvSmooth)) acc -= a[i - kEnvSmooth];
      s[i] = acc / kEnvSmooth;
    }
    a.swap(s);
  }

  std::vector<double> env(a.size() / kEnvDecimation);
  for (std::size_t i = 0; i < env.size(); ++i) env[i] = a[i * kEnvDecimation];
  return env;
}

double band_energy(const std::vector<double>& power_spec, double hz_per_bin,
                   double f_lo, double f_hi) {
  double e = 0.0;
  const std::size_t k_lo = static_cast<std::size_t>(std::ceil(f_lo / hz_per_bin));
  const std::size_t k_hi = std::min(power_spec.size() - 1,
                                    static_cast<std::size_t>(std::floor(f_hi / hz_per_bin)));
  for (std::size_t k = k_lo; k <= k_hi; ++k) e += power_spec[k];
  return e;
}

}  // namespace

double srmr(const dsp::Waveform& w) {
  if (w.is_silent()) throw EstimationError("srmr: silent input");

  std::size_t nfft = 1;
  while (nfft < w.size()) nfft <<= 1;
  std::vector<std::complex<double>> spec(nfft, {0.0, 0.0});
  for (std::size_t i = 0; i < w.size(); ++i) spec[i] = {w.samples[i], 0.0};
  dsp::fft(spec, false);

  const double env_rate = static_cast<double>(kSampleRate) / kEnvDecimation;

  double low_total = 0.0, high_total = 0.0;
  for (int b = 0; b < kNumBands; ++b) {
    const double f_lo = kBandLo * std::pow(kBandHi / kBandLo, static_cast<double>(b) / kNumBands);
    const double f_hi = kBandLo * std::pow(kBandHi / kBandLo, static_cast<double>(b + 1) / kNumBands);
    const auto band = bandpass_fft(spec, nfft, w.size(), f_lo, f_hi);
    auto env = envelope(band);

    // remove DC so overall loudness does not enter the modulation ratio
    double mean = 0.0;
    for (double v : env) mean += v;
    mean /= static_cast<double>(env.size());
    for (auto& v : env) v -= mean;

    std::size_t mfft = 1;
    while (mfft < env.size()) mfft <<= 1;
    mfft <<= 1;
    std::vector<std::complex<double>> mod(mfft, {0.0, 0.0});
    for (std::size_t i = 0; i < env.size(); ++i) mod[i] = {env[i], 0.0};
    dsp::fft(mod, false);

    std::vector<double> pow_spec(mfft / 2 + 1);
    for (std::size_t k = 0; k < pow_spec.size(); ++k) pow_spec[k] = std::norm(mod[k]);
    const double hz_per_bin = env_rate / static_cast<double>(mfft);

    for (double c : kLowModCenters)
      low_total += band_energy(pow_spec, hz_per_bin, c / kSqrt2, c * kSqrt2);
    for (double c : kHighModCenters)
      high_total += band_energy(pow_spec, hz_per_bin, c / kSqrt2, c * kSqrt2);
  }

  if (high_total <= 0.0) return kSrmrMax;
  return low_total / high_total / kRatioScale;
}

double srmr_norm(const dsp::Waveform& w) {
  return std::min(srmr(w), kSrmrMax) / kSrmrMax;
}

}  // namespace vam::metrics
