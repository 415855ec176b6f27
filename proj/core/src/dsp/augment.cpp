#include "vam/dsp/augment.hpp"

#include <cmath>
#include <complex>

#include "vam/dsp/fft.hpp"

namespace vam::dsp {

Waveform colored_noise(std::size_t n, double beta, Rng& rng) {
  std::size_t nfft = 1;
  while (nfft < n) nfft <<= 1;

  std::vector<std::complex<double>> spec(nfft, {0.0, 0.0});
  // Hermitian spectrum with |X(f)| ~ f^(-beta/2) so power goes as 1/f^beta.
  for (std::size_t k = 1; k <= nfft / 2; ++k) {
    const double mag = std::pow(static_cast<double>(k), -beta / 2.0);
    const std::complex<double> v(rng.normal() * mag, rng.normal() * mag);
    spec[k] = v;
    if (k < nfft / 2) spec[nfft - k] = std::conj(v);
  }
  spec[nfft / 2] = {spec[nfft / 2].real(), 0.0};
  fft(spec, true);

  Waveform out(n);
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = spec[i].real();
  const double r = out.rms();
  if (r > 0.0)
    for (auto& v : out.samples) v /= r;
  return out;
}

AugmentResult augment(const Waveform& w, const AugmentConfig& cfg, Rng& rng) {
  if (cfg.p_rir > 0.0 && (cfg.rir_pool == nullptr || cfg.rir_pool->empty()))
    throw ConfigError("augment: p_rir > 0 but the RIR pool is empty");

  AugmentResult res;
  res.wav = w;

  // colored noise, always applied (noise_gain 0 turns it off)
  res.noise_beta = rng.uniform(cfg.noise_beta_lo, cfg.noise_beta_hi);
  res.noise_snr_db = rng.uniform(cfg.snr_db_lo, cfg.snr_db_hi);
  if (cfg.noise_gain > 0.0) {
    const Waveform noise = colored_noise(w.size(), res.noise_beta, rng);
    const double sig_rms = w.rms();
    const double target_rms =
        sig_rms * std::pow(10.0, -res.noise_snr_db / 20.0) * cfg.noise_gain;
    for (std::size_t i = 0; i < w.size(); ++i)
      res.wav.samples[i] += noise.samples[i] * target_rms;
  }

  res.inverted = rng.bernoulli(cfg.p_invert);
  if (res.inverted)
    for (auto& v : res.wav.samples) v = -v;

  res.rir_applied = cfg.p_rir > 0.0 && rng.bernoulli(cfg.p_rir);
  if (res.rir_applied) {
    res.rir_index = rng.uniform_int(static_cast<int>(cfg.rir_pool->size()));
    res.wav = convolve_rir(res.wav, (*cfg.rir_pool)[static_cast<std::size_t>(res.rir_index)]).wav;
  }

  if (res.wav.peak() > 1.0) res.wav.peak_normalize(0.95);
  return res;
}

}  // namespace vam::dsp
