#include "vam/dsp/fft.hpp"
#include "vam/dsp/rir.hpp"

namespace vam::dsp {

ConvolveResult convolve_rir(const Waveform& w, const Rir& r, double peak) {
  if (w.sample_rate != kSampleRate)
    throw ContractError("convolve_rir: waveform must be 16 kHz");
  if (r.samples.empty()) throw ContractError("convolve_rir: empty RIR");

  auto full = fft_convolve(w.samples, r.samples);
  full.resize(w.size());  // keep clips a uniform length for batching

  ConvolveResult out;
  out.wav = Waveform(std::move(full), kSampleRate);
  out.gain = out.wav.peak_normalize(peak);
  return out;
}

}  // namespace vam::dsp
