#include <algorithm>
#include <cmath>
#include <limits>

#include "vam/dsp/rir.hpp"

namespace vam::dsp {

std::vector<double> energy_decay_curve_db(const std::vector<double>& h) {
  std::vector<double> edc(h.size());
  double acc = 0.0;
  for (std::size_t i = h.size(); i-- > 0;) {
    acc += h[i] * h[i];
    edc[i] = acc;
  }
  const double total = acc > 0.0 ? acc : std::numeric_limits<double>::min();
  for (auto& v : edc) {
    v = 10.0 * std::log10(std::max(v, 1e-300) / total);
  }
  return edc;
}

double schroeder_rt60(const Rir& r) {
  if (r.samples.size() < 8)
    throw EstimationError("schroeder_rt60: RIR too short");
  const auto edc = energy_decay_curve_db(r.samples);

  // first crossings of -5 dB and -25 dB
  std::size_t i5 = edc.size(), i25 = edc.size();
  for (std::size_t i = 0; i < edc.size(); ++i) {
    if (i5 == edc.size() && edc[i] <= -5.0) i5 = i;
    if (edc[i] <= -25.0) {
      i25 = i;
      break;
    }
  }
  // require 35 dB of measurable range so the fit window is trustworthy
  const double floor_db = edc.empty() ? 0.0 : edc[edc.size() - 1];
  bool reaches = false;
  for (std::size_t i = 0; i < edc.size(); ++i) {
    if (edc[i] <= -35.0) {
      reaches = true;
      break;
    }
  }
  if (i5 >= edc.size() || i25 >= edc.size() || i25 <= i5 + 1 || !reaches)
    throw EstimationError(
        "schroeder_rt60: insufficient decay range (floor " +
        std::to_string(floor_db) + " dB)");

  // least-squares line over the -5 .. -25 dB segment
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(i25 - i5 + 1);
  for (std::size_t i = i5; i <= i25; ++i) {
    const double x = static_cast<double>(i) / kSampleRate;
    sx += x;
    sy += edc[i];
    sxx += x * x;
    sxy += x * edc[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::fabs(denom) < 1e-30)
    throw EstimationError("schroeder_rt60: degenerate fit window");
  const double slope = (n * sxy - sx * sy) / denom;  // dB per second
  if (slope >= -1e-9)
    throw EstimationError("schroeder_rt60: non-decaying energy curve");
  return -60.0 / slope;
}

double drr(const Rir& r) {
  if (r.direct_delay < 0) throw ContractError("drr: negative direct delay");
  const int half = static_cast<int>(std::lround(0.0025 * kSampleRate));
  const int lo = std::max(0, r.direct_delay - half);
  const int hi = std::min(static_cast<int>(r.samples.size()) - 1,
                          r.direct_delay + half);

  double direct = 0.0, rest = 0.0;
  for (int i = 0; i < static_cast<int>(r.samples.size()); ++i) {
    const double e = r.samples[static_cast<std::size_t>(i)] * r.samples[static_cast<std::size_t>(i)];
    if (i >= lo && i <= hi)
      direct += e;
    else
      rest += e;
  }
  if (rest <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(direct / rest);
}

}  // namespace vam::dsp
