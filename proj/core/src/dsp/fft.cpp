#include "vam/dsp/fft.hpp"

#include <cmath>

#include "vam/common.hpp"

namespace vam::dsp {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

void fft(std::vector<std::complex<double>>& x, bool inverse) {
  const std::size_t n = x.size();
  if (!is_pow2(n)) throw Error("fft: length must be a power of two");
  if (n <= 1) return;

  // bit reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = x[i + k];
        const std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : x) v *= inv_n;
  }
}

std::vector<std::complex<double>> rfft(const std::vector<double>& x) {
  std::vector<std::complex<double>> buf(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) buf[i] = {x[i], 0.0};
  fft(buf, false);
  buf.resize(x.size() / 2 + 1);
  return buf;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spec, int n) {
  if (static_cast<int>(spec.size()) != n / 2 + 1)
    throw Error("irfft: spectrum size does not match signal length");
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(n));
  for (int k = 0; k <= n / 2; ++k) buf[static_cast<std::size_t>(k)] = spec[static_cast<std::size_t>(k)];
  for (int k = n / 2 + 1; k < n; ++k)
    buf[static_cast<std::size_t>(k)] = std::conj(spec[static_cast<std::size_t>(n - k)]);
  fft(buf, true);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = buf[static_cast<std::size_t>(i)].real();
  return out;
}

std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;

  std::vector<std::complex<double>> fa(n), fb(n);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = {a[i], 0.0};
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = {b[i], 0.0};
  fft(fa, false);
  fft(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft(fa, true);

  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
  return out;
}

}  // namespace vam::dsp
