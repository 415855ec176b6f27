#pragma once

#include <complex>
#include <vector>

namespace vam::dsp {

// In-place iterative radix-2 FFT. n must be a power of two.
void fft(std::vector<std::complex<double>>& x, bool inverse);

// Forward real FFT: returns bins 0..n/2 (n/2+1 complex values).
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

// Inverse of rfft for a real signal of even length n (spectrum has n/2+1 bins).
std::vector<double> irfft(const std::vector<std::complex<double>>& spec, int n);

// Linear convolution of two real signals via FFT.
std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace vam::dsp
