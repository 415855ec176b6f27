#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace vam {

// All audio in the toolkit is mono 16 kHz; training clips are 2.56 s.
constexpr int kSampleRate = 16000;
constexpr double kClipSeconds = 2.56;
constexpr int kClipSamples = 40960;  // kClipSeconds * kSampleRate

// Energy decays by 60 dB when the exponential envelope exp(-kDecay60 * t / T)
// has run for t = T: 60 dB = 20 * log10(e) * kDecay60.
constexpr double kDecay60 = 6.907755278982137;  // ln(10^3)

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition (wrong length, missing phases, ...).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Bad or inconsistent configuration values.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A numeric estimate could not be formed (insufficient decay range, silence).
class EstimationError : public Error {
 public:
  explicit EstimationError(const std::string& msg) : Error(msg) {}
};

// A model was used before the training stage it depends on has run.
class StageError : public Error {
 public:
  explicit StageError(const std::string& msg) : Error(msg) {}
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic RNG stream. Distributions are implemented here rather than
// taken from <random> so draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent stream, e.g. per sample or per epoch.
  static Rng derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
    splitmix64(s);
    return Rng(splitmix64(s));
  }

  std::uint64_t next_u64() { return engine_(); }

  double uniform() {  // [0, 1)
    return (next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int n) {  // [0, n)
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  bool bernoulli(double p) { return uniform() < p; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0, u2 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  std::string state_string() const;
  void restore_state(const std::string& s);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline std::string Rng::state_string() const {
  std::ostringstream os;
  os << engine_ << " " << (have_spare_ ? 1 : 0) << " ";
  os.precision(17);
  os << spare_;
  return os.str();
}

inline void Rng::restore_state(const std::string& s) {
  std::istringstream is(s);
  is >> engine_;
  int flag = 0;
  is >> flag >> spare_;
  have_spare_ = flag != 0;
  if (!is) throw Error("Rng::restore_state: malformed state string");
}

// FNV-1a over raw bytes; used to assert parameter sets stay frozen.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace vam
