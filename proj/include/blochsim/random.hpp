#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace blochsim {

// One round of splitmix64. Advances the state and returns the next word.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and a counter, so
// shots/scan points can be sampled in parallel in any order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  std::uint64_t s = master + 0x9e3779b97f4a7c15ULL * (counter + 1);
  return splitmix64_next(s);
}

// mt19937_64 with hand-rolled distributions. The engine's output sequence is
// fixed by the standard and the samplers below avoid std::*_distribution,
// whose algorithms differ between standard libraries, so streams are
// bit-stable for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Marsaglia polar with one cached value
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // n_trials independent draws over the categories of `probabilities`
  // (need not be normalized). Inverse-CDF per draw.
  std::vector<std::int64_t> multinomial(std::int64_t n_trials,
                                        const std::vector<double>& probabilities) {
    if (probabilities.empty()) {
      throw std::invalid_argument("multinomial: empty probability vector");
    }
    std::vector<double> cdf(probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
      if (!(probabilities[i] >= 0.0)) {
        throw std::invalid_argument("multinomial: negative probability");
      }
      acc += probabilities[i];
      cdf[i] = acc;
    }
    if (!(acc > 0.0)) {
      throw std::invalid_argument("multinomial: zero total probability");
    }
    std::vector<std::int64_t> counts(probabilities.size(), 0);
    for (std::int64_t t = 0; t < n_trials; ++t) {
      const double x = uniform() * acc;
      // first index with cdf[i] > x
      std::size_t lo = 0, hi = cdf.size() - 1;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cdf[mid] > x) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      ++counts[lo];
    }
    return counts;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace blochsim
