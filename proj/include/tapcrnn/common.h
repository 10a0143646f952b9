// Copyright 2026 The tapcrnn Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef TAPCRNN_COMMON_H_
#define TAPCRNN_COMMON_H_

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tapcrnn {

inline constexpr const char *kToolVersion = "tapcrnn 0.1.0";

// Malformed or inconsistent input data (files, shapes, manifests).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values or numerically impossible requests.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line usage; the CLI maps this to its own exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TC_CHECK(cond, msg)                    \
  do {                                         \
    if (!(cond)) {                             \
      std::ostringstream tc_oss__;             \
      tc_oss__ << msg;                         \
      throw ::tapcrnn::DataError(tc_oss__.str()); \
    }                                          \
  } while (0)

#define TC_CHECK_NUM(cond, msg)                   \
  do {                                            \
    if (!(cond)) {                                \
      std::ostringstream tc_oss__;                \
      tc_oss__ << msg;                            \
      throw ::tapcrnn::NumericError(tc_oss__.str()); \
    }                                             \
  } while (0)

// splitmix64; used to derive independent seeds from a base seed.
inline uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t DeriveSeed(uint64_t base, uint64_t stream) {
  return MixSeed(base ^ MixSeed(stream + 0x517cc1b727220a95ULL));
}

// Deterministic RNG with pinned value transforms. std:: distributions are
// implementation-defined, so the few transforms we need are spelled out here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x6a09e667f3bcc909ULL) {
    // warm up so nearby seeds decorrelate
    for (int i = 0; i < 4; ++i) NextU64();
  }

  uint64_t NextU64() {
    // xorshift64* core
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  // uniform in [0, 1)
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // inclusive bounds
  int64_t UniformInt(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(NextU64() % span);
  }

  // Box-Muller, one value per call
  double Normal() {
    double u1 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Rng Fork(uint64_t stream) { return Rng(DeriveSeed(NextU64(), stream)); }

 private:
  uint64_t state_;
};

}  // namespace tapcrnn

#endif  // TAPCRNN_COMMON_H_
