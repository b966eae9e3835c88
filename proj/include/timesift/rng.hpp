// Copyright (c) 2026 timesift contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace timesift {

// Deterministic random source. The mt19937_64 engine output is pinned by the
// standard and the distributions below are implemented here, so sequences are
// identical across platforms and standard libraries. Every consumer derives
// its own stream with fork(), keyed by a label, which keeps results stable
// when unrelated stages change how much randomness they draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(bits() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) {
    // Rejection sampling keeps the distribution exact.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = bits();
    } while (x >= limit);
    return x % n;
  }

  // Standard normal via Box-Muller (portable, unlike std::normal_distribution).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Child stream keyed by a label; independent of draws made on the parent.
  Rng fork(const std::string& label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ seed_mix_;
    for (char c : label) {
      h ^= static_cast<std::uint8_t>(c);
      h *= 0x100000001b3ULL;
    }
    return Rng(splitmix(h));
  }

  Rng fork(std::uint64_t salt) const { return Rng(splitmix(seed_mix_ ^ (salt * 0x9e3779b97f4a7c15ULL))); }

 private:
  explicit Rng(std::uint64_t seed, int) : engine_(seed) {}

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
  std::uint64_t seed_mix_ = engine_();  // one draw; decorrelates fork() labels per seed
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace timesift
