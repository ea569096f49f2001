#pragma once

#include <cstdint>

#include "hypercone/rational.hpp"

namespace hypercone {

// splitmix64: tiny, deterministic across platforms. Report bytes must not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) without modulo bias worth caring about at desk scale.
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  bool coin() { return next() & 1; }

  // Uniform rational num/den with num in [0, max_num] and den in [1, max_den].
  Rat rational(uint64_t max_num, uint64_t max_den) {
    return Rat(Int(below(max_num + 1)), Int(1 + below(max_den)));
  }

  double real01() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

  Rng fork(uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

 private:
  uint64_t state_;
};

}  // namespace hypercone
