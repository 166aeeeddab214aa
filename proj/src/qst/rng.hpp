/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_RNG_HPP
#define QSTBENCH_RNG_HPP

#include <cstdint>
#include <random>

namespace qst {

using RandomEngine = std::mt19937_64;

// Stream tags for deriving independent per-sample substreams from one master
// seed.  Keeping state, noise and shot randomness on separate streams means a
// zero-noise run consumes exactly the same variates as a noiseless one, which
// is what makes the xi = 0 corner reproduce noiseless results bit for bit.
enum class Stream : std::uint64_t {
  State = 1,
  Noise = 2,
  Shots = 3,
  ModelInit = 4,
  Shuffle = 5,
  Optical = 6,
};

/// SplitMix64-style mixing of a master seed with stream/index words.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

inline RandomEngine make_engine(std::uint64_t seed) { return RandomEngine(seed); }

inline RandomEngine substream(std::uint64_t seed, Stream s, std::uint64_t index = 0) {
  return RandomEngine(mix_seed(seed, static_cast<std::uint64_t>(s), index));
}

}  // namespace qst

#endif  // QSTBENCH_RNG_HPP
