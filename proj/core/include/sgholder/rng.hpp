#pragma once

#include <array>
#include <cstdint>

#include "sgholder/types.hpp"

namespace sgholder {

// Philox4x32-10 (Salmon et al., Random123). Counter-based: a (counter, key)
// pair maps to four 32-bit words, so any stream can be reproduced from its
// coordinates alone.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  static Counter apply(Counter ctr, Key key);
};

// Stream (seed, stream_id): key = seed split into two words, counter =
// (block_lo, block_hi, id_lo, id_hi). Words are drawn in order from each
// block. Doubles take 53 bits from two consecutive words (high word first).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint32_t next_u32();
  // Uniform on [0, 1).
  double uniform();
  // Standard normal by Box-Muller; consumes two doubles per call and
  // discards the sine branch.
  double normal();
  // Standard complex normal (E|z|^2 = 1): one Box-Muller pair, both branches,
  // each scaled by 1/sqrt(2).
  Complex complex_normal();

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace sgholder
