#pragma once

#include <array>
#include <cstdint>

namespace mgauss {

// One raw Philox4x32-10 block: four counter words and two key words in,
// four output words out. Exposed so the pinned generator can be checked
// against the published test vectors.
std::array<std::uint32_t, 4> philox4x32_10(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key);

// Deterministic random stream backed by the Philox4x32-10 counter-based
// generator. The generator identity is part of the library's compatibility
// contract (see README): given the same seed and stream id, a RandomState
// produces the same variates on every run, and distinct stream ids yield
// statistically independent, non-overlapping streams. This is what makes
// batch sampling both reproducible and safe to parallelize: sample k of a
// batch always reads stream k regardless of thread scheduling.
//
// Layout, fixed by contract:
//   key     = (seed lo32, seed hi32)
//   counter = (block lo32, block hi32, stream lo32, stream hi32)
// Each 128-bit Philox block yields two 64-bit words (w0 from the first two
// output lanes, w1 from the last two). Uniforms map a 64-bit word w to
// ((w >> 11) + 1) * 2^-53 in (0, 1]; normals come from the Box-Muller
// transform applied to consecutive uniforms, one pair per call pair.
class RandomState {
 public:
  explicit RandomState(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double next_uniform();  // in (0, 1]
  double next_normal();   // standard normal

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;     // counter of Philox blocks consumed
  std::uint64_t word_buf_[2];   // words from the current block
  int words_left_ = 0;
  double cached_normal_ = 0.0;  // second Box-Muller variate
  bool has_cached_normal_ = false;

  void generate_block();
};

}  // namespace mgauss
