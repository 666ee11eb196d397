#pragma once

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw; SC'11).
//
// A block is a pure function of (counter, key), so any stream position can be
// reached without generating its predecessors. Simulation chunks use
// independent streams keyed by the run seed with the chunk index in the high
// counter words.

#include <array>
#include <cstdint>
#include <string_view>

namespace walklab {

/// Identifies the generator and the stream layout below. Bump the version if
/// either the block function or the bits-to-uniform mapping ever changes.
inline constexpr std::string_view kRngName = "philox4x32-10/v1";

class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr int kRounds = 10;

  static Counter block(Counter counter, Key key);
};

/// Sequential view of one Philox stream.
///
/// Layout: key = (seed low word, seed high word); counter = (block index low,
/// block index high, stream low, stream high). Each block yields two 64-bit
/// outputs, words (0,1) then (2,3), low word first.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) from the top 53 bits of next_u64().
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  std::uint64_t blocks_used() const { return block_; }

 private:
  void refill();

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int available_ = 0;
};

}  // namespace walklab
