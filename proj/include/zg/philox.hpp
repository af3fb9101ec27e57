#pragma once
// Philox4x64-10 counter-based generator (Salmon et al. 2011). Outputs match
// the published Random123 known-answer vectors.

#include <array>
#include <cstdint>

namespace zg {

using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

/// One block of four 64-bit words.
PhiloxCounter philox4x64(const PhiloxCounter& ctr, const PhiloxKey& key);

/// Stream of uniform draws for one (seed, stream, index) triple. Each block
/// consumes counter (index, block, 0, 0) under key (seed, stream).
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits; always a dyadic rational.
  double next_unit();

 private:
  PhiloxKey key_;
  std::uint64_t index_;
  std::uint64_t block_ = 0;
  PhiloxCounter buf_{};
  int used_ = 4;
};

}  // namespace zg
