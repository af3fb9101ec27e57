#include "zg/philox.hpp"

namespace zg {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

PhiloxCounter philox4x64(const PhiloxCounter& ctr, const PhiloxKey& key) {
  PhiloxCounter c = ctr;
  PhiloxKey k = key;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    : key_{seed, stream}, index_(index) {}

std::uint64_t PhiloxStream::next_u64() {
  if (used_ == 4) {
    buf_ = philox4x64({index_, block_++, 0, 0}, key_);
    used_ = 0;
  }
  return buf_[used_++];
}

double PhiloxStream::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

}  // namespace zg
