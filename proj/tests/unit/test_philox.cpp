#include "doctest.h"
#include "zg/philox.hpp"

using namespace zg;

TEST_CASE("Philox4x64-10 reference vectors") {
  PhiloxCounter zero = philox4x64({0, 0, 0, 0}, {0, 0});
  CHECK(zero == PhiloxCounter{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL, 0xd7e772cee186176bULL,
                              0x7e68b68aec7ba23bULL});
  PhiloxCounter one = philox4x64({1, 0, 0, 0}, {0, 0});
  CHECK(one == PhiloxCounter{0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL,
                             0x907d7a052fd5b4dcULL});
  PhiloxCounter pi = philox4x64({0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL,
                                 0x082efa98ec4e6c89ULL},
                                {0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL});
  CHECK(pi == PhiloxCounter{0xa528f45403e61d95ULL, 0x38c72dbd566e9788ULL, 0xa5a1610e72fd18b5ULL,
                            0x57bd43b5e52b7fe6ULL});
}

TEST_CASE("streams are reproducible and distinct") {
  PhiloxStream a(42, 0, 5), b(42, 0, 5), c(42, 1, 5), d(42, 0, 6);
  for (int i = 0; i < 9; ++i) {
    std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
  PhiloxStream u(7, 0, 0);
  for (int i = 0; i < 1000; ++i) {
    double v = u.next_unit();
    CHECK(v >= 0);
    CHECK(v < 1);
  }
}
