#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "sgholder/models.hpp"
#include "sgholder/rng.hpp"
#include "sgholder/sampling.hpp"

using namespace sgholder;

// Known-answer vectors from the Random123 distribution (kat_vectors).
TEST(Philox, KnownAnswerZero) {
  const auto out = Philox4x32::apply({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out[0], 0x6627e8d5u);
  EXPECT_EQ(out[1], 0xe169c58du);
  EXPECT_EQ(out[2], 0xbc57ac4cu);
  EXPECT_EQ(out[3], 0x9b00dbd8u);
}

TEST(Philox, KnownAnswerOnes) {
  const auto out = Philox4x32::apply({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(out[0], 0x408f276du);
  EXPECT_EQ(out[1], 0x41c83b0eu);
  EXPECT_EQ(out[2], 0xa20bc7c6u);
  EXPECT_EQ(out[3], 0x6d5451fdu);
}

TEST(Philox, KnownAnswerPi) {
  const auto out = Philox4x32::apply({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(out[0], 0xd16cfe09u);
  EXPECT_EQ(out[1], 0x94fdccebu);
  EXPECT_EQ(out[2], 0x5001e420u);
  EXPECT_EQ(out[3], 0x24126ea1u);
}

TEST(RandomStream, FirstWordsAreTheFirstBlock) {
  RandomStream s(0, 0);
  const auto block = Philox4x32::apply({0, 0, 0, 0}, {0, 0});
  for (int i = 0; i < 4; ++i) EXPECT_EQ(s.next_u32(), block[i]);
  const auto next = Philox4x32::apply({1, 0, 0, 0}, {0, 0});
  EXPECT_EQ(s.next_u32(), next[0]);
}

TEST(RandomStream, SeedAndStreamSelectKeyAndCounter) {
  const std::uint64_t seed = 0x0123456789abcdefULL, id = 0xfedcba9876543210ULL;
  RandomStream s(seed, id);
  const auto block = Philox4x32::apply({0, 0, 0x76543210u, 0xfedcba98u}, {0x89abcdefu, 0x01234567u});
  EXPECT_EQ(s.next_u32(), block[0]);
}

TEST(RandomStream, UniformUsesFiftyThreeBitsHighWordFirst) {
  RandomStream a(5, 9), b(5, 9);
  const std::uint64_t hi = a.next_u32(), lo = a.next_u32();
  const double expected = static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
  EXPECT_EQ(b.uniform(), expected);
}

TEST(RandomStream, ReproducibleAndDistinctStreams) {
  RandomStream a(7, 1), b(7, 1), c(7, 2);
  std::set<std::uint32_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u32();
    EXPECT_EQ(x, b.next_u32());
    seen.insert(x);
  }
  EXPECT_NE(RandomStream(7, 1).next_u32(), c.next_u32());
  EXPECT_GT(seen.size(), 95u);
}

TEST(RandomStream, NormalMoments) {
  RandomStream s(11, 0);
  double m1 = 0.0, m2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = s.normal();
    m1 += x;
    m2 += x * x;
  }
  EXPECT_NEAR(m1 / n, 0.0, 0.01);
  EXPECT_NEAR(m2 / n, 1.0, 0.01);
  double c2 = 0.0;
  for (int i = 0; i < n; ++i) c2 += std::norm(s.complex_normal());
  EXPECT_NEAR(c2 / n, 1.0, 0.01);
}

TEST(Sampling, NormalizedKernelFreeAndReproducible) {
  const auto m = models::chain(models::cycle(12), "C12");
  const auto fs = random_test_functions(*m, 3, 5);
  ASSERT_EQ(fs.size(), 5u);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_NEAR(sup_abs(fs[i]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(fs[i].mean()), 0.0, 1e-13);
    EXPECT_EQ(fs[i], random_test_function(*m, 3, i));
  }
  EXPECT_NE(fs[0], fs[1]);
}

TEST(Sampling, LatticeBandwidthIsRespected) {
  const auto t = models::torus(1, 16);
  const Function f = random_test_function(*t, 1, 0, 4);
  const Function c = t->analyze(f);
  for (Eigen::Index k = 0; k < c.size(); ++k)
    if (std::abs(t->frequency(k)[0]) > 4) EXPECT_LT(std::abs(c(k)), 1e-14);
  EXPECT_LT(std::abs(c(t->index_of({0}))), 1e-14);
}
