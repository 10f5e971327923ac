#include <gtest/gtest.h>

#include <wheelwalk/hitting.hpp>
#include <wheelwalk/montecarlo.hpp>

#include <cmath>

using namespace wheelwalk;

namespace {

// Statistical: a 4-sigma miss has probability < 1e-4 per check.
void expect_within_four_sigma(std::int64_t n, std::int64_t ell, std::uint64_t seed) {
    const mc::SimStats s = mc::simulate({n, ell, 1000000, seed});
    const double exact = hitting::closed_form(n, ell).get_d();
    EXPECT_LE(std::abs(s.mean - exact), 4 * s.std_err) << "N=" << n << " l=" << ell << " mean=" << s.mean;
    EXPECT_EQ(s.cap_hits, 0u);
}

}  // namespace

TEST(Simulate, ThreeCycleAgreesWithExactValue) { expect_within_four_sigma(3, 1, 17); }

TEST(Simulate, FourCycleAgreesWithExactValue) { expect_within_four_sigma(4, 2, 42); }

TEST(Simulate, DeterministicForSeed) {
    const mc::WalkConfig c{5, 2, 200000, 9};
    EXPECT_EQ(mc::simulate(c), mc::simulate(c));
    mc::WalkConfig other = c;
    other.seed = 10;
    EXPECT_NE(mc::simulate(c).mean, mc::simulate(other).mean);
}

TEST(Simulate, IndependentOfWorkerCount) {
    mc::WalkConfig c{6, 3, 300001, 123};
    c.workers = 1;
    const auto serial = mc::simulate(c);
    c.workers = 4;
    EXPECT_EQ(serial, mc::simulate(c));
    c.workers = 7;
    EXPECT_EQ(serial, mc::simulate(c));
}

TEST(Simulate, AbsorptionFractionsSumToOne) {
    const auto s = mc::simulate({8, 3, 100000, 1});
    EXPECT_EQ(s.target_hits + s.hub_hits, s.samples);
    EXPECT_GE(s.hit_target_fraction, 0.0);
    EXPECT_LE(s.hit_target_fraction, 1.0);
    EXPECT_GE(s.std_err, 0.0);
}

TEST(Simulate, StepCapIsReported) {
    mc::WalkConfig c{9, 4, 10000, 3};
    c.max_steps = 1;
    const auto s = mc::simulate(c);
    EXPECT_GT(s.cap_hits, 0u);
    EXPECT_EQ(s.cap_hits + s.target_hits + s.hub_hits, s.samples);
}

TEST(Simulate, SingleSampleHasZeroStdErr) {
    const auto s = mc::simulate({3, 1, 1, 0});
    EXPECT_EQ(s.samples, 1u);
    EXPECT_EQ(s.std_err, 0.0);
    EXPECT_GE(s.mean, 1.0);
}

TEST(Simulate, InvalidConfig) {
    EXPECT_THROW(mc::simulate({3, 1, 0, 0}), DomainError);
    EXPECT_THROW(mc::simulate({3, 3, 10, 0}), DomainError);
    EXPECT_THROW(mc::simulate({2, 1, 10, 0}), DomainError);
}

TEST(ChunkSeed, MixesSeedAndChunk) {
    EXPECT_NE(mc::chunk_seed(0, 0), mc::chunk_seed(0, 1));
    EXPECT_NE(mc::chunk_seed(1, 0), mc::chunk_seed(0, 0));
    EXPECT_EQ(mc::chunk_seed(7, 3), mc::splitmix64(7 ^ 3));
}
