#include <gtest/gtest.h>

#include <wheelwalk/sequences.hpp>

#include <vector>

using namespace wheelwalk;

namespace {

// Independent oracle: iterate the recurrence from the two seeds.
std::vector<Integer> iterate(Integer a, Integer b, int count) {
    std::vector<Integer> out{a, b};
    while (static_cast<int>(out.size()) < count) out.push_back(out[out.size() - 1] + out[out.size() - 2]);
    return out;
}

}  // namespace

TEST(Fibonacci, BaseCasesAndSmallValues) {
    EXPECT_EQ(seq::fib(0), 0);
    EXPECT_EQ(seq::fib(1), 1);
    EXPECT_EQ(seq::fib(10), 55);
}

TEST(Lucas, BaseCasesAndSmallValues) {
    EXPECT_EQ(seq::lucas(0), 2);
    EXPECT_EQ(seq::lucas(1), 1);
    EXPECT_EQ(seq::lucas(10), 123);
}

TEST(Sequences, NegativeIndexIsDomainError) {
    EXPECT_THROW(seq::fib(-1), DomainError);
    EXPECT_THROW(seq::lucas(-3), DomainError);
    EXPECT_THROW(seq::fib_table(-1), DomainError);
}

TEST(Sequences, FastDoublingMatchesRecurrence) {
    const auto f = iterate(0, 1, 1001);
    const auto l = iterate(2, 1, 1001);
    for (int i = 0; i <= 1000; ++i) {
        ASSERT_EQ(seq::fib(i), f[i]) << "i=" << i;
        ASSERT_EQ(seq::lucas(i), l[i]) << "i=" << i;
    }
    EXPECT_EQ(seq::fib_table(1000), f);
    EXPECT_EQ(seq::lucas_table(1000), l);
}

TEST(Sequences, ExactBeyondFixedWidth) {
    EXPECT_EQ(seq::fib(200).get_str(), "280571172992510140037611932413038677189525");
    EXPECT_EQ(seq::fib(200).get_str().size(), 42u);
}

TEST(Sequences, LucasFromNeighbouringFibonacci) {
    for (int i = 1; i <= 500; ++i) ASSERT_EQ(seq::lucas(i), seq::fib(i - 1) + seq::fib(i + 1)) << "i=" << i;
}

TEST(Sequences, SecondOrderIdentity) {
    for (int n = 1; n <= 250; ++n) {
        ASSERT_EQ(seq::fib(2 * n - 2) - 3 * seq::fib(2 * n) + seq::fib(2 * n + 2), 0) << "n=" << n;
        ASSERT_EQ(seq::lucas(2 * n - 2) - 3 * seq::lucas(2 * n) + seq::lucas(2 * n + 2), 0) << "n=" << n;
    }
}

TEST(Sequences, AdditionFormula) {
    const auto f = seq::fib_table(401);
    for (int n = 1; n <= 200; ++n)
        for (int m = 1; m <= 200; ++m) ASSERT_EQ(f[n + m], f[n] * f[m + 1] + f[m] * f[n - 1]) << n << "," << m;
}

TEST(Sequences, PartialSums) {
    Integer even = 0;
    for (int l = 1; l <= 250; ++l) {
        even += seq::fib(2 * l);
        ASSERT_EQ(even, seq::fib(2 * l + 1) - 1) << "l=" << l;
    }
    for (int n = 1; n <= 250; n += 7) {
        for (int l = 0; l < n; ++l) {
            Integer odd = 0;
            for (int k = 1; k <= n - l; ++k) odd += seq::fib(2 * k - 1);
            ASSERT_EQ(odd, seq::fib(2 * n - 2 * l)) << "n=" << n << " l=" << l;
        }
    }
}
