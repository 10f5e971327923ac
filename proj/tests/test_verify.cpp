#include <gtest/gtest.h>

#include <wheelwalk/verify.hpp>

using namespace wheelwalk;

TEST(Verify, MinimalScalePasses) {
    const auto report = verify::run_all({3, 3, 1000, 1});
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample;
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.first_failure(), nullptr);
}

TEST(Verify, DefaultScalePasses) {
    const auto report = verify::run_all({50, 7, 200000, 7});
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample;
}

TEST(Verify, FoldedSignFaultIsCaughtWithLocation) {
    verify::VerifyConfig cfg{20, 4, 1000, 1, verify::Fault::folded_sign};
    const auto report = verify::run_all(cfg);
    ASSERT_FALSE(report.passed());
    const auto* f = report.first_failure();
    ASSERT_NE(f, nullptr);
    EXPECT_EQ(f->name, "H_N G_N = I (explicit inverse)");
    EXPECT_NE(f->counterexample.find("N=4 (i,j)=(1,1)"), std::string::npos) << f->counterexample;
}

TEST(Verify, ClosedFormFaultIsCaught) {
    const auto c = verify::check_four_way(3, 10, verify::Engines(verify::Fault::closed_form));
    EXPECT_FALSE(c.passed);
    // F_1 = F_2, so the shifted index still gives 3/2 at N = 3; N = 4 is the first miss.
    EXPECT_EQ(c.counterexample, "N=4 l=1 closed_form vs solve_reduced: got 9/7, expected 12/7");
}

TEST(Verify, TreeDirectionFaultIsCaught) {
    const verify::Engines bad(verify::Fault::tree_direction);
    EXPECT_FALSE(verify::check_in_tree_formula(3, 5, bad).passed);
    EXPECT_FALSE(verify::check_enumeration(3, 4, bad).passed);
    EXPECT_TRUE(verify::check_out_tree_formula(3, 5, bad).passed);
}

TEST(Verify, ConfigValidation) {
    EXPECT_THROW(verify::run_all({2, 3, 1000, 0}), DomainError);
    EXPECT_THROW(verify::run_all({3, 11, 1000, 0}), ScaleError);
    EXPECT_THROW(verify::parse_fault("everything"), DomainError);
}
