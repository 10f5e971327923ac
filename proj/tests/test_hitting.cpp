#include <gtest/gtest.h>

#include <wheelwalk/hitting.hpp>
#include <wheelwalk/wheel.hpp>

using namespace wheelwalk;
using hitting::Method;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// First-step analysis straight from the walk: for every cycle vertex v other
// than the target, h(v) = 1 + sum over out-neighbours u of h(u)/outdeg(v),
// with h = 0 at the target and the hub. Solved as one exact linear system.
Rational first_step_oracle(std::int64_t n, std::int64_t target) {
    const DirectedWheel w(n);
    std::vector<std::int64_t> slot(static_cast<std::size_t>(n), -1);
    std::size_t unknowns = 0;
    for (std::int64_t k = 0; k < n; ++k)
        if (k != target) slot[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(unknowns++);
    ExactMatrix a(unknowns, unknowns);
    RationalVector b(unknowns, Rational(1));
    for (std::int64_t k = 0; k < n; ++k) {
        if (k == target) continue;
        const auto row = static_cast<std::size_t>(slot[static_cast<std::size_t>(k)]);
        const auto next = w.successors(VertexId::cycle(k));
        a(row, row) += 1;
        for (const auto& u : next) {
            if (u.is_hub() || u.cycle_index() == target) continue;
            a(row, static_cast<std::size_t>(slot[static_cast<std::size_t>(u.cycle_index())])) -=
                make_rational(1, static_cast<long>(next.size()));
        }
    }
    return linalg::solve(a, b)[static_cast<std::size_t>(slot[0])];
}

}  // namespace

TEST(ClosedForm, SpotValues) {
    EXPECT_EQ(hitting::closed_form(3, 1), q(3, 2));
    EXPECT_EQ(hitting::closed_form(4, 1), q(12, 7));
    EXPECT_EQ(hitting::closed_form(4, 2), q(15, 7));
    EXPECT_EQ(hitting::closed_form(5, 1), q(9, 5));
    EXPECT_EQ(hitting::closed_form(5, 4), q(9, 5));
}

TEST(ClosedForm, OutOfRange) {
    EXPECT_THROW(hitting::closed_form(5, 0), DomainError);
    EXPECT_THROW(hitting::closed_form(5, 5), DomainError);
    EXPECT_THROW(hitting::closed_form(2, 1), DomainError);
}

TEST(ClosedForm, AgreesWithFirstStepOracle) {
    for (std::int64_t n = 3; n <= 25; ++n)
        for (std::int64_t l = 1; l < n; ++l)
            ASSERT_EQ(hitting::closed_form(n, l), first_step_oracle(n, l)) << "N=" << n << " l=" << l;
}

TEST(SolveReduced, Examples) {
    EXPECT_EQ(hitting::solve_reduced(3), (RationalVector{q(3, 2), q(3, 2)}));
    EXPECT_EQ(hitting::solve_reduced(4), (RationalVector{q(12, 7), q(15, 7), q(12, 7)}));
    EXPECT_EQ(hitting::solve_reduced(5), (RationalVector{q(9, 5), q(12, 5), q(12, 5), q(9, 5)}));
    EXPECT_THROW(hitting::solve_reduced(2), DomainError);
}

TEST(SolveFolded, Examples) {
    EXPECT_EQ(hitting::solve_folded(5), (RationalVector{q(9, 5), q(12, 5)}));
    EXPECT_EQ(hitting::solve_folded(4), (RationalVector{q(12, 7), q(15, 7)}));
    EXPECT_EQ(hitting::solve_folded(3), (RationalVector{q(3, 2)}));
    EXPECT_THROW(hitting::solve_folded(0), DomainError);
}

TEST(InverseEntry, Examples) {
    EXPECT_EQ(hitting::inverse_entry(5, 1, 1), q(2, 5));
    EXPECT_EQ(hitting::inverse_entry(4, 2, 1), q(2, 7));
    EXPECT_EQ(hitting::inverse_entry(4, 1, 2), q(1, 7));
    EXPECT_THROW(hitting::inverse_entry(5, 0, 1), DomainError);
    EXPECT_THROW(hitting::inverse_entry(5, 1, 3), DomainError);
}

TEST(InverseEntry, AssembledMatrixInvertsFoldedSystem) {
    for (std::int64_t n = 3; n <= 80; ++n) {
        const ExactMatrix g = hitting::folded_inverse(n);
        ASSERT_EQ(folded_matrix(n) * g, ExactMatrix::identity(g.rows())) << "N=" << n;
        ASSERT_EQ(g, linalg::invert(folded_matrix(n))) << "N=" << n;
    }
    // Table-backed assembly and the stand-alone entry agree.
    const ExactMatrix g = hitting::folded_inverse(12);
    for (std::int64_t i = 1; i <= 6; ++i)
        for (std::int64_t j = 1; j <= 6; ++j) EXPECT_EQ(g(i - 1, j - 1), hitting::inverse_entry(12, i, j));
}

TEST(ViaInverse, Examples) {
    EXPECT_EQ(hitting::via_inverse(5), (RationalVector{q(9, 5), q(12, 5)}));
    EXPECT_EQ(hitting::via_inverse(4), (RationalVector{q(12, 7), q(15, 7)}));
    EXPECT_EQ(hitting::via_inverse(3), (RationalVector{q(3, 2)}));
}

TEST(HittingTime, FourWayAgreement) {
    for (std::int64_t n = 3; n <= 60; ++n) {
        const auto reduced = hitting::solve_reduced(n);
        const auto folded = hitting::solve_folded(n);
        const auto inverse = hitting::via_inverse(n);
        for (std::int64_t l = 1; l < n; ++l) {
            const hitting::HittingQuery query{n, l};
            const auto f = static_cast<std::size_t>(query.folded_ell() - 1);
            const Rational c = hitting::closed_form(query);
            ASSERT_EQ(c, reduced[l - 1]) << "N=" << n << " l=" << l;
            ASSERT_EQ(c, folded[f]) << "N=" << n << " l=" << l;
            ASSERT_EQ(c, inverse[f]) << "N=" << n << " l=" << l;
        }
    }
}

TEST(HittingTime, ShapeProperties) {
    for (std::int64_t n = 3; n <= 200; ++n) {
        const auto folded = hitting::solve_folded(n);
        for (std::size_t i = 0; i < folded.size(); ++i) {
            ASSERT_GT(folded[i], 0);
            ASSERT_LT(folded[i], 3) << "N=" << n;
            if (i) {
                ASSERT_GT(folded[i], folded[i - 1]) << "N=" << n << " l=" << i + 1;
            }
        }
    }
}

TEST(HittingTime, DispatchAndBatch) {
    for (auto m : {Method::closed_form, Method::solve_reduced, Method::solve_folded, Method::via_inverse}) {
        const auto r = hitting::hitting_time({4, 3}, m);
        EXPECT_EQ(r.value, q(12, 7)) << hitting::method_name(m);
        EXPECT_EQ(r.method, m);
        const auto all = hitting::all_hitting_times(6, m);
        ASSERT_EQ(all.size(), 5u);
        for (const auto& x : all) EXPECT_EQ(x.value, hitting::closed_form(6, x.query.ell));
    }
    EXPECT_THROW(hitting::hitting_time({4, 4}, Method::solve_folded), DomainError);
}
