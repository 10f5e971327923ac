#include <gtest/gtest.h>

#include <wheelwalk/arborescence.hpp>

#include <random>

using namespace wheelwalk;
using trees::Direction;

namespace {

const VertexId hub = VertexId::hub();
VertexId cyc(std::int64_t k) { return VertexId::cycle(k); }

}  // namespace

TEST(Cofactor, Examples) {
    EXPECT_EQ(trees::count_via_cofactor({DirectedWheel(3), hub, Direction::in}), 16);
    EXPECT_EQ(trees::count_via_cofactor({DirectedWheel(4), hub, Direction::out}), 0);
    EXPECT_EQ(trees::count_via_cofactor({DirectedWheel(3), cyc(0), Direction::out}), 9);
}

TEST(ClosedForms, Examples) {
    EXPECT_EQ(trees::in_trees_closed_form(3), 16);
    EXPECT_EQ(trees::in_trees_closed_form(4), 45);
    EXPECT_EQ(trees::in_trees_closed_form(5), 121);
    EXPECT_EQ(trees::out_trees_closed_form(3, hub), 0);
    EXPECT_EQ(trees::out_trees_closed_form(3, cyc(0)), 9);
    EXPECT_EQ(trees::out_trees_closed_form(4, cyc(2)), 16);
    EXPECT_THROW(trees::in_trees_closed_form(2), DomainError);
    EXPECT_THROW(trees::out_trees_closed_form(2, hub), DomainError);
    EXPECT_THROW(trees::out_trees_closed_form(4, cyc(4)), DomainError);
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(trees::enumerate({DirectedWheel(3), hub, Direction::in}), 16);
    EXPECT_EQ(trees::enumerate({DirectedWheel(3), hub, Direction::out}), 0);
    DirectedWheel w(3);
    w.set_weight(cyc(0), hub, 2);
    EXPECT_EQ(trees::enumerate({w, cyc(1), Direction::out}), 12);
    EXPECT_EQ(trees::count_via_cofactor({w, cyc(1), Direction::out}), 12);
}

TEST(Enumerate, ScaleLimit) {
    EXPECT_NO_THROW(trees::enumerate({DirectedWheel(10), cyc(0), Direction::out}));
    EXPECT_THROW(trees::enumerate({DirectedWheel(11), hub, Direction::in}), ScaleError);
}

TEST(Enumerate, InTreesAtCycleRootNeedTheHubToBeRoot) {
    // The hub has no out-edge, so it can only be the root of an in-tree.
    EXPECT_EQ(trees::enumerate({DirectedWheel(5), cyc(2), Direction::in}), 0);
    EXPECT_EQ(trees::count_via_cofactor({DirectedWheel(5), cyc(2), Direction::in}), 0);
}

TEST(MatrixTree, CofactorMatchesEnumerationUnweighted) {
    for (std::int64_t n = 3; n <= 8; ++n) {
        const DirectedWheel w(n);
        for (std::size_t v = 0; v < w.vertex_count(); ++v)
            for (auto d : {Direction::in, Direction::out}) {
                const trees::TreeQuery q{w, w.vertex_at(v), d};
                ASSERT_EQ(trees::enumerate(q), trees::count_via_cofactor(q))
                    << "N=" << n << " root=" << q.root.str() << " " << trees::direction_name(d);
            }
    }
}

TEST(MatrixTree, CofactorMatchesClosedForms) {
    for (std::int64_t n = 3; n <= 40; ++n) {
        const DirectedWheel w(n);
        ASSERT_EQ(trees::count_via_cofactor({w, hub, Direction::in}), trees::in_trees_closed_form(n)) << "N=" << n;
        for (std::size_t v = 0; v < w.vertex_count(); ++v) {
            const VertexId r = w.vertex_at(v);
            ASSERT_EQ(trees::count_via_cofactor({w, r, Direction::out}), trees::out_trees_closed_form(n, r))
                << "N=" << n << " root=" << r.str();
        }
    }
}

TEST(MatrixTree, WeightedCofactorMatchesEnumeration) {
    std::mt19937_64 rng(5);
    for (std::int64_t n = 3; n <= 5; ++n) {
        for (int t = 0; t < 20; ++t) {
            DirectedWheel w(n);
            for (std::int64_t k = 0; k < n; ++k)
                for (const auto& head : w.successors(cyc(k))) w.set_weight(cyc(k), head, static_cast<long>(1 + rng() % 4));
            for (std::size_t v = 0; v < w.vertex_count(); ++v)
                for (auto d : {Direction::in, Direction::out}) {
                    const trees::TreeQuery q{w, w.vertex_at(v), d};
                    ASSERT_EQ(trees::enumerate(q), trees::count_via_cofactor(q)) << "N=" << n << " t=" << t;
                }
        }
    }
}
