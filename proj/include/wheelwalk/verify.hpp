#pragma once

/**
 * @file verify.hpp
 * @brief Cross-validation suite: every engine checked against an independent route.
 *
 * Each check_* function covers one invariant over an explicit range and
 * stops at the first counterexample, which it reports with N and indices.
 * run_all() strings them together for the `verify` command.
 *
 * A Fault deliberately corrupts one engine inside the suite only, so the
 * failure path can be exercised end to end.
 */

#include "arborescence.hpp"
#include "hitting.hpp"
#include "matrix.hpp"
#include "montecarlo.hpp"
#include "number.hpp"
#include "sequences.hpp"
#include "wheel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace wheelwalk::verify {

enum class Fault {
    none,
    folded_sign,     // H_N(1, 2) becomes +1
    closed_form,     // closed form uses index N - 2l + 1
    tree_direction,  // in-trees counted from the in-degree Laplacian
};

inline Fault parse_fault(std::string_view s) {
    if (s == "none") return Fault::none;
    if (s == "folded-sign") return Fault::folded_sign;
    if (s == "closed-form") return Fault::closed_form;
    if (s == "tree-direction") return Fault::tree_direction;
    throw DomainError("unknown fault '" + std::string(s) + "'");
}

struct Check {
    std::string name;
    std::string range;
    bool passed = true;
    std::string counterexample;  // empty when passed
    std::string note;
};

struct VerifyReport {
    std::vector<Check> checks;

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    /// First failing check, or nullptr.
    [[nodiscard]] const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

struct VerifyConfig {
    std::int64_t n_max = 50;
    std::int64_t enum_max = 7;
    std::uint64_t mc_samples = 200000;
    std::uint64_t seed = 0;
    Fault fault = Fault::none;

    void validate() const {
        if (n_max < 3) throw DomainError("n_max must be at least 3");
        if (enum_max < 3) throw DomainError("enum_max must be at least 3");
        if (enum_max > trees::max_enumeration_size)
            throw ScaleError("enumeration scale exceeded: enum_max = " + std::to_string(enum_max));
        if (mc_samples < 2) throw DomainError("mc_samples must be at least 2");
    }
};

/// Monte Carlo targets checked by run_all().
inline constexpr std::int64_t mc_targets[][2] = {{3, 1}, {4, 2}, {5, 2}, {8, 3}};

inline constexpr double mc_sigma_bound = 4.0;

// Engines as seen by the suite, with the configured fault applied.
class Engines {
public:
    explicit Engines(Fault f = Fault::none) : fault_(f) {}

    [[nodiscard]] ExactMatrix folded(std::int64_t n) const {
        ExactMatrix m = folded_matrix(n);
        if (fault_ == Fault::folded_sign && m.cols() >= 2) m(0, 1) = -m(0, 1);
        return m;
    }

    [[nodiscard]] Rational closed(std::int64_t n, std::int64_t ell) const {
        if (fault_ != Fault::closed_form) return hitting::closed_form(n, ell);
        const hitting::HittingQuery q{n, ell};
        q.validate();
        const std::int64_t k = n - 2 * q.folded_ell() + 1;
        const Integer total = n % 2 ? seq::fib(n) : seq::lucas(n);
        const Integer rest = n % 2 ? seq::fib(k) : seq::lucas(k);
        return make_rational(3 * (total - rest), total);
    }

    [[nodiscard]] RationalVector solve_folded(std::int64_t n) const {
        const ExactMatrix m = folded(n);
        return linalg::solve(m, RationalVector(m.rows(), Rational(3)));
    }

    [[nodiscard]] Integer cofactor(const trees::TreeQuery& q) const {
        if (fault_ != Fault::tree_direction || q.direction == trees::Direction::out)
            return trees::count_via_cofactor(q);
        const std::size_t r = q.wheel.index_of(q.root);
        return linalg::minor_determinant(in_laplacian(q.wheel), r, r).get_num();
    }

private:
    Fault fault_;
};

namespace detail {

inline std::string span(std::string_view var, std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    os << lo << " <= " << var << " <= " << hi;
    return os.str();
}

template <typename T>
std::string mismatch(const std::string& where, const T& got, const T& expected) {
    std::ostringstream os;
    os << where << ": got " << got << ", expected " << expected;
    return os.str();
}

inline Check start(std::string name, std::string range) {
    Check c;
    c.name = std::move(name);
    c.range = std::move(range);
    return c;
}

inline Check& fail(Check& c, std::string why) {
    c.passed = false;
    c.counterexample = std::move(why);
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sequences

inline Check check_recurrences(std::int64_t max_i) {
    auto c = detail::start("sequence recurrences", detail::span("i", 0, max_i));
    for (std::int64_t i = 0; i <= max_i; ++i) {
        const Integer f = seq::fib(i + 1) + seq::fib(i);
        const Integer l = seq::lucas(i + 1) + seq::lucas(i);
        if (seq::fib(i + 2) != f) return detail::fail(c, detail::mismatch("F_" + std::to_string(i + 2), seq::fib(i + 2), f));
        if (seq::lucas(i + 2) != l)
            return detail::fail(c, detail::mismatch("L_" + std::to_string(i + 2), seq::lucas(i + 2), l));
    }
    return c;
}

inline Check check_lucas_from_fib(std::int64_t max_i) {
    auto c = detail::start("L_i = F_{i-1} + F_{i+1}", detail::span("i", 1, max_i));
    for (std::int64_t i = 1; i <= max_i; ++i) {
        const Integer expected = seq::fib(i - 1) + seq::fib(i + 1);
        if (seq::lucas(i) != expected)
            return detail::fail(c, detail::mismatch("i=" + std::to_string(i), seq::lucas(i), expected));
    }
    return c;
}

inline Check check_second_order_identity(std::int64_t max_n) {
    auto c = detail::start("X_{2n-2} - 3 X_{2n} + X_{2n+2} = 0 for F and L", detail::span("n", 1, max_n));
    const auto f = seq::fib_table(2 * max_n + 2);
    const auto l = seq::lucas_table(2 * max_n + 2);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const auto k = static_cast<std::size_t>(2 * n);
        const Integer fr = f[k - 2] - 3 * f[k] + f[k + 2];
        const Integer lr = l[k - 2] - 3 * l[k] + l[k + 2];
        if (fr != 0) return detail::fail(c, detail::mismatch("Fibonacci n=" + std::to_string(n), fr, Integer(0)));
        if (lr != 0) return detail::fail(c, detail::mismatch("Lucas n=" + std::to_string(n), lr, Integer(0)));
    }
    return c;
}

inline Check check_addition_formula(std::int64_t max_nm) {
    auto c = detail::start("F_{n+m} = F_n F_{m+1} + F_m F_{n-1}", detail::span("n, m", 1, max_nm));
    const auto f = seq::fib_table(2 * max_nm + 1);
    for (std::int64_t n = 1; n <= max_nm; ++n) {
        for (std::int64_t m = 1; m <= max_nm; ++m) {
            const auto at = [&](std::int64_t i) -> const Integer& { return f[static_cast<std::size_t>(i)]; };
            const Integer rhs = at(n) * at(m + 1) + at(m) * at(n - 1);
            if (at(n + m) != rhs)
                return detail::fail(c, detail::mismatch("n=" + std::to_string(n) + " m=" + std::to_string(m), at(n + m), rhs));
        }
    }
    return c;
}

inline Check check_even_sum(std::int64_t max_l) {
    auto c = detail::start("sum_{k=1..l} F_{2k} = F_{2l+1} - 1", detail::span("l", 1, max_l));
    const auto f = seq::fib_table(2 * max_l + 1);
    Integer sum = 0;
    for (std::int64_t l = 1; l <= max_l; ++l) {
        sum += f[static_cast<std::size_t>(2 * l)];
        const Integer expected = f[static_cast<std::size_t>(2 * l + 1)] - 1;
        if (sum != expected) return detail::fail(c, detail::mismatch("l=" + std::to_string(l), sum, expected));
    }
    return c;
}

inline Check check_odd_sum(std::int64_t max_n) {
    auto c = detail::start("sum_{k=1..n-l} F_{2k-1} = F_{2n-2l}", "0 <= l < n <= " + std::to_string(max_n));
    const auto f = seq::fib_table(2 * max_n);
    // Prefix sums of odd-index terms; the identity depends only on d = n - l.
    std::vector<Integer> prefix(static_cast<std::size_t>(max_n) + 1, Integer(0));
    for (std::int64_t d = 1; d <= max_n; ++d)
        prefix[static_cast<std::size_t>(d)] = prefix[static_cast<std::size_t>(d - 1)] + f[static_cast<std::size_t>(2 * d - 1)];
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t l = 0; l < n; ++l) {
            const auto d = static_cast<std::size_t>(n - l);
            if (prefix[d] != f[2 * d])
                return detail::fail(c, detail::mismatch("n=" + std::to_string(n) + " l=" + std::to_string(l), prefix[d], f[2 * d]));
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Hitting times

/// H_N G_N == I exactly.
inline Check check_inverse_formula(std::int64_t n_lo, std::int64_t n_hi, const Engines& e = Engines()) {
    auto c = detail::start("H_N G_N = I (explicit inverse)", detail::span("N", n_lo, n_hi));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const ExactMatrix product = e.folded(n) * hitting::folded_inverse(n);
        for (std::size_t i = 0; i < product.rows(); ++i) {
            for (std::size_t j = 0; j < product.cols(); ++j) {
                const Rational expected = i == j ? 1 : 0;
                if (product(i, j) != expected)
                    return detail::fail(c, detail::mismatch("N=" + std::to_string(n) + " (i,j)=(" + std::to_string(i + 1) +
                                                                "," + std::to_string(j + 1) + ")",
                                                            product(i, j), expected));
            }
        }
    }
    return c;
}

/// closed_form == solve_reduced[l] == solve_folded[l'] == via_inverse[l'], l' = min(l, N-l).
inline Check check_four_way(std::int64_t n_lo, std::int64_t n_hi, const Engines& e = Engines()) {
    auto c = detail::start("four-way hitting-time agreement", detail::span("N", n_lo, n_hi) + ", 1 <= l <= N-1");
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const auto reduced = hitting::solve_reduced(n);
        const auto folded = e.solve_folded(n);
        const auto inverse = hitting::via_inverse(n);
        for (std::int64_t ell = 1; ell < n; ++ell) {
            const hitting::HittingQuery q{n, ell};
            const auto fi = static_cast<std::size_t>(q.folded_ell() - 1);
            const Rational formula = e.closed(n, ell);
            const std::string where = "N=" + std::to_string(n) + " l=" + std::to_string(ell);
            const Rational& r = reduced[static_cast<std::size_t>(ell - 1)];
            if (formula != r) return detail::fail(c, detail::mismatch(where + " closed_form vs solve_reduced", formula, r));
            if (folded[fi] != r) return detail::fail(c, detail::mismatch(where + " solve_folded vs solve_reduced", folded[fi], r));
            if (inverse[fi] != r) return detail::fail(c, detail::mismatch(where + " via_inverse vs solve_reduced", inverse[fi], r));
        }
    }
    return c;
}

/// L' is the out-Laplacian with the hub and Cycle(0) removed.
inline Check check_reduced_from_laplacian(std::int64_t n_lo, std::int64_t n_hi) {
    auto c = detail::start("L' = L minus hub and Cycle(0)", detail::span("N", n_lo, n_hi));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        const ExactMatrix expected = out_laplacian(DirectedWheel(n)).without(nn, nn).without(0, 0);
        if (!(reduced_matrix(n) == expected)) return detail::fail(c, "N=" + std::to_string(n) + ": matrices differ");
    }
    return c;
}

/// Symmetry, fold consistency, strict monotonicity and h < 3.
inline Check check_fold_and_shape(std::int64_t n_lo, std::int64_t n_hi, const Engines& e = Engines()) {
    auto c = detail::start("symmetry, folding, monotonicity, h < 3", detail::span("N", n_lo, n_hi));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const auto h = hitting::solve_reduced(n);
        const std::string at = "N=" + std::to_string(n);
        for (std::int64_t ell = 1; ell < n; ++ell) {
            const auto& a = h[static_cast<std::size_t>(ell - 1)];
            const auto& b = h[static_cast<std::size_t>(n - ell - 1)];
            if (a != b) return detail::fail(c, detail::mismatch(at + " h(0," + std::to_string(ell) + ") vs h(0,N-l)", a, b));
            if (!(a > 0 && a < 3)) return detail::fail(c, at + " l=" + std::to_string(ell) + ": h = " + to_string(a) + " not in (0, 3)");
        }
        const std::size_t half = static_cast<std::size_t>(n / 2);
        const RationalVector head(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(half));
        const auto lhs = e.folded(n) * head;
        for (std::size_t i = 0; i < half; ++i)
            if (lhs[i] != 3)
                return detail::fail(c, detail::mismatch(at + " (H_N h)_" + std::to_string(i + 1), lhs[i], Rational(3)));
        for (std::size_t i = 1; i < half; ++i)
            if (!(head[i] > head[i - 1]))
                return detail::fail(c, at + ": h(0," + std::to_string(i + 1) + ") = " + to_string(head[i]) +
                                           " not above h(0," + std::to_string(i) + ") = " + to_string(head[i - 1]));
    }
    return c;
}

// ---------------------------------------------------------------------------
// Arborescences

inline Check check_in_tree_formula(std::int64_t n_lo, std::int64_t n_hi, const Engines& e = Engines()) {
    auto c = detail::start("in-trees at hub = L_{2N} - 2", detail::span("N", n_lo, n_hi));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const Integer got = e.cofactor({DirectedWheel(n), VertexId::hub(), trees::Direction::in});
        const Integer expected = trees::in_trees_closed_form(n);
        if (got != expected) return detail::fail(c, detail::mismatch("N=" + std::to_string(n), got, expected));
    }
    return c;
}

inline Check check_out_tree_formula(std::int64_t n_lo, std::int64_t n_hi, const Engines& e = Engines()) {
    auto c = detail::start("out-trees = N^2 (cycle root), 0 (hub)", detail::span("N", n_lo, n_hi) + ", every root");
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const DirectedWheel w(n);
        for (std::size_t v = 0; v < w.vertex_count(); ++v) {
            const VertexId root = w.vertex_at(v);
            const Integer got = e.cofactor({w, root, trees::Direction::out});
            const Integer expected = trees::out_trees_closed_form(n, root);
            if (got != expected)
                return detail::fail(c, detail::mismatch("N=" + std::to_string(n) + " root=" + root.str(), got, expected));
        }
    }
    return c;
}

namespace detail {

inline std::string compare_all_roots(const DirectedWheel& w, const Engines& e) {
    for (std::size_t v = 0; v < w.vertex_count(); ++v) {
        for (auto dir : {trees::Direction::in, trees::Direction::out}) {
            const trees::TreeQuery q{w, w.vertex_at(v), dir};
            const Integer brute = trees::enumerate(q);
            const Integer cof = e.cofactor(q);
            if (brute != cof)
                return mismatch("N=" + std::to_string(w.n()) + " root=" + q.root.str() + " direction=" +
                                    std::string(trees::direction_name(dir)) + " cofactor vs enumeration",
                                cof, brute);
        }
    }
    return {};
}

}  // namespace detail

inline Check check_enumeration(std::int64_t n_lo, std::int64_t n_hi, const Engines& e = Engines()) {
    auto c = detail::start("cofactor = brute-force enumeration", detail::span("N", n_lo, n_hi) + ", every root, in/out");
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        auto why = detail::compare_all_roots(DirectedWheel(n), e);
        if (!why.empty()) return detail::fail(c, std::move(why));
    }
    return c;
}

/// Random weights in [1, 4]; stream seeded from `seed`.
inline Check check_weighted_matrix_tree(std::int64_t n_lo, std::int64_t n_hi, int weightings, std::uint64_t seed,
                                        const Engines& e = Engines()) {
    auto c = detail::start("weighted Matrix-Tree = enumeration",
                           detail::span("N", n_lo, n_hi) + ", " + std::to_string(weightings) + " weightings each");
    std::mt19937_64 rng(mc::splitmix64(seed));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        for (int t = 0; t < weightings; ++t) {
            DirectedWheel w(n);
            for (std::int64_t k = 0; k < n; ++k) {
                const VertexId v = VertexId::cycle(k);
                for (const auto& head : w.successors(v)) w.set_weight(v, head, make_integer(static_cast<std::int64_t>(1 + rng() % 4)));
            }
            auto why = detail::compare_all_roots(w, e);
            if (!why.empty()) return detail::fail(c, "weighting " + std::to_string(t) + ": " + why);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Monte Carlo

/// |mean - exact| <= 4 std_err, no capped walks, target + hub fractions sum to 1.
inline Check check_monte_carlo(std::int64_t n, std::int64_t ell, std::uint64_t samples, std::uint64_t seed,
                               const Engines& e = Engines()) {
    auto c = detail::start("Monte Carlo within 4 sigma",
                           "N=" + std::to_string(n) + " l=" + std::to_string(ell) + ", " + std::to_string(samples) + " samples");
    c.note = "statistical: false-failure rate < 1e-4 per check; on failure rerun with a fresh --seed";
    const mc::SimStats s = mc::simulate({n, ell, samples, seed});
    const Rational exact = e.closed(n, ell);
    const double diff = std::abs(s.mean - exact.get_d());
    std::ostringstream msg;
    msg << "mean " << s.mean << " std_err " << s.std_err << " exact " << exact << " (" << exact.get_d() << ")";
    if (s.cap_hits) return detail::fail(c, std::to_string(s.cap_hits) + " walks hit the step cap; " + msg.str());
    if (s.target_hits + s.hub_hits != s.samples) return detail::fail(c, "target + hub absorptions != samples; " + msg.str());
    if (diff > mc_sigma_bound * s.std_err) return detail::fail(c, "deviation " + std::to_string(diff / s.std_err) + " sigma; " + msg.str());
    return c;
}

// ---------------------------------------------------------------------------

/// Every suite at the configured scale.
inline VerifyReport run_all(const VerifyConfig& cfg) {
    cfg.validate();
    const Engines e(cfg.fault);
    VerifyReport r;
    r.checks.push_back(check_recurrences(500));
    r.checks.push_back(check_lucas_from_fib(500));
    r.checks.push_back(check_second_order_identity(250));
    r.checks.push_back(check_addition_formula(200));
    r.checks.push_back(check_even_sum(250));
    r.checks.push_back(check_odd_sum(250));
    r.checks.push_back(check_inverse_formula(3, cfg.n_max, e));
    r.checks.push_back(check_four_way(3, cfg.n_max, e));
    r.checks.push_back(check_reduced_from_laplacian(3, cfg.n_max));
    r.checks.push_back(check_fold_and_shape(3, cfg.n_max, e));
    r.checks.push_back(check_in_tree_formula(3, cfg.n_max, e));
    r.checks.push_back(check_out_tree_formula(3, cfg.n_max, e));
    r.checks.push_back(check_enumeration(3, cfg.enum_max, e));
    r.checks.push_back(check_weighted_matrix_tree(3, std::min<std::int64_t>(5, cfg.enum_max), 20, cfg.seed, e));
    for (const auto& t : mc_targets) r.checks.push_back(check_monte_carlo(t[0], t[1], cfg.mc_samples, cfg.seed, e));
    return r;
}

}  // namespace wheelwalk::verify
