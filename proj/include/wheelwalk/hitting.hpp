#pragma once

/**
 * @file hitting.hpp
 * @brief Average hitting times h(W_N^D; 0, l) of the simple random walk.
 *
 * The walk starts at Cycle(0), steps to each of its three out-neighbours with
 * probability 1/3 and stops on reaching Cycle(l) or the hub. Four routes
 * compute the same exact values:
 *
 *  - closed_form:   odd N:  3 (F_N - F_{N-2l}) / F_N
 *                   even N: 3 (L_N - L_{N-2l}) / L_N
 *  - solve_reduced: L' h = 3 1 on the (N-1)-square tridiagonal system
 *  - solve_folded:  H_N h' = 3 1 after folding h(0, l) = h(0, N - l)
 *  - via_inverse:   h' = 3 G_N 1 with G_N = H_N^{-1} written entrywise in
 *                   Fibonacci and Lucas numbers (see inverse_entry)
 *
 * Targets l > floor(N/2) are folded to N - l where a route needs it.
 */

#include "matrix.hpp"
#include "number.hpp"
#include "sequences.hpp"
#include "wheel.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wheelwalk::hitting {

enum class Method { closed_form, solve_reduced, solve_folded, via_inverse };

inline std::string_view method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::solve_reduced: return "solve_reduced";
        case Method::solve_folded: return "solve_folded";
        case Method::via_inverse: return "via_inverse";
    }
    return "unknown";
}

struct HittingQuery {
    std::int64_t n = 3;
    std::int64_t ell = 1;

    /// Throws DomainError unless N >= 3 and 1 <= l <= N-1.
    void validate() const {
        require_wheel_size(n);
        if (ell < 1 || ell > n - 1)
            throw DomainError("target l must satisfy 1 <= l <= N-1, got l = " + std::to_string(ell) +
                              " for N = " + std::to_string(n));
    }

    /// min(l, N - l): the position of this target inside the folded system.
    [[nodiscard]] std::int64_t folded_ell() const { return ell > n / 2 ? n - ell : ell; }
};

struct HittingResult {
    HittingQuery query;
    Rational value;
    Method method = Method::closed_form;
};

/// h(W_N^D; 0, l) from the closed form.
inline Rational closed_form(const HittingQuery& q) {
    q.validate();
    const std::int64_t ell = q.folded_ell();
    const std::int64_t n = q.n;
    const Integer total = (n % 2 == 1) ? seq::fib(n) : seq::lucas(n);
    const Integer rest = (n % 2 == 1) ? seq::fib(n - 2 * ell) : seq::lucas(n - 2 * ell);
    return make_rational(3 * (total - rest), total);
}

inline Rational closed_form(std::int64_t n, std::int64_t ell) { return closed_form(HittingQuery{n, ell}); }

/// Solution of L' h = 3 1; entry l-1 holds h(0, l) for l = 1..N-1.
inline RationalVector solve_reduced(std::int64_t n) {
    const ExactMatrix m = reduced_matrix(n);
    return linalg::solve(m, RationalVector(m.rows(), Rational(3)));
}

/// Solution of H_N h' = 3 1; entry l-1 holds h(0, l) for l = 1..floor(N/2).
inline RationalVector solve_folded(std::int64_t n) {
    const ExactMatrix m = folded_matrix(n);
    return linalg::solve(m, RationalVector(m.rows(), Rational(3)));
}

namespace detail {

inline void check_inverse_index(std::int64_t n, std::int64_t i, std::int64_t j) {
    require_wheel_size(n);
    const std::int64_t half = n / 2;
    if (i < 1 || i > half || j < 1 || j > half)
        throw DomainError("inverse entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") outside 1.." + std::to_string(half) + " for N = " + std::to_string(n));
}

// Numerator of (H_N^{-1})_{ij} over the common denominator F_N (odd N) or
// L_N (even N). `fib_at` / `lucas_at` map an index to the sequence value.
template <typename FibAt, typename LucasAt>
Integer inverse_numerator(std::int64_t n, std::int64_t i, std::int64_t j, FibAt&& fib_at, LucasAt&& lucas_at) {
    const std::int64_t half = n / 2;
    if (n % 2 == 1) {
        return i > j ? fib_at(n - 2 * i) * fib_at(2 * j) : fib_at(n - 2 * j) * fib_at(2 * i);
    }
    if (i > j) return lucas_at(n - 2 * i) * fib_at(2 * j);
    if (j != half) return lucas_at(n - 2 * j) * fib_at(2 * i);
    return lucas_at(1) * fib_at(2 * i);
}

}  // namespace detail

/**
 * (H_N^{-1})_{ij}, 1-based, from the explicit formulas:
 *
 *   odd N:  (1/F_N) * { F_{N-2i} F_{2j}  if i > j
 *                     { F_{N-2j} F_{2i}  if i <= j
 *
 *   even N: (1/L_N) * { L_{N-2i} F_{2j}  if i > j
 *                     { L_{N-2j} F_{2i}  if i <= j, j != n
 *                     { L_1 F_{2i}       if i <= j, j == n
 */
inline Rational inverse_entry(std::int64_t n, std::int64_t i, std::int64_t j) {
    detail::check_inverse_index(n, i, j);
    const Integer num = detail::inverse_numerator(
        n, i, j, [](std::int64_t k) { return seq::fib(k); }, [](std::int64_t k) { return seq::lucas(k); });
    return make_rational(num, n % 2 == 1 ? seq::fib(n) : seq::lucas(n));
}

/// G_N assembled from inverse_entry (using precomputed sequence tables).
inline ExactMatrix folded_inverse(std::int64_t n) {
    require_wheel_size(n);
    const auto fibs = seq::fib_table(n);
    const auto lucs = seq::lucas_table(n);
    auto fib_at = [&](std::int64_t k) -> const Integer& { return fibs[static_cast<std::size_t>(k)]; };
    auto lucas_at = [&](std::int64_t k) -> const Integer& { return lucs[static_cast<std::size_t>(k)]; };
    const Integer& den = n % 2 == 1 ? fib_at(n) : lucas_at(n);

    const std::int64_t half = n / 2;
    ExactMatrix g(static_cast<std::size_t>(half), static_cast<std::size_t>(half));
    for (std::int64_t i = 1; i <= half; ++i)
        for (std::int64_t j = 1; j <= half; ++j)
            g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                make_rational(detail::inverse_numerator(n, i, j, fib_at, lucas_at), den);
    return g;
}

/// h' = 3 G_N 1; entry l-1 holds h(0, l) for l = 1..floor(N/2).
inline RationalVector via_inverse(std::int64_t n) {
    const ExactMatrix g = folded_inverse(n);
    RationalVector h(g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Rational sum = 0;
        for (const auto& v : g.row(i)) sum += v;
        h[i] = 3 * sum;
    }
    return h;
}

/// h(0, l) by the chosen route.
inline HittingResult hitting_time(const HittingQuery& q, Method method) {
    q.validate();
    HittingResult r{q, Rational(0), method};
    switch (method) {
        case Method::closed_form:
            r.value = closed_form(q);
            break;
        case Method::solve_reduced:
            r.value = solve_reduced(q.n)[static_cast<std::size_t>(q.ell - 1)];
            break;
        case Method::solve_folded:
            r.value = solve_folded(q.n)[static_cast<std::size_t>(q.folded_ell() - 1)];
            break;
        case Method::via_inverse:
            r.value = via_inverse(q.n)[static_cast<std::size_t>(q.folded_ell() - 1)];
            break;
    }
    return r;
}

/// h(0, l) for every l = 1..N-1, computing any linear system once.
inline std::vector<HittingResult> all_hitting_times(std::int64_t n, Method method) {
    require_wheel_size(n);
    RationalVector base;
    switch (method) {
        case Method::closed_form: break;
        case Method::solve_reduced: base = solve_reduced(n); break;
        case Method::solve_folded: base = solve_folded(n); break;
        case Method::via_inverse: base = via_inverse(n); break;
    }
    std::vector<HittingResult> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t ell = 1; ell < n; ++ell) {
        const HittingQuery q{n, ell};
        Rational v;
        if (method == Method::closed_form)
            v = closed_form(q);
        else if (method == Method::solve_reduced)
            v = base[static_cast<std::size_t>(ell - 1)];
        else
            v = base[static_cast<std::size_t>(q.folded_ell() - 1)];
        out.push_back(HittingResult{q, std::move(v), method});
    }
    return out;
}

}  // namespace wheelwalk::hitting
