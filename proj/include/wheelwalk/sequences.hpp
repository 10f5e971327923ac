#pragma once

/**
 * @file sequences.hpp
 * @brief Exact Fibonacci and Lucas numbers.
 *
 * F_0 = 0, F_1 = 1, L_0 = 2, L_1 = 1, and both obey X_{i+2} = X_{i+1} + X_i.
 * Single values come from fast doubling (O(log i) big-integer products):
 *
 *   F_{2k}   = F_k (2 F_{k+1} - F_k)        L_{2k}   = L_k^2 - 2(-1)^k
 *   F_{2k+1} = F_k^2 + F_{k+1}^2            L_{2k+1} = L_k L_{k+1} - (-1)^k
 *
 * The Lucas route never touches the Fibonacci route, so identities that mix
 * the two sequences are genuine cross-checks.
 *
 * Tables are filled by the recurrence and are what the matrix engines use
 * when they need many consecutive terms.
 */

#include "number.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wheelwalk::seq {

namespace detail {

inline void check_index(std::int64_t i) {
    if (i < 0) throw DomainError("sequence index must be non-negative, got " + std::to_string(i));
}

// (F_k, F_{k+1})
inline std::pair<Integer, Integer> fib_pair(std::uint64_t k) {
    if (k == 0) return {Integer(0), Integer(1)};
    auto [a, b] = fib_pair(k / 2);
    Integer even = a * (2 * b - a);
    Integer odd = a * a + b * b;
    if (k % 2 == 0) return {std::move(even), std::move(odd)};
    Integer next = even + odd;
    return {std::move(odd), std::move(next)};
}

// (L_k, L_{k+1})
inline std::pair<Integer, Integer> lucas_pair(std::uint64_t k) {
    if (k == 0) return {Integer(2), Integer(1)};
    auto [a, b] = lucas_pair(k / 2);
    const std::uint64_t h = k / 2;
    const long sign = (h % 2 == 0) ? 1 : -1;  // (-1)^h
    Integer even = a * a - 2 * sign;          // L_{2h}
    Integer odd = a * b - sign;               // L_{2h+1}
    if (k % 2 == 0) return {std::move(even), std::move(odd)};
    // L_{2h+2} = L_{h+1}^2 - 2(-1)^{h+1}
    Integer next = b * b + 2 * sign;
    return {std::move(odd), std::move(next)};
}

}  // namespace detail

/// F_i. Throws DomainError for i < 0.
inline Integer fib(std::int64_t i) {
    detail::check_index(i);
    return detail::fib_pair(static_cast<std::uint64_t>(i)).first;
}

/// L_i. Throws DomainError for i < 0.
inline Integer lucas(std::int64_t i) {
    detail::check_index(i);
    return detail::lucas_pair(static_cast<std::uint64_t>(i)).first;
}

/// F_0..F_max by the recurrence.
inline std::vector<Integer> fib_table(std::int64_t max) {
    detail::check_index(max);
    std::vector<Integer> t(static_cast<std::size_t>(max) + 1);
    t[0] = 0;
    if (max >= 1) t[1] = 1;
    for (std::size_t i = 2; i < t.size(); ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
}

/// L_0..L_max by the recurrence.
inline std::vector<Integer> lucas_table(std::int64_t max) {
    detail::check_index(max);
    std::vector<Integer> t(static_cast<std::size_t>(max) + 1);
    t[0] = 2;
    if (max >= 1) t[1] = 1;
    for (std::size_t i = 2; i < t.size(); ++i) t[i] = t[i - 1] + t[i - 2];
    return t;
}

}  // namespace wheelwalk::seq
