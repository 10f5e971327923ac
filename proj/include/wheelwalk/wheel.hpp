#pragma once

/**
 * @file wheel.hpp
 * @brief The directed wheel W_N^D and its matrices.
 *
 * W_N^D is an N-cycle whose edges run both ways, plus a hub that receives an
 * edge from every cycle vertex and emits none. Matrix rows and columns are
 * ordered Cycle(0), ..., Cycle(N-1), Hub.
 *
 * Documentation below quotes matrix positions 1-based, (i, j); the API is
 * 0-based.
 */

#include "matrix.hpp"
#include "number.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wheelwalk {

/// A vertex of W_N^D: either Cycle(k) or the absorbing Hub.
class VertexId {
public:
    static VertexId hub() noexcept { return VertexId(); }
    static VertexId cycle(std::int64_t k) noexcept { return VertexId(k); }

    [[nodiscard]] bool is_hub() const noexcept { return !cycle_.has_value(); }
    /// Cycle position; only meaningful when !is_hub().
    [[nodiscard]] std::int64_t cycle_index() const { return cycle_.value(); }

    friend bool operator==(const VertexId&, const VertexId&) = default;

    /// "hub" or "cycle:<k>"
    [[nodiscard]] std::string str() const {
        return is_hub() ? std::string("hub") : "cycle:" + std::to_string(*cycle_);
    }

    /// Parses "hub" or "cycle:<k>". The cycle index is not range-checked here.
    static VertexId parse(std::string_view text) {
        if (text == "hub") return hub();
        constexpr std::string_view prefix = "cycle:";
        if (text.substr(0, prefix.size()) == prefix && text.size() > prefix.size()) {
            const std::string digits(text.substr(prefix.size()));
            std::size_t used = 0;
            long long k = 0;
            try {
                k = std::stoll(digits, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == digits.size() && k >= 0) return cycle(k);
        }
        throw DomainError("vertex must be 'hub' or 'cycle:<k>', got '" + std::string(text) + "'");
    }

private:
    VertexId() = default;
    explicit VertexId(std::int64_t k) : cycle_(k) {}

    std::optional<std::int64_t> cycle_;
};

inline void require_wheel_size(std::int64_t n) {
    if (n < 3) throw DomainError("wheel needs N >= 3, got N = " + std::to_string(n));
}

/// W_N^D with positive integer edge weights (default 1).
class DirectedWheel {
public:
    explicit DirectedWheel(std::int64_t n)
        : n_(checked(n)),
          to_next_(static_cast<std::size_t>(n), Integer(1)),
          to_prev_(static_cast<std::size_t>(n), Integer(1)),
          to_hub_(static_cast<std::size_t>(n), Integer(1)) {}

    [[nodiscard]] std::int64_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(n_) + 1; }

    /// Matrix row/column of v.
    [[nodiscard]] std::size_t index_of(const VertexId& v) const {
        require_vertex(v);
        return v.is_hub() ? static_cast<std::size_t>(n_) : static_cast<std::size_t>(v.cycle_index());
    }

    [[nodiscard]] VertexId vertex_at(std::size_t idx) const {
        if (idx > static_cast<std::size_t>(n_)) throw DomainError("vertex index out of range");
        return idx == static_cast<std::size_t>(n_) ? VertexId::hub()
                                                   : VertexId::cycle(static_cast<std::int64_t>(idx));
    }

    [[nodiscard]] bool contains(const VertexId& v) const noexcept {
        return v.is_hub() || (v.cycle_index() >= 0 && v.cycle_index() < n_);
    }

    [[nodiscard]] bool has_edge(const VertexId& tail, const VertexId& head) const {
        return slot(tail, head) != nullptr;
    }

    /// a(tail, head); 0 when the edge does not exist.
    [[nodiscard]] Integer weight(const VertexId& tail, const VertexId& head) const {
        const Integer* w = slot(tail, head);
        return w ? *w : Integer(0);
    }

    void set_weight(const VertexId& tail, const VertexId& head, const Integer& w) {
        if (w <= 0) throw DomainError("edge weights must be positive");
        const auto where = locate(tail, head);
        if (!where) throw DomainError("no edge " + tail.str() + " -> " + head.str() + " in W_N^D");
        column(where->first)[where->second] = w;
    }

    /// Out-neighbours of v (empty for the hub).
    [[nodiscard]] std::vector<VertexId> successors(const VertexId& v) const {
        require_vertex(v);
        if (v.is_hub()) return {};
        const auto k = v.cycle_index();
        return {VertexId::cycle(wrap(k - 1)), VertexId::cycle(wrap(k + 1)), VertexId::hub()};
    }

    /// In-neighbours of v.
    [[nodiscard]] std::vector<VertexId> predecessors(const VertexId& v) const {
        require_vertex(v);
        std::vector<VertexId> out;
        if (v.is_hub()) {
            for (std::int64_t k = 0; k < n_; ++k) out.push_back(VertexId::cycle(k));
        } else {
            const auto k = v.cycle_index();
            out = {VertexId::cycle(wrap(k - 1)), VertexId::cycle(wrap(k + 1))};
        }
        return out;
    }

    /// Weighted adjacency matrix A, A(i, j) = a_ij.
    [[nodiscard]] ExactMatrix adjacency() const {
        const std::size_t size = vertex_count();
        ExactMatrix a(size, size);
        for (std::size_t i = 0; i < size; ++i) {
            const VertexId tail = vertex_at(i);
            for (const auto& head : successors(tail)) a(i, index_of(head)) = Rational(weight(tail, head));
        }
        return a;
    }

private:
    static std::int64_t checked(std::int64_t n) {
        require_wheel_size(n);
        return n;
    }

    [[nodiscard]] std::int64_t wrap(std::int64_t k) const { return ((k % n_) + n_) % n_; }

    void require_vertex(const VertexId& v) const {
        if (!contains(v))
            throw DomainError("vertex " + v.str() + " is not in W_" + std::to_string(n_) + "^D");
    }

    enum class EdgeKind { next, prev, hub };

    [[nodiscard]] std::optional<std::pair<EdgeKind, std::size_t>> locate(const VertexId& tail,
                                                                        const VertexId& head) const {
        require_vertex(tail);
        require_vertex(head);
        if (tail.is_hub()) return std::nullopt;
        const auto k = static_cast<std::size_t>(tail.cycle_index());
        if (head.is_hub()) return std::pair{EdgeKind::hub, k};
        const auto h = head.cycle_index();
        if (h == wrap(tail.cycle_index() + 1)) return std::pair{EdgeKind::next, k};
        if (h == wrap(tail.cycle_index() - 1)) return std::pair{EdgeKind::prev, k};
        return std::nullopt;
    }

    std::vector<Integer>& column(EdgeKind kind) {
        switch (kind) {
            case EdgeKind::next: return to_next_;
            case EdgeKind::prev: return to_prev_;
            case EdgeKind::hub: break;
        }
        return to_hub_;
    }

    [[nodiscard]] const std::vector<Integer>& column(EdgeKind kind) const {
        switch (kind) {
            case EdgeKind::next: return to_next_;
            case EdgeKind::prev: return to_prev_;
            case EdgeKind::hub: break;
        }
        return to_hub_;
    }

    [[nodiscard]] const Integer* slot(const VertexId& tail, const VertexId& head) const {
        const auto where = locate(tail, head);
        if (!where) return nullptr;
        return &column(where->first)[where->second];
    }

    std::int64_t n_;
    std::vector<Integer> to_next_;  // Cycle(k) -> Cycle(k+1)
    std::vector<Integer> to_prev_;  // Cycle(k) -> Cycle(k-1)
    std::vector<Integer> to_hub_;   // Cycle(k) -> Hub
};

/// L = D - A with D the weighted out-degrees. The hub row is zero.
inline ExactMatrix out_laplacian(const DirectedWheel& w) {
    ExactMatrix l = Rational(-1) * w.adjacency();
    for (std::size_t i = 0; i < l.rows(); ++i) {
        Rational deg = 0;
        for (std::size_t j = 0; j < l.cols(); ++j) deg -= l(i, j);
        l(i, i) = deg;
    }
    return l;
}

/// L^ = D^ - A with D^ the weighted in-degrees (column sums of A).
inline ExactMatrix in_laplacian(const DirectedWheel& w) {
    ExactMatrix l = Rational(-1) * w.adjacency();
    for (std::size_t j = 0; j < l.cols(); ++j) {
        Rational deg = 0;
        for (std::size_t i = 0; i < l.rows(); ++i) deg -= l(i, j);
        l(j, j) = deg;
    }
    return l;
}

/// L': the (N-1)x(N-1) tridiagonal(-1; 3; -1) system for h(0, 1..N-1) on the
/// unweighted wheel.
inline ExactMatrix reduced_matrix(std::int64_t n) {
    require_wheel_size(n);
    const auto size = static_cast<std::size_t>(n - 1);
    ExactMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = 3;
        if (i + 1 < size) {
            m(i, i + 1) = -1;
            m(i + 1, i) = -1;
        }
    }
    return m;
}

/**
 * H_N: the floor(N/2)-square system for h(0, 1..floor(N/2)) after folding
 * h(0, l) = h(0, N - l).
 *
 * Odd N = 2n+1: diagonal 3 except (n, n) = 2; off-diagonals -1.
 * Even N = 2n: diagonal 3; off-diagonals -1 except (n, n-1) = -2.
 * For N = 3 the matrix is [[2]].
 */
inline ExactMatrix folded_matrix(std::int64_t n) {
    require_wheel_size(n);
    const auto size = static_cast<std::size_t>(n / 2);
    ExactMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = 3;
        if (i + 1 < size) {
            m(i, i + 1) = -1;
            m(i + 1, i) = -1;
        }
    }
    const std::size_t last = size - 1;
    if (n % 2 == 1) {
        m(last, last) = 2;
    } else if (size >= 2) {
        m(last, last - 1) = -2;
    }
    return m;
}

}  // namespace wheelwalk
