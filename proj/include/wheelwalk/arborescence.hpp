#pragma once

// Weighted counts of spanning arborescences of W_N^D.
//
// Orientation pairing (directed Matrix-Tree theorem):
//   in-trees  (every vertex has a path to the root)   <- principal minor of L
//   out-trees (root has a path to every vertex)       <- principal minor of L^
// Both use the root's own row and column, so the cofactor sign is +1.

#include "matrix.hpp"
#include "number.hpp"
#include "sequences.hpp"
#include "wheel.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wheelwalk::trees {

enum class Direction { in, out };

inline std::string_view direction_name(Direction d) { return d == Direction::in ? "in" : "out"; }

inline Direction parse_direction(std::string_view s) {
    if (s == "in") return Direction::in;
    if (s == "out") return Direction::out;
    throw DomainError("direction must be 'in' or 'out', got '" + std::string(s) + "'");
}

struct TreeQuery {
    DirectedWheel wheel;
    VertexId root = VertexId::hub();
    Direction direction = Direction::in;
};

/// Largest N accepted by enumerate().
inline constexpr std::int64_t max_enumeration_size = 10;

/// Sum of w(T) over arborescences, via the Matrix-Tree cofactor.
inline Integer count_via_cofactor(const TreeQuery& q) {
    const std::size_t r = q.wheel.index_of(q.root);
    const ExactMatrix lap = q.direction == Direction::in ? out_laplacian(q.wheel) : in_laplacian(q.wheel);
    const Rational det = linalg::minor_determinant(lap, r, r);
    // Integer matrix, so the minor is an integer.
    return det.get_num();
}

/// Unweighted in-trees rooted at the hub: L_{2N} - 2.
inline Integer in_trees_closed_form(std::int64_t n) {
    require_wheel_size(n);
    return seq::lucas(2 * n) - 2;
}

/// Unweighted out-trees: 0 at the hub, N^2 at any cycle vertex.
inline Integer out_trees_closed_form(std::int64_t n, const VertexId& root) {
    require_wheel_size(n);
    if (root.is_hub()) return 0;
    if (root.cycle_index() >= n) throw DomainError("root " + root.str() + " is not in W_" + std::to_string(n) + "^D");
    return make_integer(n) * make_integer(n);
}

/**
 * Brute-force oracle. Every non-root vertex picks one incident edge (its out
 * edge for in-trees, its in edge for out-trees); a choice is an arborescence
 * iff following the picks from any vertex reaches the root. Returns the sum
 * of products of picked edge weights. Cost is O(3^N N); throws ScaleError for
 * N > max_enumeration_size.
 */
inline Integer enumerate(const TreeQuery& q) {
    const DirectedWheel& w = q.wheel;
    if (w.n() > max_enumeration_size)
        throw ScaleError("enumeration scale exceeded: N = " + std::to_string(w.n()) + " > " +
                         std::to_string(max_enumeration_size));
    const std::size_t size = w.vertex_count();
    const std::size_t root = w.index_of(q.root);

    // options[v]: (other endpoint index, weight) for each edge v may pick.
    struct Option {
        std::size_t next;
        Integer weight;
    };
    std::vector<std::vector<Option>> options(size);
    for (std::size_t v = 0; v < size; ++v) {
        if (v == root) continue;
        const VertexId vid = w.vertex_at(v);
        if (q.direction == Direction::in) {
            for (const auto& head : w.successors(vid)) options[v].push_back({w.index_of(head), w.weight(vid, head)});
        } else {
            for (const auto& tail : w.predecessors(vid)) options[v].push_back({w.index_of(tail), w.weight(tail, vid)});
        }
        if (options[v].empty()) return 0;
    }

    std::vector<std::size_t> pick(size, 0);
    std::vector<int> state(size);  // 0 unknown, 1 on current path, 2 reaches root
    Integer total = 0;
    while (true) {
        // Check every non-root vertex reaches the root along its picks.
        std::fill(state.begin(), state.end(), 0);
        state[root] = 2;
        bool ok = true;
        std::vector<std::size_t> path;
        for (std::size_t start = 0; start < size && ok; ++start) {
            std::size_t v = start;
            path.clear();
            while (state[v] == 0) {
                state[v] = 1;
                path.push_back(v);
                v = options[v][pick[v]].next;
            }
            if (state[v] == 1) ok = false;  // closed a cycle
            for (std::size_t p : path) state[p] = 2;
        }
        if (ok) {
            Integer product = 1;
            for (std::size_t v = 0; v < size; ++v)
                if (v != root) product *= options[v][pick[v]].weight;
            total += product;
        }

        // Mixed-radix increment over the non-root vertices.
        std::size_t v = 0;
        for (; v < size; ++v) {
            if (v == root) continue;
            if (++pick[v] < options[v].size()) break;
            pick[v] = 0;
        }
        if (v == size) break;
    }
    return total;
}

}  // namespace wheelwalk::trees
