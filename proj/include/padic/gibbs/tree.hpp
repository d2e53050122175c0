#pragma once

// Finite levels of the rooted binary tree, heap-indexed: root = 1, the two
// successors of x are 2x and 2x+1. Level m holds 2^m vertices, so
// |V_n| = 2^(n+1) - 1. Next-nearest-neighbour pairs are the sibling pairs
// (2x, 2x+1).

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic/errors.hpp"
#include "padic/intops.hpp"

namespace padic::gibbs {

inline constexpr int kMaxTreeDepth = 12;
inline constexpr int kMaxPartitionDepth = 3;

inline int level_of(i64 vertex) { return std::bit_width(static_cast<u64>(vertex)) - 1; }
inline i64 vertex_count(int depth) { return (i64{1} << (depth + 1)) - 1; }
inline i64 level_size(int level) { return i64{1} << level; }
inline i64 level_first(int level) { return i64{1} << level; }

struct TreeLevels {
    int depth = 0;
    i64 vertices = 1;
    std::vector<std::pair<i64, i64>> edges;         // parent-child, heap order
    std::vector<std::pair<i64, i64>> sibling_pairs; // (2x, 2x+1)
};

inline TreeLevels build_levels(int n) {
    if (n < 0 || n > kMaxTreeDepth)
        throw Error(ErrorCode::DepthLimit, "tree depth must lie in [0, 12]");
    TreeLevels t;
    t.depth = n;
    t.vertices = vertex_count(n);
    for (i64 x = 1; 2 * x + 1 <= t.vertices; ++x) {
        t.edges.emplace_back(x, 2 * x);
        t.edges.emplace_back(x, 2 * x + 1);
        t.sibling_pairs.emplace_back(2 * x, 2 * x + 1);
    }
    return t;
}

// A +-1 assignment on V_n, indexed by heap index (slot 0 unused).
class SpinConfig {
public:
    SpinConfig(int depth, std::vector<int8_t> spins) : depth_(depth), spin_(std::move(spins)) {}

    static SpinConfig all_plus(int n) {
        return SpinConfig(n, std::vector<int8_t>(vertex_count(n) + 1, int8_t{1}));
    }

    // Bit i of mask (0-based) is the spin of vertex i+1; set bit = +1.
    static SpinConfig from_mask(int n, u64 mask) {
        const i64 count = vertex_count(n);
        std::vector<int8_t> s(count + 1, int8_t{1});
        for (i64 v = 1; v <= count; ++v) s[v] = (mask >> (v - 1)) & 1 ? int8_t{1} : int8_t{-1};
        return SpinConfig(n, std::move(s));
    }

    // The canonical sibling-alternating configuration: root +1, every left
    // child (even index) +1, every right child -1. Each sibling product is
    // -1, which extremizes the Hamiltonian for J > 0.
    static SpinConfig sibling_alternating(int n) {
        const i64 count = vertex_count(n);
        std::vector<int8_t> s(count + 1, int8_t{1});
        for (i64 v = 2; v <= count; ++v) s[v] = (v % 2 == 0) ? int8_t{1} : int8_t{-1};
        return SpinConfig(n, std::move(s));
    }

    static SpinConfig parse(const std::string& text) {
        i64 count = static_cast<i64>(text.size());
        int n = 0;
        while (vertex_count(n) < count) ++n;
        if (vertex_count(n) != count)
            throw Error(ErrorCode::DomainError, "spin string length must be 2^(n+1)-1");
        std::vector<int8_t> s(count + 1, int8_t{1});
        for (i64 v = 1; v <= count; ++v) {
            const char c = text[static_cast<size_t>(v - 1)];
            if (c == '+')
                s[v] = 1;
            else if (c == '-')
                s[v] = -1;
            else
                throw Error(ErrorCode::DomainError, "spin string may contain only '+' and '-'");
        }
        return SpinConfig(n, std::move(s));
    }

    int depth() const { return depth_; }
    i64 size() const { return vertex_count(depth_); }
    int at(i64 vertex) const { return spin_[static_cast<size_t>(vertex)]; }

    // Restriction to V_m, m <= depth.
    SpinConfig restricted(int m) const {
        std::vector<int8_t> s(spin_.begin(), spin_.begin() + vertex_count(m) + 1);
        return SpinConfig(m, std::move(s));
    }

    // Concatenation sigma_(n-1) v phi: this config on V_(n-1) extended by the
    // boundary assignment phi on W_n, phi given as bits of mask (set = +1).
    SpinConfig extended(u64 boundary_mask) const {
        const int n = depth_ + 1;
        std::vector<int8_t> s(spin_);
        s.resize(static_cast<size_t>(vertex_count(n)) + 1);
        for (i64 i = 0; i < level_size(n); ++i)
            s[static_cast<size_t>(level_first(n) + i)] = (boundary_mask >> i) & 1 ? int8_t{1} : int8_t{-1};
        return SpinConfig(n, std::move(s));
    }

    std::string to_string() const {
        std::string s;
        for (i64 v = 1; v <= size(); ++v) s += spin_[static_cast<size_t>(v)] > 0 ? '+' : '-';
        return s;
    }

private:
    int depth_;
    std::vector<int8_t> spin_;
};

} // namespace padic::gibbs
