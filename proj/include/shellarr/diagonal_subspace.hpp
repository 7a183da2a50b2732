#pragma once

// Diagonal subspaces of R^n: a subspace is described by a partial partition
// of [n] into disjoint blocks of size >= 2, one block per group of equated
// coordinates.  No blocks at all means the whole space.  The arrangement
// order is reverse inclusion of subspaces, which for partial partitions is
// exactly blockwise refinement.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "shellarr/vertex_set.hpp"

namespace shellarr {

struct DiagonalSubspace {
    int n = 0;                      // ambient dimension
    std::vector<VertexSet> blocks;  // disjoint, each >= 2 elements, sorted by min element

    int codim() const {
        int c = 0;
        for (const auto& b : blocks) c += b.size() - 1;
        return c;
    }
    int dimension() const { return n - codim(); }
    bool is_ambient() const { return blocks.empty(); }  // 0-hat

    VertexSet support() const {
        VertexSet s;
        for (const auto& b : blocks) s = s | b;
        return s;
    }

    friend bool operator==(const DiagonalSubspace& a, const DiagonalSubspace& b) = default;
};

inline DiagonalSubspace make_subspace(int n, std::vector<VertexSet> blocks) {
    if (n < 0 || n > VertexSet::capacity) throw std::invalid_argument("make_subspace: bad n");
    VertexSet seen;
    for (const auto& b : blocks) {
        if (b.size() < 2) throw std::invalid_argument("make_subspace: block of size < 2");
        if (!b.subset_of(VertexSet::range(n)))
            throw std::invalid_argument("make_subspace: block outside ambient [n]");
        if (seen.intersects(b)) throw std::invalid_argument("make_subspace: blocks overlap");
        seen = seen | b;
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min_element() < b.min_element(); });
    return DiagonalSubspace{n, std::move(blocks)};
}

// u <= v: u's subspace contains v's, i.e. every block of u sits inside a
// block of v (equating fewer coordinates gives the bigger subspace)
inline bool subspace_leq(const DiagonalSubspace& u, const DiagonalSubspace& v) {
    if (u.n != v.n) throw std::invalid_argument("subspace_leq: ambient mismatch");
    for (const auto& bu : u.blocks) {
        bool placed = false;
        for (const auto& bv : v.blocks)
            if (bu.subset_of(bv)) { placed = true; break; }
        if (!placed) return false;
    }
    return true;
}

// intersection of subspaces: collect all blocks, then merge transitively
// while any two overlap; blocks only ever grow, so none can drop below
// size 2
inline DiagonalSubspace intersect(const std::vector<DiagonalSubspace>& us) {
    if (us.empty()) throw std::invalid_argument("intersect: ambient dimension unknown for empty input");
    int n = us[0].n;
    std::vector<VertexSet> pool;
    for (const auto& u : us) {
        if (u.n != n) throw std::invalid_argument("intersect: ambient mismatch");
        pool.insert(pool.end(), u.blocks.begin(), u.blocks.end());
    }
    std::vector<VertexSet> merged;
    for (auto b : pool) {
        for (auto it = merged.begin(); it != merged.end();) {
            if (b.intersects(*it)) {
                b = b | *it;
                it = merged.erase(it);
            } else {
                ++it;
            }
        }
        merged.push_back(b);
    }
    return make_subspace(n, std::move(merged));
}

inline DiagonalSubspace intersect(const DiagonalSubspace& a, const DiagonalSubspace& b) {
    return intersect(std::vector<DiagonalSubspace>{a, b});
}

// "23/45" style label; the ambient space is "0"
inline std::string to_label(const DiagonalSubspace& u) {
    if (u.is_ambient()) return "0";
    std::string out;
    for (std::size_t i = 0; i < u.blocks.size(); ++i) {
        if (i) out += '/';
        out += to_label(u.blocks[i]);
    }
    return out;
}

// canonical order for storing lattice elements: fewer merges first
inline bool subspace_order_less(const DiagonalSubspace& a, const DiagonalSubspace& b) {
    if (a.codim() != b.codim()) return a.codim() < b.codim();
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        if (a.blocks[i] == b.blocks[i]) continue;
        return set_lex_less(a.blocks[i], b.blocks[i]);
    }
    return false;
}

}  // namespace shellarr
