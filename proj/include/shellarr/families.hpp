#pragma once

// Generators for the two standard families: the k-equal complexes (facets
// are all (n-k)-subsets, shelled lexicographically) and Kozlov's complexes
// built from a partition of [n] into consecutive blocks plus a nondecreasing
// size function.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shellarr/shelling.hpp"

namespace shellarr {

// facets: every (n-k)-subset of [n]; the sorted facet storage order is
// already the lexicographic shelling, so the order is the identity
inline Shelling k_equal_complex(int n, int k) {
    if (k < 2 || k > n - 1)
        throw std::invalid_argument("k_equal_complex: need 2 <= k <= n-1");
    std::vector<VertexSet> facets;
    std::vector<int> pick(n - k);
    for (int i = 0; i < n - k; ++i) pick[i] = i + 1;
    while (true) {
        facets.push_back(VertexSet::from_vector(pick));
        int i = n - k - 1;
        while (i >= 0 && pick[i] == k + i + 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n - k; ++j) pick[j] = pick[j - 1] + 1;
    }
    SimplicialComplex c = make_complex(n, VertexSet::range(n), facets);
    std::vector<int> order(c.facets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    return make_shelling(c, order);
}

struct KozlovData {
    int n = 0;
    std::vector<VertexSet> blocks;  // consecutive intervals covering [n], in order
    std::vector<int> complement_size;    // target complement size per block (nondecreasing, >= 2)
};

inline void validate(const KozlovData& d) {
    if (d.n < 1 || d.blocks.empty() || d.blocks.size() != d.complement_size.size())
        throw std::invalid_argument("kozlov data: malformed");
    int next = 1;
    for (const auto& b : d.blocks) {
        if (b.empty()) throw std::invalid_argument("kozlov data: empty block");
        if (b.min_element() != next)
            throw std::invalid_argument("kozlov data: blocks must be consecutive intervals");
        if (b.size() != b.max_element() - b.min_element() + 1)
            throw std::invalid_argument("kozlov data: blocks must be intervals");
        next = b.max_element() + 1;
    }
    if (next != d.n + 1) throw std::invalid_argument("kozlov data: blocks must cover the ground set");
    int prev = 2;
    for (int v : d.complement_size) {
        if (v < prev) throw std::invalid_argument("kozlov data: size function must be nondecreasing and >= 2");
        prev = v;
    }
}

// A facet F is determined by its complement: one element e of some block
// (e = min of the complement) plus one element from each of f-1 distinct
// later blocks, where f is the size target of e's block.  Larger complements
// would hit a block twice, smaller ones miss the size condition.
inline std::pair<SimplicialComplex, Shelling> kozlov_complex(const KozlovData& d) {
    validate(d);
    int r = static_cast<int>(d.blocks.size());
    VertexSet ground = VertexSet::range(d.n);
    std::vector<VertexSet> complements;

    VertexSet partial;
    auto extend = [&](auto&& self, int block, int remaining) -> void {
        if (remaining == 0) {
            complements.push_back(partial);
            return;
        }
        if (block >= r || r - block < remaining) return;
        self(self, block + 1, remaining);  // skip this block
        d.blocks[block].for_each([&](int e) {
            partial.insert(e);
            self(self, block + 1, remaining - 1);
            partial.erase(e);
        });
    };
    for (int i = 0; i < r; ++i) {
        int f = d.complement_size[i];
        d.blocks[i].for_each([&](int e) {
            partial = VertexSet::of({e});
            extend(extend, i + 1, f - 1);
        });
    }
    if (complements.empty())
        throw std::invalid_argument("kozlov data admits no facets");

    // shelling position: lexicographic order of the complements read as
    // increasing words (no word is a prefix of another in this family)
    std::sort(complements.begin(), complements.end(), set_lex_less);
    std::vector<VertexSet> facet_seq;
    facet_seq.reserve(complements.size());
    for (const auto& s : complements) facet_seq.push_back(ground - s);

    SimplicialComplex c = make_complex(d.n, ground, facet_seq);
    if (c.facets.size() != facet_seq.size())
        throw std::logic_error("kozlov facets were expected to form an antichain");
    Shelling s = make_shelling_from_facets(c, facet_seq);
    return {c, std::move(s)};
}

}  // namespace shellarr
