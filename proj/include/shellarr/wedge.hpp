#pragma once

// Wedge-of-spheres machinery for the arrangement attached to a shelled
// complex: shelling-trapped decompositions, the sphere dimension formula,
// the witness chains C_{D,w} inside lower intervals, contractibility of
// the complement after removing them, the last-facet bijection, the
// singularity-link descriptors, and the closed k-equal counting formula.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shellarr/homology.hpp"
#include "shellarr/lattice.hpp"
#include "shellarr/shelling.hpp"
#include "shellarr/upper_complex.hpp"

namespace shellarr {

// one block of a trapped decomposition: `part` is the chunk of the target
// (complement side), `pos` the shelling step of the facet that traps it
struct TrappedPair {
    VertexSet part;
    int pos = -1;
    VertexSet facet;

    friend bool operator==(const TrappedPair& a, const TrappedPair& b) {
        return a.part == b.part && a.pos == b.pos && a.facet == b.facet;
    }
};

struct ShellingTrappedDecomposition {
    std::vector<TrappedPair> pairs;  // sorted by pos ascending
    VertexSet target;                // disjoint union of the parts

    int block_count() const { return static_cast<int>(pairs.size()); }

    friend bool operator==(const ShellingTrappedDecomposition& a,
                           const ShellingTrappedDecomposition& b) {
        return a.pairs == b.pairs && a.target == b.target;
    }
};

struct OrderedSTD {
    ShellingTrappedDecomposition base;
    std::vector<int> order;  // permutation of 0..p-1 over base.pairs
};

inline void validate_std(const Shelling& s, const ShellingTrappedDecomposition& d) {
    if (d.pairs.empty()) throw std::invalid_argument("trapped decomposition: no blocks");
    const SimplicialComplex& c = s.complex;
    VertexSet seen;
    int prev_pos = -1;
    for (const TrappedPair& tp : d.pairs) {
        if (tp.pos <= prev_pos)
            throw std::invalid_argument("trapped decomposition: positions not strictly increasing");
        prev_pos = tp.pos;
        if (tp.pos >= s.steps())
            throw std::invalid_argument("trapped decomposition: position out of range");
        if (!(tp.facet == s.facet_at(tp.pos)))
            throw std::invalid_argument("trapped decomposition: facet does not match its position");
        if (tp.part.empty()) throw std::invalid_argument("trapped decomposition: empty block");
        if (seen.intersects(tp.part))
            throw std::invalid_argument("trapped decomposition: blocks overlap");
        seen = seen | tp.part;
        VertexSet fbar = c.ground - tp.facet;
        VertexSet gbar = c.ground - s.restriction_at(tp.pos);
        if (!fbar.subset_of(tp.part) || !tp.part.subset_of(gbar))
            throw std::invalid_argument("trapped decomposition: block is not trapped by its facet");
    }
    if (!(seen == d.target))
        throw std::invalid_argument("trapped decomposition: blocks do not cover the target");
}

namespace detail {

// backtracking core shared by the fixed-target and all-targets enumerations;
// the block containing the smallest unassigned element is chosen first, so
// each unordered family is produced exactly once
template <typename Emit>
void enumerate_std_impl(const Shelling& s, VertexSet remaining, bool may_skip, Emit&& emit) {
    const SimplicialComplex& c = s.complex;
    int steps = s.steps();
    std::vector<VertexSet> fbar(steps), spare(steps);
    for (int t = 0; t < steps; ++t) {
        fbar[t] = c.ground - s.facet_at(t);
        spare[t] = s.facet_at(t) - s.restriction_at(t);
    }
    std::vector<TrappedPair> cur;
    std::vector<char> used(steps, 0);
    auto rec = [&](auto&& self, VertexSet rem) -> void {
        if (rem.empty()) {
            if (!cur.empty()) emit(cur);
            return;
        }
        int anchor = rem.min_element();
        if (may_skip) self(self, rem.without(anchor));
        for (int t = 0; t < steps; ++t) {
            if (used[t] || !fbar[t].subset_of(rem)) continue;
            VertexSet base = fbar[t];
            VertexSet pool = spare[t] & rem;
            if (!base.contains(anchor)) {
                if (!pool.contains(anchor)) continue;
                base = base.with(anchor);
                pool = pool.without(anchor);
            }
            std::vector<int> opts = pool.to_vector();
            if (opts.size() >= 63)
                throw std::invalid_argument("enumerate_std: free choice set too large");
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << opts.size()); ++mask) {
                VertexSet part = base;
                for (std::size_t b = 0; b < opts.size(); ++b)
                    if (mask >> b & 1) part.insert(opts[b]);
                if (part.empty()) continue;  // block of a decomposition is nonempty
                cur.push_back({part, t, s.facet_at(t)});
                used[t] = 1;
                self(self, rem - part);
                used[t] = 0;
                cur.pop_back();
            }
        }
    };
    rec(rec, remaining);
}

inline ShellingTrappedDecomposition pack_std(std::vector<TrappedPair> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const TrappedPair& a, const TrappedPair& b) { return a.pos < b.pos; });
    ShellingTrappedDecomposition d;
    d.target = {};
    for (const TrappedPair& tp : pairs) d.target = d.target | tp.part;
    d.pairs = std::move(pairs);
    return d;
}

inline std::vector<std::vector<int>> permutations_of(int m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline long long factorial(int k) {
    if (k < 0 || k > 20) throw std::overflow_error("factorial out of long long range");
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace detail

inline std::vector<ShellingTrappedDecomposition> enumerate_std(const Shelling& s,
                                                               const VertexSet& target) {
    if (!target.subset_of(s.complex.ground))
        throw std::invalid_argument("enumerate_std: target is not within the vertex set");
    std::vector<ShellingTrappedDecomposition> out;
    detail::enumerate_std_impl(s, target, false, [&](const std::vector<TrappedPair>& pairs) {
        out.push_back(detail::pack_std(pairs));
    });
    for (const auto& d : out) validate_std(s, d);
    return out;
}

// decompositions of every subset of the vertex set at once
inline std::vector<ShellingTrappedDecomposition> enumerate_std_all(const Shelling& s) {
    std::vector<ShellingTrappedDecomposition> out;
    detail::enumerate_std_impl(s, s.complex.ground, true, [&](const std::vector<TrappedPair>& pairs) {
        out.push_back(detail::pack_std(pairs));
    });
    for (const auto& d : out) validate_std(s, d);
    return out;
}

// dimension of the spheres a decomposition contributes to the open lower
// interval below U_target; n is the ambient vertex count
inline int delta_dim(const ShellingTrappedDecomposition& d, int n) {
    int p = d.block_count();
    int sum = 0;
    for (const TrappedPair& tp : d.pairs) sum += tp.facet.size();
    return p * (2 - n) + sum + d.target.size() - 3;
}

// dimension of the spheres the same decomposition contributes to the
// singularity link of the whole arrangement
inline int link_sphere_dim(const ShellingTrappedDecomposition& d, int n) {
    int p = d.block_count();
    int sum = 0;
    for (const TrappedPair& tp : d.pairs) sum += tp.facet.size();
    return n + p * (2 - n) + sum - 2;
}

struct ProvenanceEntry {
    ShellingTrappedDecomposition decomposition;
    long long multiplicity = 0;
    int dimension = 0;
};

struct WedgeDescriptor {
    std::map<int, long long> spheres;  // dimension -> count
    std::vector<ProvenanceEntry> provenance;
};

inline HomologyProfile wedge_profile(const WedgeDescriptor& w) {
    HomologyProfile p;
    for (const auto& [dim, count] : w.spheres)
        if (count != 0) p.betti[dim] = count;
    return p;
}

inline WedgeDescriptor wedge_lower_interval(const Shelling& s, const VertexSet& target) {
    const SimplicialComplex& c = s.complex;
    if (target.size() < 2 ||
        !is_in_lattice(c, make_subspace(c.n, {target})).member)
        throw std::invalid_argument("wedge_lower_interval: target subspace is not in the lattice");
    int n = c.ground.size();
    WedgeDescriptor out;
    for (auto& d : enumerate_std(s, target)) {
        int dim = delta_dim(d, n);
        long long mult = detail::factorial(d.block_count() - 1);
        out.spheres[dim] += mult;
        out.provenance.push_back({std::move(d), mult, dim});
    }
    return out;
}

// sphere profile of the open interval below an arbitrary lattice element:
// the interval factors as a join of the single-block intervals and a sphere,
// so the per-dimension counts convolve (S^a * S^b = S^{a+b+1})
inline std::map<int, long long> wedge_lower_interval_profile(const Shelling& s,
                                                             const DiagonalSubspace& h) {
    if (h.is_ambient())
        throw std::invalid_argument("wedge_lower_interval_profile: ambient subspace has no proper lower interval");
    std::map<int, long long> acc;
    bool first = true;
    for (const VertexSet& block : h.blocks) {
        WedgeDescriptor w = wedge_lower_interval(s, block);
        if (first) {
            acc = w.spheres;
            first = false;
            continue;
        }
        std::map<int, long long> next;
        for (const auto& [a, ca] : acc)
            for (const auto& [b, cb] : w.spheres) next[a + b + 1] += ca * cb;
        acc = std::move(next);
    }
    int p = static_cast<int>(h.blocks.size());
    std::map<int, long long> out;
    for (const auto& [dim, count] : acc) out[dim + p - 1] += count;  // join with S^{p-2}
    return out;
}

// maximal chain in the partition lattice of [p] encoded by a permutation w
// of [p-1]: step j merges the block containing w(j) into the block of p
struct PartitionChain {
    int p = 0;
    std::vector<int> w;
    std::vector<std::vector<VertexSet>> partitions;  // discrete first, full block last
};

inline PartitionChain partition_chain(int p, const std::vector<int>& w) {
    if (p < 1) throw std::invalid_argument("partition_chain: p must be at least 1");
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i + 1)
            throw std::invalid_argument("partition_chain: w is not a permutation of [p-1]");
    if (static_cast<int>(w.size()) != p - 1)
        throw std::invalid_argument("partition_chain: w has the wrong length");

    PartitionChain out;
    out.p = p;
    out.w = w;
    std::vector<VertexSet> cur;
    for (int i = 1; i <= p; ++i) cur.push_back(VertexSet::of({i}));
    out.partitions.push_back(cur);
    for (int j = 0; j < p - 1; ++j) {
        auto block_of = [&](int x) {
            for (std::size_t i = 0; i < cur.size(); ++i)
                if (cur[i].contains(x)) return i;
            throw std::logic_error("partition_chain: element lost");
        };
        std::size_t a = block_of(w[j]), b = block_of(p);
        if (a == b) throw std::logic_error("partition_chain: merge would be a no-op");
        cur[std::min(a, b)] = cur[a] | cur[b];
        cur.erase(cur.begin() + static_cast<long>(std::max(a, b)));
        out.partitions.push_back(cur);
    }
    return out;
}

enum class ChainStepType { prefix, add_element, merge_blocks };

struct SaturatedChain {
    std::vector<DiagonalSubspace> elements;  // ambient space first, U_target last
    std::vector<ChainStepType> steps;        // steps[i] covers elements[i] -> elements[i+1]
    int prefix_elements = 0;                 // ambient plus the facet-subspace segment

    // the open part, a face of the order complex of (bottom, top)
    std::vector<DiagonalSubspace> proper() const {
        if (elements.size() < 2) throw std::logic_error("saturated chain too short");
        return {elements.begin() + 1, elements.end() - 1};
    }
};

inline SaturatedChain chain_CDw(const Shelling& s, const IntersectionLattice& l,
                                const ShellingTrappedDecomposition& d,
                                const std::vector<int>& w) {
    validate_std(s, d);
    const SimplicialComplex& c = s.complex;
    int p = d.block_count();
    PartitionChain pc = partition_chain(p, w);  // also validates w

    SaturatedChain out;
    std::vector<VertexSet> blocks;  // current subspace blocks, one per decomposition block
    auto snapshot = [&]() {
        std::vector<VertexSet> present;
        for (const VertexSet& b : blocks)
            if (!b.empty()) present.push_back(b);
        out.elements.push_back(present.empty() ? DiagonalSubspace{c.n, {}}
                                               : make_subspace(c.n, present));
    };

    blocks.assign(p, VertexSet{});
    snapshot();  // ambient bottom
    for (int j = p - 1; j >= 0; --j) {  // facet subspaces, last block first
        blocks[j] = c.ground - d.pairs[j].facet;
        snapshot();
        out.steps.push_back(ChainStepType::prefix);
    }
    out.prefix_elements = static_cast<int>(out.elements.size());

    for (int j = 0; j < p; ++j) {  // grow each block to its full part
        VertexSet extra = d.pairs[j].part - blocks[j];
        for (int a : extra.to_vector()) {
            blocks[j].insert(a);
            snapshot();
            out.steps.push_back(ChainStepType::add_element);
        }
    }

    // merge following the partition chain; decomposition block j tracks
    // partition element j+1
    for (int step = 1; step < static_cast<int>(pc.partitions.size()); ++step) {
        const auto& prev = pc.partitions[step - 1];
        const auto& next = pc.partitions[step];
        // the merged partition block is the one in `next` missing from `prev`
        VertexSet merged;
        for (const VertexSet& b : next)
            if (std::find(prev.begin(), prev.end(), b) == prev.end()) merged = b;
        VertexSet unioned;
        int keep = merged.min_element() - 1;
        for (int x : merged.to_vector()) {
            unioned = unioned | blocks[x - 1];
            blocks[x - 1] = {};
        }
        blocks[keep] = unioned;
        snapshot();
        out.steps.push_back(ChainStepType::merge_blocks);
    }

    if (!(out.elements.back() == make_subspace(c.n, {d.target})))
        throw std::logic_error("chain_CDw: chain does not end at the target subspace");
    for (std::size_t i = 0; i + 1 < out.elements.size(); ++i) {
        int a = l.index_of(out.elements[i]);
        int b = l.index_of(out.elements[i + 1]);
        bool covering = std::find(l.covers.begin(), l.covers.end(), std::pair<int, int>{a, b}) !=
                        l.covers.end();
        if (!covering) throw std::logic_error("chain_CDw: step is not a covering relation");
    }
    return out;
}

inline SaturatedChain chain_CDw(const Shelling& s, const ShellingTrappedDecomposition& d,
                                const std::vector<int>& w) {
    return chain_CDw(s, build_lattice(s.complex), d, w);
}

inline SimplicialComplex removed_complex(const Shelling& s, const IntersectionLattice& l,
                                         const VertexSet& target) {
    const SimplicialComplex& c = s.complex;
    if (target.size() < 2 || !is_in_lattice(c, make_subspace(c.n, {target})).member)
        throw std::invalid_argument("removed_complex: target subspace is not in the lattice");
    DiagonalSubspace top = make_subspace(c.n, {target});
    Poset open_part = interval(l, 0, l.index_of(top), true);
    SimplicialComplex oc = order_complex(open_part);

    std::unordered_map<int, int> vertex_of;  // lattice index -> order complex vertex
    for (int i = 0; i < static_cast<int>(open_part.elems.size()); ++i)
        vertex_of[open_part.elems[i]] = i + 1;

    std::vector<VertexSet> removed;
    for (const auto& d : enumerate_std(s, target))
        for (const auto& w : detail::permutations_of(d.block_count() - 1)) {
            SaturatedChain ch = chain_CDw(s, l, d, w);
            VertexSet face;
            for (const DiagonalSubspace& u : ch.proper()) face.insert(vertex_of.at(l.index_of(u)));
            bool facet = std::find(oc.facets.begin(), oc.facets.end(), face) != oc.facets.end();
            if (!facet) throw std::logic_error("removed_complex: chain is not a maximal chain");
            removed.push_back(face);
        }
    std::sort(removed.begin(), removed.end(), mask_less);
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
        throw std::logic_error("removed_complex: two witness chains coincide");

    auto is_removed = [&](const VertexSet& f) {
        return std::binary_search(removed.begin(), removed.end(), f, mask_less);
    };
    std::vector<VertexSet> keep;
    for (const VertexSet& f : oc.facets)
        if (!is_removed(f)) keep.push_back(f);
    for (const VertexSet& f : removed)
        for (int x : f.to_vector()) {
            VertexSet wall = f.without(x);
            bool maximal = true;
            for (int z : oc.ground.to_vector()) {
                if (wall.contains(z)) continue;
                VertexSet ext = wall.with(z);
                if (oc.contains_face(ext) && !is_removed(ext)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) keep.push_back(wall);
        }
    return make_complex(oc.n, oc.ground, keep, true);
}

inline SimplicialComplex removed_complex(const Shelling& s, const VertexSet& target) {
    return removed_complex(s, build_lattice(s.complex), target);
}

// ---- last-facet bijection -------------------------------------------------

struct BijectionPair {
    ShellingTrappedDecomposition lower;  // decomposition of the whole vertex set, using the last facet
    std::vector<int> lower_w;
    ShellingTrappedDecomposition upper;  // decomposition of F u {v} over the upper complex
    std::vector<int> upper_w;
};

struct LastFacetCorrespondence {
    LastFacetData data;
    std::vector<BijectionPair> pairs;
};

namespace detail {

struct UpperFacetMaps {
    // source facet index (in the source complex) -> position of its cone
    // facet in the upper shelling
    std::unordered_map<int, int> cone_pos;
    // upper facet index -> position in the upper shelling
    std::vector<int> pos_of_upper;
};

inline UpperFacetMaps upper_facet_maps(const LastFacetData& lf) {
    UpperFacetMaps m;
    int u_facets = static_cast<int>(lf.upper.complex.facets.size());
    m.pos_of_upper.assign(u_facets, -1);
    for (int step = 0; step < static_cast<int>(lf.shelling.order.size()); ++step)
        m.pos_of_upper[lf.shelling.order[step]] = step;
    for (int f = 0; f < u_facets; ++f)
        if (lf.upper.kind[f] == UpperFacetType::cone) {
            if (lf.upper.sources[f].size() != 1)
                throw std::logic_error("cone facet with ambiguous source");
            m.cone_pos[lf.upper.sources[f][0]] = m.pos_of_upper[f];
        }
    return m;
}

}  // namespace detail

// forward direction of the correspondence: (D, w) for the source complex,
// with the last facet participating, to (D~, w~) for the upper complex
inline BijectionPair std_transfer_to_upper(const Shelling& s, const LastFacetData& lf,
                                           const ShellingTrappedDecomposition& d,
                                           const std::vector<int>& w) {
    validate_std(s, d);
    const SimplicialComplex& c = s.complex;
    int last = s.steps() - 1;
    if (d.pairs.back().pos != last)
        throw std::invalid_argument("transfer: decomposition does not use the last facet");
    if (!(d.target == c.ground))
        throw std::invalid_argument("transfer: decomposition must cover the whole vertex set");
    int p = d.block_count();
    VertexSet f = s.facet_at(last);
    int v = lf.upper.fresh_vertex;
    detail::UpperFacetMaps maps = detail::upper_facet_maps(lf);
    const Shelling& us = lf.shelling;

    std::vector<TrappedPair> pairs;
    std::vector<int> w_up;
    VertexSet sigma_p = c.ground - d.pairs.back().part;
    if (!(sigma_p == f)) {
        // the last block reaches outside the last facet: its trace plus the
        // cone point is trapped by the latest wall of F it misses
        int best_pos = -1;
        for (int x : (f - sigma_p).to_vector()) {
            VertexSet wall = lf.upper.to_new(f.without(x));
            for (int uf = 0; uf < static_cast<int>(lf.upper.complex.facets.size()); ++uf)
                if (lf.upper.complex.facets[uf] == wall)
                    best_pos = std::max(best_pos, maps.pos_of_upper[uf]);
        }
        if (best_pos < 0) throw std::logic_error("transfer: no wall facet found");
        VertexSet part = lf.upper.to_new(d.pairs.back().part & f).with(v);
        pairs.push_back({part, best_pos, us.facet_at(best_pos)});
        for (int j = 0; j + 1 < p; ++j) {
            int pos = maps.cone_pos.at(s.order[d.pairs[j].pos]);
            pairs.push_back({lf.upper.to_new(d.pairs[j].part), pos, us.facet_at(pos)});
        }
        if (p >= 2) {
            w_up.push_back(w[p - 2]);
            for (int j = 0; j + 2 < p; ++j) w_up.push_back(w[j]);
        }
    } else {
        // the last block is exactly the complement of F: it disappears and
        // the cone point joins the block w(1) points at
        int k = w.at(0);
        for (int j = 0; j + 1 < p; ++j) {
            int pos = maps.cone_pos.at(s.order[d.pairs[j].pos]);
            VertexSet part = lf.upper.to_new(d.pairs[j].part);
            if (j + 1 == k) part.insert(v);
            pairs.push_back({part, pos, us.facet_at(pos)});
        }
        for (int j = 1; j + 1 < p; ++j) w_up.push_back(w[j] - (w[j] > k ? 1 : 0));
    }
    ShellingTrappedDecomposition up = detail::pack_std(std::move(pairs));
    validate_std(us, up);
    return {d, w, std::move(up), std::move(w_up)};
}

// backward direction: rebuilt from the block containing the cone point
inline BijectionPair std_transfer_from_upper(const Shelling& s, const LastFacetData& lf,
                                             const ShellingTrappedDecomposition& up,
                                             const std::vector<int>& w_up) {
    validate_std(lf.shelling, up);
    const SimplicialComplex& c = s.complex;
    int last = s.steps() - 1;
    VertexSet f = s.facet_at(last);
    int v = lf.upper.fresh_vertex;
    if (!(up.target == lf.upper.complex.ground))
        throw std::invalid_argument("transfer: upper decomposition must cover the coned facet");
    detail::UpperFacetMaps maps = detail::upper_facet_maps(lf);

    auto source_pos = [&](const TrappedPair& tp) {
        // a cone facet F~ = (F' n F) u {v} comes from the unique facet
        // F' = (F~ - v) u (ground - F) of the source complex
        VertexSet src = lf.upper.to_old(tp.facet.without(v)) | (c.ground - f);
        for (int t = 0; t < s.steps(); ++t)
            if (s.facet_at(t) == src) return t;
        throw std::logic_error("transfer: cone facet has no source facet");
    };

    std::vector<TrappedPair> pairs;
    std::vector<int> w_low;
    int p_up = up.block_count();
    int type_a_at = -1;
    for (int j = 0; j < p_up; ++j)
        if (lf.upper.kind[lf.shelling.order[up.pairs[j].pos]] == UpperFacetType::intersection) {
            if (type_a_at != -1) throw std::logic_error("transfer: two intersection-type blocks");
            type_a_at = j;
        }

    if (type_a_at != -1) {
        if (type_a_at != 0)
            throw std::logic_error("transfer: intersection-type block is not the earliest");
        const TrappedPair& head = up.pairs[0];
        if (!head.part.contains(v))
            throw std::logic_error("transfer: intersection-type block misses the cone point");
        VertexSet last_part = (c.ground - f) | lf.upper.to_old(head.part.without(v));
        for (int j = 1; j < p_up; ++j) {
            int pos = source_pos(up.pairs[j]);
            pairs.push_back({lf.upper.to_old(up.pairs[j].part), pos, s.facet_at(pos)});
        }
        pairs.push_back({last_part, last, f});
        for (std::size_t j = 1; j < w_up.size(); ++j) w_low.push_back(w_up[j]);
        if (!w_up.empty()) w_low.push_back(w_up[0]);
    } else {
        int k = -1;
        for (int j = 0; j < p_up; ++j)
            if (up.pairs[j].part.contains(v)) k = j + 1;
        if (k == -1) throw std::logic_error("transfer: cone point is in no block");
        for (int j = 0; j < p_up; ++j) {
            VertexSet part = up.pairs[j].part;
            if (j + 1 == k) part.erase(v);
            int pos = source_pos(up.pairs[j]);
            pairs.push_back({lf.upper.to_old(part), pos, s.facet_at(pos)});
        }
        pairs.push_back({c.ground - f, last, f});
        w_low.push_back(k);
        for (int x : w_up) w_low.push_back(x + (x >= k ? 1 : 0));
    }
    ShellingTrappedDecomposition low = detail::pack_std(std::move(pairs));
    validate_std(s, low);
    return {std::move(low), std::move(w_low), up, w_up};
}

// full correspondence table; asserts the two directions invert each other
// and that independent enumeration on both sides gives the same count
inline LastFacetCorrespondence std_bijection_last_facet(const Shelling& s) {
    const SimplicialComplex& c = s.complex;
    if (!c.common_intersection().empty())
        throw std::invalid_argument(
            "std_bijection_last_facet: facets must have empty common intersection");
    LastFacetCorrespondence out{last_facet_shelling(s), {}};
    int last = s.steps() - 1;

    for (const auto& d : enumerate_std(s, c.ground)) {
        if (d.pairs.back().pos != last) continue;
        for (const auto& w : detail::permutations_of(d.block_count() - 1)) {
            BijectionPair fwd = std_transfer_to_upper(s, out.data, d, w);
            BijectionPair back =
                std_transfer_from_upper(s, out.data, fwd.upper, fwd.upper_w);
            if (!(back.lower == d) || back.lower_w != w)
                throw std::logic_error("std_bijection_last_facet: roundtrip mismatch");
            out.pairs.push_back(std::move(fwd));
        }
    }

    long long upper_count = 0;
    for (const auto& d : enumerate_std(out.data.shelling, out.data.upper.complex.ground)) {
        upper_count += detail::factorial(d.block_count() - 1);
        bool found = false;
        for (const auto& bp : out.pairs)
            if (bp.upper == d) {
                found = true;
                break;
            }
        if (!found)
            throw std::logic_error("std_bijection_last_facet: upper decomposition not reached");
    }
    if (upper_count != static_cast<long long>(out.pairs.size()))
        throw std::logic_error("std_bijection_last_facet: counts differ");
    return out;
}

// ---- singularity link -----------------------------------------------------

inline WedgeDescriptor singularity_link_wedge(const Shelling& s) {
    arrangement_of(s.complex);  // surface bad inputs before any counting
    int n = s.complex.ground.size();
    WedgeDescriptor out;
    for (auto& d : enumerate_std_all(s)) {
        int dim = link_sphere_dim(d, n);
        long long mult = detail::factorial(d.block_count());
        out.spheres[dim] += mult;
        out.provenance.push_back({std::move(d), mult, dim});
    }
    return out;
}

// lattice-theoretic homology of the singularity link: one wedge summand
// per nonzero element x, the open interval below x joined with a sphere
// of the subspace dimension minus one (the join shifts degrees by dim x)
inline HomologyProfile zz_link_wedge(const IntersectionLattice& l) {
    HomologyProfile out;
    for (int i = 1; i < l.size(); ++i) {
        const DiagonalSubspace& x = l.elements[i];
        HomologyProfile part = reduced_homology(order_complex(interval(l, 0, i, true)));
        for (const auto& [deg, b] : part.betti) out.betti[deg + x.dimension()] += b;
        for (const auto& [deg, factors] : part.torsion) {
            auto& acc = out.torsion[deg + x.dimension()];
            acc.insert(acc.end(), factors.begin(), factors.end());
        }
    }
    return out;
}

inline std::vector<OrderedSTD> ordered_stds(const Shelling& s) {
    std::vector<OrderedSTD> out;
    for (const auto& d : enumerate_std_all(s)) {
        std::vector<int> idx(d.block_count());
        std::iota(idx.begin(), idx.end(), 0);
        do out.push_back({d, idx});
        while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

inline std::map<int, long long> link_betti_counts(const Shelling& s) {
    int n = s.complex.ground.size();
    std::map<int, long long> out;
    for (const OrderedSTD& o : ordered_stds(s)) out[link_sphere_dim(o.base, n)] += 1;
    return out;
}

// Alexander duality between the complement and the singularity link,
// reduced on both sides: rank in degree i equals link Betti in n - 2 - i
inline std::map<int, long long> complement_cohomology(const HomologyProfile& link, int n) {
    if (!link.torsion.empty())
        throw std::invalid_argument("complement_cohomology: link profile has torsion");
    std::map<int, long long> out;
    for (const auto& [deg, b] : link.betti)
        if (b != 0) out[n - 2 - deg] += b;
    return out;
}

// ---- closed formula for the k-equal arrangement ---------------------------

inline std::map<int, Int> bjorner_welker_count(int n, int k) {
    if (k < 3 || n < k) throw std::invalid_argument("bjorner_welker_count: need n >= k >= 3");
    auto binom = [](int a, int b) -> Int {
        if (b < 0 || a < b) return 0;
        Int r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::map<int, Int> out;
    for (int p = 1; p * k <= n; ++p) {
        int cap = n - p * k;
        // weakly increasing i_0 = 0 <= i_1 <= ... <= i_p = cap
        Int total = 0;
        std::vector<int> seq(p + 1, 0);
        auto rec = [&](auto&& self, int j) -> void {
            if (j == p) {
                if (seq[p - 1] > cap) return;
                seq[p] = cap;
                Int prod = 1;
                for (int t = 0; t < p; ++t) {
                    prod *= binom(n - t * k - seq[t] - 1, k - 1);
                    Int power = 1;
                    for (int e = 0; e < seq[t + 1] - seq[t]; ++e) power *= t + 1;
                    prod *= power;
                }
                total += prod;
                return;
            }
            for (int val = seq[j - 1]; val <= cap; ++val) {
                seq[j] = val;
                self(self, j + 1);
            }
        };
        rec(rec, 1);
        Int fact = 1;
        for (int i = 2; i < p; ++i) fact *= i;  // (p-1)!
        out[n - 3 - p * (k - 2)] += fact * total;
    }
    return out;
}

}  // namespace shellarr
