#pragma once

// Rank-3 matroids given by explicit basis lists, and the "every permutation
// of the ground set has a consecutive basis triple" property (DJS), decided
// both by pruned exhaustive scan and by the closed-form criteria for the
// no-parallel, no-3-circuit and shifted families.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "shellarr/simplicial_complex.hpp"

namespace shellarr {

struct Rank3Matroid {
    int n = 0;
    VertexSet ground;
    std::vector<VertexSet> bases;  // 3-subsets, sorted by mask, distinct

    bool is_basis(const VertexSet& t) const {
        return std::binary_search(bases.begin(), bases.end(), t, mask_less);
    }
};

inline Rank3Matroid make_matroid(int n, std::vector<VertexSet> bases) {
    if (n < 3 || n > 64) throw std::invalid_argument("matroid: need 3 <= n <= 64");
    if (bases.empty()) throw std::invalid_argument("matroid: no bases");
    VertexSet ground = VertexSet::range(n);
    for (const VertexSet& b : bases) {
        if (b.size() != 3) throw std::invalid_argument("matroid: basis is not a 3-subset");
        if (!b.subset_of(ground)) throw std::invalid_argument("matroid: basis leaves the ground set");
    }
    std::sort(bases.begin(), bases.end(), mask_less);
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

    Rank3Matroid m{n, ground, std::move(bases)};
    for (const VertexSet& b1 : m.bases)
        for (const VertexSet& b2 : m.bases)
            for (int x : (b1 - b2).to_vector()) {
                bool ok = false;
                for (int y : (b2 - b1).to_vector())
                    if (m.is_basis(b1.without(x).with(y))) {
                        ok = true;
                        break;
                    }
                if (!ok) throw std::invalid_argument("matroid: basis exchange axiom fails");
            }
    return m;
}

inline Rank3Matroid make_matroid(int n, const std::vector<std::vector<int>>& bases) {
    std::vector<VertexSet> bs;
    bs.reserve(bases.size());
    for (const auto& b : bases) bs.push_back(VertexSet::from_vector(b));
    return make_matroid(n, std::move(bs));
}

struct ParallelData {
    std::vector<VertexSet> classes;  // parallel classes with >= 2 elements
    VertexSet singletons;            // non-loops parallel to nothing else
    VertexSet loops;                 // elements in no basis
};

inline ParallelData parallel_classes(const Rank3Matroid& m) {
    VertexSet in_some;
    for (const VertexSet& b : m.bases) in_some = in_some | b;
    ParallelData out;
    out.loops = m.ground - in_some;

    std::vector<int> elems = in_some.to_vector();
    auto parallel = [&](int x, int y) {
        for (const VertexSet& b : m.bases)
            if (b.contains(x) && b.contains(y)) return false;
        return true;
    };
    VertexSet assigned;
    for (int x : elems) {
        if (assigned.contains(x)) continue;
        VertexSet cls = VertexSet::of({x});
        for (int y : elems)
            if (y != x && parallel(x, y)) cls.insert(y);
        // parallelism must be an equivalence on non-loops; check the class
        for (int a : cls.to_vector())
            for (int b : cls.to_vector())
                if (a < b && !parallel(a, b))
                    throw std::logic_error("parallel_classes: relation is not transitive");
        assigned = assigned | cls;
        if (cls.size() >= 2)
            out.classes.push_back(cls);
        else
            out.singletons.insert(x);
    }
    return out;
}

struct DjsResult {
    bool djs = false;
    std::optional<std::vector<int>> witness;  // violating permutation if !djs
};

// exhaustive scan over permutations of the non-loop elements, lexicographic,
// pruning any prefix whose last three entries already form a basis (such a
// permutation satisfies the property no matter how it continues); a violating
// permutation and its reversal stand or fall together, so only candidates
// with first entry < last entry are accepted, which never skips the
// lexicographically least violator
inline DjsResult is_djs_bruteforce(const Rank3Matroid& m) {
    std::vector<int> elems = (m.ground - parallel_classes(m).loops).to_vector();
    int cnt = static_cast<int>(elems.size());
    if (cnt < 3) throw std::invalid_argument("is_djs_bruteforce: fewer than three non-loops");
    if (cnt > 12) throw std::invalid_argument("is_djs_bruteforce: too many elements to scan");

    std::vector<int> perm;
    std::vector<char> used(cnt, 0);
    std::optional<std::vector<int>> witness;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(perm.size()) == cnt) {
            if (perm.front() > perm.back()) return false;  // reversal covers it
            witness = perm;
            return true;
        }
        for (int i = 0; i < cnt; ++i) {
            if (used[i]) continue;
            if (perm.empty() && elems[i] == elems[cnt - 1]) continue;  // w1 would exceed wn
            perm.push_back(elems[i]);
            used[i] = 1;
            bool satisfied =
                perm.size() >= 3 &&
                m.is_basis(VertexSet::of({perm[perm.size() - 3], perm[perm.size() - 2], perm.back()}));
            if (!satisfied && self(self)) return true;
            used[i] = 0;
            perm.pop_back();
        }
        return false;
    };
    if (rec(rec)) return {false, witness};
    return {true, std::nullopt};
}

struct ShiftedIndex {
    int n = 0;
    int a = 0, b = 0, c = 0;
};

inline Rank3Matroid shifted_matroid(const ShiftedIndex& idx) {
    if (!(1 <= idx.a && idx.a < idx.b && idx.b < idx.c && idx.c <= idx.n))
        throw std::invalid_argument("shifted_matroid: need 1 <= a < b < c <= n");
    std::vector<VertexSet> bases;
    for (int x = 1; x <= idx.a; ++x)
        for (int y = x + 1; y <= idx.b; ++y)
            for (int z = y + 1; z <= idx.c; ++z) bases.push_back(VertexSet::of({x, y, z}));
    if (bases.empty()) throw std::invalid_argument("shifted_matroid: empty basis set");
    return make_matroid(idx.n, std::move(bases));
}

// a shifted basis system is determined by the componentwise-largest basis
inline std::optional<ShiftedIndex> detect_shifted_index(const Rank3Matroid& m) {
    int a = 0, b = 0, c = 0;
    for (const VertexSet& basis : m.bases) {
        std::vector<int> t = basis.to_vector();
        a = std::max(a, t[0]);
        b = std::max(b, t[1]);
        c = std::max(c, t[2]);
    }
    if (!(a < b && b < c)) return std::nullopt;
    ShiftedIndex idx{m.n, a, b, c};
    Rank3Matroid probe = shifted_matroid(idx);
    if (probe.bases == m.bases) return idx;
    return std::nullopt;
}

enum class DjsCriterion { no_parallel, no_three_circuits, shifted, none };

struct CriteriaResult {
    DjsCriterion criterion = DjsCriterion::none;
    std::optional<bool> djs;
    std::optional<ShiftedIndex> shifted;
};

namespace detail {

// a 3-circuit is a dependent triple whose pairs are all independent, i.e. a
// pairwise-nonparallel non-loop triple that is not a basis
inline bool has_three_circuit(const Rank3Matroid& m, const ParallelData& pd) {
    std::vector<int> elems = (m.ground - pd.loops).to_vector();
    auto class_of = [&](int x) -> int {
        for (std::size_t i = 0; i < pd.classes.size(); ++i)
            if (pd.classes[i].contains(x)) return static_cast<int>(i);
        return -1 - x;  // singletons are their own class
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (class_of(elems[i]) == class_of(elems[j])) continue;
            for (std::size_t k = j + 1; k < elems.size(); ++k) {
                if (class_of(elems[k]) == class_of(elems[i]) ||
                    class_of(elems[k]) == class_of(elems[j]))
                    continue;
                if (!m.is_basis(VertexSet::of({elems[i], elems[j], elems[k]}))) return true;
            }
        }
    return false;
}

}  // namespace detail

inline CriteriaResult is_djs_criteria(const Rank3Matroid& m) {
    ParallelData pd = parallel_classes(m);
    if (pd.classes.empty()) return {DjsCriterion::no_parallel, true, std::nullopt};
    if (!detail::has_three_circuit(m, pd)) {
        long long lhs = 0;
        for (const VertexSet& p : pd.classes) lhs += p.size() / 2;
        lhs -= static_cast<long long>(pd.classes.size());
        bool djs = lhs < static_cast<long long>(pd.singletons.size()) - 2;
        return {DjsCriterion::no_three_circuits, djs, std::nullopt};
    }
    if (auto idx = detect_shifted_index(m)) {
        bool djs = (idx->c - idx->b) / 2 < idx->a;
        return {DjsCriterion::shifted, djs, idx};
    }
    return {DjsCriterion::none, std::nullopt, std::nullopt};
}

// complements of the bases: the independence complex of the dual matroid
inline SimplicialComplex dual_independence_complex(const Rank3Matroid& m) {
    std::vector<VertexSet> facets;
    facets.reserve(m.bases.size());
    for (const VertexSet& b : m.bases) facets.push_back(m.ground - b);
    return make_complex(m.n, m.ground, facets, false);
}

}  // namespace shellarr
