#pragma once

// The intersection lattice of the diagonal arrangement attached to a
// simplicial complex: one subspace per facet complement, closed under
// intersection (= join in the reverse-inclusion order), plus the ambient
// space as bottom.  Also: intervals as explicit posets and their order
// complexes.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shellarr/diagonal_subspace.hpp"
#include "shellarr/simplicial_complex.hpp"

namespace shellarr {

// one subspace per facet: equate the coordinates missed by the facet
inline std::vector<DiagonalSubspace> arrangement_of(const SimplicialComplex& c) {
    std::vector<DiagonalSubspace> out;
    out.reserve(c.facets.size());
    for (const auto& f : c.facets) {
        VertexSet bar = c.ground - f;
        if (bar.size() < 2)
            throw std::invalid_argument(
                "arrangement_of: facet complement smaller than 2 (need dim <= n-3, got a "
                "hyperplane or worse)");
        out.push_back(make_subspace(c.n, {bar}));
    }
    return out;
}

struct IntersectionLattice {
    int n = 0;
    VertexSet ground;
    std::vector<DiagonalSubspace> elements;  // [0] is the ambient space, then by codim
    std::vector<std::vector<char>> lt;       // strict order, lt[i][j] == 1 iff i < j
    std::vector<std::pair<int, int>> covers;
    std::vector<int> atoms;  // indices
    int top = 0;

    int size() const { return static_cast<int>(elements.size()); }
    bool leq(int i, int j) const { return i == j || lt[i][j]; }

    int index_of(const DiagonalSubspace& u) const {
        for (int i = 0; i < size(); ++i)
            if (elements[i] == u) return i;
        return -1;
    }
};

inline IntersectionLattice build_lattice(const SimplicialComplex& c) {
    IntersectionLattice l;
    l.n = c.n;
    l.ground = c.ground;
    std::vector<DiagonalSubspace> atoms = arrangement_of(c);

    // close the atom set under pairwise joins until stable
    std::vector<DiagonalSubspace> elems = atoms;
    auto known = [&](const DiagonalSubspace& u) {
        return std::find(elems.begin(), elems.end(), u) != elems.end();
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            DiagonalSubspace u = intersect(elems[i], elems[j]);
            if (!known(u)) elems.push_back(u);
        }
    elems.push_back(make_subspace(c.n, {}));
    std::sort(elems.begin(), elems.end(), subspace_order_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    l.elements = std::move(elems);

    int m = l.size();
    l.lt.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && subspace_leq(l.elements[i], l.elements[j]) &&
                !(l.elements[i] == l.elements[j]))
                l.lt[i][j] = 1;

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!l.lt[i][j]) continue;
            bool direct = true;
            for (int k = 0; k < m && direct; ++k)
                if (l.lt[i][k] && l.lt[k][j]) direct = false;
            if (direct) l.covers.push_back({i, j});
        }

    for (const auto& a : atoms) l.atoms.push_back(l.index_of(a));
    std::sort(l.atoms.begin(), l.atoms.end());
    l.top = l.index_of(intersect(atoms));
    return l;
}

struct MembershipResult {
    bool member = false;                       // the subspace lies in the lattice
    bool facet_intersection_criterion = false; // every block complement is an
                                               // intersection of facets (exact
                                               // test only when the complex is
                                               // gallery connected)
};

inline MembershipResult is_in_lattice(const SimplicialComplex& c, const DiagonalSubspace& u) {
    if (u.n != c.n) throw std::invalid_argument("is_in_lattice: ambient mismatch");
    MembershipResult r;

    // necessary condition: for each block, the block complement (within the
    // ground set) must equal the intersection of all facets containing it
    r.facet_intersection_criterion = true;
    for (const auto& bar : u.blocks) {
        VertexSet sigma = c.ground - bar;
        VertexSet meet = c.ground;
        bool any = false;
        for (const auto& f : c.facets)
            if (sigma.subset_of(f)) {
                meet = any ? (meet & f) : f;
                any = true;
            }
        if (!any || !(meet == sigma)) {
            r.facet_intersection_criterion = false;
            break;
        }
    }

    // actual membership: u belongs to the join closure of the atoms exactly
    // when it is the join of the atoms below it
    if (!r.facet_intersection_criterion) {
        r.member = false;  // criterion is necessary in general
        return r;
    }
    if (u.is_ambient()) {
        r.member = true;
        return r;
    }
    std::vector<DiagonalSubspace> below;
    for (const auto& a : arrangement_of(c))
        if (subspace_leq(a, u)) below.push_back(a);
    r.member = !below.empty() && intersect(below) == u;
    return r;
}

// a finite poset carved out of a lattice: elems are lattice indices
struct Poset {
    std::vector<int> elems;
    std::vector<std::vector<char>> lt;

    int size() const { return static_cast<int>(elems.size()); }
};

namespace detail {

inline Poset subposet(const IntersectionLattice& l, const std::vector<int>& keep) {
    Poset p;
    p.elems = keep;
    int m = static_cast<int>(keep.size());
    p.lt.assign(m, std::vector<char>(m, 0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && l.lt[keep[a]][keep[b]]) p.lt[a][b] = 1;
    return p;
}

}  // namespace detail

inline Poset interval(const IntersectionLattice& l, int x, int y, bool open) {
    if (!l.leq(x, y)) throw std::invalid_argument("interval: endpoints not comparable");
    std::vector<int> keep;
    for (int i = 0; i < l.size(); ++i) {
        if (open && (i == x || i == y)) continue;
        if (l.leq(x, i) && l.leq(i, y)) keep.push_back(i);
    }
    return detail::subposet(l, keep);
}

// everything strictly between bottom and top
inline Poset proper_part(const IntersectionLattice& l) {
    return interval(l, 0, l.top, true);
}

// order complex of a poset: one vertex per element (vertex i+1 <-> elems[i]),
// facets are the maximal chains
inline SimplicialComplex order_complex(const Poset& p) {
    int m = p.size();
    if (m == 0) return make_complex(0, VertexSet{}, {VertexSet{}});
    if (m > VertexSet::capacity)
        throw std::runtime_error("order_complex: poset too large for the face representation");

    // covers within the subposet
    std::vector<std::vector<int>> up(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!p.lt[a][b]) continue;
            bool direct = true;
            for (int k = 0; k < m && direct; ++k)
                if (p.lt[a][k] && p.lt[k][b]) direct = false;
            if (direct) up[a].push_back(b);
        }

    std::vector<VertexSet> chains;
    std::vector<int> path;
    auto grow = [&](auto&& self, int a) -> void {
        path.push_back(a);
        if (up[a].empty()) {
            VertexSet f;
            for (int x : path) f.insert(x + 1);
            chains.push_back(f);
        } else {
            for (int b : up[a]) self(self, b);
        }
        path.pop_back();
    };
    for (int a = 0; a < m; ++a) {
        bool minimal = true;
        for (int b = 0; b < m && minimal; ++b)
            if (p.lt[b][a]) minimal = false;
        if (minimal) grow(grow, a);
    }
    return make_complex(m, VertexSet::range(m), std::move(chains));
}

// order complex of the proper part of the whole lattice
inline SimplicialComplex order_complex(const IntersectionLattice& l) {
    return order_complex(proper_part(l));
}

// the lower interval [0-hat, h] factors as a product over the blocks of h
inline std::vector<VertexSet> lower_interval_factors(const IntersectionLattice& l,
                                                     const DiagonalSubspace& h) {
    if (l.index_of(h) < 0) throw std::invalid_argument("lower_interval_factors: not a lattice element");
    return h.blocks;
}

}  // namespace shellarr
