#pragma once

// Shelling verification (two independent routes), restriction faces,
// shelling search, and induced shellings of links.
//
// A linear order F_1, ..., F_q of the facets is a shelling when for every
// k >= 2 the subcomplex (union of 2^{F_i}, i < k) meets 2^{F_k} in a pure
// complex of dimension dim(F_k) - 1.  The equivalent elementwise form:
// for all i < k there is j < k with F_i cap F_k  subseteq  F_j cap F_k,
// the latter a wall (codimension one face) of F_k.  We implement both and
// cross-check them whenever a Shelling object is built.

#include <optional>
#include <stdexcept>
#include <vector>

#include "shellarr/simplicial_complex.hpp"

namespace shellarr {

struct Shelling {
    SimplicialComplex complex;
    std::vector<int> order;              // step -> index into complex.facets
    std::vector<VertexSet> restriction;  // restriction face G at each step

    int steps() const { return static_cast<int>(order.size()); }
    const VertexSet& facet_at(int pos) const { return complex.facets.at(order.at(pos)); }
    const VertexSet& restriction_at(int pos) const { return restriction.at(pos); }
};

namespace detail {

inline void check_order(const SimplicialComplex& c, const std::vector<int>& order) {
    int q = static_cast<int>(c.facets.size());
    if (static_cast<int>(order.size()) != q)
        throw std::invalid_argument("facet order has wrong length");
    std::vector<char> seen(q, 0);
    for (int i : order) {
        if (i < 0 || i >= q || seen[i])
            throw std::invalid_argument("facet order is not a permutation");
        seen[i] = 1;
    }
}

// One-step condition: every earlier intersection with F_k fits inside an
// earlier wall of F_k.  Used incrementally by the search.
inline bool shelling_step_ok(const std::vector<VertexSet>& facets,
                             const std::vector<int>& order, int k) {
    const VertexSet& fk = facets[order[k]];
    int wall_size = fk.size() - 1;
    std::vector<VertexSet> walls;
    for (int j = 0; j < k; ++j) {
        VertexSet w = facets[order[j]] & fk;
        if (w.size() == wall_size) walls.push_back(w);
    }
    for (int i = 0; i < k; ++i) {
        VertexSet cut = facets[order[i]] & fk;
        if (cut.size() == wall_size) continue;
        bool covered = false;
        for (const auto& w : walls)
            if (cut.subset_of(w)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

}  // namespace detail

// route 1: elementwise wall condition
inline bool is_shelling(const SimplicialComplex& c, const std::vector<int>& order) {
    detail::check_order(c, order);
    for (int k = 1; k < static_cast<int>(order.size()); ++k)
        if (!detail::shelling_step_ok(c.facets, order, k)) return false;
    return true;
}

// route 2: straight from the definition; the complex generated by the
// earlier intersections must be pure of dimension dim(F_k) - 1
inline bool is_shelling_by_definition(const SimplicialComplex& c, const std::vector<int>& order) {
    detail::check_order(c, order);
    for (int k = 1; k < static_cast<int>(order.size()); ++k) {
        const VertexSet& fk = c.facets[order[k]];
        std::vector<VertexSet> cuts;
        for (int i = 0; i < k; ++i) cuts.push_back(c.facets[order[i]] & fk);
        // maximal elements generate; purity means they all are walls
        for (std::size_t a = 0; a < cuts.size(); ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < cuts.size(); ++b)
                if (a != b && cuts[a].subset_of(cuts[b]) && !(cuts[a] == cuts[b])) {
                    maximal = false;
                    break;
                }
            if (maximal && cuts[a].size() != fk.size() - 1) return false;
        }
    }
    return true;
}

// both routes, which must agree
inline bool is_shelling_checked(const SimplicialComplex& c, const std::vector<int>& order) {
    bool a = is_shelling(c, order);
    bool b = is_shelling_by_definition(c, order);
    if (a != b) throw std::logic_error("shelling checkers disagree; this is a bug");
    return a;
}

// G_1 = F_1; for later steps G_k is the intersection of the walls of F_k
// already present in the earlier subcomplex (all of F_k when none is).
// Equivalently F_k minus the vertices whose opposite wall is old, so the
// intervals [F_k - G_k, F_k] partition the faces, 2^{|G_k|} faces apiece.
inline std::vector<VertexSet> restriction_faces(const SimplicialComplex& c,
                                                const std::vector<int>& order) {
    detail::check_order(c, order);
    std::vector<VertexSet> out;
    out.reserve(order.size());
    for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        const VertexSet& fk = c.facets[order[k]];
        VertexSet g = fk;
        fk.for_each([&](int x) {
            VertexSet wall = fk.without(x);
            for (int j = 0; j < k; ++j)
                if (wall.subset_of(c.facets[order[j]])) {
                    g.erase(x);
                    return;
                }
        });
        out.push_back(g);
    }
    return out;
}

inline const std::vector<VertexSet>& restriction_faces(const Shelling& s) {
    return s.restriction;
}

inline Shelling make_shelling(const SimplicialComplex& c, std::vector<int> order) {
    if (!is_shelling_checked(c, order))
        throw std::invalid_argument("facet order is not a shelling");
    Shelling s;
    s.complex = c;
    s.restriction = restriction_faces(c, order);
    s.order = std::move(order);
    return s;
}

// convenience: give the shelling by listing the facets themselves
inline Shelling make_shelling_from_facets(const SimplicialComplex& c,
                                          const std::vector<VertexSet>& seq) {
    std::vector<int> order;
    for (const auto& f : seq) {
        auto it = std::find(c.facets.begin(), c.facets.end(), f);
        if (it == c.facets.end())
            throw std::invalid_argument("shelling sequence lists a non-facet");
        order.push_back(static_cast<int>(it - c.facets.begin()));
    }
    return make_shelling(c, std::move(order));
}

// complete backtracking search; facets are tried in storage order (size
// descending, then lexicographic), so the first order found is the
// lexicographically first shelling under that ranking
inline std::optional<Shelling> find_shelling(const SimplicialComplex& c) {
    int q = static_cast<int>(c.facets.size());
    if (q == 0) return std::nullopt;
    std::vector<int> order;
    std::vector<char> used(q, 0);
    order.reserve(q);

    auto dfs = [&](auto&& self) -> bool {
        int k = static_cast<int>(order.size());
        if (k == q) return true;
        for (int i = 0; i < q; ++i) {
            if (used[i]) continue;
            order.push_back(i);
            if (k == 0 || detail::shelling_step_ok(c.facets, order, k)) {
                used[i] = 1;
                if (self(self)) return true;
                used[i] = 0;
            }
            order.pop_back();
        }
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;
    return make_shelling(c, order);
}

// induced shelling of a link: keep the facets containing the face, in the
// same relative order, and drop the face from each
inline Shelling link_shelling(const Shelling& s, const VertexSet& face) {
    if (!s.complex.contains_face(face)) throw std::invalid_argument("link: not a face");
    SimplicialComplex lk = link(s.complex, face);
    std::vector<VertexSet> seq;
    for (int pos = 0; pos < s.steps(); ++pos)
        if (face.subset_of(s.facet_at(pos))) seq.push_back(s.facet_at(pos) - face);
    return make_shelling_from_facets(lk, seq);
}

}  // namespace shellarr
