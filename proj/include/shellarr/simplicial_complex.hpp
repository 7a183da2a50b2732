#pragma once

// Finite simplicial complexes given by their facet lists.  A complex is
// stored as an antichain of faces over an explicit ground set; we keep the
// ground set separate from the vertex support because several operations
// (links, face deletion) produce complexes that do not use every ground
// element, and the ground set matters for the arrangement constructions.
//
// Two degenerate complexes show up constantly and must be kept apart:
//   void complex      -- no faces at all, facet list is empty
//   empty complex {*} -- the single face {}, facet list is { {} }

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "shellarr/vertex_set.hpp"

namespace shellarr {

struct SimplicialComplex {
    int n = 0;              // ground set is a subset of {1..n}
    VertexSet ground;
    std::vector<VertexSet> facets;  // antichain, sorted by facet_order_less

    bool is_void() const { return facets.empty(); }
    bool is_empty_complex() const { return facets.size() == 1 && facets[0].empty(); }

    // dimension of the complex; -1 for the empty complex, -2 as a sentinel
    // for the void complex
    int dim() const {
        if (is_void()) return -2;
        int d = -1;
        for (const auto& f : facets) d = std::max(d, f.size() - 1);
        return d;
    }

    // the arrangement constructions want every facet complement to have at
    // least two elements, i.e. dim <= n - 3
    bool within_arrangement_bound() const { return dim() <= n - 3; }

    bool contains_face(const VertexSet& s) const {
        for (const auto& f : facets)
            if (s.subset_of(f)) return true;
        return false;
    }

    VertexSet common_intersection() const {
        if (facets.empty()) return VertexSet{};
        VertexSet s = facets[0];
        for (const auto& f : facets) s = s & f;
        return s;
    }

    // all faces grouped by dimension: result[d+1] = faces of dim d
    // (index 0 holds the empty face when the complex is nonvoid)
    std::vector<std::vector<VertexSet>> all_faces() const {
        std::vector<std::vector<VertexSet>> out;
        if (is_void()) return out;
        std::unordered_set<VertexSet, VertexSetHash> seen;
        out.resize(dim() + 2);
        // enumerate subsets facet by facet
        for (const auto& f : facets) {
            std::vector<int> verts = f.to_vector();
            int m = static_cast<int>(verts.size());
            if (m > 24) throw std::runtime_error("all_faces: facet too large to enumerate");
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                VertexSet face;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) face.insert(verts[i]);
                if (seen.insert(face).second) out[face.size()].push_back(face);
            }
        }
        for (auto& level : out)
            std::sort(level.begin(), level.end(),
                      [](const VertexSet& a, const VertexSet& b) { return mask_less(a, b); });
        return out;
    }

    long long face_count() const {
        long long c = 0;
        for (const auto& level : all_faces()) c += static_cast<long long>(level.size());
        return c;
    }
};

namespace detail {

inline std::vector<VertexSet> normalize_facets(std::vector<VertexSet> faces) {
    std::sort(faces.begin(), faces.end(), facet_order_less);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> out;
    for (const auto& f : faces) {
        bool dominated = false;
        for (const auto& g : out)
            if (f.subset_of(g)) { dominated = true; break; }
        if (!dominated) out.push_back(f);
    }
    return out;
}

}  // namespace detail

// internal constructor: wide ground sets allowed, faces may be redundant
inline SimplicialComplex make_complex(int n, const VertexSet& ground,
                                      std::vector<VertexSet> faces, bool allow_void = false) {
    if (n < 0 || n > VertexSet::capacity) throw std::invalid_argument("make_complex: bad n");
    SimplicialComplex c;
    c.n = n;
    c.ground = ground;
    if (!ground.subset_of(VertexSet::range(n)))
        throw std::invalid_argument("make_complex: ground not within {1..n}");
    for (const auto& f : faces)
        if (!f.subset_of(ground))
            throw std::invalid_argument("make_complex: facet outside ground set");
    c.facets = detail::normalize_facets(std::move(faces));
    if (c.facets.empty() && !allow_void)
        throw std::invalid_argument("make_complex: no facets given");
    return c;
}

// user-facing constructor over the full ground set {1..n}
inline SimplicialComplex new_complex(int n, const std::vector<std::vector<int>>& facets) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("new_complex: ground size must be in 1..64");
    if (facets.empty()) throw std::invalid_argument("new_complex: facet list is empty");
    std::vector<VertexSet> vs;
    vs.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("new_complex: empty facet in input");
        vs.push_back(VertexSet::from_vector(f));
    }
    return make_complex(n, VertexSet::range(n), std::move(vs));
}

// link of a face; vertex labels are preserved, ground shrinks accordingly
inline SimplicialComplex link(const SimplicialComplex& c, const VertexSet& s) {
    if (!c.contains_face(s)) throw std::invalid_argument("link: not a face");
    std::vector<VertexSet> faces;
    for (const auto& f : c.facets)
        if (s.subset_of(f)) faces.push_back(f - s);
    return make_complex(c.n, c.ground - s, std::move(faces));
}

// Two facets are adjacent when their intersection is a wall of at least
// one of them (codimension one in F or in F').  The complex is gallery
// connected when the facet adjacency graph is connected.
inline bool is_gallery_connected(const SimplicialComplex& c) {
    int m = static_cast<int>(c.facets.size());
    if (m == 0) return false;
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < m; ++j) {
            if (seen[j]) continue;
            int common = (c.facets[i] & c.facets[j]).size();
            if (common == c.facets[i].size() - 1 || common == c.facets[j].size() - 1) {
                seen[j] = 1;
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == m;
}

}  // namespace shellarr
