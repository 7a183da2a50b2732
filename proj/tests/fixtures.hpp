#pragma once

#include <shellarr/shellarr.hpp>

#include <map>
#include <random>
#include <vector>

namespace fx {

using namespace shellarr;

// Four facets on [5]: two triangles sharing an edge plus two hanging edges.
// Small enough to verify everything by hand, rich enough to exercise the
// nonpure machinery; used all over the suite.
inline SimplicialComplex fan5() {
    return new_complex(5, {{1, 2, 3}, {2, 3, 4}, {3, 5}, {4, 5}});
}

inline Shelling fan5_shelled() {
    return make_shelling(fan5(), {0, 1, 2, 3});
}

// Pure 4-dimensional complex on [7], listed in shelling order.  Its facets
// all miss exactly two vertices and its common intersection is empty, which
// makes it the workhorse for the last-facet correspondence tests.
inline SimplicialComplex pure7() {
    return new_complex(7, {{1, 2, 3, 6, 7},
                           {1, 2, 3, 4, 6},
                           {1, 3, 4, 6, 7},
                           {3, 4, 5, 6, 7},
                           {1, 3, 4, 5, 7},
                           {1, 4, 5, 6, 7},
                           {1, 2, 3, 4, 5}});
}

// storage is canonical (size, then lex), so the order array recovers the
// listing above
inline Shelling pure7_shelled() {
    return make_shelling(pure7(), {2, 1, 4, 6, 3, 5, 0});
}

// Nonpure complex on [8]: a 5-simplex, three triangles through vertex 7 and
// three triangles through vertex 8, in shelling order.
inline SimplicialComplex mixed8() {
    return new_complex(8, {{1, 2, 3, 4, 5, 6},
                           {1, 2, 7},
                           {2, 3, 7},
                           {1, 3, 7},
                           {4, 5, 8},
                           {5, 6, 8},
                           {4, 6, 8}});
}

inline Shelling mixed8_shelled() {
    return make_shelling(mixed8(), {0, 1, 3, 2, 4, 6, 5});
}

// Two disjoint edges; the smallest non-shellable complex in the suite.
inline SimplicialComplex two_edges() { return new_complex(4, {{1, 2}, {3, 4}}); }

// Two triangles glued at a vertex: not gallery-connected (and not shellable).
inline SimplicialComplex bowtie5() { return new_complex(5, {{1, 2, 3}, {3, 4, 5}}); }

inline VertexSet vs(std::initializer_list<int> xs) {
    VertexSet s;
    for (int x : xs) s.insert(x);
    return s;
}

inline std::map<int, long long> profile(std::initializer_list<std::pair<const int, long long>> xs) {
    return std::map<int, long long>(xs);
}

// Random facet family: antichain of distinct nonempty subsets of [n].
inline SimplicialComplex random_complex(std::mt19937& rng, int n, int max_facets) {
    std::uniform_int_distribution<int> facet_count(1, max_facets);
    std::uniform_int_distribution<int> coin(0, 1);
    int want = facet_count(rng);
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < want; ++i) {
        std::vector<int> f;
        for (int v = 1; v <= n; ++v)
            if (coin(rng)) f.push_back(v);
        if (f.empty()) f.push_back(std::uniform_int_distribution<int>(1, n)(rng));
        faces.push_back(f);
    }
    return make_complex(n, VertexSet::range(n), [&] {
        std::vector<VertexSet> out;
        for (auto& f : faces) out.push_back(VertexSet::from_vector(f));
        return out;
    }());
}

}  // namespace fx
