#pragma once

// The auxiliary complex that models an upper interval [U_sigma-bar, 1-hat]:
// it lives on sigma plus one fresh cone vertex v.  Facets come in two kinds:
//   intersection kind: maximal F cap sigma over facets F with sigma not
//     inside F and F cup sigma != ground;
//   cone kind: (F cap sigma) cup {v} whenever F cup sigma = ground.
// Vertices are relabeled order-preservingly onto {1..|sigma|}, with v last.
// We keep, per facet, its kind and the source facets that produced it; the
// bijection machinery needs both.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shellarr/lattice.hpp"
#include "shellarr/shelling.hpp"

namespace shellarr {

enum class UpperFacetType { intersection, cone };

struct UpperComplex {
    SimplicialComplex complex;  // on {1..|sigma|+1}
    VertexSet sigma;            // original labels
    int fresh_vertex = 0;       // |sigma|+1
    std::vector<UpperFacetType> kind;       // parallel to complex.facets
    std::vector<std::vector<int>> sources;  // facet indices of the source complex, ascending

    // order-preserving relabeling sigma -> {1..|sigma|}
    std::vector<int> old_labels;  // position i (0-based) holds the old label of new label i+1

    VertexSet to_new(const VertexSet& old) const {
        VertexSet s;
        for (std::size_t i = 0; i < old_labels.size(); ++i)
            if (old.contains(old_labels[i])) s.insert(static_cast<int>(i) + 1);
        if (old.size() != s.size()) throw std::invalid_argument("to_new: set not within sigma");
        return s;
    }
    VertexSet to_old(const VertexSet& labeled) const {
        VertexSet s;
        labeled.for_each([&](int v) {
            if (v == fresh_vertex) throw std::invalid_argument("to_old: set contains the fresh vertex");
            s.insert(old_labels.at(v - 1));
        });
        return s;
    }
};

inline UpperComplex upper_complex(const SimplicialComplex& c, const VertexSet& sigma) {
    if (!c.contains_face(sigma)) throw std::invalid_argument("upper_complex: sigma is not a face");
    VertexSet sigma_bar = c.ground - sigma;
    if (!sigma_bar.empty()) {
        if (sigma_bar.size() < 2 ||
            !is_in_lattice(c, make_subspace(c.n, {sigma_bar})).member)
            throw std::invalid_argument("upper_complex: complement subspace is not in the lattice");
    }

    UpperComplex uc;
    uc.sigma = sigma;
    uc.old_labels = sigma.to_vector();
    uc.fresh_vertex = sigma.size() + 1;

    // candidates carry the trace in original labels; relabeling happens last
    struct Candidate {
        VertexSet trace;  // subset of sigma, original labels
        UpperFacetType kind;
        std::vector<int> sources;
    };
    std::vector<Candidate> merged;
    for (int i = 0; i < static_cast<int>(c.facets.size()); ++i) {
        const VertexSet& f = c.facets[i];
        UpperFacetType kind;
        if ((f | sigma) == c.ground)
            kind = UpperFacetType::cone;
        else if (!sigma.subset_of(f))
            kind = UpperFacetType::intersection;
        else
            continue;
        VertexSet trace = f & sigma;
        bool found = false;
        for (auto& m : merged)
            if (m.kind == kind && m.trace == trace) {
                m.sources.push_back(i);
                found = true;
                break;
            }
        if (!found) merged.push_back({trace, kind, {i}});
    }
    // drop non-maximal intersection candidates; cone facets never absorb
    // them (that would force the source facets to be nested) and are
    // pairwise incomparable, so this is the whole maximality filter
    std::vector<Candidate> keep;
    for (const auto& cand : merged) {
        if (cand.kind == UpperFacetType::intersection) {
            bool dominated = false;
            for (const auto& other : merged)
                if (other.kind == UpperFacetType::intersection && !(other.trace == cand.trace) &&
                    cand.trace.subset_of(other.trace)) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
        }
        keep.push_back(cand);
    }

    auto final_face = [&](const Candidate& cand) {
        VertexSet relabeled = uc.to_new(cand.trace);
        return cand.kind == UpperFacetType::cone ? relabeled.with(uc.fresh_vertex) : relabeled;
    };
    std::vector<VertexSet> faces;
    for (const auto& cand : keep) faces.push_back(final_face(cand));
    uc.complex = make_complex(uc.fresh_vertex, VertexSet::range(uc.fresh_vertex), faces);
    if (uc.complex.facets.size() != keep.size())
        throw std::logic_error("upper_complex: facet candidates were not an antichain");

    uc.kind.resize(keep.size());
    uc.sources.resize(keep.size());
    for (const auto& cand : keep) {
        auto it = std::find(uc.complex.facets.begin(), uc.complex.facets.end(), final_face(cand));
        std::size_t at = it - uc.complex.facets.begin();
        uc.kind[at] = cand.kind;
        uc.sources[at] = cand.sources;
        std::sort(uc.sources[at].begin(), uc.sources[at].end());
    }
    return uc;
}

struct LastFacetData {
    UpperComplex upper;
    Shelling shelling;
};

// When sigma is the last facet F of a shelling, the upper complex is
// shellable: intersection facets go first, ordered by their earliest source
// facet's shelling position, then cone facets by their source position.
// The restriction face of each cone facet must be the old restriction face
// cut down to F, which we verify.
inline LastFacetData last_facet_shelling(const Shelling& s) {
    const SimplicialComplex& c = s.complex;
    int last_pos = s.steps() - 1;
    const VertexSet& f = s.facet_at(last_pos);

    LastFacetData out;
    out.upper = upper_complex(c, f);
    const UpperComplex& uc = out.upper;

    std::vector<int> pos_of_facet(c.facets.size());
    for (int pos = 0; pos < s.steps(); ++pos) pos_of_facet[s.order[pos]] = pos;

    int m = static_cast<int>(uc.complex.facets.size());
    std::vector<int> ranked(m);
    for (int i = 0; i < m; ++i) ranked[i] = i;
    auto earliest = [&](int i) {
        int best = s.steps();
        for (int src : uc.sources[i]) best = std::min(best, pos_of_facet[src]);
        return best;
    };
    std::sort(ranked.begin(), ranked.end(), [&](int a, int b) {
        bool cone_a = uc.kind[a] == UpperFacetType::cone;
        bool cone_b = uc.kind[b] == UpperFacetType::cone;
        if (cone_a != cone_b) return !cone_a;
        return earliest(a) < earliest(b);
    });
    out.shelling = make_shelling(uc.complex, ranked);

    for (int step = 0; step < out.shelling.steps(); ++step) {
        int idx = out.shelling.order[step];
        if (uc.kind[idx] != UpperFacetType::cone) continue;
        const VertexSet& src_restriction = s.restriction[pos_of_facet[uc.sources[idx][0]]];
        if (!(out.shelling.restriction[step] == uc.to_new(src_restriction & f)))
            throw std::logic_error(
                "last_facet_shelling: cone facet restriction disagrees with the source restriction");
    }
    return out;
}

}  // namespace shellarr
