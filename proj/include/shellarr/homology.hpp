#pragma once

// Independent homology oracle: reduced simplicial homology with integer
// coefficients, computed from boundary matrices via Smith normal form.
// Everything downstream is cross-checked against this, so it must stay
// self-contained and dumb: no reuse of the shelling machinery.
//
// The empty complex {*} has reduced homology concentrated in degree -1
// (we use the augmented chain complex).  The void complex has none at all.
//
// SNF strategy: boundary matrices of order complexes get large (tens of
// thousands of faces) but are extremely sparse and almost always reduce
// completely with +-1 pivots, which keep everything unimodular and entry
// sizes bounded.  Whatever survives goes through a small dense SNF with
// exact big integers.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shellarr/simplicial_complex.hpp"

namespace shellarr {

using Int = boost::multiprecision::cpp_int;

struct SparseMat {
    int rows = 0;
    int cols = 0;
    // column-major; each column sorted by row, no zero entries
    std::vector<std::vector<std::pair<int, Int>>> col;

    void set_entry(int r, int c, Int v) {
        if (v == 0) return;
        auto& column = col.at(c);
        auto it = std::lower_bound(column.begin(), column.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != column.end() && it->first == r)
            throw std::logic_error("SparseMat: duplicate entry");
        column.insert(it, {r, std::move(v)});
    }
};

inline SparseMat make_sparse(int rows, int cols) {
    SparseMat m;
    m.rows = rows;
    m.cols = cols;
    m.col.resize(cols);
    return m;
}

struct SnfResult {
    long long rank = 0;
    std::vector<Int> nonunit_factors;  // invariant factors > 1, divisibility order
};

namespace detail {

// dense exact SNF for whatever the sparse phase could not finish
inline SnfResult dense_snf(std::vector<std::vector<Int>> a) {
    SnfResult res;
    if (a.empty() || a[0].empty()) {
        return res;
    }
    std::size_t nr = a.size(), nc = a[0].size();
    std::vector<Int> diag;
    std::size_t top = 0;
    while (top < nr && top < nc) {
        // locate a nonzero entry of smallest magnitude in the working block
        std::size_t pr = nr, pc = nc;
        Int best = 0;
        for (std::size_t i = top; i < nr; ++i)
            for (std::size_t j = top; j < nc; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = abs(a[i][j]);
                if (pr == nr || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == nr) break;  // block is zero
        std::swap(a[top], a[pr]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][top], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < nr; ++i) {
                if (a[i][top] == 0) continue;
                Int q = a[i][top] / a[top][top];
                for (std::size_t j = top; j < nc; ++j) a[i][j] -= q * a[top][j];
                if (a[i][top] != 0) {  // remainder smaller than pivot; swap up and redo
                    std::swap(a[top], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = top + 1; j < nc; ++j) {
                if (a[top][j] == 0) continue;
                Int q = a[top][j] / a[top][top];
                for (std::size_t i = top; i < nr; ++i) a[i][j] -= q * a[i][top];
                if (a[top][j] != 0) {
                    for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][top], a[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(a[top][top]));
        ++top;
    }
    // enforce the divisibility chain d1 | d2 | ...
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Int g = gcd(diag[i], diag[j]);
            Int l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    res.rank = static_cast<long long>(diag.size());
    for (const auto& d : diag)
        if (d > 1) res.nonunit_factors.push_back(d);
    return res;
}

}  // namespace detail

inline SnfResult smith_normal_form(SparseMat m) {
    long long unit_rank = 0;

    // row -> live columns having an entry in it
    std::unordered_map<int, std::unordered_set<int>> by_row;
    std::vector<char> dead_col(m.cols, 0);
    for (int c = 0; c < m.cols; ++c)
        for (const auto& e : m.col[c]) by_row[e.first].insert(c);

    auto entry_in = [&](const std::vector<std::pair<int, Int>>& column, int r) -> const Int* {
        auto it = std::lower_bound(column.begin(), column.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != column.end() && it->first == r) return &it->second;
        return nullptr;
    };
    auto find_unit = [](const std::vector<std::pair<int, Int>>& column) -> int {
        for (const auto& e : column)
            if (e.second == 1 || e.second == -1) return e.first;
        return -1;
    };

    // lazy min-heap of (column length, column) over columns holding a +-1;
    // stale entries are re-validated on pop, modified columns re-pushed
    using HeapEntry = std::pair<std::size_t, int>;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    for (int c = 0; c < m.cols; ++c)
        if (find_unit(m.col[c]) != -1) heap.push({m.col[c].size(), c});

    while (!heap.empty()) {
        auto [len, pc] = heap.top();
        heap.pop();
        if (dead_col[pc] || m.col[pc].empty()) continue;
        int pr = find_unit(m.col[pc]);
        if (pr == -1) continue;
        if (m.col[pc].size() != len) {  // stale key, reinsert with the true one
            heap.push({m.col[pc].size(), pc});
            continue;
        }

        Int pivot = *entry_in(m.col[pc], pr);
        std::vector<int> touched(by_row[pr].begin(), by_row[pr].end());
        for (int c : touched) {
            if (c == pc || dead_col[c]) continue;
            const Int* v = entry_in(m.col[c], pr);
            if (!v) continue;
            Int factor = *v / pivot;  // pivot is +-1
            // col_c -= factor * col_pc, merging sorted runs
            std::vector<std::pair<int, Int>> merged;
            merged.reserve(m.col[c].size() + m.col[pc].size());
            auto ia = m.col[c].begin(), ea = m.col[c].end();
            auto ib = m.col[pc].begin(), eb = m.col[pc].end();
            while (ia != ea || ib != eb) {
                if (ib == eb || (ia != ea && ia->first < ib->first)) {
                    merged.push_back(*ia++);
                } else if (ia == ea || ib->first < ia->first) {
                    Int nv = -factor * ib->second;
                    if (nv != 0) {
                        by_row[ib->first].insert(c);
                        merged.push_back({ib->first, std::move(nv)});
                    }
                    ++ib;
                } else {
                    Int nv = ia->second - factor * ib->second;
                    if (nv != 0)
                        merged.push_back({ia->first, std::move(nv)});
                    else
                        by_row[ia->first].erase(c);
                    ++ia;
                    ++ib;
                }
            }
            m.col[c] = std::move(merged);
            if (find_unit(m.col[c]) != -1) heap.push({m.col[c].size(), c});
        }
        // retire the pivot row and column: after elimination the row lives
        // only in the pivot column, and the implicit row operations that
        // would clear the rest of that column touch nothing else
        for (const auto& e : m.col[pc]) by_row[e.first].erase(pc);
        m.col[pc].clear();
        dead_col[pc] = 1;
        by_row.erase(pr);
        ++unit_rank;
    }

    // collapse the survivors into a small dense block
    std::vector<int> live_rows;
    std::unordered_map<int, int> row_slot;
    for (int c = 0; c < m.cols; ++c) {
        if (dead_col[c]) continue;
        for (const auto& e : m.col[c])
            if (!row_slot.count(e.first)) {
                row_slot[e.first] = static_cast<int>(live_rows.size());
                live_rows.push_back(e.first);
            }
    }
    std::vector<std::vector<Int>> dense;
    if (!live_rows.empty()) {
        std::size_t live_cols = 0;
        for (int c = 0; c < m.cols; ++c)
            if (!dead_col[c] && !m.col[c].empty()) ++live_cols;
        dense.assign(live_rows.size(), std::vector<Int>(live_cols, 0));
        std::size_t slot = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (dead_col[c] || m.col[c].empty()) continue;
            for (const auto& e : m.col[c]) dense[row_slot[e.first]][slot] = e.second;
            ++slot;
        }
    }
    SnfResult res = detail::dense_snf(std::move(dense));
    res.rank += unit_rank;
    return res;
}

// augmented chain complex of a simplicial complex: levels[k] holds the
// faces with k vertices (so dimension k-1), level 0 is the empty face
struct ChainComplexData {
    std::vector<std::vector<VertexSet>> levels;
    std::vector<SparseMat> boundary;  // boundary[k]: level k -> level k-1

    static ChainComplexData from_complex(const SimplicialComplex& c) {
        ChainComplexData d;
        d.levels = c.all_faces();
        int height = static_cast<int>(d.levels.size());
        d.boundary.resize(height);
        for (int k = 1; k < height; ++k) {
            std::unordered_map<VertexSet, int, VertexSetHash> index;
            for (int i = 0; i < static_cast<int>(d.levels[k - 1].size()); ++i)
                index[d.levels[k - 1][i]] = i;
            SparseMat b = make_sparse(static_cast<int>(d.levels[k - 1].size()),
                                      static_cast<int>(d.levels[k].size()));
            for (int j = 0; j < static_cast<int>(d.levels[k].size()); ++j) {
                std::vector<int> verts = d.levels[k][j].to_vector();
                int sign = 1;
                for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                    VertexSet face = d.levels[k][j].without(verts[drop]);
                    b.set_entry(index.at(face), j, sign);
                    sign = -sign;
                }
            }
            d.boundary[k] = std::move(b);
        }
        d.check_boundary_squares_to_zero();
        return d;
    }

    void check_boundary_squares_to_zero() const {
        for (std::size_t k = 2; k < boundary.size(); ++k) {
            const SparseMat& hi = boundary[k];
            const SparseMat& lo = boundary[k - 1];
            for (int j = 0; j < hi.cols; ++j) {
                std::map<int, Int> acc;
                for (const auto& e : hi.col[j])
                    for (const auto& f : lo.col[e.first]) acc[f.first] += e.second * f.second;
                for (const auto& [row, v] : acc)
                    if (v != 0)
                        throw std::logic_error("chain complex: boundary of boundary is nonzero");
            }
        }
    }
};

struct HomologyProfile {
    std::map<int, long long> betti;            // degree -> rank, zeros omitted
    std::map<int, std::vector<Int>> torsion;   // degree -> invariant factors > 1

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) = default;

    long long betti_at(int d) const {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    bool trivial() const { return betti.empty() && torsion.empty(); }
};

inline HomologyProfile reduced_homology(const SimplicialComplex& c) {
    HomologyProfile p;
    if (c.is_void()) return p;
    ChainComplexData d = ChainComplexData::from_complex(c);
    int height = static_cast<int>(d.levels.size());  // levels 0..height-1
    std::vector<SnfResult> snf(height + 1);
    for (int k = 1; k < height; ++k) snf[k] = smith_normal_form(d.boundary[k]);
    // degree d lives at level d+1
    for (int k = 0; k < height; ++k) {
        long long faces = static_cast<long long>(d.levels[k].size());
        long long rank_out = k >= 1 ? snf[k].rank : 0;
        long long rank_in = k + 1 < height ? snf[k + 1].rank : 0;
        long long b = faces - rank_out - rank_in;
        if (b < 0) throw std::logic_error("reduced_homology: negative betti number");
        if (b > 0) p.betti[k - 1] = b;
        if (k + 1 < height && !snf[k + 1].nonunit_factors.empty())
            p.torsion[k - 1] = snf[k + 1].nonunit_factors;
    }
    return p;
}

// the void complex counts as acyclic: it shows up as "the empty interval
// with its one face removed" and the contractibility bookkeeping needs it
inline bool is_acyclic(const SimplicialComplex& c) { return reduced_homology(c).trivial(); }

}  // namespace shellarr
