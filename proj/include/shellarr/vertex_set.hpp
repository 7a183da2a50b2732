#pragma once

// Small fixed-capacity set of vertex labels.  Labels are 1-based ints in
// {1, ..., 256}; the wide capacity is needed because order complexes of
// intersection lattices routinely have far more vertices than the ground
// set of the complex that produced them.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellarr {

class VertexSet {
public:
    static constexpr int capacity = 256;

    VertexSet() : words_{0, 0, 0, 0} {}

    static VertexSet of(std::initializer_list<int> labels) {
        VertexSet s;
        for (int v : labels) s.insert(v);
        return s;
    }

    static VertexSet from_vector(const std::vector<int>& labels) {
        VertexSet s;
        for (int v : labels) s.insert(v);
        return s;
    }

    // {1, ..., n}
    static VertexSet range(int n) {
        if (n < 0 || n > capacity) throw std::invalid_argument("VertexSet::range: bad n");
        VertexSet s;
        for (int v = 1; v <= n; ++v) s.insert(v);
        return s;
    }

    bool contains(int v) const {
        check(v);
        return (words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1u;
    }

    void insert(int v) {
        check(v);
        words_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
    }

    void erase(int v) {
        check(v);
        words_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
    }

    VertexSet with(int v) const { VertexSet s = *this; s.insert(v); return s; }
    VertexSet without(int v) const { VertexSet s = *this; s.erase(v); return s; }

    bool empty() const {
        return (words_[0] | words_[1] | words_[2] | words_[3]) == 0;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    int min_element() const {
        for (int i = 0; i < 4; ++i)
            if (words_[i]) return 64 * i + std::countr_zero(words_[i]) + 1;
        throw std::logic_error("min_element of empty set");
    }

    int max_element() const {
        for (int i = 3; i >= 0; --i)
            if (words_[i]) return 64 * i + 63 - std::countl_zero(words_[i]) + 1;
        throw std::logic_error("max_element of empty set");
    }

    // any member strictly greater than v?
    bool any_greater_than(int v) const {
        return !empty() && max_element() > v;
    }

    bool subset_of(const VertexSet& o) const {
        for (int i = 0; i < 4; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < 4; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < 4; ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(64 * i + b + 1);
                w &= w - 1;
            }
        }
    }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
        VertexSet s;
        for (int i = 0; i < 4; ++i) s.words_[i] = a.words_[i] | b.words_[i];
        return s;
    }
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
        VertexSet s;
        for (int i = 0; i < 4; ++i) s.words_[i] = a.words_[i] & b.words_[i];
        return s;
    }
    friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
        VertexSet s;
        for (int i = 0; i < 4; ++i) s.words_[i] = a.words_[i] & ~b.words_[i];
        return s;
    }
    friend VertexSet operator^(const VertexSet& a, const VertexSet& b) {
        VertexSet s;
        for (int i = 0; i < 4; ++i) s.words_[i] = a.words_[i] ^ b.words_[i];
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    std::size_t hash() const {
        std::size_t h = 14695981039346656037ull;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

    // arbitrary but total order on bit patterns, used for canonical storage
    friend bool mask_less(const VertexSet& a, const VertexSet& b) {
        for (int i = 3; i >= 0; --i)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

private:
    static void check(int v) {
        if (v < 1 || v > capacity) throw std::out_of_range("vertex label out of range");
    }
    std::array<std::uint64_t, 4> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// re-declared at namespace scope so the friend above can be named as a
// comparator, not just called
bool mask_less(const VertexSet& a, const VertexSet& b);

// lexicographic order on the sorted element sequences, e.g. {1,3} < {2}
// and {1} < {1,2} (a proper prefix comes first)
inline bool set_lex_less(const VertexSet& a, const VertexSet& b) {
    if (a == b) return false;
    VertexSet d = a ^ b;
    int e = d.min_element();  // everything below e is shared
    if (a.contains(e)) return b.any_greater_than(e);
    return !a.any_greater_than(e);
}

// facets are stored by decreasing size, ties broken lexicographically
inline bool facet_order_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return set_lex_less(a, b);
}

inline std::string to_label(const VertexSet& s) {
    if (s.empty()) return "{}";
    std::ostringstream os;
    bool compact = s.max_element() <= 9;
    bool first = true;
    s.for_each([&](int v) {
        if (!first && !compact) os << ',';
        os << v;
        first = false;
    });
    return os.str();
}

inline VertexSet parse_vertex_set(const std::string& text) {
    VertexSet s;
    if (text.empty() || text == "{}") return s;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad vertex set literal: " + text);
            s.insert(c - '0');
        }
        return s;
    }
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad vertex set literal: " + text);
        s.insert(std::stoi(tok));
    }
    return s;
}

}  // namespace shellarr
