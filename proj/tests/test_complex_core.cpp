#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace shellarr;

TEST_CASE("facet normalization absorbs dominated faces") {
    auto c = new_complex(3, {{1, 2}, {1, 2, 3}});
    REQUIRE(c.facets.size() == 1);
    REQUIRE(c.facets[0] == fx::vs({1, 2, 3}));
    REQUIRE(c.dim() == 2);
    REQUIRE(c.face_count() == 8);
}

TEST_CASE("new_complex input validation") {
    REQUIRE_THROWS_AS(new_complex(3, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(new_complex(3, {{1}, {}}), std::invalid_argument);
    REQUIRE_THROWS_AS(new_complex(3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("void and empty complexes") {
    auto v = make_complex(3, VertexSet::range(3), {}, true);
    REQUIRE(v.is_void());
    REQUIRE(v.dim() == -2);
    REQUIRE(v.face_count() == 0);

    auto e = make_complex(3, VertexSet::range(3), {VertexSet{}});
    REQUIRE(e.is_empty_complex());
    REQUIRE(e.dim() == -1);
    REQUIRE(e.face_count() == 1);
}

TEST_CASE("dimension bound for arrangement use") {
    REQUIRE(fx::fan5().within_arrangement_bound());   // dim 2 = 5-3
    REQUIRE(fx::pure7().within_arrangement_bound());  // dim 4 = 7-3
    REQUIRE_FALSE(new_complex(4, {{1, 2, 3}}).within_arrangement_bound());
}

TEST_CASE("link keeps ambient labels") {
    auto lk = link(fx::fan5(), fx::vs({3}));
    std::vector<VertexSet> want = {fx::vs({1, 2}), fx::vs({2, 4}), fx::vs({5})};
    REQUIRE(lk.facets == want);
    REQUIRE(lk.ground == fx::vs({1, 2, 4, 5}));
    REQUIRE(lk.n == 5);

    REQUIRE_THROWS_AS(link(fx::fan5(), fx::vs({1, 4})), std::invalid_argument);  // not a face
}

TEST_CASE("gallery connectivity") {
    REQUIRE_FALSE(is_gallery_connected(fx::bowtie5()));
    REQUIRE(is_gallery_connected(fx::fan5()));
    REQUIRE(is_gallery_connected(new_complex(3, {{1, 2, 3}})));
    REQUIRE(is_gallery_connected(fx::mixed8()));
}

TEST_CASE("known shellings and non-shellings") {
    REQUIRE(is_shelling_checked(fx::fan5(), {0, 1, 2, 3}));
    REQUIRE(is_shelling_checked(fx::pure7(), fx::pure7_shelled().order));
    REQUIRE(is_shelling_checked(fx::mixed8(), fx::mixed8_shelled().order));

    // two disjoint edges are not shellable in either order
    REQUIRE_FALSE(is_shelling_checked(fx::two_edges(), {0, 1}));
    REQUIRE_FALSE(is_shelling_checked(fx::two_edges(), {1, 0}));
    REQUIRE_FALSE(find_shelling(fx::two_edges()).has_value());

    // a single facet is always a shelling
    REQUIRE(is_shelling_checked(new_complex(4, {{1, 2, 3, 4}}), {0}));

    // order must be a permutation of the facet indices
    REQUIRE_THROWS_AS(is_shelling_checked(fx::fan5(), {0, 1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(is_shelling_checked(fx::fan5(), {0, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("shelling must place larger facets early enough") {
    // putting an edge before both triangles breaks the pure-prefix condition
    REQUIRE_FALSE(is_shelling_checked(fx::fan5(), {2, 0, 1, 3}));
    REQUIRE_FALSE(is_shelling_checked(fx::fan5(), {3, 2, 1, 0}));
}

TEST_CASE("the two shelling characterizations agree on every order") {
    std::vector<SimplicialComplex> pool = {
        fx::fan5(),
        fx::two_edges(),
        fx::bowtie5(),
        new_complex(5, {{1, 2, 3}, {3, 4}, {4, 5}}),
        new_complex(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}}),
        new_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
        new_complex(5, {{1, 2, 3, 4}, {3, 4, 5}, {1, 5}}),
    };
    std::mt19937 rng(20240811);
    for (int i = 0; i < 40; ++i) pool.push_back(fx::random_complex(rng, 7, 5));

    for (const auto& c : pool) {
        int q = static_cast<int>(c.facets.size());
        if (q > 5) continue;
        std::vector<int> order(q);
        std::iota(order.begin(), order.end(), 0);
        do {
            bool a = is_shelling(c, order);
            bool b = is_shelling_by_definition(c, order);
            REQUIRE(a == b);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("restriction faces of the fan") {
    auto s = fx::fan5_shelled();
    std::vector<VertexSet> want = {fx::vs({1, 2, 3}), fx::vs({2, 3}), fx::vs({3}), VertexSet{}};
    REQUIRE(restriction_faces(s) == want);
}

TEST_CASE("restriction intervals partition the faces step by step") {
    std::vector<Shelling> pool = {fx::fan5_shelled(), fx::pure7_shelled(), fx::mixed8_shelled()};
    std::mt19937 rng(987123);
    for (int i = 0; i < 60; ++i) {
        auto c = fx::random_complex(rng, 7, 6);
        if (auto s = find_shelling(c)) pool.push_back(*s);
    }
    for (const auto& s : pool) {
        long long running = 0;
        std::vector<VertexSet> prefix;
        for (int i = 0; i < s.steps(); ++i) {
            REQUIRE(s.restriction_at(i).subset_of(s.facet_at(i)));
            running += 1LL << s.restriction_at(i).size();
            prefix.push_back(s.facet_at(i));
            auto part = make_complex(s.complex.n, s.complex.ground, prefix);
            REQUIRE(running == part.face_count());
        }
        REQUIRE(running == s.complex.face_count());
    }
}

TEST_CASE("find_shelling prefers the earliest facet order") {
    auto s = find_shelling(fx::fan5());
    REQUIRE(s.has_value());
    REQUIRE(s->order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("find_shelling succeeds exactly when some order passes") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 50; ++i) {
        auto c = fx::random_complex(rng, 6, 4);
        int q = static_cast<int>(c.facets.size());
        std::vector<int> order(q);
        std::iota(order.begin(), order.end(), 0);
        bool any = false;
        do {
            if (is_shelling(c, order)) any = true;
        } while (!any && std::next_permutation(order.begin(), order.end()));
        auto s = find_shelling(c);
        REQUIRE(s.has_value() == any);
        if (s) REQUIRE(is_shelling_checked(c, s->order));
    }
}

TEST_CASE("links inherit shellings") {
    auto s = fx::fan5_shelled();
    auto lk = link_shelling(s, fx::vs({3}));
    REQUIRE(lk.complex.facets.size() == 3);
    REQUIRE(is_shelling_checked(lk.complex, lk.order));

    // every face of every shellable fixture, plus random shellable complexes
    std::vector<Shelling> pool = {s, fx::mixed8_shelled()};
    std::mt19937 rng(31337);
    for (int i = 0; i < 30; ++i) {
        auto c = fx::random_complex(rng, 6, 4);
        if (auto found = find_shelling(c)) pool.push_back(*found);
    }
    for (const auto& sh : pool) {
        for (const auto& level : sh.complex.all_faces())
            for (const auto& f : level) {
                if (f.empty()) continue;
                auto sub = link_shelling(sh, f);  // throws if the induced order fails
                REQUIRE(is_shelling_checked(sub.complex, sub.order));
            }
    }
}
