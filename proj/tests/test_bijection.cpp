#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <algorithm>

using namespace shellarr;

TEST_CASE("upper complex of the last deep-lattice facet, with shelling") {
    auto lf = last_facet_shelling(fx::pure7_shelled());
    const auto& uc = lf.upper;
    REQUIRE(uc.fresh_vertex == 6);

    std::vector<VertexSet> want_facets = {fx::vs({1, 2, 3, 4}), fx::vs({1, 3, 4, 5}),
                                          fx::vs({1, 2, 3, 6}), fx::vs({1, 3, 4, 6}),
                                          fx::vs({3, 4, 5, 6}), fx::vs({1, 4, 5, 6})};
    REQUIRE(uc.complex.facets.size() == want_facets.size());
    for (const auto& f : want_facets)
        REQUIRE(std::count(uc.complex.facets.begin(), uc.complex.facets.end(), f) == 1);

    // plain facets first by earliest source, cone facets after
    std::vector<VertexSet> want_order = {fx::vs({1, 2, 3, 4}), fx::vs({1, 3, 4, 5}),
                                         fx::vs({1, 2, 3, 6}), fx::vs({1, 3, 4, 6}),
                                         fx::vs({3, 4, 5, 6}), fx::vs({1, 4, 5, 6})};
    for (int i = 0; i < lf.shelling.steps(); ++i)
        REQUIRE(lf.shelling.facet_at(i) == want_order[i]);

    // restriction of the first cone facet agrees with its source facet
    REQUIRE(lf.shelling.restriction_at(2) == fx::vs({1, 2, 3}));

    // kinds: exactly two plain facets, four cones
    int cones = 0;
    for (auto k : uc.kind)
        if (k == UpperFacetType::cone) ++cones;
    REQUIRE(cones == 4);
}

TEST_CASE("upper complex of the fan's last facet") {
    auto lf = last_facet_shelling(fx::fan5_shelled());
    REQUIRE(lf.upper.fresh_vertex == 3);
    std::vector<VertexSet> order;
    for (int i = 0; i < lf.shelling.steps(); ++i) order.push_back(lf.shelling.facet_at(i));
    REQUIRE(order == std::vector<VertexSet>{fx::vs({1}), fx::vs({2}), fx::vs({3})});
    REQUIRE(lf.upper.kind[lf.shelling.order[2]] == UpperFacetType::cone);
}

TEST_CASE("decomposition correspondence on the fan") {
    auto corr = std_bijection_last_facet(fx::fan5_shelled());
    // two whole-set decompositions use the last facet, each with one schedule
    REQUIRE(corr.pairs.size() == 2);
    for (const auto& bp : corr.pairs) {
        REQUIRE(bp.lower.pairs.back().pos == 3);
        REQUIRE(bp.upper.block_count() == 1);
        REQUIRE(bp.upper_w.empty());
    }
}

TEST_CASE("decomposition correspondence on the deep lattice") {
    auto s = fx::pure7_shelled();
    // construction runs the roundtrip, surjectivity and counting checks
    auto corr = std_bijection_last_facet(s);

    long long expect = 0;
    for (const auto& d : enumerate_std(s, VertexSet::range(7))) {
        if (d.pairs.back().pos != s.steps() - 1) continue;
        long long f = 1;
        for (int i = 2; i < d.block_count(); ++i) f *= i;
        expect += f;
    }
    REQUIRE(static_cast<long long>(corr.pairs.size()) == expect);
    REQUIRE(expect >= 2);

    // the published three-block example maps to the two-block upper family
    ShellingTrappedDecomposition d;
    d.pairs = {{fx::vs({4, 5}), 0, s.facet_at(0)},
               {fx::vs({1, 2, 3}), 5, s.facet_at(5)},
               {fx::vs({6, 7}), 6, s.facet_at(6)}};
    d.target = VertexSet::range(7);
    auto found = std::find_if(corr.pairs.begin(), corr.pairs.end(), [&](const BijectionPair& bp) {
        return bp.lower == d && bp.lower_w == std::vector<int>{2, 1};
    });
    REQUIRE(found != corr.pairs.end());
    REQUIRE(found->upper.pairs.size() == 2);
    REQUIRE(found->upper.pairs[0].part == fx::vs({4, 5}));
    REQUIRE(found->upper.pairs[0].pos == 2);  // the cone facet over 123
    REQUIRE(found->upper.pairs[1].part == fx::vs({1, 2, 3, 6}));
    REQUIRE(found->upper.pairs[1].pos == 5);  // the cone facet over 145
    REQUIRE(found->upper_w == std::vector<int>{1});
}

TEST_CASE("correspondence requires an empty common intersection") {
    auto c = new_complex(4, {{1, 2, 3}, {2, 3, 4}});
    auto s = make_shelling(c, {0, 1});
    REQUIRE_THROWS_AS(std_bijection_last_facet(s), std::invalid_argument);
}
