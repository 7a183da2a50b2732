#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <algorithm>

using namespace shellarr;

static TrappedPair pair_at(const Shelling& s, std::initializer_list<int> part, int pos) {
    return {VertexSet::of(part), pos, s.facet_at(pos)};
}

static ShellingTrappedDecomposition make_std(const Shelling& s,
                                             std::vector<TrappedPair> pairs) {
    ShellingTrappedDecomposition d;
    VertexSet t;
    for (const auto& p : pairs) t = t | p.part;
    d.pairs = std::move(pairs);
    d.target = t;
    validate_std(s, d);
    return d;
}

TEST_CASE("decompositions of the whole vertex set of the fan") {
    auto s = fx::fan5_shelled();
    auto got = enumerate_std(s, VertexSet::range(5));
    std::vector<ShellingTrappedDecomposition> want = {
        make_std(s, {pair_at(s, {4, 5}, 0), pair_at(s, {1, 2, 3}, 3)}),
        make_std(s, {pair_at(s, {1, 2, 3, 4, 5}, 3)}),
    };
    REQUIRE(got.size() == 2);
    for (const auto& w : want) REQUIRE(std::count(got.begin(), got.end(), w) == 1);
}

TEST_CASE("all trapped decompositions of the fan with their sphere dimensions") {
    auto s = fx::fan5_shelled();
    auto got = enumerate_std_all(s);
    // (parts.., facet position) -> expected link sphere dimension
    std::vector<std::pair<ShellingTrappedDecomposition, int>> want = {
        {make_std(s, {pair_at(s, {4, 5}, 0)}), 3},
        {make_std(s, {pair_at(s, {1, 5}, 1)}), 3},
        {make_std(s, {pair_at(s, {1, 4, 5}, 1)}), 3},
        {make_std(s, {pair_at(s, {1, 2, 4}, 2)}), 2},
        {make_std(s, {pair_at(s, {1, 2, 4, 5}, 2)}), 2},
        {make_std(s, {pair_at(s, {1, 2, 3}, 3)}), 2},
        {make_std(s, {pair_at(s, {1, 2, 3, 4}, 3)}), 2},
        {make_std(s, {pair_at(s, {1, 2, 3, 5}, 3)}), 2},
        {make_std(s, {pair_at(s, {1, 2, 3, 4, 5}, 3)}), 2},
        {make_std(s, {pair_at(s, {4, 5}, 0), pair_at(s, {1, 2, 3}, 3)}), 2},
    };
    REQUIRE(got.size() == want.size());
    for (const auto& [d, dim] : want) {
        REQUIRE(std::count(got.begin(), got.end(), d) == 1);
        REQUIRE(link_sphere_dim(d, 5) == dim);
    }
}

TEST_CASE("interval sphere dimensions") {
    auto s = fx::fan5_shelled();
    // single atom block: the empty sphere
    REQUIRE(delta_dim(make_std(s, {pair_at(s, {4, 5}, 0)}), 5) == -1);
    // both whole-set decompositions land in dimension one
    REQUIRE(delta_dim(make_std(s, {pair_at(s, {1, 2, 3, 4, 5}, 3)}), 5) == 1);
    REQUIRE(delta_dim(make_std(s, {pair_at(s, {4, 5}, 0), pair_at(s, {1, 2, 3}, 3)}), 5) == 1);
}

TEST_CASE("invalid decompositions are rejected") {
    auto s = fx::fan5_shelled();
    ShellingTrappedDecomposition d;
    d.pairs = {pair_at(s, {4, 5}, 0), pair_at(s, {4, 5}, 3)};  // overlap
    d.target = fx::vs({4, 5});
    REQUIRE_THROWS_AS(validate_std(s, d), std::invalid_argument);

    d.pairs = {pair_at(s, {1, 2, 3}, 3), pair_at(s, {4, 5}, 0)};  // positions descending
    d.target = VertexSet::range(5);
    REQUIRE_THROWS_AS(validate_std(s, d), std::invalid_argument);

    d.pairs = {pair_at(s, {1, 2}, 0)};  // does not trap the complement 45
    d.target = fx::vs({1, 2});
    REQUIRE_THROWS_AS(validate_std(s, d), std::invalid_argument);

    d.pairs = {{fx::vs({4, 5}), 0, fx::vs({2, 3, 4})}};  // facet mismatch
    d.target = fx::vs({4, 5});
    REQUIRE_THROWS_AS(validate_std(s, d), std::invalid_argument);

    d.pairs = {};
    d.target = VertexSet{};
    REQUIRE_THROWS_AS(validate_std(s, d), std::invalid_argument);
}

TEST_CASE("targets without decompositions") {
    auto s = fx::fan5_shelled();
    REQUIRE(enumerate_std(s, fx::vs({2, 3})).empty());
    REQUIRE(enumerate_std(s, fx::vs({3, 4, 5})).empty());
}

TEST_CASE("wedge of the lower interval below the full diagonal") {
    auto s = fx::fan5_shelled();
    auto w = wedge_lower_interval(s, VertexSet::range(5));
    REQUIRE(w.spheres == fx::profile({{1, 2}}));
    REQUIRE(w.provenance.size() == 2);
    for (const auto& pe : w.provenance) REQUIRE(pe.multiplicity == 1);

    // atom target: interval is empty, a (-1)-sphere
    auto at = wedge_lower_interval(s, fx::vs({4, 5}));
    REQUIRE(at.spheres == fx::profile({{-1, 1}}));

    // absent subspaces and undersized targets are refused
    REQUIRE_THROWS_AS(wedge_lower_interval(s, fx::vs({2, 3})), std::invalid_argument);
    REQUIRE_THROWS_AS(wedge_lower_interval(s, fx::vs({5})), std::invalid_argument);
}

// the central cross-check: predicted wedge homology vs the chain-complex
// oracle on the order complex of the open interval
static void check_all_single_blocks(const Shelling& s) {
    auto l = build_lattice(s.complex);
    for (int i = 1; i < l.size(); ++i) {
        const auto& u = l.elements[i];
        if (u.blocks.size() != 1) continue;
        auto predicted = wedge_profile(wedge_lower_interval(s, u.blocks[0]));
        auto oracle = reduced_homology(order_complex(interval(l, 0, i, true)));
        REQUIRE(predicted == oracle);
    }
}

TEST_CASE("wedge description matches the homology oracle, single blocks") {
    check_all_single_blocks(fx::fan5_shelled());
    check_all_single_blocks(fx::mixed8_shelled());
    check_all_single_blocks(k_equal_complex(5, 3));
    check_all_single_blocks(k_equal_complex(6, 3));
}

TEST_CASE("wedge description matches the homology oracle, deep lattice") {
    check_all_single_blocks(fx::pure7_shelled());
}

TEST_CASE("multi-block intervals factor through the join formula") {
    for (const auto& s : {fx::fan5_shelled(), k_equal_complex(6, 3)}) {
        auto l = build_lattice(s.complex);
        int hit = 0;
        for (int i = 1; i < l.size(); ++i) {
            const auto& u = l.elements[i];
            if (u.blocks.size() < 2) continue;
            auto predicted = wedge_lower_interval_profile(s, u);
            auto oracle = reduced_homology(order_complex(interval(l, 0, i, true)));
            REQUIRE(oracle.torsion.empty());
            REQUIRE(predicted == oracle.betti);
            ++hit;
        }
        REQUIRE(hit >= 1);
    }
}

TEST_CASE("ordered decompositions expand each family by its factorial") {
    auto s = fx::fan5_shelled();
    auto all = enumerate_std_all(s);
    auto ordered = ordered_stds(s);
    long long want = 0;
    for (const auto& d : all) {
        long long f = 1;
        for (int i = 2; i <= d.block_count(); ++i) f *= i;
        want += f;
    }
    REQUIRE(static_cast<long long>(ordered.size()) == want);
    REQUIRE(want == 11);  // nine singletons plus two orders of the split family
}
