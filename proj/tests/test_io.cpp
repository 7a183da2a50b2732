#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace shellarr;

TEST_CASE("complex json round trip") {
    auto c = fx::fan5();
    json j = to_json(c);
    REQUIRE(j.at("n") == 5);
    REQUIRE_FALSE(j.contains("ground"));  // full ground set is implied
    auto back = complex_from_json(j);
    REQUIRE(back.n == c.n);
    REQUIRE(back.ground == c.ground);
    REQUIRE(back.facets == c.facets);

    // a link lives on a partial ground set, which must survive the trip
    auto lk = link(c, fx::vs({3}));
    json jl = to_json(lk);
    REQUIRE(jl.contains("ground"));
    auto lback = complex_from_json(jl);
    REQUIRE(lback.ground == lk.ground);
    REQUIRE(lback.facets == lk.facets);

    REQUIRE_THROWS_AS(face_from_json(json{{"x", 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(complex_from_json(json{{"n", 3}, {"facets", json::array()}}),
                      std::invalid_argument);
}

TEST_CASE("shelling json uses 0-based positions") {
    json j = to_json(fx::fan5_shelled());
    REQUIRE(j.at("order") == json::array({0, 1, 2, 3}));
    REQUIRE(j.at("restriction")[0] == json::array({1, 2, 3}));
    REQUIRE(j.at("restriction")[3] == json::array());
    REQUIRE(j.at("facets_in_order")[0] == json::array({1, 2, 3}));
}

TEST_CASE("decomposition pairs are reported 1-based") {
    auto s = fx::fan5_shelled();
    auto stds = enumerate_std(s, s.complex.ground);
    REQUIRE(stds.size() == 2);
    for (const auto& d : stds) {
        if (d.block_count() != 2) continue;
        json j = to_json(d);
        REQUIRE(j == json::array({json::array({json::array({4, 5}), 1}),
                                  json::array({json::array({1, 2, 3}), 4})}));
    }
}

TEST_CASE("matroid json round trip") {
    std::vector<std::vector<int>> bases;
    for (int x : {1, 6})
        for (int y : {2, 4})
            for (int z : {3, 5}) bases.push_back({x, y, z});
    auto m = make_matroid(6, bases);
    auto back = matroid_from_json(to_json(m));
    REQUIRE(back.n == m.n);
    REQUIRE(back.bases == m.bases);
}

TEST_CASE("dot export lists every cover relation") {
    auto l = build_lattice(fx::fan5());
    std::string dot = lattice_to_dot(l);
    REQUIRE(dot.find("digraph lattice") != std::string::npos);
    REQUIRE(dot.find("\"45\"") != std::string::npos);
    REQUIRE(dot.find("\"123/45\"") != std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2))
        ++arrows;
    REQUIRE(arrows == l.covers.size());
}

TEST_CASE("digest is stable") {
    REQUIRE(fnv1a_hex("") == "cbf29ce484222325");
    REQUIRE(fnv1a_hex("a") == "af63dc4c8601ec8c");
    REQUIRE(fnv1a_hex("foobar") == "85944171f73967e8");
    REQUIRE(fnv1a_hex(to_json(fx::fan5()).dump()) == fnv1a_hex(to_json(fx::fan5()).dump()));
}

TEST_CASE("report accumulates cross checks") {
    Report r;
    r.command = "selftest";
    r.check("first", true, json{{"value", 3}});
    REQUIRE(r.all_passed());
    r.check("second", false);
    REQUIRE_FALSE(r.all_passed());
    json j = to_json(r);
    REQUIRE(j.at("schema") == "shellarr-report-v1");
    REQUIRE(j.at("cross_checks").size() == 2);
    REQUIRE(j.at("cross_checks")[0].at("claim") == "first");
    REQUIRE(j.at("cross_checks")[0].at("value") == 3);
    REQUIRE_FALSE(j.contains("seconds"));
}

TEST_CASE("homology profile json") {
    HomologyProfile p;
    p.betti = fx::profile({{1, 2}});
    p.torsion[1] = {Int(2)};
    json j = to_json(p);
    REQUIRE(j.at("betti").at("1") == 2);
    REQUIRE(j.at("torsion").at("1") == json::array({"2"}));
}
