#pragma once

// JSON in/out for the core types, DOT output for lattice Hasse diagrams,
// and the report envelope the command line tool emits.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shellarr/homology.hpp"
#include "shellarr/lattice.hpp"
#include "shellarr/matroid.hpp"
#include "shellarr/shelling.hpp"
#include "shellarr/wedge.hpp"

namespace shellarr {

using json = nlohmann::json;

inline json face_to_json(const VertexSet& s) { return json(s.to_vector()); }

inline VertexSet face_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of vertices");
    std::vector<int> v;
    for (const auto& e : j) v.push_back(e.get<int>());
    return VertexSet::from_vector(v);
}

inline json to_json(const SimplicialComplex& c) {
    json j;
    j["n"] = c.n;
    if (!(c.ground == VertexSet::range(c.n))) j["ground"] = face_to_json(c.ground);
    j["facets"] = json::array();
    for (const auto& f : c.facets) j["facets"].push_back(face_to_json(f));
    return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<VertexSet> facets;
    for (const auto& f : j.at("facets")) {
        VertexSet face = face_from_json(f);
        if (face.empty()) throw std::invalid_argument("complex input: empty facet");
        facets.push_back(face);
    }
    if (facets.empty()) throw std::invalid_argument("complex input: facet list is empty");
    VertexSet ground = j.contains("ground") ? face_from_json(j.at("ground")) : VertexSet::range(n);
    return make_complex(n, ground, std::move(facets));
}

// order is stored 0-based (positions into the complex's facet list)
inline json to_json(const Shelling& s) {
    json j;
    j["order"] = s.order;
    j["facets_in_order"] = json::array();
    j["restriction"] = json::array();
    for (int t = 0; t < s.steps(); ++t) {
        j["facets_in_order"].push_back(face_to_json(s.facet_at(t)));
        j["restriction"].push_back(face_to_json(s.restriction_at(t)));
    }
    return j;
}

inline json to_json(const DiagonalSubspace& u) {
    json j = json::array();
    for (const auto& b : u.blocks) j.push_back(face_to_json(b));
    return j;
}

inline json to_json(const IntersectionLattice& l) {
    json j;
    j["n"] = l.n;
    j["elements"] = json::array();
    for (const auto& e : l.elements) j["elements"].push_back(to_json(e));
    j["covers"] = json::array();
    for (const auto& [a, b] : l.covers) j["covers"].push_back(json::array({a, b}));
    return j;
}

inline json to_json(const HomologyProfile& p) {
    json betti = json::object();
    for (const auto& [d, b] : p.betti) betti[std::to_string(d)] = b;
    json torsion = json::object();
    for (const auto& [d, factors] : p.torsion) {
        json fs = json::array();
        for (const auto& f : factors) fs.push_back(f.str());
        torsion[std::to_string(d)] = fs;
    }
    return json{{"betti", betti}, {"torsion", torsion}};
}

// facets referenced by shelling position, 1-based, per the report format
inline json to_json(const ShellingTrappedDecomposition& d) {
    json pairs = json::array();
    for (const auto& tp : d.pairs) pairs.push_back(json::array({face_to_json(tp.part), tp.pos + 1}));
    return pairs;
}

inline json to_json(const WedgeDescriptor& w) {
    json spheres = json::object();
    for (const auto& [d, c] : w.spheres) spheres[std::to_string(d)] = c;
    json prov = json::array();
    for (const auto& p : w.provenance)
        prov.push_back(json{{"pairs", to_json(p.decomposition)},
                            {"mult", p.multiplicity},
                            {"dim", p.dimension}});
    return json{{"spheres", spheres}, {"provenance", prov}};
}

inline json to_json(const Rank3Matroid& m) {
    json bases = json::array();
    for (const auto& b : m.bases) bases.push_back(face_to_json(b));
    return json{{"n", m.n}, {"bases", bases}};
}

inline Rank3Matroid matroid_from_json(const json& j) {
    std::vector<VertexSet> bases;
    for (const auto& b : j.at("bases")) bases.push_back(face_from_json(b));
    return make_matroid(j.at("n").get<int>(), std::move(bases));
}

inline std::string lattice_to_dot(const IntersectionLattice& l) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (int i = 0; i < l.size(); ++i)
        os << "  n" << i << " [label=\"" << to_label(l.elements[i]) << "\"];\n";
    for (const auto& [a, b] : l.covers) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Report {
    std::string schema = "shellarr-report-v1";
    std::string command;
    std::string input_digest;
    json results = json::object();
    json cross_checks = json::array();  // {"claim", "pass", details...}
    std::optional<double> seconds;      // omitted unless timing requested

    void check(const std::string& claim, bool pass, json detail = json::object()) {
        detail["claim"] = claim;
        detail["pass"] = pass;
        cross_checks.push_back(std::move(detail));
    }
    bool all_passed() const {
        for (const auto& c : cross_checks)
            if (!c.at("pass").get<bool>()) return false;
        return true;
    }
};

inline json to_json(const Report& r) {
    json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["results"] = r.results;
    j["cross_checks"] = r.cross_checks;
    if (r.seconds) j["seconds"] = *r.seconds;
    return j;
}

}  // namespace shellarr
