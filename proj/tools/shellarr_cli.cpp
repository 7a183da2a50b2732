// command line front end: shellings, lattices, wedge descriptors with
// oracle cross checks, singularity links, the k-equal closed formula,
// Kozlov complexes and matroid DJS verdicts.
//
// exit codes: 0 ok, 2 invalid input / not applicable, 3 cross-check mismatch

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <shellarr/shellarr.hpp>

namespace {

using namespace shellarr;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json results_for_profile(const std::map<int, long long>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

Report cmd_shell(const std::string& raw, const std::vector<int>& given_order) {
    Report r;
    r.command = "shell";
    r.input_digest = fnv1a_hex(raw);
    SimplicialComplex c = complex_from_json(json::parse(raw));
    r.results["dim"] = c.dim();
    r.results["dim_bound_ok"] = c.within_arrangement_bound();
    if (!given_order.empty()) {
        bool ok = is_shelling_checked(c, given_order);
        r.results["verified_order"] = given_order;
        r.results["shellable"] = ok;
        if (ok) r.results["shelling"] = to_json(make_shelling(c, given_order));
        return r;
    }
    auto s = find_shelling(c);
    r.results["shellable"] = s.has_value();
    if (s) r.results["shelling"] = to_json(*s);
    return r;
}

Report cmd_wedge(const std::string& raw, const std::string& target_label, bool all, bool oracle) {
    Report r;
    r.command = "wedge";
    r.input_digest = fnv1a_hex(raw);
    SimplicialComplex c = complex_from_json(json::parse(raw));
    auto s = find_shelling(c);
    if (!s) throw std::invalid_argument("complex is not shellable");
    IntersectionLattice l = build_lattice(c);
    r.results["lattice_size"] = l.size();

    std::vector<VertexSet> targets;
    if (all) {
        for (int i = 1; i < l.size(); ++i)
            if (l.elements[i].blocks.size() == 1) targets.push_back(l.elements[i].blocks[0]);
    } else {
        targets.push_back(parse_vertex_set(target_label));
    }

    json per_target = json::object();
    for (const VertexSet& t : targets) {
        WedgeDescriptor w = wedge_lower_interval(*s, t);
        json entry = to_json(w);
        if (oracle) {
            HomologyProfile predicted = wedge_profile(w);
            DiagonalSubspace u = make_subspace(c.n, {t});
            HomologyProfile actual =
                reduced_homology(order_complex(interval(l, 0, l.index_of(u), true)));
            entry["oracle"] = to_json(actual);
            r.check("wedge descriptor matches oracle homology for " + to_label(t),
                    predicted == actual);
        }
        per_target[to_label(t)] = entry;
    }
    r.results["targets"] = per_target;
    return r;
}

Report cmd_link(const std::string& raw, bool oracle) {
    Report r;
    r.command = "link";
    r.input_digest = fnv1a_hex(raw);
    SimplicialComplex c = complex_from_json(json::parse(raw));
    auto s = find_shelling(c);
    if (!s) throw std::invalid_argument("complex is not shellable");
    WedgeDescriptor w = singularity_link_wedge(*s);
    r.results["link_wedge"] = to_json(w);
    std::map<int, long long> ordered = link_betti_counts(*s);
    r.results["ordered_decomposition_counts"] = results_for_profile(ordered);
    std::map<int, long long> spheres = w.spheres;
    r.check("ordered decomposition counts equal sphere counts", ordered == spheres);
    int n = c.ground.size();
    r.results["complement_cohomology"] =
        results_for_profile(complement_cohomology(wedge_profile(w), n));
    if (oracle) {
        HomologyProfile zz = zz_link_wedge(build_lattice(c));
        r.results["oracle_link"] = to_json(zz);
        r.check("lattice-side homology agrees", zz == wedge_profile(w));
    }
    return r;
}

Report cmd_kequal(int n, int k, bool oracle) {
    Report r;
    r.command = "kequal";
    r.input_digest = fnv1a_hex(std::to_string(n) + "," + std::to_string(k));
    std::map<int, Int> closed = bjorner_welker_count(n, k);
    json closed_json = json::object();
    for (const auto& [d, cnt] : closed) closed_json[std::to_string(d)] = cnt.str();
    r.results["closed_formula"] = closed_json;

    Shelling s = k_equal_complex(n, k);
    WedgeDescriptor w = wedge_lower_interval(s, s.complex.ground);
    r.results["enumerated"] = to_json(w);
    bool same = true;
    for (const auto& [d, cnt] : closed)
        if (Int(w.spheres.count(d) ? w.spheres.at(d) : 0) != cnt) same = false;
    for (const auto& [d, cnt] : w.spheres)
        if (!closed.count(d) && cnt != 0) same = false;
    r.check("closed formula equals decomposition enumeration", same);

    if (oracle) {
        IntersectionLattice l = build_lattice(s.complex);
        r.results["lattice_size"] = l.size();
        HomologyProfile actual = reduced_homology(order_complex(l));
        r.results["oracle"] = to_json(actual);
        r.check("oracle homology of the proper part agrees", actual == wedge_profile(w));
    }
    return r;
}

Report cmd_kozlov(const std::string& blocks_arg, const std::string& sizes_arg) {
    Report r;
    r.command = "kozlov";
    r.input_digest = fnv1a_hex(blocks_arg + "|" + sizes_arg);
    KozlovData d;
    int next = 1;
    std::istringstream bs(blocks_arg);
    std::string tok;
    while (std::getline(bs, tok, ';')) {
        int len = std::stoi(tok);
        VertexSet block;
        for (int i = 0; i < len; ++i) block.insert(next++);
        d.blocks.push_back(block);
    }
    d.n = next - 1;
    std::istringstream fs(sizes_arg);
    while (std::getline(fs, tok, ',')) d.complement_size.push_back(std::stoi(tok));
    auto [c, s] = kozlov_complex(d);
    r.results["complex"] = to_json(c);
    r.results["shelling"] = to_json(s);
    r.check("generated order is a shelling", is_shelling_checked(c, s.order));
    return r;
}

Report cmd_matroid(const std::string& raw, const std::string& mode) {
    Report r;
    r.command = "matroid";
    r.input_digest = fnv1a_hex(raw);
    Rank3Matroid m = matroid_from_json(json::parse(raw));
    ParallelData pd = parallel_classes(m);
    json classes = json::array();
    for (const auto& cls : pd.classes) classes.push_back(face_to_json(cls));
    r.results["parallel_classes"] = classes;
    r.results["singletons"] = face_to_json(pd.singletons);
    r.results["loops"] = face_to_json(pd.loops);
    r.results["arrangement_size"] = m.bases.size();

    std::optional<bool> brute_verdict, criteria_verdict;
    if (mode == "brute" || mode == "both") {
        DjsResult res = is_djs_bruteforce(m);
        brute_verdict = res.djs;
        r.results["brute"] = json{{"djs", res.djs}};
        if (res.witness) r.results["brute"]["witness"] = *res.witness;
    }
    if (mode == "criteria" || mode == "both") {
        CriteriaResult res = is_djs_criteria(m);
        const char* names[] = {"no_parallel", "no_three_circuits", "shifted", "none"};
        r.results["criteria"] = json{{"criterion", names[static_cast<int>(res.criterion)]}};
        if (res.djs) {
            criteria_verdict = *res.djs;
            r.results["criteria"]["djs"] = *res.djs;
        }
        if (res.shifted)
            r.results["criteria"]["shifted_index"] =
                json::array({res.shifted->a, res.shifted->b, res.shifted->c});
    }
    if (brute_verdict && criteria_verdict)
        r.check("criterion verdict matches exhaustive scan", *brute_verdict == *criteria_verdict);
    return r;
}

Report cmd_selftest() {
    Report r;
    r.command = "selftest";
    r.input_digest = fnv1a_hex("selftest");

    // wedge of two circles for the running five-vertex example, checked
    // against the homology oracle
    SimplicialComplex c = new_complex(5, {{1, 2, 3}, {2, 3, 4}, {3, 5}, {4, 5}});
    auto s = find_shelling(c);
    r.check("five-vertex example is shellable", s.has_value());
    if (s) {
        WedgeDescriptor w = wedge_lower_interval(*s, VertexSet::range(5));
        r.check("full-target interval is two circles",
                w.spheres == std::map<int, long long>{{1, 2}});
        IntersectionLattice l = build_lattice(c);
        HomologyProfile actual = reduced_homology(
            order_complex(interval(l, 0, l.index_of(make_subspace(5, {VertexSet::range(5)})), true)));
        r.check("oracle agrees", actual == wedge_profile(w));
        r.check("link profile", singularity_link_wedge(*s).spheres ==
                                    std::map<int, long long>{{2, 8}, {3, 3}});
    }

    // small k-equal case against the closed formula
    Shelling ke = k_equal_complex(5, 3);
    r.check("k-equal (5,3) counts",
            wedge_lower_interval(ke, ke.complex.ground).spheres ==
                std::map<int, long long>{{1, 6}});

    // matroid with three doubled points: not DJS, standard witness
    Rank3Matroid m = make_matroid(
        6, std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5},
                                          {2, 3, 6}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
    DjsResult dj = is_djs_bruteforce(m);
    r.check("doubled-triangle matroid is not DJS",
            !dj.djs && dj.witness == std::vector<int>{1, 2, 4, 3, 5, 6});
    return r;
}

void print_human(const Report& r) {
    std::cout << "command: " << r.command << "\n";
    if (!r.results.empty()) std::cout << r.results.dump(2) << "\n";
    for (const auto& c : r.cross_checks)
        std::cout << (c.at("pass").get<bool>() ? "[pass] " : "[FAIL] ")
                  << c.at("claim").get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy data of diagonal arrangements from shellable complexes"};
    app.require_subcommand(1);

    std::string input = "-";
    bool as_json = false, quiet = false, timing = false;
    app.add_flag("--json", as_json, "emit the full JSON report");
    app.add_flag("--quiet", quiet, "suppress normal output, keep exit code");
    app.add_flag("--timing", timing, "include wall time in the report");

    auto* shell = app.add_subcommand("shell", "find or verify a shelling");
    shell->add_option("-i,--input", input, "complex JSON file or - for stdin");
    std::vector<int> order;
    shell->add_option("--order", order, "verify this facet order (0-based)")->delimiter(',');

    auto* lattice = app.add_subcommand("lattice", "build the intersection lattice");
    lattice->add_option("-i,--input", input);
    std::string dot_path;
    lattice->add_option("--dot", dot_path, "write a DOT Hasse diagram ( - for stdout)");

    auto* wedge = app.add_subcommand("wedge", "wedge descriptors of lower intervals");
    wedge->add_option("-i,--input", input);
    std::string target;
    bool all = false, oracle = false;
    wedge->add_option("--target", target, "target block, e.g. 12345 or 1,2,3,4,5");
    wedge->add_flag("--all", all, "every single-block lattice element");
    wedge->add_flag("--oracle", oracle, "cross-check against homology");

    auto* link = app.add_subcommand("link", "singularity link of the arrangement");
    link->add_option("-i,--input", input);
    link->add_flag("--oracle", oracle);

    auto* kequal = app.add_subcommand("kequal", "k-equal arrangement counts");
    int kn = 0, kk = 0;
    kequal->add_option("-n", kn)->required();
    kequal->add_option("-k", kk)->required();
    kequal->add_flag("--oracle", oracle);

    auto* kozlov = app.add_subcommand("kozlov", "Kozlov family complex and shelling");
    std::string blocks_arg, sizes_arg;
    kozlov->add_option("--blocks", blocks_arg, "block lengths, e.g. 1;2;1;3")->required();
    kozlov->add_option("--sizes", sizes_arg, "complement sizes, e.g. 2,3,4,5")->required();

    auto* matroid = app.add_subcommand("matroid", "DJS decision for a rank-3 matroid");
    matroid->add_option("-i,--input", input);
    std::string mode = "both";
    matroid->add_option("--mode", mode)->check(CLI::IsMember({"brute", "criteria", "both"}));

    auto* selftest = app.add_subcommand("selftest", "run the embedded fixtures");

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        if (shell->parsed()) {
            r = cmd_shell(read_input(input), order);
        } else if (lattice->parsed()) {
            std::string raw = read_input(input);
            r.command = "lattice";
            r.input_digest = shellarr::fnv1a_hex(raw);
            auto l = shellarr::build_lattice(shellarr::complex_from_json(shellarr::json::parse(raw)));
            r.results = shellarr::to_json(l);
            if (!dot_path.empty()) {
                std::string dot = shellarr::lattice_to_dot(l);
                if (dot_path == "-") {
                    std::cout << dot;
                } else {
                    std::ofstream out(dot_path);
                    out << dot;
                }
            }
        } else if (wedge->parsed()) {
            if (target.empty() && !all)
                throw std::invalid_argument("wedge: need --target or --all");
            r = cmd_wedge(read_input(input), target, all, oracle);
        } else if (link->parsed()) {
            r = cmd_link(read_input(input), oracle);
        } else if (kequal->parsed()) {
            r = cmd_kequal(kn, kk, oracle);
        } else if (kozlov->parsed()) {
            r = cmd_kozlov(blocks_arg, sizes_arg);
        } else if (matroid->parsed()) {
            r = cmd_matroid(read_input(input), mode);
        } else if (selftest->parsed()) {
            r = cmd_selftest();
        }
        if (timing)
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!quiet) {
            if (as_json)
                std::cout << shellarr::to_json(r).dump(2) << "\n";
            else
                print_human(r);
        }
        return r.all_passed() ? 0 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
