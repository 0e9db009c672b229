#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "digitop/checks.hpp"
#include "digitop/constructions.hpp"
#include "digitop/homology.hpp"
#include "digitop/image_io.hpp"
#include "digitop/invariants.hpp"
#include "digitop/map_io.hpp"
#include "digitop/search.hpp"

namespace {

using namespace digitop;

// Machine-readable section: `---`, then one key=value per line.
struct Machine {
    std::vector<std::pair<std::string, std::string>> kv;

    void add(std::string k, std::string v) { kv.emplace_back(std::move(k), std::move(v)); }
    void add(std::string k, bool v) { add(std::move(k), std::string(v ? "true" : "false")); }
    void add(std::string k, std::int64_t v) { add(std::move(k), std::to_string(v)); }
    void add(std::string k, std::uint64_t v) { add(std::move(k), std::to_string(v)); }
    void print() const {
        std::cout << "---\n";
        for (const auto& [k, v] : kv) std::cout << k << '=' << v << '\n';
    }
};

std::int64_t parse_int(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(what + ": expected an integer, got \"" + tok + "\"");
}

void print_witness(const DigitalMap& f) {
    for (const std::string& line : pair_lines(f)) std::cout << "  " << line << '\n';
}

int cmd_components(const std::string& path) {
    DigitalImage img = read_image_file(path);
    auto comps = img.components();
    std::cout << "components: " << comps.size() << '\n';
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::cout << "component " << c << ':';
        for (int i : comps[c]) std::cout << ' ' << to_string(img.point(i));
        std::cout << '\n';
    }
    Machine m;
    m.add("components", static_cast<std::uint64_t>(comps.size()));
    m.add("connected", img.connected());
    m.print();
    return 0;
}

int cmd_check_continuous(const std::string& path) {
    DigitalMap f = read_map_file(path);
    bool ok = is_continuous(f);
    if (ok) {
        std::cout << "continuous\n";
    } else {
        for (auto [i, j] : f.domain().edge_list())
            if (!f.codomain().closed_adjacent(f(i), f(j))) {
                std::cout << "not continuous: edge " << f.domain().point(i) << " ~ "
                          << f.domain().point(j) << " maps to non-adjacent "
                          << f.codomain().point(f(i)) << ", " << f.codomain().point(f(j)) << '\n';
                break;
            }
    }
    Machine m;
    m.add("continuous", ok);
    m.print();
    return ok ? 0 : 1;
}

int cmd_homology(const std::string& path, int max_dim) {
    DigitalImage img = read_image_file(path);
    ImageHomology h(img);
    int top = max_dim >= 0 ? max_dim : h.dim();
    Machine m;
    m.add("dim", static_cast<std::int64_t>(h.dim()));
    for (int q = 0; q <= top; ++q) {
        std::string g = to_string(h.group(q));
        std::cout << "H_" << q << " = " << g << '\n';
        m.add("H" + std::to_string(q), g);
    }
    m.print();
    return 0;
}

int cmd_euler(const std::string& path) {
    DigitalImage img = read_image_file(path);
    std::int64_t chi = euler_characteristic(img);
    std::cout << "Euler characteristic: " << chi << '\n';
    Machine m;
    m.add("euler", chi);
    m.print();
    return 0;
}

int cmd_lefschetz(const std::string& path) {
    DigitalMap f = read_map_file(path);
    std::int64_t l = lefschetz_number(f);
    std::cout << "Lefschetz number: " << l << '\n';
    Machine m;
    m.add("lefschetz", l);
    m.print();
    return 0;
}

int cmd_degree(const std::string& path, int n) {
    DigitalMap f = read_map_file(path);
    DegreeResult d = degree(f, n);
    Machine m;
    m.add("defined", d.defined);
    if (d.defined) {
        std::cout << "degree in dimension " << n << ": " << d.value << '\n';
        m.add("degree", d.value);
    } else {
        std::cout << "degree undefined in dimension " << n << ": H_" << n << " = "
                  << to_string(d.hn) << '\n';
        m.add("Hn", to_string(d.hn));
    }
    m.print();
    return 0;
}

int cmd_fpp(const std::string& path, const SearchLimits& limits) {
    auto img = std::make_shared<const DigitalImage>(read_image_file(path));
    FppResult r = has_fpp(img, limits);
    if (r.holds) {
        std::cout << "fixed point property holds\n";
    } else {
        std::cout << "fixed point property fails; fixed-point-free witness:\n";
        print_witness(*r.witness);
    }
    Machine m;
    m.add("fpp", r.holds);
    m.print();
    return r.holds ? 0 : 1;
}

int cmd_afpp(const std::string& path, const SearchLimits& limits) {
    auto img = std::make_shared<const DigitalImage>(read_image_file(path));
    AfppResult r = has_afpp(img, limits);
    if (r.holds) {
        std::cout << "approximate fixed point property holds\n";
    } else {
        std::cout << "approximate fixed point property fails; witness with no approximate "
                     "fixed point:\n";
        print_witness(*r.witness);
    }
    Machine m;
    m.add("afpp", r.holds);
    m.print();
    return r.holds ? 0 : 1;
}

int cmd_universal(const std::string& path, const SearchLimits& limits) {
    DigitalMap f = read_map_file(path);
    UniversalResult r = is_universal(f, limits);
    if (r.universal) {
        std::cout << "universal\n";
    } else {
        std::cout << "not universal; continuous map avoiding f up to adjacency:\n";
        print_witness(*r.counterexample);
    }
    Machine m;
    m.add("universal", r.universal);
    m.print();
    return r.universal ? 0 : 1;
}

int cmd_dominating(const std::string& path, const std::vector<int>& subset) {
    DigitalImage img = read_image_file(path);
    bool ok = is_dominating(subset, img);
    std::cout << (ok ? "dominating\n" : "not dominating\n");
    Machine m;
    m.add("dominating", ok);
    m.print();
    return ok ? 0 : 1;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& params,
                  const std::string& out_path) {
    DigitalImage img = [&] {
        if (kind == "interval") {
            if (params.size() != 2) throw InputError("construct interval: expected <a> <b>");
            return interval(parse_int(params[0], "interval a"), parse_int(params[1], "interval b"));
        }
        if (kind == "scc") {
            if (params.size() != 1) throw InputError("construct scc: expected <m>");
            return scc(static_cast<int>(parse_int(params[0], "scc m")));
        }
        if (kind == "sphere") {
            if (params.size() != 1) throw InputError("construct sphere: expected <n>");
            return sphere(static_cast<int>(parse_int(params[0], "sphere n")));
        }
        if (kind == "cube") {
            if (params.empty()) throw InputError("construct cube: expected <len>...");
            std::vector<std::int64_t> lengths;
            for (const std::string& p : params) lengths.push_back(parse_int(p, "cube length"));
            return cube(lengths);
        }
        if (kind == "wedge") {
            if (params.size() != 4)
                throw InputError("construct wedge: expected <A.dig> <a0-index> <B.dig> <b0-index>");
            DigitalImage a = read_image_file(params[0]);
            DigitalImage b = read_image_file(params[2]);
            std::int64_t ia = parse_int(params[1], "wedge a0-index");
            std::int64_t ib = parse_int(params[3], "wedge b0-index");
            if (ia < 0 || ia >= a.size()) throw InputError("construct wedge: a0-index out of range");
            if (ib < 0 || ib >= b.size()) throw InputError("construct wedge: b0-index out of range");
            return DigitalImage(*wedge(a, a.point(static_cast<int>(ia)), b,
                                       b.point(static_cast<int>(ib)))
                                     .image);
        }
        if (kind == "product") {
            if (params.size() < 2) throw InputError("construct product: expected two or more image files");
            std::vector<DigitalImage> factors;
            for (const std::string& p : params) factors.push_back(read_image_file(p));
            return product(factors);
        }
        throw InputError("construct: unknown kind \"" + kind + "\"");
    }();

    write_image_file(out_path, img);
    std::cout << "wrote " << out_path << " (" << img.size() << " points, "
              << img.edge_list().size() << " edges)\n";
    Machine m;
    m.add("points", static_cast<std::int64_t>(img.size()));
    m.add("edges", static_cast<std::uint64_t>(img.edge_list().size()));
    m.add("path", out_path);
    m.print();
    return 0;
}

int cmd_paper_checks(const std::string& only, const SearchLimits& limits) {
    std::vector<CheckResult> results;
    if (only.empty()) {
        for (const CheckInfo& info : check_list()) {
            CheckResult r = run_check(info.id, limits);
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " [criterion " << r.criterion
                      << "] " << r.detail << '\n';
            results.push_back(std::move(r));
        }
    } else {
        CheckResult r = run_check(only, limits);
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " [criterion " << r.criterion
                  << "] " << r.detail << '\n';
        results.push_back(std::move(r));
    }
    std::uint64_t failed = 0;
    for (const CheckResult& r : results)
        if (!r.passed) ++failed;
    Machine m;
    m.add("total", static_cast<std::uint64_t>(results.size()));
    m.add("passed", static_cast<std::uint64_t>(results.size() - failed));
    m.add("failed", failed);
    m.print();
    return failed == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"digital topology toolkit: adjacency, continuous maps, homology, and "
                 "fixed-point analysis"};
    app.require_subcommand(1);

    SearchLimits limits;
    app.add_option("--jobs", limits.jobs, "parallel search workers (output is identical for all values)")
        ->check(CLI::Range(1, 1024));
    app.add_option("--budget", limits.node_budget, "search node budget")
        ->envname("DIGITOP_BUDGET")
        ->check(CLI::PositiveNumber);

    std::string img_path, map_path, kind, out_path, only;
    std::vector<std::string> params;
    std::vector<int> subset;
    int max_dim = -1;
    int degree_n = 0;

    auto* c_components = app.add_subcommand("components", "connected components of an image");
    c_components->add_option("image", img_path, "DIGIMG file")->required();

    auto* c_cont = app.add_subcommand("check-continuous", "test a map for digital continuity");
    c_cont->add_option("map", map_path, "DIGMAP file")->required();

    auto* c_hom = app.add_subcommand("homology", "homology groups of the clique complex");
    c_hom->add_option("image", img_path, "DIGIMG file")->required();
    c_hom->add_option("--max-dim", max_dim, "print groups up to this dimension");

    auto* c_euler = app.add_subcommand("euler", "Euler characteristic of the clique complex");
    c_euler->add_option("image", img_path, "DIGIMG file")->required();

    auto* c_lef = app.add_subcommand("lefschetz", "Lefschetz number of a continuous self-map");
    c_lef->add_option("selfmap", map_path, "DIGMAP file with equal domain and codomain")->required();

    auto* c_deg = app.add_subcommand("degree", "degree of a self-map on H_n");
    c_deg->add_option("selfmap", map_path, "DIGMAP file with equal domain and codomain")->required();
    c_deg->add_option("--n", degree_n, "homology dimension")->required();

    auto* c_fpp = app.add_subcommand("fpp", "fixed point property");
    c_fpp->add_option("image", img_path, "DIGIMG file")->required();

    auto* c_afpp = app.add_subcommand("afpp", "approximate fixed point property");
    c_afpp->add_option("image", img_path, "DIGIMG file")->required();

    auto* c_univ = app.add_subcommand("universal", "universality of a continuous map");
    c_univ->add_option("map", map_path, "DIGMAP file")->required();

    auto* c_dom = app.add_subcommand("dominating", "test a point set for domination");
    c_dom->add_option("image", img_path, "DIGIMG file")->required();
    c_dom->add_option("--subset", subset, "point indices in canonical order")->required();

    auto* c_make = app.add_subcommand("construct", "build a named image and write it to a file");
    c_make->add_option("kind", kind, "interval|scc|sphere|cube|wedge|product")->required();
    c_make->add_option("params", params, "kind-specific parameters");
    c_make->add_option("-o,--output", out_path, "output DIGIMG file")->required();

    auto* c_checks = app.add_subcommand("paper-checks", "run the reproduction suite");
    c_checks->add_option("--only", only, "run a single check by id");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_components->parsed()) return cmd_components(img_path);
    if (c_cont->parsed()) return cmd_check_continuous(map_path);
    if (c_hom->parsed()) return cmd_homology(img_path, max_dim);
    if (c_euler->parsed()) return cmd_euler(img_path);
    if (c_lef->parsed()) return cmd_lefschetz(map_path);
    if (c_deg->parsed()) return cmd_degree(map_path, degree_n);
    if (c_fpp->parsed()) return cmd_fpp(img_path, limits);
    if (c_afpp->parsed()) return cmd_afpp(img_path, limits);
    if (c_univ->parsed()) return cmd_universal(map_path, limits);
    if (c_dom->parsed()) return cmd_dominating(img_path, subset);
    if (c_make->parsed()) return cmd_construct(kind, params, out_path);
    if (c_checks->parsed()) return cmd_paper_checks(only, limits);
    throw InputError("no subcommand given");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const digitop::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const digitop::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const digitop::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const digitop::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
