#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hampreserve/connectivity.hpp"
#include "hampreserve/edge_pairs.hpp"
#include "hampreserve/instances.hpp"
#include "hampreserve/io.hpp"
#include "hampreserve/oracle.hpp"
#include "hampreserve/preserve.hpp"
#include "hampreserve/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

uint64_t default_seed() {
    if (const char* env = std::getenv("HAMPRESERVE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_kappa(const std::string& input, bool show_cut) {
    hp::Graph g = hp::read_graph_file(input);
    std::cout << "kappa " << hp::kappa(g) << "\n";
    if (show_cut) {
        if (g.is_complete()) {
            std::cout << "cut: none (complete graph)\n";
        } else {
            hp::VertexCut cut = hp::min_vertex_cut(g);
            std::cout << "cut: " << join(cut.cut) << "\n";
            std::cout << "sides: " << cut.side_a.size() << " / "
                      << cut.side_b.size() << "\n";
        }
    }
    return kExitOk;
}

int cmd_pairs(const std::string& input, bool want_max, bool want_decompose) {
    hp::Graph g = hp::read_graph_file(input);
    if (want_decompose) {
        try {
            hp::PairDecomposition d = hp::decompose_into_pairs(g);
            std::cout << "decomposition: " << d.size() << " pairs\n";
            for (const hp::EdgePair& p : d)
                std::cout << "  (" << p.e1.u << "-" << p.e1.v << ", " << p.e2.u
                          << "-" << p.e2.v << ")\n";
        } catch (const hp::DomainError& e) {
            std::cout << "not decomposable: " << e.what() << "\n";
            return kExitFail;
        }
    }
    if (want_max) {
        try {
            auto [count, pairs] = hp::max_edge_disjoint_pairs(g);
            std::cout << "max pairs: " << count << "\n";
            for (const hp::EdgePair& p : pairs)
                std::cout << "  (" << p.e1.u << "-" << p.e1.v << ", " << p.e2.u
                          << "-" << p.e2.v << ")\n";
        } catch (const hp::ExceptionalInputError& e) {
            std::cout << "exceptional: " << e.what() << "\n";
            return kExitFail;
        }
    }
    return kExitOk;
}

int cmd_preserve(const std::string& input, int k, int ell, bool exact,
                 const std::string& out) {
    hp::Graph g = hp::read_graph_file(input);
    hp::PreserveCertificate cert;
    if (exact)
        cert = hp::preserve_exact(g, ell);
    else if (ell > 1)
        cert = hp::preserve_many(g, k, ell);
    else
        cert = hp::preserve_one(g, k);

    int target = exact ? cert.kappa_before : k;
    hp::VerificationReport rep = hp::verify_certificate(g, cert, target, exact);
    for (const std::string& line : cert.stage_log) std::cout << line << "\n";
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write " << out << "\n";
            return kExitInput;
        }
        f << cert.to_json().dump(2) << "\n";
        std::cout << "certificate written to " << out << "\n";
    }
    std::cout << (rep.pass ? "verified" : "verification FAILED") << "\n";
    return rep.pass ? kExitOk : kExitFail;
}

int cmd_gen(const std::string& family, int n, int k, uint64_t seed, int surplus,
            bool rich, const std::string& out) {
    hp::InstanceSpec spec;
    spec.family = family;
    spec.n = n;
    spec.k = k;
    spec.seed = seed;
    spec.surplus = surplus;
    hp::Graph g(0);
    if (family == "dirac")
        g = hp::gen_dirac(n, seed, surplus);
    else if (family == "barbell")
        g = hp::gen_barbell_dirac(n, k, seed, rich);
    else if (family == "ch-tight")
        g = hp::gen_ch_tightness(n, k);
    else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitInput;
    }
    if (out.empty())
        hp::write_edge_list(std::cout, g, spec.header());
    else {
        hp::write_edge_list_file(out, g, spec.header());
        std::cout << "wrote " << out << " (n=" << g.order() << " m=" << g.size()
                  << ")\n";
    }
    return kExitOk;
}

int cmd_experiment(const std::string& name, int trials, uint64_t seed,
                   int jobs) {
    std::vector<std::string> names =
        name == "all" ? hp::suite_names() : std::vector<std::string>{name};
    bool all_pass = true;
    for (const std::string& s : names) {
        hp::SuiteResult r = hp::run_suite(s, trials, seed, jobs);
        std::printf("%-18s %s  checked=%lld failures=%lld  %.1fs  %s\n",
                    r.name.c_str(), r.pass ? "pass" : "FAIL", r.checked,
                    r.failures, r.seconds, r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connectivity-preserving Hamiltonian cycle toolkit"};
    app.require_subcommand(1);
    uint64_t seed = default_seed();

    std::string input, out, family, suite;
    bool show_cut = false, want_max = false, want_decompose = false;
    bool exact = false, rich = false;
    int k = 2, ell = 1, n = 0, surplus = 0, trials = 0, jobs = 1;

    auto* kap = app.add_subcommand("kappa", "vertex connectivity of a graph");
    kap->add_option("input", input, "graph file")->required();
    kap->add_flag("--cut", show_cut, "also print a minimum vertex cut");

    auto* pr = app.add_subcommand("pairs", "edge-disjoint edge-pair results");
    pr->add_option("input", input, "graph file")->required();
    pr->add_flag("--max", want_max, "maximum number of edge-disjoint pairs");
    pr->add_flag("--decompose", want_decompose, "full pair decomposition");

    auto* pv = app.add_subcommand(
        "preserve", "extract connectivity-preserving Hamiltonian cycles");
    pv->add_option("input", input, "graph file")->required();
    pv->add_option("--k", k, "connectivity to keep (default 2)");
    pv->add_option("--ell", ell, "number of cycles (default 1)");
    pv->add_flag("--exact", exact, "keep connectivity exactly equal");
    pv->add_option("--out", out, "write the certificate JSON here");

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("family", family, "dirac | barbell | ch-tight")->required();
    gen->add_option("--n", n, "order")->required();
    gen->add_option("--k", k, "planted connectivity (barbell, ch-tight)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--surplus", surplus, "extra degree floor (dirac)");
    gen->add_flag("--crossing-rich", rich, "barbell hub variant");
    gen->add_option("--out", out, "output file (default stdout)");

    auto* exp = app.add_subcommand("experiment", "run an acceptance suite");
    std::string names;
    for (const auto& s : hp::suite_names()) names += s + " ";
    exp->add_option("suite", suite, "suite name, or 'all'; one of: " + names)
        ->required();
    exp->add_option("--trials", trials, "0 = suite default");
    exp->add_option("--seed", seed, "base seed");
    exp->add_option("--jobs", jobs, "parallel trial workers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kap) return cmd_kappa(input, show_cut);
        if (*pr) {
            if (!want_max && !want_decompose) {
                std::cerr << "pairs: need --max and/or --decompose\n";
                return kExitInput;
            }
            return cmd_pairs(input, want_max, want_decompose);
        }
        if (*pv) return cmd_preserve(input, k, ell, exact, out);
        if (*gen) return cmd_gen(family, n, k, seed, surplus, rich, out);
        if (*exp) return cmd_experiment(suite, trials, seed, jobs);
    } catch (const hp::InternalConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const hp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const hp::DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}
