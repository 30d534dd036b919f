#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "hampreserve/instances.hpp"
#include "hampreserve/oracle.hpp"
#include "hampreserve/preserve.hpp"

using namespace hp;
using namespace hpt;

namespace {

EdgeList all_cycle_edges(const PreserveCertificate& cert) {
    EdgeList out;
    for (const auto& c : cert.cycles)
        for (size_t i = 0; i < c.size(); ++i)
            out.emplace_back(c[i], c[(i + 1) % c.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("crossing-budget split formula") {
    EdgeList ten, three, twenty, two;
    for (int i = 0; i < 10; ++i) ten.emplace_back(i, 10 + i);
    for (int i = 0; i < 3; ++i) three.emplace_back(i, 10 + i);
    for (int i = 0; i < 20; ++i) twenty.emplace_back(i, 20 + i);
    for (int i = 0; i < 2; ++i) two.emplace_back(i, 10 + i);

    CHECK(select_q_split(ten, two, 2, 1) == std::pair{1, 0});
    CHECK(select_q_split(three, two, 2, 1) == std::pair{0, 1});
    CHECK(select_q_split(twenty, {}, 4, 2) == std::pair{2, 0});
    CHECK(select_q_split({}, {}, 0, 3) == std::pair{0, 3});
}

TEST_CASE("crossing pairs from a 2K2 crossing set") {
    // sides {0,1} and {2,3}; crossing edges 0-2 and 1-3 form one pair,
    // adding 0-3 and 1-2 gives two disjoint pairs
    Graph g(4, {{0, 2}, {1, 3}, {0, 3}, {1, 2}});
    EdgeList m_h = g.edges();
    auto pairs = find_q1_pairs(g, m_h, {}, 2);
    REQUIRE(pairs.size() == 2);
    EdgeList used;
    for (const EdgePair& p : pairs) {
        CHECK(edges_independent(p.e1, p.e2));
        used.push_back(p.e1);
        used.push_back(p.e2);
    }
    CHECK(edges_distinct(used));
}

TEST_CASE("a crossing star yields no pairs") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_THROWS(find_q1_pairs(g, g.edges(), {}, 1));
}

TEST_CASE("w-star selection finds two high-crossing cut vertices") {
    Graph g = gen_barbell_dirac(24, 3, 11);
    VertexCut cut = min_vertex_cut(g);
    SeparationStructure sep{cut.cut, cut.side_a, cut.side_b};
    VertexSet a = VertexSet::of(24, cut.side_a);
    VertexSet b = VertexSet::of(24, cut.side_b);
    VertexSet w = VertexSet::of(24, cut.cut);
    PathSystem ps = covering_bridge_flow(g, a, b, w, 3, false);
    BridgeSystem bridge;
    bridge.paths = ps;
    bridge.b_edges = ps.all_edges();

    WStarSelection sel = find_w_stars(g, sep, bridge, 1);
    CHECK(sel.w_star1 != sel.w_star2);
    CHECK(std::count(cut.cut.begin(), cut.cut.end(), sel.w_star1) == 1);
    CHECK(std::count(cut.cut.begin(), cut.cut.end(), sel.w_star2) == 1);
    REQUIRE(sel.ends.size() == 1);
    auto [uo, ue, vo, ve] = sel.ends[0];
    CHECK(g.has_edge(uo, sel.w_star1));
    CHECK(g.has_edge(vo, sel.w_star1));
    CHECK(g.has_edge(ue, sel.w_star2));
    CHECK(g.has_edge(ve, sel.w_star2));
}

TEST_CASE("one preserving cycle in K7 leaves a 4-connected remainder") {
    Graph g = complete(7);
    PreserveCertificate cert = preserve_one(g, 2);
    REQUIRE(cert.cycles.size() == 1);
    CHECK(is_ham_cycle(g, cert.cycles[0]));
    Graph rem = remove_edges(g, all_cycle_edges(cert));
    CHECK(kappa(rem) == 4);
    CHECK(cert.kappa_after == 4);
    CHECK(verify_certificate(g, cert, 2, false).pass);
}

TEST_CASE("one preserving cycle on a planted barbell") {
    Graph g = gen_barbell_dirac(40, 2, 21);
    PreserveCertificate cert = preserve_one(g, 2);
    CHECK(verify_certificate(g, cert, 2, false).pass);
    CHECK(cert.bounds_ok);
}

TEST_CASE("repaired runs retain the bridge and log their stages") {
    // starving the extraction budget forces the repair machinery
    PreserveOptions opts;
    opts.extraction_budget = 1;
    bool repaired_seen = false;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = gen_barbell_dirac(96, 3, seed);
        PreserveCertificate cert = preserve_many(g, 3, 2, opts);
        REQUIRE(verify_certificate(g, cert, 3, false).pass);
        if (!cert.repaired) continue;
        repaired_seen = true;
        CHECK_FALSE(cert.bridge.empty());
        CHECK(cert.cut.size() == 3);
        bool logged = false;
        for (const auto& line : cert.stage_log)
            if (line.find("repair") != std::string::npos) logged = true;
        CHECK(logged);
        // bridge edges must survive in the remainder
        Graph rem = remove_edges(g, all_cycle_edges(cert));
        for (const Edge& e : cert.bridge) CHECK(rem.has_edge(e));
    }
    CHECK(repaired_seen);
}

TEST_CASE("small orders below the constructive threshold still succeed") {
    // order-7 Dirac graphs sit below every constructive bound; the honest
    // fallback must still deliver a preserving cycle for 2-connected inputs
    Graph g = remove_edges(complete(7), {{0, 1}, {2, 3}, {4, 5}});
    PreserveCertificate cert = preserve_one(g, 2);
    CHECK(verify_certificate(g, cert, 2, false).pass);
    CHECK_FALSE(cert.bounds_ok);
}

TEST_CASE("preserve_one rejects bad arguments") {
    CHECK_THROWS_AS(preserve_one(complete(7), 1), DomainError);
    CHECK_THROWS_AS(preserve_one(cycle(8), 2), DomainError);       // not Dirac
    CHECK_THROWS_AS(preserve_one(gen_ch_tightness(9, 2), 2), DomainError);
}

TEST_CASE("two preserving cycles in K11") {
    Graph g = complete(11);
    PreserveCertificate cert = preserve_many(g, 2, 2);
    REQUIRE(cert.cycles.size() == 2);
    EdgeList used = all_cycle_edges(cert);
    CHECK(edges_distinct(used));
    Graph rem = remove_edges(g, used);
    for (int v = 0; v < 11; ++v) CHECK(rem.degree(v) == 6);
    CHECK(verify_certificate(g, cert, 2, false).pass);
}

TEST_CASE("two preserving cycles on a large barbell") {
    Graph g = gen_barbell_dirac(96, 3, 4);
    PreserveCertificate cert = preserve_many(g, 3, 2);
    CHECK(verify_certificate(g, cert, 3, false).pass);
}

TEST_CASE("a single-cycle request delegates") {
    Graph g = complete(9);
    PreserveCertificate one = preserve_one(g, 2);
    PreserveCertificate many = preserve_many(g, 2, 1);
    CHECK(one.cycles == many.cycles);
}

TEST_CASE("exact preservation keeps connectivity equal, not just bounded") {
    Graph g = gen_barbell_dirac(30, 2, 8);
    PreserveCertificate cert = preserve_exact(g, 1);
    CHECK(cert.kappa_before == 2);
    CHECK(cert.kappa_after == 2);
    Graph rem = remove_edges(g, all_cycle_edges(cert));
    CHECK(kappa(rem) == 2);
    CHECK(verify_certificate(g, cert, 2, true).pass);
}

TEST_CASE("exact preservation with three cycles at kappa 3") {
    Graph g = gen_barbell_dirac(60, 3, 5);
    PreserveCertificate cert = preserve_exact(g, 3);
    REQUIRE(cert.cycles.size() == 3);
    CHECK(edges_distinct(all_cycle_edges(cert)));
    CHECK(cert.kappa_after == 3);
    CHECK(verify_certificate(g, cert, 3, true).pass);
}

TEST_CASE("complete graphs are outside the exact-preservation domain") {
    CHECK_THROWS_AS(preserve_exact(complete(12), 1), DomainError);
}

TEST_CASE("certificates survive a JSON round trip") {
    Graph g = complete(7);
    PreserveCertificate cert = preserve_one(g, 2);
    PreserveCertificate back = PreserveCertificate::from_json(cert.to_json());
    CHECK(back.input_hash == cert.input_hash);
    CHECK(back.cycles == cert.cycles);
    CHECK(back.kappa_after == cert.kappa_after);
    CHECK(back.exact == cert.exact);
    CHECK(cert.to_json()["schema"] == "preserve-cert/1");
}
