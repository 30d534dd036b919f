#include "doctest.h"
#include "helpers.hpp"
#include "hampreserve/connectivity.hpp"
#include "hampreserve/instances.hpp"

using namespace hp;
using namespace hpt;

TEST_CASE("the generator PRNG is the fixed xorshift64* stream") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(0), d(1);
    CHECK(c.next() != d.next());  // seed 0 is remapped, not degenerate
    Rng e(7);
    for (int i = 0; i < 1000; ++i) CHECK(e.below(13) < 13);
}

TEST_CASE("dense random instances respect the degree floor") {
    Graph g = gen_dirac(10, 1);
    CHECK(g.min_degree() >= 5);
    Graph h = gen_dirac(17, 3, 2);
    CHECK(h.min_degree() >= 9 + 2);
}

TEST_CASE("the order-3 instance is forced to a triangle") {
    CHECK(gen_dirac(3, 5) == complete(3));
}

TEST_CASE("generation is deterministic in the seed") {
    CHECK(gen_dirac(30, 77) == gen_dirac(30, 77));
    CHECK(gen_dirac(30, 77) != gen_dirac(30, 78));
    CHECK(gen_barbell_dirac(24, 3, 9) == gen_barbell_dirac(24, 3, 9));
}

TEST_CASE("barbell instances pin both delta and kappa") {
    Graph g = gen_barbell_dirac(20, 2, 1);
    CHECK(2 * g.min_degree() >= 20);
    CHECK(kappa(g) == 2);

    Graph h = gen_barbell_dirac(24, 3, 2, true);
    CHECK(2 * h.min_degree() >= 24);
    CHECK(kappa(h) == 3);
}

TEST_CASE("the planted barbell partition sits in the separation window") {
    Graph g = gen_barbell_dirac(24, 3, 3);
    VertexCut cut = min_vertex_cut(g);
    CHECK(cut.cut.size() == 3);
    int n1 = int(std::min(cut.side_a.size(), cut.side_b.size()));
    // the smaller side of a Dirac separation cannot drop below n/2 - |W| + 1
    CHECK(n1 >= 24 / 2 - 3 + 1);
}

TEST_CASE("infeasible barbell parameters are rejected") {
    CHECK_THROWS_AS(gen_barbell_dirac(20, 10, 1), DomainError);
    CHECK_THROWS_AS(gen_barbell_dirac(14, 2, 1), DomainError);  // below 4k+8
    CHECK_THROWS_AS(gen_barbell_dirac(21, 2, 1), DomainError);  // odd n at k=2
}

TEST_CASE("identified-clique instances have the advertised degree and cut") {
    Graph g = gen_ch_tightness(9, 2);
    CHECK(g.order() == 9);
    CHECK(g.min_degree() == 4);
    CHECK(kappa(g) == 1);

    Graph h = gen_ch_tightness(10, 3);
    CHECK(h.min_degree() == 5);
    CHECK(kappa(h) == 2);
}

TEST_CASE("identified-clique parameter validation") {
    CHECK_THROWS_AS(gen_ch_tightness(10, 2), DomainError);  // n + k even
    CHECK_THROWS_AS(gen_ch_tightness(4, 3), DomainError);   // below k + 3
}

TEST_CASE("instance headers carry the generation parameters") {
    InstanceSpec spec{"barbell", 24, 3, 1, 99, 0};
    std::string h = spec.header();
    CHECK(h.find("family=barbell") != std::string::npos);
    CHECK(h.find("n=24") != std::string::npos);
    CHECK(h.find("seed=99") != std::string::npos);
}
