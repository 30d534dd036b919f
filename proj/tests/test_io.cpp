#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "hampreserve/io.hpp"

using namespace hp;
using namespace hpt;

TEST_CASE("edge-list round trip") {
    Graph g = complete_bipartite(2, 3);
    std::ostringstream out;
    write_edge_list(out, g, "sample header");
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);
    CHECK(out.str().find("# sample header") != std::string::npos);
}

TEST_CASE("edge-list format with comments") {
    std::istringstream in(
        "# comment\n"
        "4 3\n"
        "0 1\n"
        "# midway\n"
        "1 2\n"
        "2 3\n");
    Graph g = read_graph(in);
    CHECK(g == path(4));
}

TEST_CASE("DIMACS format is 1-indexed") {
    std::istringstream in(
        "c header\n"
        "p edge 3 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 1 3\n");
    CHECK(read_graph(in) == complete(3));
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad("3 2\n0 1\n0 9\n");
    try {
        read_graph(bad);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    std::istringstream garbage("hello\n");
    CHECK_THROWS_AS(read_graph(garbage), ParseError);
}

TEST_CASE("empty graph writes and reads") {
    std::ostringstream out;
    write_edge_list(out, Graph(5));
    std::istringstream in(out.str());
    Graph g = read_graph(in);
    CHECK(g.order() == 5);
    CHECK(g.size() == 0);
}
