#include <catch2/catch_amalgamated.hpp>

#include "qgroups/coxeter.hpp"

using namespace qg;

TEST_CASE("preset graphs match the hardcoded manifest") {
    struct Row {
        const char* name;
        std::size_t nodes, edges;
    };
    // node and edge counts of the source figures
    const Row manifest[] = {
        {"Q_111", 6, 6}, {"Q_211", 7, 7}, {"Q_221", 8, 8}, {"Q_222", 9, 9},
        {"Y_321", 7, 6}, {"Y_331", 8, 7}, {"Y_333", 10, 9},
    };
    for (const Row& r : manifest) {
        CoxeterGraph g = preset_graph(r.name);
        INFO(r.name);
        CHECK(g.node_count() == r.nodes);
        CHECK(g.edge_count() == r.edges);
    }
    CHECK_THROWS(preset_graph("Q_999"));
}

TEST_CASE("Q_222 adjacency: hexagon plus three arms") {
    CoxeterGraph g = preset_graph("Q_222");
    for (auto [u, v] : {std::pair{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                        {"e", "f"}, {"f", "a"}, {"a", "a'"}, {"c", "c'"}, {"e", "e'"}}) {
        INFO(u << "-" << v);
        CHECK(g.adjacent(u, v));
        CHECK(g.adjacent(v, u));
    }
    CHECK_FALSE(g.adjacent("a", "e"));
    CHECK_FALSE(g.adjacent("a'", "c'"));
    CHECK_FALSE(g.adjacent("b", "f"));
}

TEST_CASE("Y_321 is the tree a-b-c-d-e with c' on c and e' on e") {
    CoxeterGraph g = preset_graph("Y_321");
    CHECK(g.adjacent("a", "b"));
    CHECK(g.adjacent("b", "c"));
    CHECK(g.adjacent("c", "d"));
    CHECK(g.adjacent("d", "e"));
    CHECK(g.adjacent("c", "c'"));
    CHECK(g.adjacent("e", "e'"));
    CHECK_FALSE(g.adjacent("a", "c"));
}

TEST_CASE("coxeter presentation: braid on edges, commuting elsewhere") {
    SECTION("Q_222 has 36 pair relators, 9 braid") {
        Presentation p = coxeter_presentation(preset_graph("Q_222"));
        CHECK(p.relators.size() == 36);
        int braid = 0, comm = 0;
        for (const Word& r : p.relators) {
            if (r.size() == 6) ++braid;
            if (r.size() == 4) ++comm;
        }
        CHECK(braid == 9);
        CHECK(comm == 27);
    }
    SECTION("Q_111 has 15 pair relators, 6 braid") {
        Presentation p = coxeter_presentation(preset_graph("Q_111"));
        CHECK(p.relators.size() == 15);
        int braid = 0;
        for (const Word& r : p.relators) braid += (r.size() == 6);
        CHECK(braid == 6);
    }
    SECTION("single node has no relators") {
        Presentation p = coxeter_presentation(CoxeterGraph({"g"}, {}));
        CHECK(p.relators.empty());
        CHECK(p.alphabet.involutive());
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS(CoxeterGraph({"a"}, {{"a", "a"}}));
    CHECK_THROWS(CoxeterGraph({"a"}, {{"a", "b"}}));
}
