#include <catch2/catch_amalgamated.hpp>

#include "qgroups/catalog.hpp"

using namespace qg;

TEST_CASE("every catalog entry loads and parses") {
    for (const auto& name : catalog_names()) {
        INFO(name);
        const CatalogEntry& e = catalog(name);
        CHECK(e.name == name);
        CHECK(e.presentation.alphabet.size() > 0);
        // every distinguished word parsed against the entry's alphabet (the
        // loader would have thrown otherwise); none may be secretly trivial
        for (const auto& [wname, w] : e.words) {
            INFO(wname);
            CHECK_FALSE(w.empty());
        }
    }
    CHECK_THROWS_AS(catalog("NOPE"), catalog_error);
}

TEST_CASE("catalog entries extend their preset graphs") {
    struct Row {
        const char* entry;
        const char* preset;
    };
    for (auto [entry, preset] : {Row{"H36", "Q_111"}, Row{"H36_STAR", "Q_111"},
                                 Row{"G63", "Q_211"}, Row{"WE7", "Y_321"},
                                 Row{"Y331A", "Y_331"}, Row{"K", "Q_221"},
                                 Row{"G1", "Q_222"}, Row{"G2", "Q_222"}, Row{"G3", "Q_222"}}) {
        INFO(entry);
        const CatalogEntry& e = catalog(entry);
        Presentation cox = coxeter_presentation(preset_graph(preset));
        REQUIRE(e.presentation.alphabet == cox.alphabet);
        for (const Word& r : cox.relators) {
            bool found = false;
            for (const Word& s : e.presentation.relators) found |= (s == r);
            CHECK(found);
        }
    }
}

TEST_CASE("the rel(i) chain is literally nested where it shares relators") {
    const auto& g1 = catalog("G1");
    const auto& g2 = catalog("G2");
    const auto& g3 = catalog("G3");
    auto contains = [](const CatalogEntry& big, const Word& w) {
        for (const Word& s : big.presentation.relators)
            if (s == w) return true;
        return false;
    };
    // rel(3) relators all appear in rel(2)'s presentation
    for (const Word& r : g3.presentation.relators) CHECK(contains(g2, r));
    // the shared relators of rel(1): everything of rel(2) except R, with z_i
    // in place of R
    for (const Word& r : g2.presentation.relators)
        if (!(r == g2.word("R"))) CHECK(contains(g1, r));
    for (const char* z : {"z1", "z2", "z3"}) CHECK(contains(g1, g1.word(z)));
    CHECK(contains(g1, g1.word("m_a")));
    CHECK(contains(g1, g1.word("m_e")));
    CHECK_FALSE(contains(g1, g1.word("R")));
}

TEST_CASE("named facts carry their expected values") {
    CHECK(catalog("H36").fact_u64("order") == 174960);
    CHECK(catalog("H36").fact_u64("center-order") == 3);
    CHECK(catalog("H36_STAR").fact_u64("order") == 58320);
    CHECK(catalog("G63").fact_u64("order") == 13063680);
    CHECK(catalog("WE7").fact_u64("order") == 2903040);
    CHECK(catalog("Y331A").fact_u64("index-over-we7") == 128);
    CHECK(catalog("K").fact_u64("index-over-ra") == 5632);
    CHECK(catalog("K").fact_u64("u6-order") == 9196830720ull);
    const ExpectedFact* f = catalog("H36").fact("order");
    REQUIRE(f != nullptr);
    CHECK(f->tag == "source");
}

TEST_CASE("distinguished word spot checks") {
    const auto& g1 = catalog("G1");
    CHECK(g1.word("z1").size() == 63);
    CHECK(g1.word("z2").size() == 63);
    CHECK(g1.word("m_a").size() == 30);
    CHECK(g1.word("V").empty() == false);
    // the length-9 conjugate generators
    CHECK(g1.word("A").size() == 9);
    CHECK(g1.word("C").size() == 9);
    CHECK(g1.word("E").size() == 9);
    // e' expressed through a^o parses over the nine-letter alphabet
    CHECK_FALSE(g1.word("ep_via_ao").empty());
    CHECK_FALSE(g1.word("L_ao").empty());
    const auto& k = catalog("K");
    CHECK(k.word("eo").size() == 33);
    CHECK_FALSE(k.word("mu_e").empty());
    // the phi correspondence is shipped as data on the E side
    CHECK(catalog("ESIDE").fact("phi-a") != nullptr);
    CHECK(catalog("ESIDE").fact("phi-a")->value == "c2");
}
