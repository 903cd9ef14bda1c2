#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qgroups/catalog.hpp"
#include "qgroups/coset_table.hpp"
#include "qgroups/perm.hpp"

using namespace qg;

namespace {
Presentation braid_chain(int n) {
    // chain of n involutions with braid edges: the symmetric group S_{n+1}
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
    return coxeter_presentation(CoxeterGraph(names, edges));
}
} // namespace

TEST_CASE("single involution gives index 2 and one transposition") {
    Presentation p(Alphabet({"g"}), {});
    CosetTable t = enumerate(p);
    CHECK(t.index == 2);
    auto perms = perm_images(t);
    REQUIRE(perms.size() == 1);
    CHECK(perms[0].cycle_string() == "(1 2)");
}

TEST_CASE("small symmetric groups by chain presentations") {
    CHECK(enumerate(braid_chain(2)).index == 6);
    CHECK(enumerate(braid_chain(3)).index == 24);
    CHECK(enumerate(braid_chain(4)).index == 120);
}

TEST_CASE("subgroup enumeration fixes coset 1") {
    Presentation p = braid_chain(2); // S_3
    std::vector<Word> sub = {parse_word("s0", p.alphabet)};
    CosetTable t = enumerate(p, sub);
    CHECK(t.index == 3);
    CHECK(t.trace(1, sub[0]) == 1);
    CHECK(validate(t, p, sub).ok());
}

TEST_CASE("strategies produce the identical standardized table") {
    for (const Presentation& p : {braid_chain(3), coxeter_presentation(preset_graph("Q_111"))}) {
        EnumerationLimits hlt;
        EnumerationLimits felsch;
        felsch.strategy = TcStrategy::DefinitionFirst;
        // Q_111 alone is infinite; cut it down with the hexagon relator
        Presentation q = p;
        if (q.alphabet.size() == 6 && q.alphabet.find("f") >= 0)
            q.relators.push_back(parse_word("(adbecf)^4", q.alphabet));
        CosetTable a = enumerate(q, {}, hlt);
        CosetTable b = enumerate(q, {}, felsch);
        CHECK(a.index == b.index);
        CHECK(a.action == b.action);
    }
}

TEST_CASE("involutive alphabets give involution images") {
    Presentation p = braid_chain(3);
    CosetTable t = enumerate(p);
    for (const Perm& g : perm_images(t)) {
        CHECK((g * g).is_identity());
        CHECK_FALSE(g.is_identity());
    }
}

TEST_CASE("non-involutive alphabets work through inverse letters") {
    Alphabet a({"x"}, /*involutive=*/false);
    Presentation p(a, {parse_word("x^5", a)});
    CosetTable t = enumerate(p);
    CHECK(t.index == 5);
    CHECK(perm_images(t)[0].order() == 5);
}

TEST_CASE("limit exceeded is an error, not an answer") {
    // the free product Z2 * Z2 * Z2 is infinite
    Presentation p(Alphabet({"x", "y", "z"}), {});
    EnumerationLimits lim;
    lim.max_cosets = 500;
    CHECK_THROWS_AS(enumerate(p, {}, lim), enumeration_limit_exceeded);
}

TEST_CASE("validate flags a corrupted table") {
    Presentation p = braid_chain(2);
    CosetTable t = enumerate(p);
    REQUIRE(t.index == 6);
    CHECK(validate(t, p).ok());
    std::swap(t.action[0][2], t.action[0][3]);
    CHECK_FALSE(validate(t, p).ok());
}

TEST_CASE("table save/load round trip") {
    Presentation p = braid_chain(3);
    CosetTable t = enumerate(p);
    std::stringstream buf;
    t.save(buf);
    CosetTable u = CosetTable::load(buf);
    CHECK(u.index == t.index);
    CHECK(u.action == t.action);
    CHECK(u.alphabet == t.alphabet);
}

TEST_CASE("H36 closes at its full order over the trivial subgroup") {
    const CatalogEntry& e = catalog("H36");
    EnumerationLimits lim;
    lim.max_cosets = 700'000;
    CosetTable t = enumerate(e.presentation, {}, lim);
    CHECK(t.index == 174960);
    CHECK(validate(t, e.presentation).ok());
    for (const Perm& g : perm_images(t)) CHECK((g * g).is_identity());
}
