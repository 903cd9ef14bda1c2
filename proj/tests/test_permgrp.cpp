#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "qgroups/bigint.hpp"
#include "qgroups/bsgs.hpp"
#include "qgroups/perm.hpp"

using namespace qg;

namespace {
Perm cycle(std::uint32_t n) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Perm(std::move(img));
}
Perm swap01(std::uint32_t n) {
    Perm p(n);
    std::vector<std::uint32_t> img = p.images();
    std::swap(img[0], img[1]);
    return Perm(std::move(img));
}
} // namespace

TEST_CASE("BigUint arithmetic") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(9196830720ull).to_string() == "9196830720");
    CHECK(BigUint::from_decimal("27590492160") == BigUint(27590492160ull));
    BigUint b(1);
    for (int i = 0; i < 64; ++i) b.mul_small(2);
    CHECK(b.to_string() == "18446744073709551616");
    CHECK(BigUint(3) < b);
    CHECK((BigUint(6) * BigUint(7)).to_u64() == 42);
    CHECK_FALSE(b.fits_u64());
}

TEST_CASE("permutation basics") {
    Perm id(5);
    CHECK(id.is_identity());
    CHECK(element_order(id) == 1);
    Perm c = cycle(5);
    CHECK(c.order() == 5);
    CHECK((c * c.inverse()).is_identity());
    CHECK(c.cycle_string() == "(1 2 3 4 5)");
    CHECK_THROWS(Perm(std::vector<std::uint32_t>{0, 0, 1}));
}

TEST_CASE("composition is left to right") {
    // s: swap 0,1 ; c: 5-cycle.  (s*c)(0) = c(s(0)) = c(1) = 2.
    Perm s = swap01(5), c = cycle(5);
    CHECK((s * c)(0) == 2);
    CHECK((c * s)(0) == 0); // c(0) = 1, then s maps it back
}

TEST_CASE("group order via the stabilizer chain") {
    PermGroup s5({swap01(5), cycle(5)});
    CHECK(s5.order() == BigUint(120));
    PermGroup identity_only({Perm(7)});
    CHECK(identity_only.order() == BigUint(1));
    // A5: 3-cycles
    Perm t3(std::vector<std::uint32_t>{1, 2, 0, 3, 4});
    Perm t3b(std::vector<std::uint32_t>{0, 1, 3, 4, 2});
    CHECK(PermGroup({t3, t3b}).order() == BigUint(60));
}

TEST_CASE("order is invariant under generator shuffles and padding") {
    std::mt19937 rng(5);
    std::vector<Perm> gens = {swap01(6), cycle(6)};
    BigUint want = PermGroup(gens).order();
    for (int i = 0; i < 10; ++i) {
        std::vector<Perm> shuffled = gens;
        shuffled.push_back(gens[static_cast<std::size_t>(i) % 2] * gens[0]); // redundant
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(PermGroup(shuffled).order() == want);
    }
}

TEST_CASE("membership by sifting is sound on random words") {
    PermGroup s5({swap01(5), cycle(5)});
    std::mt19937 rng(17);
    Perm w(5);
    for (int i = 0; i < 100; ++i) {
        w = w * (rng() % 2 ? s5.generators()[0] : s5.generators()[1]);
        CHECK(s5.contains(w));
    }
    // odd permutations are not in A5
    Perm t3(std::vector<std::uint32_t>{1, 2, 0, 3, 4});
    Perm t3b(std::vector<std::uint32_t>{0, 1, 3, 4, 2});
    PermGroup a5({t3, t3b});
    CHECK_FALSE(a5.contains(swap01(5)));
}

TEST_CASE("is_central") {
    Perm r = cycle(4);
    PermGroup c4({r});
    CHECK(c4.is_central(r * r));
    PermGroup s4({swap01(4), cycle(4)});
    CHECK_FALSE(s4.is_central(swap01(4)));
    CHECK(s4.is_central(Perm(4)));
}

TEST_CASE("exhaustive search streams every element") {
    PermGroup s5({swap01(5), cycle(5)});
    auto all = s5.exhaustive_search([](const Perm&) { return true; });
    CHECK(all.size() == 120);
    // no duplicates
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    auto none = s5.exhaustive_search([](const Perm&) { return false; });
    CHECK(none.empty());
    auto order5 = s5.exhaustive_search([](const Perm& p) { return p.order() == 5; });
    CHECK(order5.size() == 24);
    CHECK_THROWS(s5.exhaustive_search([](const Perm&) { return true; }, 100));
}

TEST_CASE("normal closure") {
    // in S4 the closure of a double transposition is the Klein group
    Perm dt(std::vector<std::uint32_t>{1, 0, 3, 2});
    auto nc = normal_closure_generators({swap01(4), cycle(4)}, {dt});
    CHECK(PermGroup(nc).order() == BigUint(4));
}

TEST_CASE("evaluate maps words through an assignment") {
    Alphabet a({"x", "y"});
    std::vector<Perm> assign = {swap01(3), cycle(3)};
    Perm xy = evaluate(parse_word("xy", a), assign);
    CHECK(xy == assign[0] * assign[1]);
    CHECK(evaluate(Word(a), assign).is_identity());
    CHECK_THROWS(evaluate(parse_word("x", a), std::vector<Perm>{swap01(3)}));
}
