#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgroups/word.hpp"

using namespace qg;

namespace {
const Alphabet& nine() {
    static const Alphabet a({"a", "b", "c", "d", "e", "f", "a'", "c'", "e'"});
    return a;
}

std::string letters_of(const Word& w) {
    std::string out;
    for (const Letter& l : w.letters()) {
        if (!out.empty()) out += " ";
        out += w.alphabet().name(l.gen);
        if (l.sign < 0) out += "-";
    }
    return out;
}

Word random_word(const Alphabet& a, std::mt19937& rng, int len) {
    std::vector<Letter> ls;
    std::uniform_int_distribution<int> gen(0, a.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < len; ++i)
        ls.push_back(Letter{static_cast<std::int16_t>(gen(rng)),
                            static_cast<std::int16_t>(a.involutive() || sign(rng) ? 1 : -1)});
    return Word(a, std::move(ls));
}
} // namespace

TEST_CASE("conjugation expands to w^-1 x w with involutive reversal") {
    Word c = parse_word("c^{c'dbc}", nine());
    CHECK(letters_of(c) == "c b d c' c c' d b c");
    CHECK(c.size() == 9);

    // the reversal of a'bfa is afba', so the expansion leads with a f b a'
    Word a_conj = parse_word("a^{a'bfa}", nine());
    CHECK(letters_of(a_conj) == "a f b a' a a' b f a");

    CHECK(conjugate(parse_word("a", nine()), Word(nine())) == parse_word("a", nine()));
}

TEST_CASE("powers concatenate and reduce") {
    CHECK(parse_word("(adbecf)^4", nine()).size() == 24);
    CHECK(parse_word("(cc'bdaee')^9", nine()).size() == 63);
    CHECK(power(parse_word("ab", nine()), 0).empty());
    // negative power is the power of the inverse
    CHECK(power(parse_word("ab", nine()), -2) == parse_word("(ba)^2", nine()));
}

TEST_CASE("commutator brackets") {
    CHECK(letters_of(parse_word("[a,b]", nine())) == "a b a b");
}

TEST_CASE("free reduction under an involutive alphabet cancels squares") {
    CHECK(parse_word("abba", nine()).empty());
    CHECK(parse_word("ac'c'a", nine()).empty());
    CHECK(parse_word("aa", nine()).empty());
}

TEST_CASE("inverse") {
    CHECK(inverse(Word(nine())).empty());
    CHECK(inverse(parse_word("abc", nine())) == parse_word("cba", nine()));
    Alphabet free2({"x", "y"}, /*involutive=*/false);
    Word w(free2, {Letter{0, 1}, Letter{1, -1}});
    Word wi = inverse(w);
    REQUIRE(wi.size() == 2);
    CHECK(wi[0] == Letter{1, 1});
    CHECK(wi[1] == Letter{0, -1});
}

TEST_CASE("non-involutive reduction only cancels inverse pairs") {
    Alphabet free1({"x"}, false);
    CHECK(Word(free1, {Letter{0, 1}, Letter{0, 1}}).size() == 2);
    CHECK(Word(free1, {Letter{0, 1}, Letter{0, -1}}).empty());
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_word("axb", nine()), word_error);       // unknown label
    CHECK_THROWS_AS(parse_word("(ab", nine()), word_error);       // malformed
    CHECK_THROWS_AS(parse_word("^3", nine()), word_error);        // exponent on nothing
    CHECK_THROWS_AS(parse_word("ab^", nine()), word_error);       // dangling
    CHECK_THROWS_AS(parse_word("[a b]", nine()), word_error);     // missing comma
}

TEST_CASE("conjugation composes: x^(uv) = (x^u)^v") {
    Word a = parse_word("a", nine());
    CHECK(letters_of(conjugate(a, parse_word("bc", nine()))) == "c b a b c");
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        Word x = random_word(nine(), rng, 4);
        Word u = random_word(nine(), rng, 5);
        Word v = random_word(nine(), rng, 5);
        CHECK(conjugate(x, u * v) == conjugate(conjugate(x, u), v));
    }
}

TEST_CASE("word properties over random words") {
    std::mt19937 rng(7);
    Alphabet free3({"x", "y", "z"}, false);
    for (const Alphabet* a : {&nine(), static_cast<const Alphabet*>(&free3)}) {
        for (int i = 0; i < 300; ++i) {
            Word w = random_word(*a, rng, i % 23);
            // reduction is idempotent and already applied
            CHECK(free_reduce(w) == w);
            CHECK(inverse(inverse(w)) == w);
            CHECK((w * inverse(w)).empty());
            // no adjacent cancelling pair survives
            for (std::size_t j = 0; j + 1 < w.size(); ++j) {
                bool cancels = w[j].gen == w[j + 1].gen &&
                               (a->involutive() || w[j].sign == -w[j + 1].sign);
                CHECK_FALSE(cancels);
            }
        }
    }
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(99);
    Alphabet mixed({"x", "y"}, false);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(nine(), rng, i % 17);
        CHECK(parse_word(w.str(), nine()) == w);
        Word v = random_word(mixed, rng, i % 11);
        CHECK(parse_word(v.str(), mixed) == v);
    }
}

TEST_CASE("alphabet mismatch is an error") {
    Alphabet other({"a", "b"});
    CHECK_THROWS_AS(parse_word("a", nine()) * parse_word("a", other), word_error);
}
