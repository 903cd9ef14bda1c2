#include <catch2/catch_amalgamated.hpp>

#include "qgroups/catalog.hpp"
#include "qgroups/unitary.hpp"

using namespace qg;

namespace {
const HermitianSpace& space() {
    static const HermitianSpace sp;
    return sp;
}
Vec6 v(int i) { return Vec6::basis(i - 1); } // 1-based like the tables
} // namespace

TEST_CASE("GF(4) arithmetic") {
    using namespace gf4;
    CHECK(mul(W, W) == W2);
    CHECK(mul(W, W2) == ONE);
    CHECK(add(W, W2) == ONE);
    CHECK(conj(W) == W2);
    CHECK(conj(ONE) == ONE);
    CHECK(inv(W) == W2);
    CHECK_THROWS(inv(ZERO));
}

TEST_CASE("hermitian form matches the gram data") {
    const auto& sp = space();
    CHECK(sp.herm(v(5), v(3)) == gf4::W);
    CHECK(sp.herm(v(3), v(5)) == gf4::W2); // conjugate symmetry
    CHECK(sp.herm(v(1), v(2)) == 1);
    CHECK(sp.herm(v(1), v(3)) == 0);
    CHECK(sp.herm(v(4) + v(5), v(4) + v(5)) == 0); // isotropic
    for (int i = 1; i <= 6; ++i) CHECK(sp.herm(v(i), v(i)) == 0);
    // sesquilinearity: (v,u) = conj((u,v)) on random-ish combinations
    for (std::uint16_t a = 1; a < 64; a += 7) {
        for (std::uint16_t b = 1; b < 4096; b += 97) {
            Vec6 u{a}, w{b};
            CHECK(sp.herm(w, u) == gf4::conj(sp.herm(u, w)));
        }
    }
}

TEST_CASE("transvections") {
    const auto& sp = space();
    Mat6 t2 = sp.transvection(v(2));
    CHECK(t2.apply(v(1)) == v(1) + v(2));
    CHECK(t2.apply(v(5)) == v(5) + v(2));
    CHECK((t2 * t2).is_identity());
    // scaling invariance
    CHECK(sp.transvection(v(6).scaled(gf4::W)) == sp.transvection(v(6)));
    // form preservation on all basis pairs
    Mat6 ta = sp.transvection(v(4) + v(5));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            CHECK(sp.herm(ta.apply(v(i)), ta.apply(v(j))) == sp.herm(v(i), v(j)));
    CHECK_THROWS(sp.transvection(Vec6{}));
    // v1 + w v2 is not isotropic
    Vec6 bad = v(1) + v(2).scaled(gf4::W);
    REQUIRE(sp.herm(bad, bad) != 0);
    CHECK_THROWS(sp.transvection(bad));
}

TEST_CASE("standard assignment satisfies the Q_221 diagram orders") {
    const auto& sp = space();
    auto sa = standard_assignment(sp);
    CoxeterGraph q221 = preset_graph("Q_221");
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            int want = q221.adjacent(sa.alphabet.name(i), sa.alphabet.name(j)) ? 3 : 2;
            INFO(sa.alphabet.name(i) << "," << sa.alphabet.name(j));
            CHECK((sa.matrices[static_cast<std::size_t>(i)] * sa.matrices[static_cast<std::size_t>(j)]).order() == want);
        }
    }
    CHECK((sa.matrices[0] * sa.matrices[1]).order() == 3); // a,b adjacent
    CHECK((sa.matrices[6] * sa.matrices[7]).order() == 2); // a',c' commute
    // the alternative sesquilinearity convention is a genuinely different
    // model: conjugate symmetry still holds and the basis vectors stay
    // isotropic, but the vectors with w-coefficients do not, which is the
    // diagnosable difference the flag exists for
    HermitianSpace alt(SesquiConvention::FirstArg);
    for (int i = 1; i <= 6; ++i) CHECK(alt.herm(v(i), v(i)) == 0);
    CHECK(alt.herm(v(5), v(3)) == gf4::conj(alt.herm(v(3), v(5))));
    CHECK_FALSE(alt.isotropic(assignment_vector_e()));
    CHECK_THROWS(standard_assignment(alt));
}

TEST_CASE("the printed e-vector breaks exactly the a-e relator") {
    const auto& sp = space();
    auto printed = standard_assignment(sp, /*printed_e=*/true);
    CHECK(sp.isotropic(assignment_vector_e_printed()));
    auto rep = check_relators(catalog("K").presentation, printed.matrices);
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0] == "aeae"); // the (ae)^2 relator, and with it the hexagon
}

TEST_CASE("a deliberately wrong assignment fails loudly") {
    const auto& sp = space();
    auto sa = standard_assignment(sp);
    std::swap(sa.matrices[0], sa.matrices[1]); // swap a and b
    auto rep = check_relators(catalog("K").presentation, sa.matrices);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("relator check classifies the hexagon as a central scalar") {
    const auto& sp = space();
    auto sa = standard_assignment(sp);
    auto rep = check_relators(catalog("K").presentation, sa.matrices);
    CHECK(rep.violations.empty());
    REQUIRE(rep.central_scalars.size() == 1);
    Mat6 V = evaluate_matrix(catalog("K").word("V"), sa.alphabet, sa.matrices);
    CHECK(is_scalar_matrix(V));
    CHECK_FALSE(V.is_identity());
    CHECK(V.order() == 3);
}

TEST_CASE("diagram completion searches projective isotropic classes") {
    const auto& sp = space();
    auto sa = standard_assignment(sp);
    CHECK(isotropic_classes(sp).size() == 693);
    auto none = complete_diagram(sp, sa, {{"e", 3}, {"e", 2}});
    CHECK(none.empty());
    CHECK_THROWS(complete_diagram(sp, sa, {{"e", 5}}));
    CHECK_THROWS(complete_diagram(sp, sa, {{"zz", 2}}));
}

TEST_CASE("matrix group orders") {
    const auto& sp = space();
    CHECK(matrix_group_order({Mat6::identity()}) == BigUint(1));
    CHECK(matrix_group_order({sp.transvection(v(1))}) == BigUint(2));
    Mat6 singular{};
    CHECK_THROWS(matrix_to_perm(singular));
}
