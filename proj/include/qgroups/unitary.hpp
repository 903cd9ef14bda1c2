#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgroups/bigint.hpp"
#include "qgroups/bsgs.hpp"
#include "qgroups/coxeter.hpp"
#include "qgroups/gf4.hpp"
#include "qgroups/perm.hpp"
#include "qgroups/word.hpp"

namespace qg {

// Matrices act on row vectors, x -> x*M, so a product M*N means "apply M,
// then N" and word evaluation composes left-to-right like everywhere else
// in this toolkit.
struct Mat6 {
    std::array<std::uint8_t, 36> m{}; // row-major

    static Mat6 identity() {
        Mat6 r;
        for (int i = 0; i < 6; ++i) r.at(i, i) = 1;
        return r;
    }

    std::uint8_t& at(int r, int c) { return m[static_cast<std::size_t>(6 * r + c)]; }
    std::uint8_t at(int r, int c) const { return m[static_cast<std::size_t>(6 * r + c)]; }

    bool operator==(const Mat6&) const = default;
    bool is_identity() const { return *this == identity(); }

    Vec6 row(int i) const {
        Vec6 v;
        for (int c = 0; c < 6; ++c) v.set(c, at(i, c));
        return v;
    }

    Vec6 apply(Vec6 x) const { // x * M
        Vec6 r;
        for (int j = 0; j < 6; ++j) {
            std::uint8_t acc = 0;
            for (int i = 0; i < 6; ++i) acc = gf4::add(acc, gf4::mul(x[i], at(i, j)));
            r.set(j, acc);
        }
        return r;
    }

    Mat6 operator*(const Mat6& o) const { // apply *this, then o
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k) {
                std::uint8_t a = at(i, k);
                if (!a) continue;
                for (int j = 0; j < 6; ++j)
                    r.at(i, j) = gf4::add(r.at(i, j), gf4::mul(a, o.at(k, j)));
            }
        return r;
    }

    // order by repeated multiplication; returns 0 if it exceeds `cap`
    int order(int cap = 64) const {
        Mat6 p = *this;
        for (int n = 1; n <= cap; ++n) {
            if (p.is_identity()) return n;
            p = p * (*this);
        }
        return 0;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) out += gf4::symbol(at(i, j));
            out += '\n';
        }
        return out;
    }
};

// Which argument of the sesquilinear form is conjugate-linear.  The tables
// below fix SecondArg; the alternative is kept so a failed relator check can
// be diagnosed as conventional rather than substantive.
enum class SesquiConvention { SecondArg, FirstArg };

// Dimension-6 Hermitian space over GF(4) with a fixed Gram matrix.
class HermitianSpace {
public:
    explicit HermitianSpace(SesquiConvention conv = SesquiConvention::SecondArg)
        : conv_(conv) {
        // Gram data: (v1,v2)=(v2,v3)=(v3,v4)=(v4,v6)=1, (v5,v2)=(v5,v4)=1,
        // (v5,v3)=w, all other off-diagonal pairs 0, diagonal 0.
        auto set = [&](int i, int j, std::uint8_t v) {
            gram_[i][j] = v;
            gram_[j][i] = gf4::conj(v);
        };
        set(0, 1, 1);
        set(1, 2, 1);
        set(2, 3, 1);
        set(3, 5, 1);
        set(4, 1, 1);
        set(4, 3, 1);
        set(4, 2, gf4::W);
    }

    SesquiConvention convention() const { return conv_; }
    std::uint8_t gram(int i, int j) const { return gram_[i][j]; }

    // sesquilinear form; (v,u) = conj((u,v))
    std::uint8_t herm(Vec6 u, Vec6 v) const {
        std::uint8_t acc = 0;
        for (int i = 0; i < 6; ++i) {
            std::uint8_t ui = u[i];
            if (!ui) continue;
            for (int j = 0; j < 6; ++j) {
                std::uint8_t vj = v[j];
                if (!vj || !gram_[i][j]) continue;
                std::uint8_t a = (conv_ == SesquiConvention::SecondArg)
                                     ? gf4::mul(ui, gf4::conj(vj))
                                     : gf4::mul(gf4::conj(ui), vj);
                acc = gf4::add(acc, gf4::mul(a, gram_[i][j]));
            }
        }
        return acc;
    }

    bool isotropic(Vec6 v) const { return herm(v, v) == 0; }

    // x -> x + phi(x) v with phi linear; an involution preserving the form,
    // invariant under scaling of v.
    Mat6 transvection(Vec6 v) const {
        if (v.is_zero()) throw std::invalid_argument("transvection: zero vector");
        if (!isotropic(v))
            throw std::invalid_argument("transvection: vector " + v.str() + " is not isotropic");
        Mat6 t;
        for (int i = 0; i < 6; ++i) {
            Vec6 e = Vec6::basis(i);
            std::uint8_t coef = (conv_ == SesquiConvention::SecondArg) ? herm(e, v) : herm(v, e);
            Vec6 row = e + v.scaled(coef);
            for (int j = 0; j < 6; ++j) t.at(i, j) = row[j];
        }
        return t;
    }

private:
    SesquiConvention conv_;
    std::array<std::array<std::uint8_t, 6>, 6> gram_{};
};

inline std::uint8_t herm(const HermitianSpace& s, Vec6 u, Vec6 v) { return s.herm(u, v); }
inline Mat6 transvection(const HermitianSpace& s, Vec6 v) { return s.transvection(v); }

// The transvection assignment for the Q_221 generators a,b,c,d,e,f,a',c'.
//
// The printed source for the e vector, w^2 v1 + w(v1+v6) + v5, simplifies to
// v1+v5+w v6, and then the product t_a t_e has order 3 instead of 2,
// contradicting the hexagon (a and e are not adjacent).  Reading the
// parenthesis as w(v3+v6) -- a one-subscript slip, and the only reading
// under which the printed expression does not collapse -- repairs every
// product order; an exhaustive scan of the isotropic classes confirms it
// and the toolkit's diagnostics keep the discrepancy visible.
struct StandardAssignment {
    Alphabet alphabet; // a b c d e f a' c'
    std::vector<Vec6> vectors;
    std::vector<Mat6> matrices;
};

namespace u6detail {

inline Vec6 vec(std::initializer_list<std::pair<int, std::uint8_t>> terms) {
    Vec6 v;
    for (auto [i, c] : terms) v.set(i, c);
    return v;
}

} // namespace u6detail

inline Vec6 assignment_vector_e_printed() {
    // w^2 v1 + w(v1 + v6) + v5  ==  v1 + v5 + w v6
    return u6detail::vec({{0, 1}, {4, 1}, {5, gf4::W}});
}

inline Vec6 assignment_vector_e() {
    // w^2 v1 + w(v3 + v6) + v5
    return u6detail::vec({{0, gf4::W2}, {2, gf4::W}, {4, 1}, {5, gf4::W}});
}

inline std::vector<Vec6> assignment_vectors(bool printed_e = false) {
    using u6detail::vec;
    std::vector<Vec6> v;
    v.push_back(vec({{3, 1}, {4, 1}}));                         // a  -> t(v4+v5)
    v.push_back(vec({{1, 1}}));                                 // b  -> t(v2)
    v.push_back(vec({{0, 1}}));                                 // c  -> t(v1)
    v.push_back(vec({{0, gf4::W}, {1, 1}, {2, gf4::W}, {5, gf4::W}})); // d -> t(v2+w(v1+v3)+w v6)
    v.push_back(printed_e ? assignment_vector_e_printed() : assignment_vector_e());
    v.push_back(vec({{0, 1}, {2, 1}}));                         // f  -> t(v1+v3)
    v.push_back(vec({{5, 1}}));                                 // a' -> t(v6)
    v.push_back(vec({{1, 1}, {5, 1}}));                         // c' -> t(v2+v6)
    return v;
}

inline StandardAssignment standard_assignment(const HermitianSpace& space,
                                              bool printed_e = false) {
    StandardAssignment sa;
    sa.alphabet = Alphabet({"a", "b", "c", "d", "e", "f", "a'", "c'"});
    sa.vectors = assignment_vectors(printed_e);
    for (Vec6 v : sa.vectors) sa.matrices.push_back(space.transvection(v));
    return sa;
}

inline Mat6 evaluate_matrix(const Word& w, const Alphabet& alpha,
                            const std::vector<Mat6>& assignment) {
    if (!(w.alphabet() == alpha)) throw word_error("evaluate_matrix: alphabet mismatch");
    Mat6 r = Mat6::identity();
    for (const Letter& l : w.letters()) {
        // all assigned matrices here are involutions, so signs are moot
        r = r * assignment[static_cast<std::size_t>(l.gen)];
    }
    return r;
}

inline bool is_scalar_matrix(const Mat6& m) {
    std::uint8_t s = m.at(0, 0);
    if (!s) return false;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (m.at(i, j) != (i == j ? s : 0)) return false;
    return true;
}

// The group generated by unitary transvections is the full special unitary
// group, whose center is the order-3 scalars.  Relators of a presentation of
// the simple quotient must therefore evaluate to scalar matrices; the
// hexagonal relator genuinely lands on w*I while all Coxeter pair relators
// evaluate to the identity on the nose.
struct RelatorCheckReport {
    std::vector<std::string> violations;      // relators not even scalar
    std::vector<std::string> central_scalars; // relators equal to w*I or w^2*I
    bool ok() const { return violations.empty(); }
    bool all_identity() const { return violations.empty() && central_scalars.empty(); }
};

inline RelatorCheckReport check_relators(const Presentation& p,
                                         const std::vector<Mat6>& assignment) {
    RelatorCheckReport rep;
    for (const Word& r : p.relators) {
        Mat6 m = evaluate_matrix(r, p.alphabet, assignment);
        if (m.is_identity()) continue;
        if (is_scalar_matrix(m))
            rep.central_scalars.push_back(r.str());
        else
            rep.violations.push_back(r.str());
    }
    return rep;
}

// All projective classes of nonzero isotropic vectors, canonicalized so the
// first nonzero coordinate is 1, in increasing code order.
inline std::vector<Vec6> isotropic_classes(const HermitianSpace& space) {
    std::vector<Vec6> out;
    std::vector<bool> seen(4096, false);
    for (std::uint16_t code = 1; code < 4096; ++code) {
        Vec6 v{code};
        Vec6 rep = v.projective_rep();
        if (seen[rep.code]) continue;
        seen[rep.code] = true;
        if (space.isotropic(rep)) out.push_back(rep);
    }
    return out;
}

// Search the projective isotropic classes for vectors whose transvection
// satisfies the required product orders against assigned generators.
inline std::vector<Vec6> complete_diagram(
    const HermitianSpace& space, const StandardAssignment& sa,
    const std::vector<std::pair<std::string, int>>& constraints) {
    std::vector<std::pair<std::size_t, int>> cons;
    for (const auto& [gen, ord] : constraints) {
        int gi = sa.alphabet.find(gen);
        if (gi < 0) throw std::invalid_argument("complete_diagram: unknown generator " + gen);
        if (ord != 2 && ord != 3)
            throw std::invalid_argument("complete_diagram: required order must be 2 or 3");
        cons.emplace_back(static_cast<std::size_t>(gi), ord);
    }
    std::vector<Vec6> out;
    for (Vec6 v : isotropic_classes(space)) {
        Mat6 t = space.transvection(v);
        bool ok = true;
        for (const auto& [gi, ord] : cons) {
            if ((t * sa.matrices[gi]).order() != ord) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(v);
    }
    return out;
}

// Convert matrices to their permutation action on the 4095 nonzero vectors
// (point = packed code - 1) and delegate to the stabilizer chain.
inline Perm matrix_to_perm(const Mat6& m) {
    std::vector<std::uint32_t> img(4095);
    // scalar-multiple table of each row speeds this up from 36 to 6 ops/point
    std::array<std::array<std::uint16_t, 4>, 6> rowmul{};
    for (int i = 0; i < 6; ++i)
        for (std::uint8_t s = 0; s < 4; ++s) rowmul[static_cast<std::size_t>(i)][s] = m.row(i).scaled(s).code;
    for (std::uint32_t code = 1; code < 4096; ++code) {
        std::uint16_t r = 0;
        for (int i = 0; i < 6; ++i) r ^= rowmul[static_cast<std::size_t>(i)][(code >> (2 * i)) & 3u];
        if (!r) throw std::invalid_argument("matrix_to_perm: matrix is singular");
        img[code - 1] = r - 1;
    }
    return Perm(std::move(img));
}

inline BigUint matrix_group_order(const std::vector<Mat6>& gens) {
    std::vector<Perm> perms;
    perms.reserve(gens.size());
    for (const Mat6& m : gens) perms.push_back(matrix_to_perm(m));
    return PermGroup(std::move(perms)).order();
}

// Action on the 1365 projective points (one-dimensional subspaces).  The
// order-3 scalar center acts trivially here, so this action realizes the
// simple quotient of the transvection group.
namespace u6detail {

struct ProjectiveTables {
    std::vector<std::uint16_t> reps;              // canonical codes, ascending
    std::array<std::uint16_t, 4096> class_of{};   // code -> class index

    ProjectiveTables() {
        std::vector<bool> seen(4096, false);
        for (std::uint16_t code = 1; code < 4096; ++code) {
            std::uint16_t p = Vec6{code}.projective_rep().code;
            if (!seen[p]) {
                seen[p] = true;
                reps.push_back(p);
            }
        }
        for (std::size_t i = 0; i < reps.size(); ++i) {
            Vec6 v{reps[i]};
            for (std::uint8_t s = 1; s < 4; ++s)
                class_of[v.scaled(s).code] = static_cast<std::uint16_t>(i);
        }
    }
};

inline const ProjectiveTables& projective_tables() {
    static const ProjectiveTables t;
    return t;
}

} // namespace u6detail

inline Perm matrix_to_projective_perm(const Mat6& m) {
    const auto& pt = u6detail::projective_tables();
    std::vector<std::uint32_t> img(pt.reps.size());
    for (std::size_t i = 0; i < pt.reps.size(); ++i)
        img[i] = pt.class_of[m.apply(Vec6{pt.reps[i]}).code];
    return Perm(std::move(img));
}

inline BigUint projective_group_order(const std::vector<Mat6>& gens) {
    std::vector<Perm> perms;
    perms.reserve(gens.size());
    for (const Mat6& m : gens) perms.push_back(matrix_to_projective_perm(m));
    return PermGroup(std::move(perms)).order();
}

} // namespace qg
