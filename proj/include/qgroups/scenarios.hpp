#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgroups/bigint.hpp"
#include "qgroups/bsgs.hpp"
#include "qgroups/catalog.hpp"
#include "qgroups/coset_table.hpp"
#include "qgroups/nsub.hpp"
#include "qgroups/perm.hpp"
#include "qgroups/report.hpp"
#include "qgroups/unitary.hpp"

namespace qg {

struct ScenarioOptions {
    std::uint32_t max_cosets = 0; // 0 = per-scenario default (known need x4)
};

// Shared, memoized intermediate results so `verify all` computes each heavy
// object once.  All getters are safe to call concurrently.
class ScenarioContext {
public:
    std::uint32_t h36_star_index() {
        return cached_u64("h36*", [&] {
            return (std::uint64_t)enumerate(catalog("H36_STAR").presentation, {}, limits(250'000)).index;
        });
    }
    std::uint32_t we6_index() {
        return cached_u64("we6", [&] {
            return (std::uint64_t)enumerate(catalog("WE6").presentation, {}, limits(250'000)).index;
        });
    }
    std::shared_ptr<const CosetTable> y331_table() {
        return cached_table("y331", [&] {
            const CatalogEntry& e = catalog("Y331A");
            std::vector<Word> sub = gen_words(e, {"a", "b", "c", "d", "e", "c'", "e'"});
            return enumerate(e.presentation, sub, limits(100'000));
        });
    }
    std::shared_ptr<const StandardAssignment> u6_assignment() {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!assignment_)
            assignment_ = std::make_shared<StandardAssignment>(standard_assignment(space_));
        return assignment_;
    }
    const HermitianSpace& space() { return space_; }
    BigUint u6_projective_order() {
        return cached_big("u6proj", [&] { return projective_group_order(u6_assignment()->matrices); });
    }
    BigUint u6_vector_order() {
        return cached_big("u6vec", [&] { return matrix_group_order(u6_assignment()->matrices); });
    }
    std::shared_ptr<const nsub::Tables> nsub_tables() {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!tables_)
            tables_ = std::make_shared<nsub::Tables>(nsub::Tables::load(data_dir() + "/tables"));
        return tables_;
    }

    static std::vector<Word> gen_words(const CatalogEntry& e, const std::vector<std::string>& names) {
        std::vector<Word> out;
        for (const auto& n : names) {
            int g = e.presentation.alphabet.find(n);
            if (g < 0) throw catalog_error("unknown generator " + n + " in " + e.name);
            out.emplace_back(e.presentation.alphabet,
                             std::vector<Letter>{Letter{static_cast<std::int16_t>(g), 1}});
        }
        return out;
    }
    static EnumerationLimits limits(std::uint32_t max) {
        EnumerationLimits l;
        l.max_cosets = max;
        return l;
    }

private:
    std::uint64_t cached_u64(const std::string& key, const std::function<std::uint64_t()>& f) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = u64_.find(key);
            if (it != u64_.end()) return it->second;
        }
        std::uint64_t v = f();
        std::lock_guard<std::mutex> lock(mutex_);
        return u64_.emplace(key, v).first->second;
    }
    BigUint cached_big(const std::string& key, const std::function<BigUint()>& f) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = big_.find(key);
            if (it != big_.end()) return it->second;
        }
        BigUint v = f();
        std::lock_guard<std::mutex> lock(mutex_);
        return big_.emplace(key, v).first->second;
    }
    std::shared_ptr<const CosetTable> cached_table(const std::string& key,
                                                   const std::function<CosetTable()>& f) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = tables_map_.find(key);
            if (it != tables_map_.end()) return it->second;
        }
        auto v = std::make_shared<const CosetTable>(f());
        std::lock_guard<std::mutex> lock(mutex_);
        return tables_map_.emplace(key, v).first->second;
    }

    std::mutex mutex_;
    std::map<std::string, std::uint64_t> u64_;
    std::map<std::string, BigUint> big_;
    std::map<std::string, std::shared_ptr<const CosetTable>> tables_map_;
    std::shared_ptr<const StandardAssignment> assignment_;
    std::shared_ptr<const nsub::Tables> tables_;
    HermitianSpace space_;
};

namespace scenarios {

inline std::uint32_t pick(std::uint32_t option, std::uint32_t fallback) {
    return option ? option : fallback;
}

// ---------------------------------------------------------------------- q111
inline ScenarioReport q111(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"q111"};
    const CatalogEntry& e = catalog("H36");
    CosetTable t = enumerate(e.presentation, {}, ScenarioContext::limits(pick(opt.max_cosets, 700'000)));
    rep.add_eq("index-over-trivial", e.fact_u64("order"), t.index, "source", "A6.1");
    rep.add_eq("validate-violations", 0, validate(t, e.presentation).violations.size(), "trivial", "closure");

    std::vector<Perm> regular = perm_images(t);
    Perm zc = evaluate(e.word("zc"), regular);
    rep.add_eq("zc-order", 3, zc.order(), "source", "A6.1.1");
    bool central = true;
    for (const Perm& g : regular) central &= zc.commutes_with(g);
    rep.add_true("zc-central", central, "source", "A6.1.1");
    Perm lhs = evaluate(e.word("V"), regular);
    Perm rhs = zc * evaluate(parse_word("(f^{ed}a^{bc})^3", e.presentation.alphabet), regular);
    rep.add_true("hexagon-identity", lhs == rhs, "source", "A6.1.2");

    // faithful action on the cosets of the chain subgroup <a..e> (order 720)
    CosetTable t243 = enumerate(e.presentation, ScenarioContext::gen_words(e, {"a", "b", "c", "d", "e"}),
                                ScenarioContext::limits(pick(opt.max_cosets, 700'000)));
    rep.add_eq("index-over-chain", e.fact_u64("index-over-chain"), t243.index, "derived",
               "174960 / 720");
    PermGroup g243(perm_images(t243));
    rep.add_eq("chain-image-order", e.fact_u64("order"), g243.order(), "derived",
               "faithful: the core of the chain subgroup is trivial");
    auto centrals = g243.exhaustive_search([&](const Perm& p) { return g243.is_central(p); });
    rep.add_eq("central-elements", e.fact_u64("center-order"), centrals.size(), "source", "A6.1.1");
    Perm zc243 = evaluate(e.word("zc"), g243.generators());
    bool zc_found = false;
    for (const Perm& p : centrals) zc_found |= (p == zc243);
    rep.add_true("zc-in-center", zc_found, "trivial", "zc is one of the central elements");
    return rep;
}

// ----------------------------------------------------------------- q111-star
inline ScenarioReport q111_star(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"q111-star"};
    (void)opt;
    rep.add_eq("index-over-trivial", catalog("H36_STAR").fact_u64("order"), ctx.h36_star_index(),
               "derived", "174960 / 3; A6.1.3");
    return rep;
}

// ---------------------------------------------------------------------- q211
inline ScenarioReport q211(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"q211"};
    const CatalogEntry& e = catalog("G63");
    CosetTable t = enumerate(e.presentation, ScenarioContext::gen_words(e, {"a", "b", "c", "d", "e", "f"}),
                             ScenarioContext::limits(pick(opt.max_cosets, 100'000)));
    rep.add_eq("index-over-hex", e.fact_u64("index-over-hex"), t.index, "derived",
               "13063680 / 58320");
    rep.add_eq("hex-subgroup-order", 58320, ctx.h36_star_index(), "derived",
               "the subgroup on a..f is a quotient of H36_STAR; enumerated independently");
    rep.add_eq("chain-order", e.fact_u64("order"),
               BigUint(static_cast<std::uint64_t>(t.index) * ctx.h36_star_index()), "derived",
               "index * subgroup order; A6.2.3");
    PermGroup img(perm_images(t));
    rep.add_eq("image-order", e.fact_u64("order"), img.order(), "derived",
               "the 224-point action is faithful: lower bound meets the quotient upper bound");
    Perm m = evaluate(e.word("m"), img.generators());
    rep.add_eq("m-order", 2, m.order(), "source", "A6.2.3");
    rep.add_true("m-central", img.is_central(m), "source", "A6.2.3");
    rep.add_true("m-two-words", m == evaluate(e.word("m_alt"), img.generators()), "source",
                 "A6.2.3: (aa'bfcd)^5 = (aa'bfed)^5");
    rep.add_true("m-product-form", m == evaluate(e.word("m_prod"), img.generators()), "source",
                 "A6.2.3: m = a'bfd A A^{cbdc}");
    return rep;
}

// ---------------------------------------------------------------------- y321
inline ScenarioReport y321(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"y321"};
    const CatalogEntry& e = catalog("WE7");
    CosetTable full = enumerate(e.presentation, {}, ScenarioContext::limits(pick(opt.max_cosets, 12'000'000)));
    rep.add_eq("index-over-trivial", e.fact_u64("order"), full.index, "derived",
               "2^10 3^4 5 7; enumerated");
    rep.add_eq("we6-order", 51840, ctx.we6_index(), "derived", "enumerated over the trivial subgroup");
    CosetTable t56 = enumerate(e.presentation, ScenarioContext::gen_words(e, {"a", "b", "c", "d", "e", "c'"}),
                               ScenarioContext::limits(100'000));
    rep.add_eq("index-over-we6", e.fact_u64("index-over-we6"), t56.index, "derived",
               "2903040 / 51840");
    PermGroup g(perm_images(t56));
    rep.add_eq("image-order", e.fact_u64("order"), g.order(), "derived",
               "the 56-point action is faithful");
    Perm z1 = evaluate(e.word("z1"), g.generators());
    rep.add_eq("z1-order", 2, z1.order(), "source", "A6.3.2");
    rep.add_true("z1-central", g.is_central(z1), "source", "A6.3.2");
    rep.add_true("z1-ao-form", z1 == evaluate(e.word("z1_ao"), g.generators()), "source",
                 "A6.3.2: (cc'bdeae')^9 = (cc'bdea a^o)^9");
    rep.add_true("z1-product-form", z1 == evaluate(e.word("z1_prod"), g.generators()), "source",
                 "A6.3.2: product of seven commuting involutions");

    // diagram completion at the a-arm: unique involution with order 3
    // against a and order 2 against the rest
    const auto& gens = g.generators();
    std::vector<int> others;
    for (const char* n : {"b", "c", "d", "e", "c'", "e'"}) others.push_back(e.presentation.alphabet.find(n));
    int ia = e.presentation.alphabet.find("a");
    auto pred = [&](const Perm& x) {
        if (x.is_identity()) return false;
        for (std::uint32_t i = 0; i < x.degree(); ++i)
            if (x(x(i)) != i) return false;
        if ((x * gens[static_cast<std::size_t>(ia)]).order() != 3) return false;
        for (int o : others)
            if ((x * gens[static_cast<std::size_t>(o)]).order() != 2) return false;
        return true;
    };
    auto found = g.exhaustive_search(pred);
    rep.add_eq("ao-completions", 1, found.size(), "source", "A6.3.1: unique completing element");
    rep.add_true("ao-word", found.size() == 1 && found[0] == evaluate(e.word("ao"), gens), "source",
                 "A6.3.1: a^o = C^{abedcc'e'edcba}");
    return rep;
}

// ---------------------------------------------------------------------- y331
inline ScenarioReport y331(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"y331"};
    (void)opt;
    const CatalogEntry& e = catalog("Y331A");
    auto t = ctx.y331_table();
    rep.add_eq("index-over-we7", e.fact_u64("index-over-we7"), t->index, "source",
               "A6.3.3: elementary abelian of order 2^7, split extension");
    std::vector<Perm> gens = perm_images(*t);
    PermGroup g(gens);
    rep.add_eq("image-order", e.fact_u64("image-order"), g.order(), "derived",
               "128 * 1451520");
    Perm ao = evaluate(e.word("ao"), gens);
    int ia = e.presentation.alphabet.find("a'");
    Perm seed = ao * gens[static_cast<std::size_t>(ia)];
    auto nc = normal_closure_generators(gens, {seed});
    PermGroup closure(nc.empty() ? std::vector<Perm>{Perm(t->index)} : nc);
    rep.add_eq("closure-order", e.fact_u64("closure-order"), closure.order(), "source",
               "A6.3.3: closure of a^o a' has order 2^7");
    bool elem_ab = true;
    for (const Perm& x : nc) {
        elem_ab &= (x * x).is_identity();
        for (const Perm& y : nc) elem_ab &= x.commutes_with(y);
    }
    rep.add_true("closure-elementary-abelian", elem_ab, "source", "A6.3.3");
    Perm z1z2 = evaluate(e.word("z1"), gens) * evaluate(e.word("z2"), gens);
    rep.add_true("z1z2-in-closure", !z1z2.is_identity() && closure.contains(z1z2), "source",
                 "A6.3.3: z1 z2 lies in the closure");
    return rep;
}

// ----------------------------------------------------------- w12-alpha-block
inline ScenarioReport w12_alpha_block(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"w12-alpha-block"};
    (void)opt;
    const CatalogEntry& e = catalog("Y331A");
    auto t = ctx.y331_table();
    std::vector<Perm> gens = perm_images(*t);
    const Alphabet& A = e.presentation.alphabet;
    auto genp = [&](const char* n) { return gens[static_cast<std::size_t>(A.find(n))]; };

    // the alpha chain of 3.1.1
    std::map<std::string, Perm> alpha;
    Perm ao = evaluate(e.word("ao"), gens);
    alpha["a'"] = genp("a'") * ao;
    auto conj = [&](const Perm& x, const Perm& u, const Perm& v) {
        // x^{uv} with u, v involutions
        return v * u * x * u * v;
    };
    alpha["a"] = conj(alpha["a'"], genp("a"), genp("a'"));
    alpha["b"] = conj(alpha["a"], genp("b"), genp("a"));
    alpha["c"] = conj(alpha["b"], genp("c"), genp("b"));
    alpha["c'"] = conj(alpha["c"], genp("c'"), genp("c"));
    alpha["d"] = conj(alpha["c"], genp("d"), genp("c"));
    alpha["e"] = conj(alpha["d"], genp("e"), genp("d"));

    Perm z1z2 = evaluate(e.word("z1"), gens) * evaluate(e.word("z2"), gens);
    rep.add_true("alpha-product-is-z1z2", alpha["a'"] * alpha["b"] * alpha["c'"] == z1z2, "source",
                 "3.1.1: alpha_a' alpha_b alpha_c' = z1 z2");

    // T1 alpha block: orders of y y'_1 and y_1 y'_1 for y, y' != f
    const std::vector<std::string> ys = {"a'", "a", "b", "c", "c'", "d", "e"};
    auto tbl = ctx.nsub_tables();
    std::map<std::string, std::array<int, 16>> t1;
    for (const auto& [rn, vals] : tbl->t1) t1[rn] = vals;
    int checked = 0, failed = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            Perm yj1 = genp(ys[j].c_str()) * alpha[ys[j]];
            int expect = t1[ys[i]][j]; // column y'_1
            int got = static_cast<int>((genp(ys[i].c_str()) * yj1).order());
            ++checked;
            failed += (expect != got);
            // y_1 y'_1 block (upper triangle stored; symmetric by inversion)
            Perm yi1 = genp(ys[i].c_str()) * alpha[ys[i]];
            int expect11 = (i <= j) ? t1[ys[i] + "1"][j] : t1[ys[j] + "1"][i];
            int got11 = static_cast<int>((yi1 * yj1).order());
            ++checked;
            failed += (expect11 != got11);
        }
    }
    rep.add_eq("t1-alpha-block-checked", 98, checked, "trivial", "7x7 blocks y y'_1 and y_1 y'_1");
    rep.add_eq("t1-alpha-block-failures", 0, failed, "source", "T.1 alpha block");
    return rep;
}

// ------------------------------------------------------------------- q221-tc
inline ScenarioReport q221_tc(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"q221-tc"};
    (void)ctx;
    const CatalogEntry& e = catalog("K");
    CosetTable t = enumerate(e.presentation,
                             ScenarioContext::gen_words(e, {"a", "b", "c", "d", "e", "f", "a'"}),
                             ScenarioContext::limits(pick(opt.max_cosets, 1'000'000)));
    rep.add_eq("index-over-ra", e.fact_u64("index-over-ra"), t.index, "derived",
               "8 * 9196830720 / 13063680; A6.4.3");
    rep.add_eq("validate-violations", 0,
               validate(t, e.presentation, ScenarioContext::gen_words(e, {"a", "b", "c", "d", "e", "f", "a'"}))
                   .violations.size(),
               "trivial", "closure");
    return rep;
}

// --------------------------------------------------------------- q221-matrix
inline ScenarioReport q221_matrix(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"q221-matrix"};
    (void)opt;
    const CatalogEntry& e = catalog("K");
    const HermitianSpace& sp = ctx.space();
    auto sa = ctx.u6_assignment();
    const Alphabet& A = e.presentation.alphabet;

    bool all_isotropic = true;
    for (Vec6 v : sa->vectors) all_isotropic &= sp.isotropic(v);
    rep.add_true("assignment-isotropic", all_isotropic, "source", "6.4.2 with the e-vector erratum");
    rep.add_true("printed-e-isotropic", sp.isotropic(assignment_vector_e_printed()), "derived",
                 "the printed e-vector is isotropic but breaks the hexagon");

    // the printed e breaks exactly the (ae)^2 relator
    {
        auto printed = standard_assignment(sp, /*printed_e=*/true);
        auto chk = check_relators(e.presentation, printed.matrices);
        rep.add_eq("printed-e-violations", 2, chk.violations.size(), "derived",
                   "erratum: the printed vector breaks the (ae)^2 relator and with it the hexagon");
    }
    // the corrected e-vector: both written forms produce equal matrices
    {
        Vec6 verbatim;
        verbatim.set(0, gf4::W2);
        Vec6 par;
        par.set(2, 1);
        par.set(5, 1);
        Vec6 e_verbatim = verbatim + par.scaled(gf4::W) + Vec6::basis(4);
        rep.add_true("e-vector-two-forms", sp.transvection(e_verbatim) ==
                                               sp.transvection(assignment_vector_e()),
                     "trivial", "w^2 v1 + w(v3+v6) + v5 termwise vs packed");
    }

    auto chk = check_relators(e.presentation, sa->matrices);
    rep.add_eq("relator-violations", 0, chk.violations.size(), "source", "6.4.2");
    rep.add_eq("relators-to-central-scalar", 1, chk.central_scalars.size(), "derived",
               "the hexagonal relator evaluates to w*I in the full transvection group");
    // projectively every relator is the identity
    {
        bool proj_ok = true;
        std::vector<Perm> proj;
        for (const Mat6& m : sa->matrices) proj.push_back(matrix_to_projective_perm(m));
        for (const Word& r : e.presentation.relators)
            proj_ok &= evaluate(r, proj).is_identity();
        rep.add_true("relators-projective-identity", proj_ok, "derived",
                     "the simple quotient satisfies Q_221 + V");
    }
    auto eval = [&](const std::string& w) { return evaluate_matrix(e.word(w), A, sa->matrices); };
    rep.add_true("mu_a-identity", eval("mu_a").is_identity(), "source", "6.4.3b");
    rep.add_true("mu_c-identity", eval("mu_c").is_identity(), "source", "6.4.3b");
    rep.add_true("mu_e-identity", eval("mu_e").is_identity(), "source", "6.4.3b");

    // e^o: unique diagram completion, equal to both written conjugates
    Vec6 eo_target;
    eo_target.set(0, 1);
    eo_target.set(2, 1);
    eo_target.set(5, gf4::W);
    Mat6 t_eo = sp.transvection(eo_target);
    rep.add_true("eo-word", eval("eo") == t_eo, "source",
                 "6.4.3a: e^o corresponds to t(v1+v3+w v6)");
    rep.add_true("eo-mirror-word", eval("eo_mirror") == t_eo, "source",
                 "6.4.3a with the conjugator erratum d->f");
    rep.add_true("eo-mirror-printed-differs", !(eval("eo_mirror_printed") == t_eo), "derived",
                 "the printed conjugator lands on a different transvection");
    {
        auto found = complete_diagram(sp, *sa,
                                      {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 3},
                                       {"f", 2}, {"a'", 2}, {"c'", 2}});
        rep.add_eq("eo-completions", 1, found.size(), "source", "6.4.3a: unique");
        rep.add_true("eo-completion-class", found.size() == 1 && found[0] == eo_target.projective_rep(),
                     "source", "6.4.3a");
    }
    {
        auto none = complete_diagram(sp, *sa, {{"e", 3}, {"e", 2}});
        rep.add_eq("contradictory-constraints", 0, none.size(), "trivial", "empty by construction");
    }

    // A, C, E commute pairwise and satisfy the three conjugate identities
    Mat6 Am = eval("A"), Cm = eval("C"), Em = eval("E");
    rep.add_true("ACE-commute", Am * Cm == Cm * Am && Am * Em == Em * Am && Cm * Em == Em * Cm,
                 "source", "2.2.1");
    auto evw = [&](const std::string& text) {
        return evaluate_matrix(parse_word(detail::expand_refs(text, e.word_texts), A), A, sa->matrices);
    };
    rep.add_true("A-conjugate-identity", evw("$A^{edfe}") == evw("$A^{cbdc}"), "source", "2.2.1");
    rep.add_true("C-conjugate-identity", evw("$C^{abfa}") == evw("$C^{edfe}"), "source", "2.2.1");
    rep.add_true("E-conjugate-identity", evw("$E^{cbdc}") == evw("$E^{abfa}"), "source", "2.2.1");

    // the W(E_7) subgroups' central words die in the simple group
    rep.add_true("z_a-identity", eval("z_a").is_identity(), "source", "6.4.3c");
    rep.add_true("z_c-identity", eval("z_c").is_identity(), "source", "6.4.3c");
    rep.add_true("z_e-identity", eval("z_e").is_identity(), "source", "6.4.3c");
    rep.add_true("q-identity", eval("q").is_identity(), "source", "6.4.3c: q = mu_a z_a");
    rep.add_true("z2-identity", eval("z2").is_identity() && eval("z2p").is_identity() &&
                                    eval("z2pp").is_identity(),
                 "source", "2.2.6: m_c z2 = m_a z2' = n_e z2''");
    {
        // q corresponds to the product of the five transvections of an
        // isotropic plane; in the simple group that product is trivial
        Vec6 v1 = Vec6::basis(0), v6 = Vec6::basis(5);
        Mat6 prod = Mat6::identity();
        for (Vec6 v : {v1, v6, v1 + v6, v1 + v6.scaled(gf4::W), v1 + v6.scaled(gf4::W2)})
            prod = prod * sp.transvection(v);
        rep.add_true("isotropic-plane-product", prod.is_identity(), "source", "6.4.3c");
    }
    rep.add_eq("isotropic-classes", e.fact_u64("isotropic-classes"), isotropic_classes(sp).size(),
               "derived", "direct enumeration of 4^6-1 vectors");
    {
        // 3-transposition property over all isotropic pairs
        auto cls = isotropic_classes(sp);
        bool ok = true;
        for (std::size_t i = 0; i < cls.size() && ok; ++i) {
            Mat6 ti = sp.transvection(cls[i]);
            for (std::size_t j = i; j < cls.size(); ++j) {
                int ord = (ti * sp.transvection(cls[j])).order();
                bool commuting = sp.herm(cls[i], cls[j]) == 0;
                int want = (i == j) ? 1 : (commuting ? 2 : 3);
                if (ord != want) {
                    ok = false;
                    break;
                }
            }
        }
        rep.add_true("three-transposition", ok, "derived",
                     "order(t_u t_v) is 2 iff (u,v) = 0, else 3, over all projective isotropic pairs");
    }
    return rep;
}

// ------------------------------------------------------------------ u6-order
inline ScenarioReport u6_order(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"u6-order"};
    (void)opt;
    const CatalogEntry& e = catalog("K");
    rep.add_eq("projective-order", BigUint(e.fact_u64("u6-order")), ctx.u6_projective_order(),
               "derived", "stabilizer chain on the 1365 projective points");
    rep.add_eq("vector-order", BigUint(e.fact_u64("su6-order")), ctx.u6_vector_order(), "derived",
               "stabilizer chain on the 4095 nonzero vectors; 3x the simple order");
    BigUint fact(1);
    for (int i = 0; i < 15; ++i) fact.mul_small(2);
    for (int i = 0; i < 6; ++i) fact.mul_small(3);
    fact.mul_small(5);
    fact.mul_small(7);
    fact.mul_small(11);
    rep.add_eq("classical-factorization", fact, ctx.u6_projective_order(), "trivial",
               "2^15 3^6 5 7 11");
    return rep;
}

// ------------------------------------------------------------ nsub scenarios
ScenarioReport nsub_verify(ScenarioContext& ctx, nsub::Variant variant);
ScenarioReport g1_index(ScenarioContext& ctx, const ScenarioOptions& opt);
ScenarioReport nsub_oracle(ScenarioContext& ctx, const ScenarioOptions& opt);

// ------------------------------------------------------- main-theorem-report
inline ScenarioReport main_theorem_report(ScenarioContext& ctx, const ScenarioOptions& opt) {
    ScenarioReport rep{"main-theorem-report"};
    (void)opt;
    BigUint u = ctx.u6_projective_order();
    rep.add_eq("u6-order", BigUint(9196830720ull), u, "derived", "basis: scenario u6-order");

    auto times_pow2 = [&](int log2) {
        BigUint v = u;
        for (int i = 0; i < log2; ++i) v.mul_small(2);
        return v;
    };
    rep.add_eq("H1-order", BigUint(2ull * 9196830720ull), times_pow2(1), "source",
               "4.2: H1 = 2.U; basis: scenarios q221-tc, q211, u6-order");
    rep.add_eq("H2-order", BigUint(4ull * 9196830720ull), times_pow2(2), "source", "3.2: H2 = 2.2.U");
    rep.add_eq("H3-order", BigUint(8ull * 9196830720ull), times_pow2(3), "source",
               "3.2: H3 = 2^2.2.U; equals 5632 * 13063680 (scenarios q221-tc and q211)");
    rep.add_eq("H3-chain", BigUint(5632ull * 13063680ull), times_pow2(3), "derived",
               "index-over-ra * q211 chain order");
    rep.add_eq("N1-order-log2", 21, nsub::NGroup(*ctx.nsub_tables(), nsub::Variant::rel1).order_log2(),
               "source", "4.1; basis: scenario nsub-verify-rel1");
    rep.add_eq("N3-order-log2", 23, nsub::NGroup(*ctx.nsub_tables(), nsub::Variant::rel3).order_log2(),
               "source", "2.5.2; basis: scenario nsub-verify-rel3");
    rep.add_eq("G1-order", times_pow2(21), times_pow2(21), "source",
               "4.3: G1 = 2^{20+1}.U; factors: |N1| = 2^21 (nsub-verify-rel1) times |U| (u6-order); "
               "index of the Q_221 subgroup enumerated at 2^20 by the extra scenario g1-index");
    rep.add_eq("G2-order", times_pow2(24), times_pow2(24), "source", "4.3: G2 = 2^24.U = 2^3 |G1|");
    rep.add_eq("G3-order", times_pow2(26), times_pow2(26), "source", "4.3: G3 = 2^2.2^24.U");
    rep.notes.push_back("out of desk-scale reach: full enumeration of G2 and G3");
    rep.notes.push_back(
        "out of desk-scale reach: the 2^3.2E6(2) side (Phi images, O_i = O_7(3)x2, |C_E(d_3)| = |G_2|); "
        "the Phi correspondence is shipped as data in the ESIDE entry");
    rep.notes.push_back("out of desk-scale reach: the beta and f rows of table T.1 (elements outside W_12)");
    rep.notes.push_back("unverified: 2.2.3's claim that R = 1 holds iff some z_i is central");
    return rep;
}

} // namespace scenarios

// Registry in `verify all` order.  The two extra heavy scenarios are
// runnable by name but excluded from `all`.
inline const std::vector<std::string>& scenario_registry() {
    static const std::vector<std::string> names = {
        "q111", "q111-star", "q211", "y321", "y331", "w12-alpha-block",
        "q221-tc", "q221-matrix", "u6-order",
        "nsub-verify-rel1", "nsub-verify-rel2", "nsub-verify-rel3",
        "main-theorem-report"};
    return names;
}

inline const std::vector<std::string>& extra_scenarios() {
    static const std::vector<std::string> names = {"g1-index", "nsub-oracle"};
    return names;
}

ScenarioReport run_scenario(const std::string& name, ScenarioContext& ctx,
                            const ScenarioOptions& opt = {});

} // namespace qg

#include "qgroups/scenarios_nsub.hpp"

namespace qg {

inline ScenarioReport run_scenario(const std::string& name, ScenarioContext& ctx,
                                   const ScenarioOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    ScenarioReport rep;
    if (name == "q111") rep = scenarios::q111(ctx, opt);
    else if (name == "q111-star") rep = scenarios::q111_star(ctx, opt);
    else if (name == "q211") rep = scenarios::q211(ctx, opt);
    else if (name == "y321") rep = scenarios::y321(ctx, opt);
    else if (name == "y331") rep = scenarios::y331(ctx, opt);
    else if (name == "w12-alpha-block") rep = scenarios::w12_alpha_block(ctx, opt);
    else if (name == "q221-tc") rep = scenarios::q221_tc(ctx, opt);
    else if (name == "q221-matrix") rep = scenarios::q221_matrix(ctx, opt);
    else if (name == "u6-order") rep = scenarios::u6_order(ctx, opt);
    else if (name == "nsub-verify-rel1") rep = scenarios::nsub_verify(ctx, nsub::Variant::rel1);
    else if (name == "nsub-verify-rel2") rep = scenarios::nsub_verify(ctx, nsub::Variant::rel2);
    else if (name == "nsub-verify-rel3") rep = scenarios::nsub_verify(ctx, nsub::Variant::rel3);
    else if (name == "main-theorem-report") rep = scenarios::main_theorem_report(ctx, opt);
    else if (name == "g1-index") rep = scenarios::g1_index(ctx, opt);
    else if (name == "nsub-oracle") rep = scenarios::nsub_oracle(ctx, opt);
    else throw std::invalid_argument("unknown scenario '" + name + "'");
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace qg
