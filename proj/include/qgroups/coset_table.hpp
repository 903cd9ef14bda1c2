#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iosfwd>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgroups/coxeter.hpp"
#include "qgroups/word.hpp"

namespace qg {

struct enumeration_limit_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TcStrategy { RelatorScanFirst, DefinitionFirst }; // HLT / Felsch

struct EnumerationLimits {
    std::uint32_t max_cosets = 5'000'000;
    TcStrategy strategy = TcStrategy::RelatorScanFirst;
    double compaction_threshold = 0.2; // dead fraction triggering compaction
};

// Closed, standardized coset table: one action map per generator letter on
// live cosets 1..index.  Coset 1 is the subgroup coset.  Tables are produced
// by enumerate() below and are immutable afterwards.
class CosetTable {
public:
    Alphabet alphabet;                       // the presentation's alphabet
    std::vector<std::vector<std::uint32_t>> action; // [letter][coset 1..index]
    std::uint32_t index = 0;
    std::uint64_t defined_total = 0;
    std::uint64_t collapsed_total = 0;

    // letter layout: involutive => letter i is generator i (self-inverse);
    // otherwise letters 2i / 2i+1 are generator i and its inverse.
    int letters() const { return static_cast<int>(action.size()); }
    int letter_of(const Letter& l) const {
        if (alphabet.involutive()) return l.gen;
        return 2 * l.gen + (l.sign < 0 ? 1 : 0);
    }
    int inverse_letter(int x) const { return alphabet.involutive() ? x : (x ^ 1); }

    std::uint32_t apply(std::uint32_t coset, int letter) const { return action[static_cast<std::size_t>(letter)][coset]; }

    std::uint32_t trace(std::uint32_t coset, const Word& w) const {
        for (const Letter& l : w.letters()) coset = apply(coset, letter_of(l));
        return coset;
    }

    void save(std::ostream& os) const;
    static CosetTable load(std::istream& is);
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

// Working state of a Todd-Coxeter enumeration (HLT with immediate
// coincidence handling via union-find, optional Felsch mode).
class TcMachine {
public:
    TcMachine(const Presentation& p, const std::vector<Word>& subgroup,
              const EnumerationLimits& limits)
        : pres_(p), limits_(limits) {
        ngens_ = p.alphabet.size();
        nletters_ = p.alphabet.involutive() ? ngens_ : 2 * ngens_;
        for (const Word& r : p.relators) {
            if (!(r.alphabet() == p.alphabet))
                throw word_error("enumerate: relator over a different alphabet");
            std::vector<int> ls = to_letters(r);
            if (!ls.empty()) relators_.push_back(std::move(ls));
        }
        for (const Word& w : subgroup) {
            if (!(w.alphabet() == p.alphabet))
                throw word_error("enumerate: subgroup generator over a different alphabet");
            std::vector<int> ls = to_letters(w);
            if (!ls.empty()) subgens_.push_back(std::move(ls));
        }
        // short relators first: they close scans sooner and keep the HLT
        // overshoot down when long relators are present
        std::stable_sort(relators_.begin(), relators_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        tab_.assign(static_cast<std::size_t>(nletters_), {});
        // coset numbering is 1-based; slot 0 is the undefined sentinel
        grow_to(1);
        rep_.assign(2, 0);
        rep_[1] = 1;
        nalloc_ = 1;
        nlive_ = 1;
    }

    CosetTable run() {
        if (limits_.strategy == TcStrategy::DefinitionFirst)
            run_felsch();
        else
            run_hlt();
        compact();
        standardize();
        CosetTable t;
        t.alphabet = pres_.alphabet;
        t.action = tab_;
        t.index = nlive_;
        t.defined_total = defined_total_;
        t.collapsed_total = collapsed_total_;
        if (t.index == 0)
            throw std::logic_error("enumerate: table collapsed to index 0 (internal error)");
        return t;
    }

private:
    std::vector<int> to_letters(const Word& w) const {
        std::vector<int> out;
        out.reserve(w.size());
        for (const Letter& l : w.letters())
            out.push_back(pres_.alphabet.involutive() ? l.gen : 2 * l.gen + (l.sign < 0 ? 1 : 0));
        return out;
    }

    int inv(int x) const { return pres_.alphabet.involutive() ? x : (x ^ 1); }

    std::uint32_t& at(int letter, std::uint32_t c) { return tab_[static_cast<std::size_t>(letter)][c]; }

    void grow_to(std::uint32_t n) {
        for (auto& col : tab_) col.resize(n + 1, 0);
    }

    bool live(std::uint32_t c) const { return rep_[c] == c; }

    std::uint32_t find(std::uint32_t c) {
        std::uint32_t r = c;
        while (rep_[r] != r) r = rep_[r];
        while (rep_[c] != r) {
            std::uint32_t next = rep_[c];
            rep_[c] = r;
            c = next;
        }
        return r;
    }

    std::uint32_t define(std::uint32_t c, int x) {
        if (nalloc_ >= limits_.max_cosets) {
            throw enumeration_limit_exceeded(
                "enumerate: exceeded max_cosets=" + std::to_string(limits_.max_cosets) +
                " (not a proof the index is infinite)");
        }
        if (trace_ && (defined_total_ & 0xfffff) == 0)
            std::fprintf(stderr, "[tc] defined=%llu alloc=%u live=%u\n",
                         static_cast<unsigned long long>(defined_total_), nalloc_, nlive_);
        std::uint32_t m = ++nalloc_;
        grow_to(m);
        rep_.push_back(m);
        ++nlive_;
        ++defined_total_;
        at(x, c) = m;
        at(inv(x), m) = c;
        push_deduction(c, x);
        push_deduction(m, inv(x));
        return m;
    }

    void merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b); // smaller coset number survives
        rep_[b] = a;
        --nlive_;
        ++collapsed_total_;
        queue_.push_back(b);
    }

    // Process a detected coincidence between cosets a and b, rewiring the
    // table so no live row references a dead coset (Holt, Handbook 5.x).
    void coincidence(std::uint32_t a, std::uint32_t b) {
        merge(a, b);
        while (!queue_.empty()) {
            std::uint32_t e = queue_.back();
            queue_.pop_back();
            for (int x = 0; x < nletters_; ++x) {
                std::uint32_t f = at(x, e);
                if (!f) continue;
                at(x, e) = 0;
                if (at(inv(x), f) == e) at(inv(x), f) = 0;
                std::uint32_t mu = find(e);
                std::uint32_t nu = find(f);
                std::uint32_t mu_img = at(x, mu);
                if (mu_img) {
                    merge(nu, find(mu_img));
                } else {
                    std::uint32_t nu_img = at(inv(x), nu);
                    if (nu_img) {
                        merge(mu, find(nu_img));
                    } else {
                        at(x, mu) = nu;
                        at(inv(x), nu) = mu;
                        push_deduction(mu, x);
                        push_deduction(nu, inv(x));
                    }
                }
            }
        }
    }

    // Scan word w at coset c; fill gaps by defining new cosets when `fill`.
    // Returns true if the table changed (definition, deduction or merge).
    bool scan(std::uint32_t c, const std::vector<int>& w, bool fill) {
        std::uint32_t f = c;
        std::size_t i = 0;
        std::uint32_t b = c;
        std::size_t j = w.size();
        bool changed = false;
        for (;;) {
            while (i < j && at(w[i], f)) {
                f = at(w[i], f);
                ++i;
            }
            if (i == j) {
                if (f != b) {
                    coincidence(f, b);
                    changed = true;
                }
                return changed;
            }
            while (j > i && at(inv(w[j - 1]), b)) {
                b = at(inv(w[j - 1]), b);
                --j;
            }
            if (j == i) {
                if (f != b) {
                    coincidence(f, b);
                    changed = true;
                }
                return changed;
            }
            if (j == i + 1) {
                // deduction closes the scan
                at(w[i], f) = b;
                at(inv(w[i]), b) = f;
                push_deduction(f, w[i]);
                push_deduction(b, inv(w[i]));
                return true;
            }
            if (!fill) return changed;
            define(f, w[i]);
            changed = true;
            // continue the forward scan through the new coset
        }
    }

    void push_deduction(std::uint32_t c, int x) {
        if (use_dedstack_) dedstack_.emplace_back(c, x);
    }

    void run_hlt() {
        // Headroom so one coset's processing can always complete between
        // limit checks at safe points.
        std::size_t margin = static_cast<std::size_t>(nletters_) + 2;
        for (const auto& r : relators_) margin += r.size();
        for (const auto& w : subgens_) margin += w.size();

        bool changed = true;
        std::uint32_t lookahead_at = 4'000'000;
        while (changed) {
            changed = false;
            for (const auto& w : subgens_) changed |= scan(1, w, true);
            std::uint32_t c = 1;
            while (c <= nalloc_) {
                if (live(c)) {
                    bool at_cap = static_cast<std::size_t>(nalloc_) + margin >= limits_.max_cosets;
                    if (at_cap || nalloc_ >= lookahead_at) {
                        // safe point: no scan in flight.  Periodic lookahead
                        // pulls the collapsing coincidences forward and keeps
                        // the live count near the final index.
                        changed |= lookahead();
                        c = compact_keeping(c);
                        lookahead_at = std::max<std::uint32_t>(2 * nalloc_, 4'000'000);
                        if (at_cap &&
                            static_cast<std::size_t>(nalloc_) + margin >= limits_.max_cosets)
                            throw enumeration_limit_exceeded(
                                "enumerate: exceeded max_cosets=" +
                                std::to_string(limits_.max_cosets) +
                                " (not a proof the index is infinite)");
                        if (!live(c)) { ++c; continue; }
                    }
                    for (const auto& r : relators_) {
                        changed |= scan(c, r, true);
                        if (!live(c)) break;
                    }
                    if (live(c)) {
                        for (int x = 0; x < nletters_; ++x)
                            if (!at(x, c)) {
                                define(c, x);
                                changed = true;
                            }
                    }
                    maybe_compact(c);
                }
                ++c;
            }
        }
    }

    // Deduction-only pass over the full table; used when the coset limit is
    // hit, to collapse dead weight before giving up.
    bool lookahead() {
        bool changed = false;
        for (std::uint32_t c = 1; c <= nalloc_; ++c) {
            if (!live(c)) continue;
            for (const auto& r : relators_) {
                changed |= scan(c, r, false);
                if (!live(c)) break;
            }
        }
        return changed;
    }

    void maybe_compact(std::uint32_t& cursor) {
        if (nalloc_ < 4096) return;
        double dead = static_cast<double>(nalloc_ - nlive_) / static_cast<double>(nalloc_);
        if (dead > limits_.compaction_threshold) cursor = compact_keeping(cursor);
    }

    void compact() {
        std::uint32_t ignored = 0;
        compact_keeping(ignored);
    }

    // Renumber live cosets 1..nlive preserving order; returns the new number
    // of `keep` (or the largest smaller live coset).
    std::uint32_t compact_keeping(std::uint32_t& keep) {
        std::vector<std::uint32_t> newnum(nalloc_ + 1, 0);
        std::uint32_t next = 0;
        std::uint32_t keep_new = 0;
        for (std::uint32_t c = 1; c <= nalloc_; ++c) {
            if (live(c)) newnum[c] = ++next;
            if (c == keep) keep_new = newnum[c] ? newnum[c] : next;
        }
        for (int x = 0; x < nletters_; ++x) {
            auto& col = tab_[static_cast<std::size_t>(x)];
            std::vector<std::uint32_t> fresh(next + 1, 0);
            for (std::uint32_t c = 1; c <= nalloc_; ++c) {
                if (!live(c)) continue;
                std::uint32_t img = col[c];
                fresh[newnum[c]] = img ? newnum[find(img)] : 0;
            }
            col = std::move(fresh);
        }
        nalloc_ = next;
        nlive_ = next;
        rep_.assign(next + 1, 0);
        for (std::uint32_t c = 0; c <= next; ++c) rep_[c] = c;
        keep = keep_new;
        return keep_new;
    }

    // --- Felsch ---
    void run_felsch() {
        use_dedstack_ = true;
        build_rotations();
        for (const auto& w : subgens_) scan(1, w, true);
        process_deductions();
        // cursor only needs rewinding after coincidences, which can reopen
        // slots in earlier rows
        std::uint32_t c = 1;
        while (c <= nalloc_) {
            if (live(c)) {
                for (int x = 0; x < nletters_; ++x) {
                    if (!at(x, c)) {
                        std::uint64_t merges_before = collapsed_total_;
                        define(c, x);
                        process_deductions();
                        if (collapsed_total_ != merges_before) {
                            c = 0; // coincidences can reopen earlier rows
                            break;
                        }
                        if (!live(c)) break;
                        x = -1; // rescan this row from the start
                    }
                }
            }
            ++c;
        }
        use_dedstack_ = false;
    }

    void build_rotations() {
        rotations_.assign(static_cast<std::size_t>(nletters_), {});
        auto add_rots = [&](const std::vector<int>& r) {
            for (std::size_t s = 0; s < r.size(); ++s) {
                std::vector<int> rot;
                rot.reserve(r.size());
                for (std::size_t i = 0; i < r.size(); ++i) rot.push_back(r[(s + i) % r.size()]);
                auto& bucket = rotations_[static_cast<std::size_t>(rot[0])];
                bool dup = false;
                for (const auto& w : bucket)
                    if (w == rot) { dup = true; break; }
                if (!dup) bucket.push_back(std::move(rot));
            }
        };
        for (const auto& r : relators_) {
            add_rots(r);
            std::vector<int> ri(r.rbegin(), r.rend());
            for (int& x : ri) x = inv(x);
            add_rots(ri);
        }
    }

    void process_deductions() {
        while (!dedstack_.empty()) {
            auto [c, x] = dedstack_.back();
            dedstack_.pop_back();
            std::uint32_t cc = find(c);
            for (const auto& w : rotations_[static_cast<std::size_t>(x)]) {
                scan(cc, w, false);
                cc = find(cc);
            }
        }
    }

    // Breadth-first renumbering from coset 1 with letters in fixed order:
    // the canonical form shared by all strategies.
    void standardize() {
        std::vector<std::uint32_t> newnum(nalloc_ + 1, 0);
        std::vector<std::uint32_t> bfs;
        bfs.reserve(nalloc_);
        newnum[1] = 1;
        bfs.push_back(1);
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            std::uint32_t c = bfs[head];
            for (int x = 0; x < nletters_; ++x) {
                std::uint32_t d = at(x, c);
                if (d && !newnum[d]) {
                    newnum[d] = static_cast<std::uint32_t>(bfs.size()) + 1;
                    bfs.push_back(d);
                }
            }
        }
        if (bfs.size() != nlive_)
            throw std::logic_error("standardize: table not connected/closed");
        for (int x = 0; x < nletters_; ++x) {
            auto& col = tab_[static_cast<std::size_t>(x)];
            std::vector<std::uint32_t> fresh(nlive_ + 1, 0);
            for (std::uint32_t c = 1; c <= nalloc_; ++c)
                if (newnum[c]) fresh[newnum[c]] = newnum[col[c]];
            col = std::move(fresh);
        }
        nalloc_ = nlive_;
    }

    const Presentation& pres_;
    EnumerationLimits limits_;
    int ngens_ = 0;
    int nletters_ = 0;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> subgens_;
    std::vector<std::vector<std::uint32_t>> tab_;
    std::vector<std::uint32_t> rep_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::pair<std::uint32_t, int>> dedstack_;
    std::vector<std::vector<std::vector<int>>> rotations_;
    bool use_dedstack_ = false;
    bool trace_ = std::getenv("QGROUPS_TC_TRACE") != nullptr;
    std::uint32_t nalloc_ = 0;
    std::uint32_t nlive_ = 0;
    std::uint64_t defined_total_ = 0;
    std::uint64_t collapsed_total_ = 0;
};

} // namespace detail

inline CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup = {},
                            const EnumerationLimits& limits = {}) {
    detail::TcMachine m(p, subgroup, limits);
    return m.run();
}

inline std::uint32_t index(const CosetTable& t) { return t.index; }

// Re-scan every relator at every live coset and every subgroup generator at
// coset 1.  Violations are report content, not exceptions.
inline ValidationReport validate(const CosetTable& t, const Presentation& p,
                                 const std::vector<Word>& subgroup = {}) {
    ValidationReport rep;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        for (std::uint32_t c = 1; c <= t.index; ++c) {
            std::uint32_t d = c;
            for (const Letter& l : p.relators[ri].letters()) {
                d = t.apply(d, t.letter_of(l));
                if (!d) break;
            }
            if (d != c)
                rep.violations.push_back("relator " + std::to_string(ri) + " (" +
                                         p.relators[ri].str() + ") open or broken at coset " +
                                         std::to_string(c));
        }
    }
    for (const Word& w : subgroup) {
        if (t.trace(1, w) != 1)
            rep.violations.push_back("subgroup generator " + w.str() + " does not fix coset 1");
    }
    return rep;
}

inline void CosetTable::save(std::ostream& os) const {
    os << "qgroups-coset-table 1\n";
    os << "generators:";
    for (const auto& n : alphabet.names()) os << ' ' << n;
    os << "\ninvolutive: " << (alphabet.involutive() ? "true" : "false") << "\n";
    os << "index: " << index << "\n";
    os << "defined: " << defined_total << "\ncollapsed: " << collapsed_total << "\n";
    for (std::uint32_t c = 1; c <= index; ++c) {
        for (int x = 0; x < letters(); ++x) os << (x ? " " : "") << action[static_cast<std::size_t>(x)][c];
        os << "\n";
    }
}

inline CosetTable CosetTable::load(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("qgroups-coset-table", 0) != 0)
        throw std::runtime_error("coset table load: bad header");
    CosetTable t;
    std::vector<std::string> names;
    bool involutive = true;
    while (std::getline(is, line)) {
        if (line.rfind("generators:", 0) == 0) {
            std::istringstream ss(line.substr(11));
            std::string n;
            while (ss >> n) names.push_back(n);
        } else if (line.rfind("involutive:", 0) == 0) {
            involutive = line.find("true") != std::string::npos;
        } else if (line.rfind("index:", 0) == 0) {
            t.index = static_cast<std::uint32_t>(std::stoul(line.substr(6)));
        } else if (line.rfind("defined:", 0) == 0) {
            t.defined_total = std::stoull(line.substr(8));
        } else if (line.rfind("collapsed:", 0) == 0) {
            t.collapsed_total = std::stoull(line.substr(10));
            break;
        }
    }
    t.alphabet = Alphabet(names, involutive);
    int nletters = involutive ? t.alphabet.size() : 2 * t.alphabet.size();
    t.action.assign(static_cast<std::size_t>(nletters), std::vector<std::uint32_t>(t.index + 1, 0));
    for (std::uint32_t c = 1; c <= t.index; ++c) {
        if (!std::getline(is, line)) throw std::runtime_error("coset table load: truncated");
        std::istringstream ss(line);
        for (int x = 0; x < nletters; ++x) {
            std::uint32_t v = 0;
            if (!(ss >> v)) throw std::runtime_error("coset table load: short row");
            t.action[static_cast<std::size_t>(x)][c] = v;
        }
    }
    return t;
}

} // namespace qg
