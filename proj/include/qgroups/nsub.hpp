#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgroups/coxeter.hpp"
#include "qgroups/word.hpp"

namespace qg::nsub {

// The 24 listed generators of N, in the row order of the commutator table:
// alpha_y and beta_y for y in Y = {a', a, b, c, c', d, e, f}, the squares
// x_a, x_f, and the six extra conjugates.
inline const std::array<std::string, 24>& labels() {
    static const std::array<std::string, 24> l = {
        "aa'", "aa", "ab", "ac", "ac'", "ad", "ae", "af",
        "ba'", "ba", "bb", "bc", "bc'", "bd", "be", "bf",
        "xa",  "xf",
        "ac_f", "ac_fa", "ac_fe", "ac_fae",
        "be_b", "be_ba"};
    return l;
}

inline int label_index(const std::string& s) {
    const auto& l = labels();
    for (int i = 0; i < 24; ++i)
        if (l[static_cast<std::size_t>(i)] == s) return i;
    return -1;
}

// Y in the column order of the tables.
inline const std::array<std::string, 8>& column_letters() {
    static const std::array<std::string, 8> y = {"a'", "a", "b", "c", "c'", "d", "e", "f"};
    return y;
}

enum class Variant { rel1, rel2, rel3 };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::rel1: return "rel1";
        case Variant::rel2: return "rel2";
        default: return "rel3";
    }
}

struct table_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raw data of the shipped tables, mirroring the source layout cell-for-cell.
struct Tables {
    // symmetric commutator form over the 24 labels: bit j of comm[i] set
    // means [gamma_i, gamma_j] = k
    std::array<std::uint32_t, 24> comm{};
    // action cells: cell[y][label] = product over labels()+{"k"}, with the
    // t1..t22 of T5 already substituted
    std::array<std::array<std::vector<std::string>, 24>, 8> cell;
    // T1: orders of products; rows as in the file, 16 columns (0 = blank)
    std::vector<std::pair<std::string, std::array<int, 16>>> t1;
    std::array<std::string, 22> t5_ref; // per-t derivation anchor
    std::uint64_t checksum = 0;

    static Tables load(const std::string& table_dir);
};

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

inline std::vector<std::string> read_data_lines(const std::string& path, std::uint64_t& hash) {
    std::ifstream in(path);
    if (!in) throw table_error("cannot open table file " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        hash = fnv1a(hash, line + "\n");
        std::string stripped = line;
        auto cut = stripped.find('#');
        if (cut != std::string::npos) stripped = stripped.substr(0, cut);
        bool blank = stripped.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) lines.push_back(stripped);
    }
    return lines;
}

} // namespace detail

inline Tables Tables::load(const std::string& table_dir) {
    using namespace detail;
    Tables t;
    std::uint64_t h = 14695981039346656037ull;

    // T5 first: the substitutions for t1..t22
    std::map<std::string, std::vector<std::string>> tsub;
    for (const std::string& line : read_data_lines(table_dir + "/T5.tbl", h)) {
        auto cells = split_cells(line);
        if (cells.size() != 4) throw table_error("T5: expected 4 columns: " + line);
        auto name = split_ws(cells[0]);
        auto value = split_ws(cells[2]);
        auto ref = split_ws(cells[3]);
        if (name.size() != 1 || value.empty() || ref.empty())
            throw table_error("T5: malformed row: " + line);
        if (name[0].size() < 2 || name[0][0] != 't') throw table_error("T5: bad name " + name[0]);
        int idx = std::stoi(name[0].substr(1));
        if (idx < 1 || idx > 22) throw table_error("T5: index out of range " + name[0]);
        tsub[name[0]] = value;
        std::string refjoin;
        for (const std::string& r : ref) refjoin += (refjoin.empty() ? "" : " ") + r;
        t.t5_ref[static_cast<std::size_t>(idx - 1)] = refjoin;
    }
    if (tsub.size() != 22) throw table_error("T5: expected 22 rows");

    // T2 then T3: 24 action rows
    int rows_seen = 0;
    for (const char* fname : {"/T2.tbl", "/T3.tbl"}) {
        for (const std::string& line : read_data_lines(table_dir + fname, h)) {
            auto cells = split_cells(line);
            if (cells.size() != 9) throw table_error(std::string(fname) + ": expected 9 columns: " + line);
            auto rowname = split_ws(cells[0]);
            if (rowname.size() != 1) throw table_error(std::string(fname) + ": bad row label: " + line);
            int row = label_index(rowname[0]);
            if (row < 0) throw table_error(std::string(fname) + ": unknown label " + rowname[0]);
            for (int y = 0; y < 8; ++y) {
                std::vector<std::string> toks = split_ws(cells[static_cast<std::size_t>(y + 1)]);
                std::vector<std::string> resolved;
                for (const std::string& tok : toks) {
                    if (tok[0] == 't' && tok.size() > 1 && std::isdigit(static_cast<unsigned char>(tok[1]))) {
                        auto it = tsub.find(tok);
                        if (it == tsub.end()) throw table_error("unknown t-symbol " + tok);
                        resolved.insert(resolved.end(), it->second.begin(), it->second.end());
                    } else {
                        if (tok != "k" && label_index(tok) < 0)
                            throw table_error("unknown symbol '" + tok + "' in cell: " + line);
                        resolved.push_back(tok);
                    }
                }
                if (resolved.empty()) throw table_error("empty cell in " + line);
                t.cell[static_cast<std::size_t>(y)][static_cast<std::size_t>(row)] = std::move(resolved);
            }
            ++rows_seen;
        }
    }
    if (rows_seen != 24) throw table_error("T2+T3: expected 24 rows, got " + std::to_string(rows_seen));

    // T4: commutator grid; everything outside the grid commutes
    static const std::array<std::string, 15> t4cols = {
        "ba'", "ba", "bb", "bc", "bc'", "bd", "be", "bf", "af",
        "ac_f", "ac_fa", "ac_fe", "ac_fae", "be_b", "be_ba"};
    int t4rows = 0;
    for (const std::string& line : read_data_lines(table_dir + "/T4.tbl", h)) {
        auto cells = split_cells(line);
        if (cells.size() != 2) throw table_error("T4: expected 'label | entries': " + line);
        auto rowname = split_ws(cells[0]);
        auto entries = split_ws(cells[1]);
        if (rowname.size() != 1 || entries.size() != 15)
            throw table_error("T4: malformed row: " + line);
        int row = label_index(rowname[0]);
        if (row < 0) throw table_error("T4: unknown label " + rowname[0]);
        for (int c = 0; c < 15; ++c) {
            if (entries[static_cast<std::size_t>(c)] == ".") continue;
            if (entries[static_cast<std::size_t>(c)] != "k")
                throw table_error("T4: bad entry " + entries[static_cast<std::size_t>(c)]);
            int col = label_index(t4cols[static_cast<std::size_t>(c)]);
            if (row == col) throw table_error("T4: diagonal entry must commute");
            // symmetrize; a conflicting duplicate would have cleared bits
            t.comm[static_cast<std::size_t>(row)] |= 1u << col;
            t.comm[static_cast<std::size_t>(col)] |= 1u << row;
        }
        ++t4rows;
    }
    if (t4rows != 24) throw table_error("T4: expected 24 rows");

    // T1: shipped data (alpha block re-verified elsewhere)
    for (const std::string& line : read_data_lines(table_dir + "/T1.tbl", h)) {
        auto cells = split_cells(line);
        if (cells.size() != 3) throw table_error("T1: expected 3 columns: " + line);
        auto rowname = split_ws(cells[0]);
        auto left = split_ws(cells[1]);
        auto right = split_ws(cells[2]);
        if (rowname.size() != 1 || left.size() != 8 || right.size() != 8)
            throw table_error("T1: malformed row: " + line);
        std::array<int, 16> vals{};
        for (int i = 0; i < 16; ++i) {
            const std::string& v = (i < 8) ? left[static_cast<std::size_t>(i)]
                                           : right[static_cast<std::size_t>(i - 8)];
            vals[static_cast<std::size_t>(i)] = (v == ".") ? 0 : std::stoi(v);
        }
        t.t1.emplace_back(rowname[0], vals);
    }
    if (t.t1.size() != 24) throw table_error("T1: expected 24 rows");

    t.checksum = h;
    return t;
}

// Element of N: a central bit and an F_2 coordinate vector over the
// effective basis.  Multiplication is twisted by the commutator form via
// the upper-triangular cocycle c(u,v) = sum_{i>j} u_i v_j B(i,j).
struct NElement {
    std::uint8_t k = 0;
    std::uint32_t v = 0;
    bool operator==(const NElement&) const = default;
    bool is_identity() const { return k == 0 && v == 0; }
};

class NGroup {
public:
    NGroup(const Tables& tables, Variant variant) : tables_(&tables), variant_(variant) {
        // eliminated generators: beta_b and beta_c' via S1/S2 always; under
        // rel1 additionally alpha_a' (z = 1) and beta_a' (zhat = k)
        std::array<bool, 24> elim{};
        elim[static_cast<std::size_t>(idx("bb"))] = true;
        elim[static_cast<std::size_t>(idx("bc'"))] = true;
        if (variant == Variant::rel1) {
            elim[static_cast<std::size_t>(idx("aa'"))] = true;
            elim[static_cast<std::size_t>(idx("ba'"))] = true;
        }
        slot_.fill(-1);
        for (int i = 0; i < 24; ++i)
            if (!elim[static_cast<std::size_t>(i)]) slot_[static_cast<std::size_t>(i)] = rank_++;

        // commutator form restricted to the kept basis
        brow_.assign(static_cast<std::size_t>(rank_), 0);
        for (int i = 0; i < 24; ++i) {
            if (slot_[static_cast<std::size_t>(i)] < 0) continue;
            for (int j = 0; j < 24; ++j) {
                if (slot_[static_cast<std::size_t>(j)] < 0) continue;
                if (tables.comm[static_cast<std::size_t>(i)] >> j & 1u)
                    brow_[static_cast<std::size_t>(slot_[static_cast<std::size_t>(i)])] |=
                        1u << slot_[static_cast<std::size_t>(j)];
            }
        }

        // embeddings of the kept labels
        for (int i = 0; i < 24; ++i)
            if (slot_[static_cast<std::size_t>(i)] >= 0)
                embed_[static_cast<std::size_t>(i)] = NElement{0, 1u << slot_[static_cast<std::size_t>(i)]};

        if (variant == Variant::rel1) {
            // z = alpha_a' alpha_b alpha_c' = 1  =>  alpha_a' = alpha_b alpha_c' k^d
            NElement aa_ = mul(gen("ab"), gen("ac'"));
            NElement probe = mul(mul(aa_, gen("ab")), gen("ac'"));
            if (probe.v) throw table_error("rel1: z does not lie in the span of the basis");
            aa_.k ^= probe.k;
            embed_[static_cast<std::size_t>(idx("aa'"))] = aa_;
            // zhat = alpha_c' alpha_d alpha_f beta_a' = k  =>  beta_a' = ...
            NElement ba_ = mul(mul(gen("af"), gen("ad")), gen("ac'"));
            probe = mul(mul(mul(gen("ac'"), gen("ad")), gen("af")), ba_);
            if (probe.v) throw table_error("rel1: zhat does not lie in the span of the basis");
            ba_.k ^= probe.k ^ 1u; // target is k itself
            embed_[static_cast<std::size_t>(idx("ba'"))] = ba_;
        }
        // S1: alpha_b alpha_d alpha_f beta_b beta_d beta_f = 1
        embed_[static_cast<std::size_t>(idx("bb"))] =
            mul(mul(mul(mul(gen("af"), gen("ad")), gen("ab")), gen("bf")), gen("bd"));
        // S2: alpha_a' beta_c' beta_d beta_f = 1
        embed_[static_cast<std::size_t>(idx("bc'"))] = mul(mul(gen("aa'"), gen("bf")), gen("bd"));

        check_substitutions();
        build_action();
    }

    Variant variant() const { return variant_; }
    int rank() const { return rank_; }
    const Tables& tables() const { return *tables_; }

    // |N| = 2^(1 + rank)
    int order_log2() const { return 1 + rank_; }

    static NElement identity() { return NElement{}; }
    NElement k_element() const { return NElement{1, 0}; }
    NElement generator(const std::string& label) const {
        int i = idx(label);
        return embed_[static_cast<std::size_t>(i)];
    }

    NElement mul(NElement a, NElement b) const {
        return NElement{static_cast<std::uint8_t>(a.k ^ b.k ^ cocycle(a.v, b.v)),
                        a.v ^ b.v};
    }
    NElement inverse(NElement a) const {
        // a * a = k^{c(v,v)}, so a^-1 = a k^{c(v,v)}
        return NElement{static_cast<std::uint8_t>(a.k ^ cocycle(a.v, a.v)), a.v};
    }
    NElement commutator(NElement a, NElement b) const {
        // lands in {1, k}: [a,b] = k^{B(u,v)}
        return NElement{static_cast<std::uint8_t>(form(a.v, b.v)), 0};
    }
    std::uint8_t form(std::uint32_t u, std::uint32_t v) const {
        std::uint8_t r = 0;
        std::uint32_t rest = u;
        while (rest) {
            int i = __builtin_ctz(rest);
            rest &= rest - 1;
            r ^= static_cast<std::uint8_t>(__builtin_popcount(brow_[static_cast<std::size_t>(i)] & v) & 1);
        }
        return r;
    }

    bool is_central(NElement a) const {
        for (int i = 0; i < rank_; ++i)
            if (__builtin_popcount(brow_[static_cast<std::size_t>(i)] & a.v) & 1) return false;
        return true;
    }

    // radical of the commutator form (coordinate vectors of central elements)
    std::vector<std::uint32_t> radical_basis() const {
        // solve B u = 0 by Gaussian elimination on the rows
        std::vector<std::uint32_t> rows(brow_.begin(), brow_.end());
        std::vector<int> pivot_col;
        std::size_t r = 0;
        for (int c = 0; c < rank_ && r < rows.size(); ++c) {
            std::size_t p = r;
            while (p < rows.size() && !(rows[p] >> c & 1u)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[r], rows[p]);
            for (std::size_t q = 0; q < rows.size(); ++q)
                if (q != r && (rows[q] >> c & 1u)) rows[q] ^= rows[r];
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<std::uint32_t> basis;
        for (int c = 0; c < rank_; ++c) {
            bool is_pivot = false;
            for (int pc : pivot_col) is_pivot |= (pc == c);
            if (is_pivot) continue;
            std::uint32_t u = 1u << c;
            for (std::size_t i = 0; i < pivot_col.size(); ++i)
                if (rows[i] >> c & 1u) u |= 1u << pivot_col[static_cast<std::size_t>(i)];
            basis.push_back(u);
        }
        return basis;
    }

    std::vector<NElement> center() const {
        std::vector<std::uint32_t> rad = radical_basis();
        std::vector<NElement> out;
        for (std::uint32_t mask = 0; mask < (1u << rad.size()); ++mask) {
            std::uint32_t u = 0;
            for (std::size_t i = 0; i < rad.size(); ++i)
                if (mask >> i & 1u) u ^= rad[i];
            out.push_back(NElement{0, u});
            out.push_back(NElement{1, u});
        }
        return out;
    }

    std::vector<NElement> derived() const { return {identity(), k_element()}; }

    NElement z_element() const {
        return mul(mul(generator("aa'"), generator("ab")), generator("ac'"));
    }
    NElement zhat_element() const {
        return mul(mul(mul(generator("ac'"), generator("ad")), generator("af")), generator("ba'"));
    }

    // conjugation action of y in Y on N, from the T2/T3 cells
    NElement parse_element(const std::vector<std::string>& tokens) const {
        NElement r;
        for (const std::string& tok : tokens) {
            if (tok == "k")
                r = mul(r, k_element());
            else
                r = mul(r, generator(tok));
        }
        return r;
    }

    NElement apply_letter(int y, NElement a) const {
        NElement r{a.k, 0};
        std::uint32_t rest = a.v;
        while (rest) {
            int s = __builtin_ctz(rest);
            rest &= rest - 1;
            r = mul(r, act_[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)]);
        }
        return r;
    }

    // gamma^w for w a word over Y (letters applied left to right)
    NElement apply_word(const Word& w, NElement a) const {
        for (const Letter& l : w.letters()) {
            int y = column_of(w.alphabet().name(l.gen));
            if (y < 0) throw table_error("action: letter outside Y: " + w.alphabet().name(l.gen));
            a = apply_letter(y, a);
        }
        return a;
    }

    bool letter_action_is_automorphism(int y, std::string* why = nullptr) const {
        // squares, commutator preservation, and independence of the images
        std::vector<std::uint32_t> imgs;
        for (int i = 0; i < 24; ++i) {
            if (slot_[static_cast<std::size_t>(i)] < 0) continue;
            NElement im = act_[static_cast<std::size_t>(y)][static_cast<std::size_t>(slot_[static_cast<std::size_t>(i)])];
            if (!mul(im, im).is_identity()) {
                if (why) *why = "image of " + labels()[static_cast<std::size_t>(i)] + " is not an involution";
                return false;
            }
            imgs.push_back(im.v);
        }
        for (int i = 0; i < rank_; ++i)
            for (int j = i + 1; j < rank_; ++j) {
                std::uint8_t want = static_cast<std::uint8_t>(brow_[static_cast<std::size_t>(i)] >> j & 1u);
                if (form(imgs[static_cast<std::size_t>(i)], imgs[static_cast<std::size_t>(j)]) != want) {
                    if (why) *why = "commutator of images of slots " + std::to_string(i) + "," + std::to_string(j) + " not preserved";
                    return false;
                }
            }
        // rank check
        std::vector<std::uint32_t> rows = imgs;
        int rk = 0;
        for (int c = 0; c < rank_; ++c) {
            std::size_t p = static_cast<std::size_t>(rk);
            while (p < rows.size() && !(rows[p] >> c & 1u)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[static_cast<std::size_t>(rk)], rows[p]);
            for (std::size_t q = 0; q < rows.size(); ++q)
                if (q != static_cast<std::size_t>(rk) && (rows[q] >> c & 1u)) rows[q] ^= rows[static_cast<std::size_t>(rk)];
            ++rk;
        }
        if (rk != rank_) {
            if (why) *why = "images are linearly dependent";
            return false;
        }
        return true;
    }

    bool word_acts_trivially(const Word& w) const {
        for (int i = 0; i < 24; ++i) {
            if (slot_[static_cast<std::size_t>(i)] < 0) continue;
            NElement e = embed_[static_cast<std::size_t>(i)];
            if (!(apply_word(w, e) == e)) return false;
        }
        return true;
    }

    static int column_of(const std::string& letter) {
        const auto& cols = column_letters();
        for (int i = 0; i < 8; ++i)
            if (cols[static_cast<std::size_t>(i)] == letter) return i;
        return -1;
    }

    // cell image of a label under y as an element (used by checks)
    NElement cell_element(int y, const std::string& label) const {
        return parse_element(tables_->cell[static_cast<std::size_t>(y)][static_cast<std::size_t>(idx(label))]);
    }

private:
    static int idx(const std::string& s) {
        int i = label_index(s);
        if (i < 0) throw table_error("unknown label " + s);
        return i;
    }

    NElement gen(const std::string& s) const { return embed_[static_cast<std::size_t>(idx(s))]; }

    std::uint8_t cocycle(std::uint32_t u, std::uint32_t v) const {
        // sum over i > j of u_i v_j B(i,j)
        std::uint8_t r = 0;
        std::uint32_t rest = u;
        while (rest) {
            int i = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t below = (1u << i) - 1u;
            r ^= static_cast<std::uint8_t>(
                __builtin_popcount(v & below & brow_[static_cast<std::size_t>(i)]) & 1);
        }
        return r;
    }

    // The substituted generators must reproduce their commutator rows; a
    // mismatch means the shipped tables are inconsistent.
    void check_substitutions() const {
        std::vector<std::string> subst = {"bb", "bc'"};
        if (variant_ == Variant::rel1) {
            subst.push_back("aa'");
            subst.push_back("ba'");
        }
        for (const std::string& s : subst) {
            NElement e = gen(s);
            for (int j = 0; j < 24; ++j) {
                if (slot_[static_cast<std::size_t>(j)] < 0) continue;
                std::uint8_t want =
                    static_cast<std::uint8_t>(tables_->comm[static_cast<std::size_t>(idx(s))] >> j & 1u);
                if (form(e.v, embed_[static_cast<std::size_t>(j)].v) != want)
                    throw table_error("substitution for " + s +
                                      " contradicts the commutator row at " +
                                      labels()[static_cast<std::size_t>(j)]);
            }
        }
    }

    void build_action() {
        for (int y = 0; y < 8; ++y)
            for (int i = 0; i < 24; ++i) {
                int s = slot_[static_cast<std::size_t>(i)];
                if (s < 0) continue;
                act_[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)] =
                    parse_element(tables_->cell[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)]);
            }
    }

    const Tables* tables_;
    Variant variant_;
    int rank_ = 0;
    std::array<int, 24> slot_{};
    std::array<NElement, 24> embed_{};
    std::vector<std::uint32_t> brow_;
    std::array<std::array<NElement, 24>, 8> act_{}; // [y][slot]
};

inline NGroup build(const Tables& tables, Variant variant) { return NGroup(tables, variant); }

} // namespace qg::nsub
