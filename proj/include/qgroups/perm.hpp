#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgroups/coset_table.hpp"
#include "qgroups/word.hpp"

namespace qg {

// Permutation of {0..n-1}, applied left-to-right: (p*q)(x) = q(p(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::uint32_t degree) : img_(degree) {
        std::iota(img_.begin(), img_.end(), 0u);
    }
    explicit Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (std::uint32_t v : img_) {
            if (v >= img_.size() || seen[v])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    Perm operator*(const Perm& o) const { // apply *this, then o
        if (degree() != o.degree()) throw std::invalid_argument("Perm: degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (std::uint32_t i = 0; i < degree(); ++i) r.img_[i] = o.img_[img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (std::uint32_t i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    bool commutes_with(const Perm& o) const {
        for (std::uint32_t i = 0; i < degree(); ++i)
            if (o.img_[img_[i]] != img_[o.img_[i]]) return false;
        return true;
    }

    // lcm of cycle lengths
    std::uint64_t order() const {
        std::vector<bool> seen(img_.size(), false);
        std::uint64_t ord = 1;
        for (std::uint32_t i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    // 1-based cycle notation, fixed points omitted
    std::string cycle_string() const {
        std::vector<bool> seen(img_.size(), false);
        std::string out;
        for (std::uint32_t i = 0; i < degree(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            out += '(';
            bool first = true;
            for (std::uint32_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                if (!first) out += ' ';
                out += std::to_string(j + 1);
                first = false;
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

private:
    std::vector<std::uint32_t> img_;
};

// Generator actions of a closed coset table, as permutations of {0..index-1}.
inline std::vector<Perm> perm_images(const CosetTable& t) {
    std::vector<Perm> out;
    for (int g = 0; g < t.alphabet.size(); ++g) {
        int letter = t.alphabet.involutive() ? g : 2 * g;
        std::vector<std::uint32_t> img(t.index);
        for (std::uint32_t c = 1; c <= t.index; ++c) {
            std::uint32_t d = t.action[static_cast<std::size_t>(letter)][c];
            if (!d) throw std::runtime_error("perm_images: table not closed");
            img[c - 1] = d - 1;
        }
        out.emplace_back(std::move(img));
    }
    return out;
}

// Word evaluation under an assignment generator -> permutation; composes
// left-to-right.
inline Perm evaluate(const Word& w, const std::vector<Perm>& assignment) {
    const Alphabet& a = w.alphabet();
    if (static_cast<int>(assignment.size()) != a.size())
        throw std::invalid_argument("evaluate: assignment size does not match alphabet");
    std::uint32_t deg = assignment.empty() ? 0 : assignment[0].degree();
    for (const Perm& p : assignment)
        if (p.degree() != deg) throw std::invalid_argument("evaluate: degree mismatch");
    Perm r(deg);
    for (const Letter& l : w.letters()) {
        const Perm& g = assignment[static_cast<std::size_t>(l.gen)];
        r = (l.sign > 0 || a.involutive()) ? r * g : r * g.inverse();
    }
    return r;
}

inline std::uint64_t element_order(const Perm& p) { return p.order(); }

} // namespace qg
