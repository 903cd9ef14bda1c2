#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgroups/bigint.hpp"
#include "qgroups/perm.hpp"

namespace qg {

// Permutation group with a deterministic Schreier-Sims base and strong
// generating set.  Base points are chosen as the smallest moved point, so
// repeated runs on the same generators produce the same chain.
class PermGroup {
public:
    explicit PermGroup(std::vector<Perm> generators) : gens_(std::move(generators)) {
        if (gens_.empty()) throw std::invalid_argument("PermGroup: need at least one permutation");
        degree_ = gens_[0].degree();
        for (const Perm& g : gens_)
            if (g.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch");
    }

    std::uint32_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    BigUint order() const {
        build();
        BigUint o(1);
        for (const Level& lv : chain_) o.mul_small(static_cast<std::uint32_t>(lv.orbit.size()));
        return o;
    }

    bool contains(const Perm& g) const {
        build();
        auto [h, level] = strip(g, 0);
        (void)level;
        return h.is_identity();
    }

    bool is_central(const Perm& p) const {
        for (const Perm& g : gens_)
            if (!p.commutes_with(g)) return false;
        return true;
    }

    std::size_t base_length() const {
        build();
        return chain_.size();
    }

    // Streams every group element (via transversal products, never
    // materializing the element list) and collects those satisfying `pred`.
    // Deterministic order.  Throws if the order exceeds `bound`.
    std::vector<Perm> exhaustive_search(const std::function<bool(const Perm&)>& pred,
                                        std::uint64_t bound = 10'000'000) const {
        build();
        BigUint ord = order();
        if (BigUint(bound) < ord)
            throw std::runtime_error("exhaustive_search: group order " + ord.to_string() +
                                     " exceeds bound " + std::to_string(bound));
        std::vector<Perm> found;
        // explicit transversals per level, indexed by orbit position
        std::vector<std::vector<Perm>> trans(chain_.size());
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            trans[i].reserve(chain_[i].orbit.size());
            for (std::uint32_t p : chain_[i].orbit) trans[i].push_back(transversal(i, p));
        }
        std::size_t k = chain_.size();
        std::vector<std::size_t> idx(k, 0);
        // element = u_(k-1) * ... * u_0 ; suffix[j] = u_(k-1) * ... * u_j
        std::vector<Perm> suffix(k + 1);
        suffix[k] = Perm(degree_);
        for (std::size_t j = k; j-- > 0;) suffix[j] = suffix[j + 1] * trans[j][0];
        for (;;) {
            if (pred(suffix[0])) found.push_back(suffix[0]);
            // odometer: level 0 varies fastest
            std::size_t j = 0;
            while (j < k && idx[j] + 1 == trans[j].size()) {
                idx[j] = 0;
                ++j;
            }
            if (j == k) break;
            ++idx[j];
            for (std::size_t l = j + 1; l-- > 0;) suffix[l] = suffix[l + 1] * trans[l][idx[l]];
        }
        return found;
    }

private:
    struct Level {
        std::uint32_t base = 0;
        std::vector<std::uint32_t> orbit;       // BFS order, orbit[0] == base
        std::vector<std::int64_t> parent;       // per point: encoded tree edge, -1 root, -2 outside
        std::vector<Perm> sgens;                // strong generators attached at this level
        std::vector<Perm> sgen_inv;
    };

    // Strong generators available at level i are those attached at levels >= i
    // (they fix the first i base points).
    void orbit_build(std::size_t i) const {
        Level& lv = chain_[i];
        lv.orbit.clear();
        lv.parent.assign(degree_, -2);
        lv.parent[lv.base] = -1;
        lv.orbit.push_back(lv.base);
        std::vector<const Perm*> gens;
        std::vector<std::int64_t> codes;
        for (std::size_t j = i; j < chain_.size(); ++j) {
            for (std::size_t s = 0; s < chain_[j].sgens.size(); ++s) {
                gens.push_back(&chain_[j].sgens[s]);
                codes.push_back(static_cast<std::int64_t>(j) * 65536 + static_cast<std::int64_t>(s));
            }
        }
        for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
            std::uint32_t p = lv.orbit[head];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                std::uint32_t q = (*gens[gi])(p);
                if (lv.parent[q] == -2) {
                    lv.parent[q] = codes[gi];
                    lv.orbit.push_back(q);
                }
            }
        }
    }

    const Perm& sgen_by_code(std::int64_t code) const {
        return chain_[static_cast<std::size_t>(code / 65536)].sgens[static_cast<std::size_t>(code % 65536)];
    }
    const Perm& sgen_inv_by_code(std::int64_t code) const {
        return chain_[static_cast<std::size_t>(code / 65536)].sgen_inv[static_cast<std::size_t>(code % 65536)];
    }

    // transversal element u_p with base^(u_p) = p, composed along the tree
    Perm transversal(std::size_t i, std::uint32_t p) const {
        std::vector<std::int64_t> path;
        std::uint32_t q = p;
        while (chain_[i].parent[q] >= 0) {
            std::int64_t code = chain_[i].parent[q];
            path.push_back(code);
            q = sgen_inv_by_code(code)(q);
        }
        Perm u(degree_);
        for (std::size_t j = path.size(); j-- > 0;) u = u * sgen_by_code(path[j]);
        return u;
    }

    // Sift g through levels from `from`; returns the residue and the level
    // where sifting stopped (chain_.size() if it ran off the end).
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
        for (std::size_t i = from; i < chain_.size(); ++i) {
            std::uint32_t p = g(chain_[i].base);
            if (p == chain_[i].base) continue;
            if (chain_[i].parent[p] == -2) return {std::move(g), i};
            // divide out the transversal element: g := g * u_p^{-1}
            std::uint32_t q = p;
            while (chain_[i].parent[q] >= 0) {
                std::int64_t code = chain_[i].parent[q];
                g = g * sgen_inv_by_code(code);
                q = g(chain_[i].base);
            }
        }
        return {std::move(g), chain_.size()};
    }

    static std::uint32_t smallest_moved(const Perm& g) {
        for (std::uint32_t i = 0; i < g.degree(); ++i)
            if (g(i) != i) return i;
        throw std::logic_error("smallest_moved: identity");
    }

    void attach(std::size_t level, Perm h) const {
        if (level == chain_.size()) {
            chain_.emplace_back();
            chain_.back().base = smallest_moved(h);
        }
        chain_[level].sgen_inv.push_back(h.inverse());
        chain_[level].sgens.push_back(std::move(h));
        for (std::size_t j = level + 1; j-- > 0;) orbit_build(j);
    }

    void build() const {
        if (built_) return;
        chain_.clear();
        for (const Perm& g : gens_) {
            if (g.is_identity()) continue;
            auto [h, lvl] = strip(g, 0);
            if (!h.is_identity()) attach(lvl, std::move(h));
        }
        if (chain_.empty()) { // identity-only group
            built_ = true;
            return;
        }
        // verify the Schreier condition at each level, deepest first
        std::size_t i = chain_.size() - 1;
        for (;;) {
            bool clean = true;
            for (std::size_t oi = 0; oi < chain_[i].orbit.size() && clean; ++oi) {
                std::uint32_t p = chain_[i].orbit[oi];
                Perm up = transversal(i, p);
                for (std::size_t j = i; j < chain_.size() && clean; ++j) {
                    for (std::size_t s = 0; s < chain_[j].sgens.size() && clean; ++s) {
                        const Perm& g = chain_[j].sgens[s];
                        Perm schreier = up * g * transversal(i, g(p)).inverse();
                        if (schreier.is_identity()) continue;
                        auto [h, lvl] = strip(std::move(schreier), i + 1);
                        if (!h.is_identity()) {
                            std::size_t at = lvl;
                            attach(at, std::move(h)); // may reallocate chain_
                            i = at;
                            clean = false;
                        }
                    }
                }
            }
            if (!clean) continue;
            if (i == 0) break;
            --i;
        }
        built_ = true;
    }

    std::vector<Perm> gens_;
    std::uint32_t degree_ = 0;
    mutable bool built_ = false;
    mutable std::vector<Level> chain_;
};

inline BigUint group_order(const PermGroup& g) { return g.order(); }

inline bool is_central(const Perm& p, const PermGroup& g) { return g.is_central(p); }

// Smallest normal subgroup of <group_gens> containing `seeds`.
inline std::vector<Perm> normal_closure_generators(const std::vector<Perm>& group_gens,
                                                   const std::vector<Perm>& seeds) {
    std::vector<Perm> nc;
    std::vector<Perm> work = seeds;
    std::vector<Perm> gen_inv;
    gen_inv.reserve(group_gens.size());
    for (const Perm& g : group_gens) gen_inv.push_back(g.inverse());
    while (!work.empty()) {
        Perm x = work.back();
        work.pop_back();
        if (x.is_identity()) continue;
        if (!nc.empty() && PermGroup(nc).contains(x)) continue;
        nc.push_back(x);
        for (std::size_t i = 0; i < group_gens.size(); ++i)
            work.push_back(gen_inv[i] * x * group_gens[i]);
    }
    return nc;
}

} // namespace qg
