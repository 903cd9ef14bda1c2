#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgroups/word.hpp"

namespace qg {

// Simple graph on generator labels.  Edge => product order 3, non-edge =>
// product order 2 (all generators are involutions).
class CoxeterGraph {
public:
    CoxeterGraph() = default;
    CoxeterGraph(std::vector<std::string> nodes,
                 std::vector<std::pair<std::string, std::string>> edges)
        : nodes_(std::move(nodes)) {
        for (auto& [u, v] : edges) add_edge(u, v);
    }

    const std::vector<std::string>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    int node_index(const std::string& n) const {
        auto it = std::find(nodes_.begin(), nodes_.end(), n);
        return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
    }

    void add_edge(const std::string& u, const std::string& v) {
        int a = node_index(u), b = node_index(v);
        if (a < 0 || b < 0) throw std::invalid_argument("CoxeterGraph: edge endpoint not a node: " + u + "-" + v);
        if (a == b) throw std::invalid_argument("CoxeterGraph: self-loop at " + u);
        edges_.insert(key(a, b));
    }

    bool adjacent(const std::string& u, const std::string& v) const {
        int a = node_index(u), b = node_index(v);
        if (a < 0 || b < 0) return false;
        return edges_.count(key(a, b)) != 0;
    }

private:
    static std::pair<int, int> key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }
    std::vector<std::string> nodes_;
    std::set<std::pair<int, int>> edges_;
};

// Alphabet (involutive) plus relator words.  The involution relators g^2 are
// implicit in the involutive alphabet and never duplicated here.
struct Presentation {
    Alphabet alphabet;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(Alphabet a, std::vector<Word> r)
        : alphabet(std::move(a)), relators(std::move(r)) {}
};

// Q_rst: hexagon a-b-c-d-e-f plus arms at a, c, e.  The first arm node is
// written with a prime (a' adjacent to a), deeper ones stack primes.
inline CoxeterGraph q_graph(int r, int s, int t) {
    if (r < 1 || s < 1 || t < 1 || r > 4 || s > 4 || t > 4)
        throw std::invalid_argument("q_graph: arm lengths must be in 1..4");
    std::vector<std::string> nodes = {"a", "b", "c", "d", "e", "f"};
    std::vector<std::pair<std::string, std::string>> edges = {
        {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}};
    auto arm = [&](const std::string& root, int len) {
        std::string prev = root;
        for (int i = 2; i <= len; ++i) {
            std::string node = root + std::string(static_cast<std::size_t>(i - 1), '\'');
            nodes.push_back(node);
            edges.emplace_back(prev, node);
            prev = node;
        }
    };
    arm("a", r);
    arm("c", s);
    arm("e", t);
    return CoxeterGraph(std::move(nodes), std::move(edges));
}

// Y-shaped trees used for W(E_7) and its extensions.
inline CoxeterGraph preset_graph(const std::string& name) {
    if (name == "Q_111") return q_graph(1, 1, 1);
    if (name == "Q_211") return q_graph(2, 1, 1);
    if (name == "Q_221") return q_graph(2, 2, 1);
    if (name == "Q_222") return q_graph(2, 2, 2);
    if (name == "Y_321") {
        // chain a-b-c-d-e with c' on c and e' on e
        return CoxeterGraph({"a", "b", "c", "d", "e", "c'", "e'"},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                             {"c", "c'"}, {"e", "e'"}});
    }
    if (name == "Y_331") {
        // Y_321 with the chain extended by a' on a
        return CoxeterGraph({"a", "b", "c", "d", "e", "a'", "c'", "e'"},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                             {"a", "a'"}, {"c", "c'"}, {"e", "e'"}});
    }
    if (name == "Y_333") {
        // central node a with three arms b_i - c_i - d_i
        std::vector<std::string> nodes = {"a"};
        std::vector<std::pair<std::string, std::string>> edges;
        for (int i = 1; i <= 3; ++i) {
            std::string b = "b" + std::to_string(i);
            std::string c = "c" + std::to_string(i);
            std::string d = "d" + std::to_string(i);
            nodes.push_back(b);
            nodes.push_back(c);
            nodes.push_back(d);
            edges.emplace_back("a", b);
            edges.emplace_back(b, c);
            edges.emplace_back(c, d);
        }
        return CoxeterGraph(std::move(nodes), std::move(edges));
    }
    throw std::invalid_argument("preset_graph: unknown preset '" + name + "'");
}

// Relators (xy)^3 for edges and (xy)^2 for non-edges, over an involutive
// alphabet in the graph's node order.
inline Presentation coxeter_presentation(const CoxeterGraph& g) {
    Alphabet a(g.nodes(), /*involutive=*/true);
    std::vector<Word> rels;
    const auto& ns = g.nodes();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t j = i + 1; j < ns.size(); ++j) {
            Word x(a, {Letter{static_cast<std::int16_t>(i), 1}});
            Word y(a, {Letter{static_cast<std::int16_t>(j), 1}});
            int m = g.adjacent(ns[i], ns[j]) ? 3 : 2;
            rels.push_back((x * y).pow(m));
        }
    }
    return Presentation(std::move(a), std::move(rels));
}

} // namespace qg
