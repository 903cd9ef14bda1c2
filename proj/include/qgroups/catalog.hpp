#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgroups/coxeter.hpp"
#include "qgroups/word.hpp"

namespace qg {

struct catalog_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Location of the shipped data files.  QGROUPS_DATA overrides the
// compiled-in default.
inline std::string data_dir() {
    if (const char* env = std::getenv("QGROUPS_DATA")) return env;
#ifdef QGROUPS_DATA_DIR
    return QGROUPS_DATA_DIR;
#else
    return "data";
#endif
}

struct ExpectedFact {
    std::string key;
    std::string value;
    std::string tag; // source | trivial | derived
    std::string ref; // anchor into the verified text (table / section key)
};

// A named presentation plus its distinguished words and expected facts.
struct CatalogEntry {
    std::string name;
    Presentation presentation;
    std::vector<std::pair<std::string, std::string>> word_texts; // declaration order
    std::map<std::string, Word> words;
    std::vector<ExpectedFact> facts;
    std::vector<std::string> notes;

    const Word& word(const std::string& wname) const {
        auto it = words.find(wname);
        if (it == words.end())
            throw catalog_error("entry " + name + ": no distinguished word '" + wname + "'");
        return it->second;
    }

    const ExpectedFact* fact(const std::string& key) const {
        for (const auto& f : facts)
            if (f.key == key) return &f;
        return nullptr;
    }

    std::uint64_t fact_u64(const std::string& key) const {
        const ExpectedFact* f = fact(key);
        if (!f) throw catalog_error("entry " + name + ": no fact '" + key + "'");
        return std::stoull(f->value);
    }
};

namespace detail {

// $NAME references expand (recursively) to the parenthesized text of a
// `word` line, so composite words stay readable in the data files.
inline std::string expand_refs(const std::string& text,
                               const std::vector<std::pair<std::string, std::string>>& defs,
                               int depth = 0) {
    if (depth > 16) throw catalog_error("word references nested too deeply (cycle?)");
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '$') {
            out += text[i++];
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
            ++j;
        std::string ref = text.substr(i + 1, j - i - 1);
        // longest matching defined name (names may share prefixes)
        const std::string* found = nullptr;
        std::size_t found_len = 0;
        for (const auto& [n, t] : defs) {
            if (n.size() <= ref.size() && ref.compare(0, n.size(), n) == 0 && n.size() > found_len) {
                found = &t;
                found_len = n.size();
            }
        }
        if (!found) throw catalog_error("unknown word reference $" + ref);
        out += "(" + expand_refs(*found, defs, depth + 1) + ")";
        i += 1 + found_len;
    }
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

// Parse one presentation file:
//   name: H36
//   generators: a b c d e f
//   involutive: true
//   relator: (ab)^3
//   word: V = (adbecf)^4
//   fact: order = 174960 ; source ; A6.1
//   note: free text
inline CatalogEntry load_entry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw catalog_error("cannot open presentation file " + path);
    CatalogEntry e;
    std::vector<std::string> gen_names;
    bool involutive = true;
    std::vector<std::string> relator_texts;
    std::string line;
    while (std::getline(in, line)) {
        auto cut = line.find('#');
        if (cut != std::string::npos) line = line.substr(0, cut);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw catalog_error(path + ": malformed line: " + line);
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));
        if (key == "name") {
            e.name = value;
        } else if (key == "generators") {
            std::istringstream ss(value);
            std::string g;
            while (ss >> g) gen_names.push_back(g);
        } else if (key == "involutive") {
            involutive = (value == "true");
        } else if (key == "relator") {
            relator_texts.push_back(value);
        } else if (key == "word") {
            auto eq = value.find('=');
            if (eq == std::string::npos) throw catalog_error(path + ": word line needs '=': " + line);
            e.word_texts.emplace_back(detail::trim(value.substr(0, eq)),
                                      detail::trim(value.substr(eq + 1)));
        } else if (key == "fact") {
            // key = value ; tag ; ref
            std::vector<std::string> parts;
            std::string cur;
            for (char c : value) {
                if (c == ';') {
                    parts.push_back(detail::trim(cur));
                    cur.clear();
                } else
                    cur += c;
            }
            parts.push_back(detail::trim(cur));
            if (parts.size() < 3) throw catalog_error(path + ": fact line needs 'k = v ; tag ; ref'");
            std::string ref = parts[2];
            for (std::size_t pi = 3; pi < parts.size(); ++pi) ref += "; " + parts[pi];
            auto eq = parts[0].find('=');
            if (eq == std::string::npos) throw catalog_error(path + ": fact line needs '=': " + line);
            e.facts.push_back(ExpectedFact{detail::trim(parts[0].substr(0, eq)),
                                           detail::trim(parts[0].substr(eq + 1)), parts[1], ref});
        } else if (key == "note") {
            e.notes.push_back(value);
        } else {
            throw catalog_error(path + ": unknown key '" + key + "'");
        }
    }
    if (e.name.empty() || gen_names.empty()) throw catalog_error(path + ": missing name/generators");
    e.presentation.alphabet = Alphabet(gen_names, involutive);
    WordParser parser(e.presentation.alphabet);
    for (const std::string& rt : relator_texts) {
        Word r = parser.parse(detail::expand_refs(rt, e.word_texts));
        if (!r.empty()) e.presentation.relators.push_back(std::move(r));
    }
    for (const auto& [wname, wtext] : e.word_texts)
        e.words[wname] = parser.parse(detail::expand_refs(wtext, e.word_texts));
    return e;
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "H36", "H36_STAR", "G63", "WE6", "WE7", "Y331A", "K", "G1", "G2", "G3",
        "UHAT", "ESIDE"};
    return names;
}

inline const CatalogEntry& catalog(const std::string& name) {
    static std::map<std::string, CatalogEntry> cache;
    static std::mutex* mtx = new std::mutex;
    std::lock_guard<std::mutex> lock(*mtx);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    bool known = false;
    for (const auto& n : catalog_names()) known |= (n == name);
    if (!known) throw catalog_error("catalog: unknown entry '" + name + "'");
    CatalogEntry e = load_entry_file(data_dir() + "/presentations/" + name + ".pres");
    if (e.name != name)
        throw catalog_error("catalog: file for " + name + " declares name " + e.name);
    return cache.emplace(name, std::move(e)).first->second;
}

} // namespace qg
