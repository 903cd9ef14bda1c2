#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgroups/bigint.hpp"

namespace qg {

// One verified fact: expected vs measured, with the oracle kind backing the
// expectation (source = asserted by the verified text, trivial = immediate
// arithmetic, derived = computed here by an independent route) and a short
// anchor into the text or tables.
struct Check {
    std::string name;
    std::string expected;
    std::string measured;
    bool pass = false;
    std::string tag;
    std::string ref;
};

struct ScenarioReport {
    std::string name;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    double seconds = 0; // console only, never serialized

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass;
        return n;
    }

    Check& add(const std::string& cname, const std::string& expected,
               const std::string& measured, const std::string& tag, const std::string& ref) {
        checks.push_back(Check{cname, expected, measured, expected == measured, tag, ref});
        return checks.back();
    }
    template <typename T, typename U>
    Check& add_eq(const std::string& cname, const T& expected, const U& measured,
                  const std::string& tag, const std::string& ref) {
        std::ostringstream e, m;
        e << expected;
        m << measured;
        return add(cname, e.str(), m.str(), tag, ref);
    }
    Check& add_true(const std::string& cname, bool measured, const std::string& tag,
                    const std::string& ref) {
        return add(cname, "true", measured ? "true" : "false", tag, ref);
    }

    std::string summary_line() const {
        return (pass() ? "pass " : "FAIL ") + name + " (" + std::to_string(passed()) + "/" +
               std::to_string(checks.size()) + " checks)";
    }

    // Deterministic serialization; timings deliberately excluded so repeated
    // runs produce byte-identical reports.
    void serialize(std::ostream& os) const {
        os << "scenario: " << name << "\n";
        os << "status: " << (pass() ? "pass" : "fail") << "\n";
        for (const auto& c : checks) {
            os << "check: " << c.name << "\n";
            os << "  expected: " << c.expected << "\n";
            os << "  measured: " << c.measured << "\n";
            os << "  status: " << (c.pass ? "pass" : "fail") << "\n";
            os << "  oracle: " << c.tag << "\n";
            os << "  ref: " << c.ref << "\n";
        }
        for (const auto& n : notes) os << "note: " << n << "\n";
        os << "summary: " << summary_line() << "\n";
    }
};

inline std::ostream& operator<<(std::ostream& os, const BigUint& b) { return os << b.to_string(); }

} // namespace qg
