// Command-line front end: coset enumeration, permutation-group utilities,
// the U_6(2) transvection model, the N tables, and the named verification
// scenarios.
#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>

#include "qgroups/catalog.hpp"
#include "qgroups/coset_table.hpp"
#include "qgroups/nsub.hpp"
#include "qgroups/perm.hpp"
#include "qgroups/scenarios.hpp"
#include "qgroups/unitary.hpp"

using namespace qg;

namespace {

Presentation load_presentation(const std::string& spec) {
    // either a catalog entry name or a path to a .pres file
    for (const auto& n : catalog_names())
        if (n == spec) return catalog(spec).presentation;
    return load_entry_file(spec).presentation;
}

std::vector<Word> parse_subgroup(const Presentation& p, const std::string& csv) {
    std::vector<Word> out;
    std::string cur;
    WordParser parser(p.alphabet);
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parser.parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

int cmd_enumerate(const std::string& pres, const std::string& subgroup, std::uint32_t max_cosets,
                  const std::string& strategy, const std::string& out_path) {
    Presentation p = load_presentation(pres);
    EnumerationLimits lim;
    if (max_cosets) lim.max_cosets = max_cosets;
    lim.strategy = (strategy == "felsch") ? TcStrategy::DefinitionFirst : TcStrategy::RelatorScanFirst;
    CosetTable t = enumerate(p, parse_subgroup(p, subgroup), lim);
    std::cout << "index: " << t.index << "\n";
    std::cout << "defined: " << t.defined_total << " collapsed: " << t.collapsed_total << "\n";
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        t.save(os);
        std::cout << "table written to " << out_path << "\n";
    }
    return 0;
}

CosetTable load_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open table file " + path);
    return CosetTable::load(is);
}

int cmd_order(const std::string& table_path) {
    CosetTable t = load_table(table_path);
    PermGroup g(perm_images(t));
    std::cout << "degree: " << t.index << "\n";
    std::cout << "order: " << g.order().to_string() << "\n";
    std::cout << "base length: " << g.base_length() << "\n";
    return 0;
}

int cmd_check_word(const std::string& table_path, const std::string& word_text) {
    CosetTable t = load_table(table_path);
    PermGroup g(perm_images(t));
    Word w = parse_word(word_text, t.alphabet);
    Perm p = evaluate(w, g.generators());
    std::cout << "word: " << word_text << "\n";
    std::cout << "order: " << p.order() << "\n";
    std::cout << "central: " << (g.is_central(p) ? "yes" : "no") << "\n";
    std::cout << "identity: " << (p.is_identity() ? "yes" : "no") << "\n";
    return 0;
}

int cmd_u6(bool check_assignment, const std::string& diagram_node, bool order) {
    HermitianSpace sp;
    StandardAssignment sa = standard_assignment(sp);
    if (check_assignment) {
        Presentation p = catalog("K").presentation;
        auto rep = check_relators(p, sa.matrices);
        std::cout << "relators: " << p.relators.size() << "\n";
        std::cout << "violations: " << rep.violations.size() << "\n";
        std::cout << "central scalars: " << rep.central_scalars.size();
        for (const auto& s : rep.central_scalars) std::cout << "  (" << s << ")";
        std::cout << "\n";
        for (int i = 0; i < sa.alphabet.size(); ++i)
            std::cout << sa.alphabet.name(i) << " -> t(" << sa.vectors[static_cast<std::size_t>(i)].str()
                      << ")\n";
    }
    if (!diagram_node.empty()) {
        // third-arm completion at the given hexagon node: order 3 there,
        // order 2 against every other assigned generator
        std::vector<std::pair<std::string, int>> cons;
        for (int i = 0; i < sa.alphabet.size(); ++i) {
            const std::string& n = sa.alphabet.name(i);
            cons.emplace_back(n, n == diagram_node ? 3 : 2);
        }
        auto found = complete_diagram(sp, sa, cons);
        std::cout << "completions at " << diagram_node << ": " << found.size() << "\n";
        for (Vec6 v : found) {
            std::cout << "  t(" << v.str() << ")\n"
                      << sp.transvection(v).str();
        }
    }
    if (order) {
        std::cout << "vector action order:     " << matrix_group_order(sa.matrices).to_string() << "\n";
        std::cout << "projective action order: " << projective_group_order(sa.matrices).to_string()
                  << "\n";
    }
    return 0;
}

int cmd_nsub_verify(const std::string& variant, const std::string& report_path) {
    ScenarioContext ctx;
    ScenarioReport rep = run_scenario("nsub-verify-" + variant, ctx);
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        rep.serialize(os);
    }
    rep.serialize(std::cout);
    return rep.pass() ? 0 : 1;
}

int cmd_verify(const std::string& which, const std::string& report_path, bool parallel,
               std::uint32_t max_cosets) {
    std::vector<std::string> names;
    if (which == "all")
        names = scenario_registry();
    else
        names.push_back(which);
    ScenarioOptions opt;
    opt.max_cosets = max_cosets;
    ScenarioContext ctx;
    std::vector<ScenarioReport> reports(names.size());
    if (parallel) {
        std::vector<std::future<ScenarioReport>> futs;
        for (const auto& n : names)
            futs.push_back(std::async(std::launch::async,
                                      [&ctx, n, opt] { return run_scenario(n, ctx, opt); }));
        for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) reports[i] = run_scenario(names[i], ctx, opt);
    }
    std::ostringstream serialized;
    bool all_pass = true;
    for (const auto& r : reports) {
        r.serialize(serialized);
        serialized << "\n";
        std::cout << r.summary_line() << "   [" << r.seconds << " s]\n";
        all_pass &= r.pass();
    }
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        os << serialized.str();
        std::cout << "report written to " << report_path << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for the Q-graph presentations of 2^{20+1}.U6(2) and its relatives"};
    app.require_subcommand(1);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
    std::string pres, subgroup, strategy = "hlt", out_path;
    std::uint32_t max_cosets = 0;
    enumerate_cmd->add_option("--presentation", pres,
                              "catalog entry name or .pres file path")->required();
    enumerate_cmd->add_option("--subgroup", subgroup, "comma-separated subgroup generator words");
    enumerate_cmd->add_option("--max-cosets", max_cosets, "coset limit (default 5000000)");
    enumerate_cmd->add_option("--strategy", strategy, "hlt|felsch")
        ->check(CLI::IsMember({"hlt", "felsch"}));
    enumerate_cmd->add_option("--out", out_path, "write the standardized table here");

    auto* order_cmd = app.add_subcommand("order", "group order of a saved coset table");
    std::string table_path;
    order_cmd->add_option("--table", table_path, "table file from enumerate --out")->required();

    auto* check_cmd = app.add_subcommand("check-word", "order/centrality of a word in a table image");
    std::string check_table, check_word;
    check_cmd->add_option("--table", check_table, "table file")->required();
    check_cmd->add_option("--word", check_word, "word over the table's alphabet")->required();

    auto* u6_cmd = app.add_subcommand("u6", "the GF(4) transvection model of U6(2)");
    bool u6_check = false, u6_ord = false;
    std::string u6_node;
    u6_cmd->add_flag("--check-assignment", u6_check, "verify the standard assignment");
    u6_cmd->add_option("--complete-diagram", u6_node, "search third-arm completions at this node");
    u6_cmd->add_flag("--order", u6_ord, "stabilizer-chain orders of the model");

    auto* nsub_cmd = app.add_subcommand("nsub", "the normal subgroup N from the shipped tables");
    auto* nsub_verify_cmd = nsub_cmd->add_subcommand("verify", "run the table verification");
    std::string variant = "rel3", nsub_report;
    nsub_verify_cmd->add_option("--variant", variant, "rel1|rel2|rel3")
        ->check(CLI::IsMember({"rel1", "rel2", "rel3"}));
    nsub_verify_cmd->add_option("--report", nsub_report, "write the report here");

    auto* verify_cmd = app.add_subcommand("verify", "run named verification scenarios");
    std::string scenario, verify_report;
    bool parallel = false;
    std::uint32_t verify_max = 0;
    verify_cmd->add_option("scenario", scenario, "scenario name or 'all'")->required();
    verify_cmd->add_option("--report", verify_report, "write the machine-readable report here");
    verify_cmd->add_flag("--parallel", parallel, "run independent scenarios concurrently");
    verify_cmd->add_option("--max-cosets", verify_max, "override the per-scenario coset guard");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate_cmd) return cmd_enumerate(pres, subgroup, max_cosets, strategy, out_path);
        if (*order_cmd) return cmd_order(table_path);
        if (*check_cmd) return cmd_check_word(check_table, check_word);
        if (*u6_cmd) return cmd_u6(u6_check, u6_node, u6_ord);
        if (*nsub_verify_cmd) return cmd_nsub_verify(variant, nsub_report);
        if (*verify_cmd) return cmd_verify(scenario, verify_report, parallel, verify_max);
    } catch (const enumeration_limit_exceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
