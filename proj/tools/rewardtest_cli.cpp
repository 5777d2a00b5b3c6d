// rewardtest: command line front end.
//
// Exit codes: 0 holds / success, 1 fails / distinguished, 2 usage or parse error, 3 budget.

#include "rewardtest/axioms.hpp"
#include "rewardtest/parser.hpp"
#include "rewardtest/preorder.hpp"
#include "rewardtest/properties.hpp"
#include "rewardtest/report.hpp"
#include "rewardtest/reward.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rewardtest;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A path to an existing file is read; anything else is taken as an inline term.
Term load_term(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return parse_process_text(read_file(arg));
    return parse(arg);
}

Mode mode_of(const std::string& s) {
    try {
        return parse_mode(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reward testing preorders for CCS processes"};
    app.require_subcommand(1);

    std::string mode_s = "ccs";
    std::size_t cap = 10000;
    bool as_json = false;
    auto common = [&](CLI::App* c) {
        c->add_option("--mode", mode_s, "ccs or ccs-bot")->check(CLI::IsMember({"ccs", "ccs-bot", "ccs_bot"}));
        c->add_option("--state-cap", cap, "maximum number of explored states");
        c->add_flag("--json", as_json, "machine readable output");
    };

    std::string preorder_s, p_arg, q_arg, t_arg, spec_arg;
    bool tau = false, may = false;
    auto* check_cmd = app.add_subcommand("check", "is P below Q in a testing preorder");
    check_cmd->add_option("--preorder", preorder_s, "T, T_inf, NDFD, FDI_d or FDI_bot")->required();
    check_cmd->add_flag("--tau", tau, "stability-refined variant");
    check_cmd->add_flag("--may", may, "may direction (arguments swapped)");
    check_cmd->add_option("P", p_arg)->required();
    check_cmd->add_option("Q", q_arg)->required();
    common(check_cmd);

    auto* apply_cmd = app.add_subcommand("apply", "infimum reward of a test against a process");
    apply_cmd->add_option("T", t_arg)->required();
    apply_cmd->add_option("P", p_arg)->required();
    common(apply_cmd);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "every preorder of the hierarchy on P, Q");
    spectrum_cmd->add_option("P", p_arg)->required();
    spectrum_cmd->add_option("Q", q_arg)->required();
    common(spectrum_cmd);

    auto* props_cmd = app.add_subcommand("props", "check liveness / safety properties");
    props_cmd->add_option("--spec", spec_arg, "property file")->required();
    props_cmd->add_option("P", p_arg)->required();
    common(props_cmd);

    std::size_t budget = 1500;
    auto* axioms_cmd = app.add_subcommand("axioms-audit", "soundness of the axiom schemas on small terms");
    axioms_cmd->add_option("--budget", budget, "instances per schema");
    common(axioms_cmd);

    bool dot = false, lts_json = false;
    auto* lts_cmd = app.add_subcommand("lts", "explore and export the transition system");
    auto* dot_opt = lts_cmd->add_flag("--dot", dot, "Graphviz output");
    lts_cmd->add_flag("--json", lts_json, "JSON output")->excludes(dot_opt);
    lts_cmd->add_option("--mode", mode_s, "ccs or ccs-bot")->check(CLI::IsMember({"ccs", "ccs-bot", "ccs_bot"}));
    lts_cmd->add_option("--state-cap", cap, "maximum number of explored states");
    lts_cmd->add_option("P", p_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Mode mode = mode_of(mode_s);
        if (check_cmd->parsed()) {
            PreorderId id = parse_preorder(preorder_s);
            if (tau) id.refinement = Refinement::Tau;
            if (may) id.direction = Direction::May;
            CheckOptions o;
            o.state_cap = cap;
            Verdict v = check(id, load_term(p_arg), load_term(q_arg), mode, o);
            std::cout << (as_json ? report::verdict_json(v) + "\n" : report::verdict_text(v));
            return v.holds ? 0 : 1;
        }
        if (apply_cmd->parsed()) {
            Term t = load_term(t_arg), p = load_term(p_arg);
            RewardOptions o;
            o.state_cap = cap;
            ApplySummary s = inf_reward(t, p, mode, o);
            std::cout << (as_json ? report::apply_json(t, p, mode, s) + "\n" : report::apply_text(t, p, mode, s));
            return 0;
        }
        if (spectrum_cmd->parsed()) {
            CheckOptions o;
            o.state_cap = cap;
            AuditResult a = hierarchy_audit(load_term(p_arg), load_term(q_arg), mode, o);
            std::cout << (as_json ? report::audit_json(a) + "\n" : report::audit_text(a));
            return a.violations.empty() ? 0 : 1;
        }
        if (props_cmd->parsed()) {
            auto props = parse_property_file(read_file(spec_arg));
            Term p = load_term(p_arg);
            PropertyOptions o;
            o.mode = mode;
            o.state_cap = cap;
            std::vector<PropertyResult> results;
            bool all = true;
            for (auto& pr : props) {
                results.push_back(check_property(p, pr, o));
                all = all && results.back().holds;
            }
            std::cout << (as_json ? report::property_json(props, results) + "\n"
                                  : report::property_text(props, results));
            return all ? 0 : 1;
        }
        if (axioms_cmd->parsed()) {
            auto m = audit_matrix(default_audit_preorders(), mode, budget);
            std::cout << (as_json ? report::matrix_json(m) + "\n" : matrix_markdown(m));
            return 0;
        }
        if (lts_cmd->parsed()) {
            ExplorationBudget b;
            b.state_cap = cap;
            Lts l = explore(load_term(p_arg), b, mode);
            std::cout << (lts_json ? report::lts_json(l) + "\n" : to_dot(l));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const RegexError& e) {
        std::cerr << "property error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StateCapExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const NonConvergentUnfolding& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
