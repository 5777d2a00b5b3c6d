#include "rewardtest/report.hpp"

#include "json.hpp"

#include <sstream>

namespace rewardtest::report {

using nlohmann::json;

namespace {

json word_json(const Word& w) {
    json a = json::array();
    for (auto& x : w) a.push_back(x.str());
    return a;
}

json witness_json(const Witness& w) {
    json j;
    switch (w.kind) {
        case Witness::Kind::Trace: j["kind"] = "trace"; break;
        case Witness::Kind::Failure: j["kind"] = "failure"; break;
        case Witness::Kind::Lasso: j["kind"] = "lasso"; break;
        case Witness::Kind::Stability: j["kind"] = "stability"; break;
    }
    if (w.kind == Witness::Kind::Trace || w.kind == Witness::Kind::Failure) j["trace"] = word_json(w.trace);
    if (w.kind == Witness::Kind::Failure) j["refusal"] = word_json(w.refusal);
    if (w.kind == Witness::Kind::Lasso) {
        j["stem"] = word_json(w.lasso.stem);
        j["cycle"] = word_json(w.lasso.cycle);
        j["cut"] = w.cut;
    }
    j["text"] = w.str();
    return j;
}

json verdict_obj(const Verdict& v) {
    json j;
    j["preorder"] = v.preorder.str();
    j["holds"] = v.holds;
    j["failing_component"] = v.failing_component ? json(to_string(*v.failing_component)) : json(nullptr);
    j["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    j["synthesized_test"] = v.synthesized_test ? json(print(*v.synthesized_test)) : json(nullptr);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

std::string computation_str(const ApplySummary& s) {
    if (!s.graph) return "";
    auto& g = *s.graph;
    auto label = [&](int e) {
        auto& t = g.lts->transitions[g.edge_transition[e]];
        std::string r = t.act.str();
        if (t.reward != Rational{0}) r += "[" + to_string(t.reward) + "]";
        return r;
    };
    std::string out;
    for (int e : s.witness.stem) out += (out.empty() ? "" : " ") + label(e);
    if (s.witness.infinite()) {
        std::string c;
        for (int e : s.witness.cycle) c += (c.empty() ? "" : " ") + label(e);
        out += (out.empty() ? "(" : " (") + c + ")^w";
    }
    return out.empty() ? "eps" : out;
}

}  // namespace

std::string lts_json(const Lts& lts) {
    json j;
    j["initial"] = lts.initial;
    j["mode"] = to_string(lts.mode);
    json st = json::array();
    for (std::size_t i = 0; i < lts.size(); ++i)
        st.push_back({{"id", i}, {"term", print(lts.states[i])}, {"stable", bool(lts.stable[i])},
                      {"diverges", bool(lts.diverges[i])}});
    j["states"] = st;
    json tr = json::array();
    for (auto& t : lts.transitions)
        tr.push_back({{"src", t.src}, {"action", t.act.str()}, {"reward", to_string(t.reward)}, {"dst", t.dst}});
    j["transitions"] = tr;
    return j.dump(2);
}

std::string verdict_json(const Verdict& v) { return verdict_obj(v).dump(2); }

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    os << v.preorder.str() << ": " << (v.holds ? "holds" : "fails") << "\n";
    if (v.failing_component) os << "  component: " << to_string(*v.failing_component) << "\n";
    if (v.witness) os << "  witness:   " << v.witness->str() << "\n";
    if (v.synthesized_test) os << "  test:      " << print(*v.synthesized_test) << "\n";
    if (!v.note.empty()) os << "  note:      " << v.note << "\n";
    return os.str();
}

std::string apply_json(const Term& test, const Term& proc, Mode mode, const ApplySummary& s) {
    json j;
    j["test"] = print(test);
    j["process"] = print(proc);
    j["mode"] = to_string(mode);
    j["infimum"] = s.infimum.str();
    j["attained"] = s.attained;
    j["witness"] = computation_str(s);
    if (s.classical)
        j["classical"] = {{"may_success", s.classical->may_success}, {"must_success", s.classical->must_success}};
    else
        j["classical"] = nullptr;
    return j.dump(2);
}

std::string apply_text(const Term& test, const Term& proc, Mode mode, const ApplySummary& s) {
    std::ostringstream os;
    os << "test:     " << print(test) << "\nprocess:  " << print(proc) << "\nmode:     " << to_string(mode)
       << "\ninfimum:  " << s.infimum.str() << "\nwitness:  " << computation_str(s) << "\n";
    if (s.classical)
        os << "classical: may " << (s.classical->may_success ? "pass" : "fail") << ", must "
           << (s.classical->must_success ? "pass" : "fail") << "\n";
    return os.str();
}

std::string audit_json(const AuditResult& a) {
    json j;
    json t = json::array();
    for (auto& v : a.table) t.push_back(verdict_obj(v));
    j["table"] = t;
    j["violations"] = a.violations;
    return j.dump(2);
}

std::string audit_text(const AuditResult& a) {
    std::ostringstream os;
    os << "| preorder | verdict | witness |\n|---|---|---|\n";
    for (auto& v : a.table)
        os << "| " << v.preorder.str() << " | " << (v.holds ? "holds" : "fails") << " | "
           << (v.witness ? v.witness->str() : "") << " |\n";
    if (a.violations.empty())
        os << "hierarchy: consistent\n";
    else
        for (auto& s : a.violations) os << "violation: " << s << "\n";
    return os.str();
}

std::string matrix_json(const std::vector<SoundnessReport>& reports) {
    json arr = json::array();
    for (auto& r : reports) {
        json j;
        j["axiom"] = r.axiom;
        j["preorder"] = r.preorder.str();
        j["instances_checked"] = r.instances_checked;
        j["sound_on_sample"] = r.sound_on_sample;
        if (r.counterexample) {
            j["counterexample"] = r.counterexample->str();
            j["lhs"] = print(*r.lhs);
            j["rhs"] = print(*r.rhs);
            j["converse"] = r.converse;
            j["verdict"] = verdict_obj(*r.verdict);
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string property_json(const std::vector<NamedProperty>& props, const std::vector<PropertyResult>& results) {
    json arr = json::array();
    for (std::size_t i = 0; i < props.size(); ++i) {
        json specs = json::array();
        for (auto& s : props[i].specs) specs.push_back(s.str());
        arr.push_back({{"name", props[i].name},
                       {"kind", to_string(props[i].kind)},
                       {"specs", specs},
                       {"holds", results[i].holds},
                       {"counterexample", results[i].holds ? json(nullptr) : json(results[i].str())}});
    }
    return arr.dump(2);
}

std::string property_text(const std::vector<NamedProperty>& props, const std::vector<PropertyResult>& results) {
    std::ostringstream os;
    for (std::size_t i = 0; i < props.size(); ++i) {
        os << props[i].name << " (" << to_string(props[i].kind) << "): ";
        os << (results[i].holds ? "holds" : "violated, " + results[i].str()) << "\n";
    }
    return os.str();
}

std::string summary_json(const ObservationSummary& s) {
    json j;
    auto words = [](const std::vector<Word>& ws) {
        json a = json::array();
        for (auto& w : ws) a.push_back(word_str(w));
        return a;
    };
    j["ptr"] = words(s.ptr);
    j["divergences"] = words(s.divergences);
    j["deadlocks"] = words(s.deadlocks);
    json f = json::array();
    for (auto& [t, r] : s.maximal_failures) f.push_back({word_str(t), word_json(r)});
    j["maximal_failures"] = f;
    json l = json::array();
    for (auto& x : s.lassos) l.push_back(x.str());
    j["lassos"] = l;
    return j.dump(2);
}

}  // namespace rewardtest::report
