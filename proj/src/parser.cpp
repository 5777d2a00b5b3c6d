#include "rewardtest/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace rewardtest {

namespace {

enum class Tok { Ident, Coname, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& s, int line0 = 1) {
    std::vector<Token> out;
    int line = line0, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            adv(1);
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
            while (i < s.size() && s[i] != '\n') adv(1);
            continue;
        }
        int l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), l, cl});
            adv(j - i);
        } else if (c == '\'') {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            if (j == i + 1) throw ParseError("expected a name after '", l, cl);
            out.push_back({Tok::Coname, s.substr(i + 1, j - i - 1), l, cl});
            adv(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), l, cl});
            adv(j - i);
        } else if (c == ':' && i + 1 < s.size() && s[i + 1] == '=') {
            out.push_back({Tok::Sym, ":=", l, cl});
            adv(2);
        } else if (std::string(".+|\\{}[](),/=;-").find(c) != std::string::npos) {
            out.push_back({Tok::Sym, std::string(1, c), l, cl});
            adv(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_upper(const std::string& s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

const std::set<std::string> kKeywords = {"rec", "delta", "tau", "omega", "Omega"};

class Parser {
public:
    Parser(std::vector<Token> toks, const ParseOptions& opts, const std::map<std::string, Term>* consts)
        : t_(std::move(toks)), opts_(opts), consts_(consts) {}

    Term parse_all() {
        Term r = parse_choice();
        if (cur().kind != Tok::End) fail("unexpected '" + cur().text + "'");
        return r;
    }

private:
    std::vector<Token> t_;
    std::size_t p_ = 0;
    ParseOptions opts_;
    const std::map<std::string, Term>* consts_;
    std::vector<std::set<std::string>> scopes_;

    const Token& cur() const { return t_[p_]; }
    const Token& peek(std::size_t k = 1) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
    bool sym(const char* s) const { return cur().kind == Tok::Sym && cur().text == s; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& k = cur();
        throw ParseError(k.kind == Tok::End ? msg + " (at end of input)" : msg, k.line, k.col);
    }
    void expect(const char* s) {
        if (!sym(s)) fail(std::string("expected '") + s + "'");
        ++p_;
    }

    Term parse_choice() {
        std::vector<Term> bs{parse_par()};
        while (sym("+")) {
            ++p_;
            bs.push_back(parse_par());
        }
        return bs.size() == 1 ? bs[0] : choice(std::move(bs));
    }

    Term parse_par() {
        Term l = parse_post();
        while (sym("|")) {
            ++p_;
            l = par(l, parse_post());
        }
        return l;
    }

    bool relabel_ahead() const {
        return sym("[") && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Sym && peek(2).text == "/";
    }

    Term parse_post() {
        Term b = parse_prefix();
        for (;;) {
            if (sym("\\")) {
                ++p_;
                expect("{");
                std::vector<std::string> names;
                if (!sym("}")) {
                    for (;;) {
                        names.push_back(action_name());
                        if (!sym(",")) break;
                        ++p_;
                    }
                }
                expect("}");
                b = restrict(b, std::move(names));
            } else if (relabel_ahead()) {
                ++p_;
                std::vector<std::pair<std::string, std::string>> m;
                for (;;) {
                    std::string to = action_name();
                    expect("/");
                    std::string from = action_name();
                    for (auto& [f, _] : m)
                        if (f == from) fail("relabelling maps " + from + " twice");
                    m.emplace_back(from, to);
                    if (!sym(",")) break;
                    ++p_;
                }
                expect("]");
                b = relabel(b, std::move(m));
            } else {
                return b;
            }
        }
    }

    std::string action_name() {
        if (cur().kind != Tok::Ident || is_upper(cur().text) || kKeywords.count(cur().text))
            fail("expected an action name");
        return t_[p_++].text;
    }

    bool at_action() const {
        if (cur().kind == Tok::Coname) return true;
        if (cur().kind != Tok::Ident) return false;
        const std::string& s = cur().text;
        if (s == "tau" || s == "omega") return true;
        return !is_upper(s) && s != "rec" && s != "delta";
    }

    Rational parse_reward() {
        std::string text;
        if (sym("-") || sym("+")) text += t_[p_++].text;
        if (cur().kind != Tok::Number) fail("expected a rational reward");
        text += t_[p_++].text;
        if (sym("/")) {
            ++p_;
            if (cur().kind != Tok::Number) fail("expected a denominator");
            text += "/" + t_[p_++].text;
        }
        try {
            return parse_rational(text);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    Term parse_prefix() {
        if (!at_action()) return parse_atom();
        const Token start = cur();
        Action a;
        if (cur().kind == Tok::Coname) {
            if (kKeywords.count(cur().text) || is_upper(cur().text)) fail("bad co-name '" + cur().text);
            a = Action::coname(cur().text);
        } else if (cur().text == "tau") {
            a = Action::tau();
        } else if (cur().text == "omega") {
            a = Action::omega();
        } else {
            a = Action::name(cur().text);
        }
        ++p_;
        Rational r(0);
        if (sym("[") && !relabel_ahead()) {
            ++p_;
            r = parse_reward();
            expect("]");
            if (a.is_omega() && r != Rational{0}) throw ParseError("omega cannot carry a reward", start.line, start.col);
        }
        Term body = nil();
        if (sym(".")) {
            ++p_;
            body = parse_prefix();
        }
        return prefix(a, r, body);
    }

    bool bound(const std::string& x) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
            if (it->count(x)) return true;
        return false;
    }

    Term parse_atom() {
        const Token& k = cur();
        if (k.kind == Tok::Number) {
            if (k.text != "0") fail("unexpected number " + k.text);
            ++p_;
            return nil();
        }
        if (sym("(")) {
            ++p_;
            Term r = parse_choice();
            expect(")");
            return r;
        }
        if (k.kind != Tok::Ident) fail(k.kind == Tok::End ? "expected a term" : "unexpected '" + k.text + "'");
        if (k.text == "Omega") {
            ++p_;
            return omega_process();
        }
        if (k.text == "delta") {
            ++p_;
            expect("(");
            Term r = parse_choice();
            expect(")");
            return delta(r);
        }
        if (k.text == "rec") {
            ++p_;
            std::string head = variable();
            expect("{");
            // first pass: collect the equation variables so bodies may refer forward
            std::size_t save = p_;
            std::set<std::string> vars;
            int depth = 0;
            bool expect_var = true;
            for (std::size_t q = p_; t_[q].kind != Tok::End; ++q) {
                const Token& u = t_[q];
                if (u.kind == Tok::Sym && (u.text == "{" || u.text == "(")) ++depth;
                if (u.kind == Tok::Sym && (u.text == "}" || u.text == ")")) {
                    if (depth == 0) break;
                    --depth;
                }
                if (depth == 0 && expect_var && u.kind == Tok::Ident) {
                    vars.insert(u.text);
                    expect_var = false;
                }
                if (depth == 0 && u.kind == Tok::Sym && u.text == ";") expect_var = true;
            }
            p_ = save;
            scopes_.push_back(vars);
            std::vector<std::pair<std::string, Term>> defs;
            while (!sym("}")) {
                std::string x = variable();
                for (auto& [y, _] : defs)
                    if (y == x) fail("variable " + x + " defined twice");
                expect("=");
                defs.emplace_back(x, parse_choice());
                if (sym(";")) {
                    ++p_;
                } else if (!sym("}")) {
                    fail("expected ';' or '}'");
                }
            }
            scopes_.pop_back();
            bool has_head = false;
            for (auto& [y, _] : defs) has_head |= y == head;
            if (!has_head) fail("recursion head " + head + " has no equation");
            ++p_;
            return rec(head, std::move(defs));
        }
        if (is_upper(k.text)) {
            std::string x = k.text;
            ++p_;
            if (bound(x)) return var(x);
            if (consts_) {
                auto it = consts_->find(x);
                if (it != consts_->end()) return it->second;
            }
            if (opts_.allow_free_vars) return var(x);
            throw ParseError("unbound variable " + x, k.line, k.col);
        }
        fail("unexpected '" + k.text + "'");
    }

    std::string variable() {
        if (cur().kind != Tok::Ident || !is_upper(cur().text) || kKeywords.count(cur().text))
            fail("expected a variable (upper-case identifier)");
        return t_[p_++].text;
    }
};

}  // namespace

Term parse(const std::string& text, const ParseOptions& opts) {
    Parser p(lex(text), opts, nullptr);
    return p.parse_all();
}

std::vector<std::pair<std::string, Term>> parse_definitions(const std::string& text) {
    std::vector<std::pair<std::string, Term>> out;
    std::map<std::string, Term> consts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool any_def = text.find(":=") != std::string::npos;
    if (!any_def) {
        Parser p(lex(text), {}, nullptr);
        out.emplace_back("main", p.parse_all());
        return out;
    }
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = lex(line, lineno);
        if (toks.size() == 1) continue;
        if (toks.size() < 3 || toks[0].kind != Tok::Ident || toks[1].kind != Tok::Sym || toks[1].text != ":=")
            throw ParseError("expected 'name := term'", toks[0].line, toks[0].col);
        std::string name = toks[0].text;
        std::vector<Token> rest(toks.begin() + 2, toks.end());
        Parser p(std::move(rest), {}, &consts);
        Term t = p.parse_all();
        consts[name] = t;
        out.emplace_back(name, t);
    }
    if (out.empty()) throw ParseError("no definitions", 1, 1);
    return out;
}

Term parse_process_text(const std::string& text) { return parse_definitions(text).back().second; }

}  // namespace rewardtest
