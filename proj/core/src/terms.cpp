/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "liegeo/terms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "liegeo/free_lie.hpp"
#include "liegeo/metabelian.hpp"

namespace liegeo {

std::vector<std::string> AlgebraSpec::constant_names() const {
    std::vector<std::string> out;
    for (size_t i = 1; i <= constant_count(); ++i) out.push_back("a" + std::to_string(i));
    return out;
}

std::string AlgebraSpec::str() const {
    switch (kind) {
        case CoefficientKind::Zero:
            return "zero field=" + field.str();
        case CoefficientKind::Free:
            return "free rank=" + std::to_string(rank) + " field=" + field.str();
        case CoefficientKind::Metabelian:
            return "metabelian rank=" + std::to_string(rank) + " field=" + field.str();
    }
    return "";
}

TermPtr Term::var(size_t i) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->index = i;
    return t;
}

TermPtr Term::constant(size_t i) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Const;
    t->index = i;
    return t;
}

TermPtr Term::zero() {
    static const TermPtr z = std::make_shared<Term>();
    return z;
}

TermPtr Term::sum(std::vector<TermPtr> children) {
    if (children.empty()) return zero();
    if (children.size() == 1) return children[0];
    auto t = std::make_shared<Term>();
    t->kind = Kind::Sum;
    t->children = std::move(children);
    return t;
}

TermPtr Term::scalar(Scalar c, TermPtr x) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::ScalarMul;
    t->coeff = std::move(c);
    t->children = {std::move(x)};
    return t;
}

TermPtr Term::bracket(TermPtr l, TermPtr r) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Bracket;
    t->children = {std::move(l), std::move(r)};
    return t;
}

TermPtr Term::minus(const Field& f, TermPtr a, TermPtr b) {
    return sum({std::move(a), scalar(f.neg(f.one()), std::move(b))});
}

bool term_equal(const TermPtr& a, const TermPtr& b, const Field& f) {
    if (a == b) return true;
    if (a->kind != b->kind || a->children.size() != b->children.size()) return false;
    if ((a->kind == Term::Kind::Var || a->kind == Term::Kind::Const) && a->index != b->index) return false;
    if (a->kind == Term::Kind::ScalarMul && !f.eq(a->coeff, b->coeff)) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!term_equal(a->children[i], b->children[i], f)) return false;
    return true;
}

size_t term_size(const TermPtr& t) {
    size_t n = 1;
    for (const auto& c : t->children) n += term_size(c);
    return n;
}

int term_degree(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Zero:
            return 0;
        case Term::Kind::Var:
        case Term::Kind::Const:
            return 1;
        case Term::Kind::Bracket:
            return term_degree(t->children[0]) + term_degree(t->children[1]);
        default: {
            int d = 0;
            for (const auto& c : t->children) d = std::max(d, term_degree(c));
            return d;
        }
    }
}

std::set<size_t> term_variables(const TermPtr& t) {
    std::set<size_t> out;
    if (t->kind == Term::Kind::Var) out.insert(t->index);
    for (const auto& c : t->children) {
        auto s = term_variables(c);
        out.insert(s.begin(), s.end());
    }
    return out;
}

TermPtr substitute(const TermPtr& t, const std::vector<TermPtr>& vars) {
    if (t->kind == Term::Kind::Var) return t->index < vars.size() && vars[t->index] ? vars[t->index] : t;
    if (t->children.empty()) return t;
    auto out = std::make_shared<Term>(*t);
    for (auto& c : out->children) c = substitute(c, vars);
    return out;
}

TermPtr rename_variables(const TermPtr& t, const std::vector<size_t>& map) {
    if (t->kind == Term::Kind::Var) return Term::var(map.at(t->index));
    if (t->children.empty()) return t;
    auto out = std::make_shared<Term>(*t);
    for (auto& c : out->children) c = rename_variables(c, map);
    return out;
}

TermNames TermNames::of(const EquationSystem& sys) { return {sys.vars, sys.algebra.constant_names(), sys.field()}; }

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool is_minus_one(const Field& f, const Scalar& c) { return f.eq(c, f.neg(f.one())); }

std::string render_coeff(const Field& f, const Scalar& c) {
    std::string s = f.render(c);
    if (f.kind() == Field::Kind::RationalFunctions) {
        std::string body = s[0] == '-' ? s.substr(1) : s;
        bool integer = !body.empty() && std::all_of(body.begin(), body.end(), [](char ch) { return std::isdigit((unsigned char)ch); });
        if (!integer) return "{" + s + "}";
    }
    return s;
}

std::string render(const TermPtr& t, const TermNames& n);

std::string render_factor(const TermPtr& t, const TermNames& n) {
    if (t->kind == Term::Kind::Sum || t->kind == Term::Kind::ScalarMul) return "(" + render(t, n) + ")";
    return render(t, n);
}

std::string render(const TermPtr& t, const TermNames& n) {
    switch (t->kind) {
        case Term::Kind::Zero:
            return "0";
        case Term::Kind::Var:
            return n.vars.at(t->index);
        case Term::Kind::Const:
            return n.constants.at(t->index);
        case Term::Kind::Bracket:
            return "[" + render(t->children[0], n) + "," + render(t->children[1], n) + "]";
        case Term::Kind::ScalarMul:
            if (is_minus_one(n.field, t->coeff)) return "-" + render_factor(t->children[0], n);
            return render_coeff(n.field, t->coeff) + "*" + render_factor(t->children[0], n);
        case Term::Kind::Sum: {
            std::string s;
            for (size_t i = 0; i < t->children.size(); ++i) {
                const TermPtr& c = t->children[i];
                if (i == 0) {
                    s += c->kind == Term::Kind::Sum ? "(" + render(c, n) + ")" : render(c, n);
                    continue;
                }
                if (c->kind == Term::Kind::ScalarMul) {
                    if (is_minus_one(n.field, c->coeff)) {
                        s += " - " + render_factor(c->children[0], n);
                        continue;
                    }
                    std::string cs = render_coeff(n.field, c->coeff);
                    if (cs[0] == '-') {
                        s += " - " + cs.substr(1) + "*" + render_factor(c->children[0], n);
                        continue;
                    }
                }
                s += " + " + (c->kind == Term::Kind::Sum ? "(" + render(c, n) + ")" : render(c, n));
            }
            return s;
        }
    }
    return "";
}

}  // namespace

std::string render_term(const TermPtr& t, const TermNames& names) { return render(t, names); }

std::string render_system(const EquationSystem& sys) {
    TermNames names = TermNames::of(sys);
    std::ostringstream out;
    out << "algebra " << sys.algebra.str() << "\n";
    out << "vars";
    for (size_t i = 0; i < sys.vars.size(); ++i) out << (i ? ", " : " ") << sys.vars[i];
    out << "\n";
    for (const auto& [name, t] : sys.lets) out << "let " << name << " = " << render(t, names) << "\n";
    for (const auto& eq : sys.equations) out << "eq " << render(eq, names) << " = 0\n";
    for (const auto& f : sys.polytope) {
        out << "polytope factor basis=";
        for (size_t i = 0; i < f.basis_names.size(); ++i) out << (i ? "," : "") << f.basis_names[i];
        if (!f.shift_name.empty()) out << " shift=" << f.shift_name;
        out << "\n";
    }
    if (sys.carrier) {
        const auto& c = *sys.carrier;
        out << "carrier " << c.kind;
        if (c.kind == "abelian")
            out << " dim=" << c.rank;
        else if (c.kind == "free" || c.kind == "metabelian")
            out << " rank=" << c.rank;
        if (c.module) out << " module=" << c.module;
        if (c.trunc) out << " trunc=" << *c.trunc;
        out << "\n";
    }
    if (sys.module) {
        out << "module gens=" << sys.module->generators << "\n";
        for (size_t j = 0; j < sys.module->relation_count(); ++j) {
            out << "rel";
            for (size_t i = 0; i < sys.module->generators; ++i)
                out << (i ? ", " : " ") << sys.module->relations.at(i, j).str();
            out << "\n";
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum class Kind { Ident, Number, Braced, Symbol, End };
    Kind kind;
    std::string text;
    int col;
};

class Lexer {
public:
    Lexer(std::string_view line, int line_no) : s_(line), line_(line_no) { next(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        next();
        return t;
    }
    bool at_symbol(char c) const { return tok_.kind == Token::Kind::Symbol && tok_.text[0] == c; }
    void expect_symbol(char c, const std::string& what) {
        if (!at_symbol(c)) throw SyntaxError(line_, tok_.col, what);
        next();
    }
    int line() const { return line_; }
    std::string_view rest() const { return s_.substr(pos_before_); }

private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        pos_before_ = pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::End, "", col};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            tok_ = {Token::Kind::Ident, std::string(s_.substr(start, pos_ - start)), col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            tok_ = {Token::Kind::Number, std::string(s_.substr(start, pos_ - start)), col};
            return;
        }
        if (c == '{') {
            size_t close = s_.find('}', pos_);
            if (close == std::string_view::npos) throw SyntaxError(line_, col, "'}'");
            tok_ = {Token::Kind::Braced, std::string(s_.substr(pos_ + 1, close - pos_ - 1)), col};
            pos_ = close + 1;
            return;
        }
        if (std::string_view("+-*[](),=").find(c) != std::string_view::npos) {
            ++pos_;
            tok_ = {Token::Kind::Symbol, std::string(1, c), col};
            return;
        }
        throw SyntaxError(line_, col, "term");
    }

    std::string_view s_;
    int line_;
    size_t pos_ = 0;
    size_t pos_before_ = 0;
    Token tok_;
};

struct Scope {
    const AlgebraSpec* algebra;
    const std::vector<std::string>* vars;
    const std::vector<std::pair<std::string, TermPtr>>* lets;
};

class TermParser {
public:
    TermParser(Lexer& lex, const Scope& scope) : lex_(lex), scope_(scope), f_(scope.algebra->field) {}

    TermPtr sum() {
        std::vector<TermPtr> items;
        items.push_back(signed_item().first);
        while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
            bool neg = lex_.take().text == "-";
            auto [t, literal] = item();
            if (neg) {
                if (literal)
                    t = Term::scalar(f_.neg(t->coeff), t->children[0]);
                else
                    t = Term::scalar(f_.neg(f_.one()), t);
            }
            items.push_back(t);
        }
        return Term::sum(std::move(items));
    }

private:
    // item with an optional leading minus.
    std::pair<TermPtr, bool> signed_item() {
        if (lex_.at_symbol('-')) {
            lex_.take();
            auto [t, literal] = item();
            if (literal) return {Term::scalar(f_.neg(t->coeff), t->children[0]), true};
            return {Term::scalar(f_.neg(f_.one()), t), false};
        }
        return item();
    }

    // scalar '*' factor | factor; the flag marks a literal scalar product.
    std::pair<TermPtr, bool> item() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Braced) {
            Token num = lex_.take();
            if (num.kind == Token::Kind::Number && num.text == "0" && !lex_.at_symbol('*')) return {Term::zero(), false};
            lex_.expect_symbol('*', "'*'");
            Scalar c = num.kind == Token::Kind::Number ? f_.parse_literal(num.text) : f_.parse_expression(num.text);
            return {Term::scalar(c, factor()), true};
        }
        return {factor(), false};
    }

    TermPtr factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number && t.text == "0") {
            lex_.take();
            return Term::zero();
        }
        if (t.kind == Token::Kind::Ident) {
            Token id = lex_.take();
            return resolve(id);
        }
        if (lex_.at_symbol('[')) {
            lex_.take();
            TermPtr l = sum();
            lex_.expect_symbol(',', "','");
            TermPtr r = sum();
            lex_.expect_symbol(']', "']'");
            return Term::bracket(l, r);
        }
        if (lex_.at_symbol('(')) {
            lex_.take();
            TermPtr inner = sum();
            lex_.expect_symbol(')', "')'");
            return inner;
        }
        throw SyntaxError(lex_.line(), t.col, "term");
    }

    TermPtr resolve(const Token& id) {
        const auto& vars = *scope_.vars;
        auto v = std::find(vars.begin(), vars.end(), id.text);
        if (v != vars.end()) return Term::var(static_cast<size_t>(v - vars.begin()));
        for (const auto& [name, t] : *scope_.lets)
            if (name == id.text) return t;
        auto consts = scope_.algebra->constant_names();
        auto c = std::find(consts.begin(), consts.end(), id.text);
        if (c != consts.end()) return Term::constant(static_cast<size_t>(c - consts.begin()));
        fail(ErrorCode::UnknownSymbol, "line " + std::to_string(lex_.line()) + ", col " + std::to_string(id.col) +
                                           ": unknown symbol '" + id.text + "'");
    }

    Lexer& lex_;
    const Scope& scope_;
    const Field& f_;
};

bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// key=value words of a statement.
std::map<std::string, std::pair<std::string, int>> key_values(std::string_view rest, int line, int offset,
                                                              const std::set<std::string>& allowed) {
    std::map<std::string, std::pair<std::string, int>> out;
    size_t pos = 0;
    while (pos < rest.size()) {
        while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
        if (pos >= rest.size()) break;
        size_t start = pos;
        while (pos < rest.size() && !std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
        std::string word(rest.substr(start, pos - start));
        int col = offset + static_cast<int>(start) + 1;
        size_t eq = word.find('=');
        if (eq == std::string::npos || eq == 0) throw SyntaxError(line, col, "key=value");
        std::string key = word.substr(0, eq);
        if (!allowed.count(key)) throw SyntaxError(line, col, "one of the statement's keys");
        out[key] = {word.substr(eq + 1), col + static_cast<int>(eq) + 1};
    }
    return out;
}

int parse_positive(const std::string& s, int line, int col, bool allow_zero = false) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit((unsigned char)c); }))
        throw SyntaxError(line, col, "integer");
    int v = std::stoi(s);
    if (v == 0 && !allow_zero) throw SyntaxError(line, col, "positive integer");
    return v;
}

std::vector<std::string> split_list(const std::string& s) {
    // Items keep inner blanks so that "x y" is rejected as a name.
    auto trim = [](std::string x) {
        auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
        while (!x.empty() && sp(static_cast<unsigned char>(x.back()))) x.pop_back();
        size_t i = 0;
        while (i < x.size() && sp(static_cast<unsigned char>(x[i]))) ++i;
        return x.substr(i);
    };
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cur = trim(cur);
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

}  // namespace

TermPtr parse_term(std::string_view text, const EquationSystem& sys) {
    Lexer lex(text, 1);
    Scope scope{&sys.algebra, &sys.vars, &sys.lets};
    TermParser p(lex, scope);
    TermPtr t = p.sum();
    if (lex.peek().kind != Token::Kind::End) throw SyntaxError(1, lex.peek().col, "end of term");
    return t;
}

EquationSystem parse_system(std::string_view text) {
    EquationSystem sys;
    bool have_algebra = false, have_vars = false;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        size_t hash = raw.find('#');
        std::string_view line = raw.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        size_t s = 0;
        while (s < line.size() && std::isspace(static_cast<unsigned char>(line[s]))) ++s;
        if (s == line.size()) {
            if (end == text.size()) break;
            continue;
        }
        size_t e = s;
        while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
        std::string keyword(line.substr(s, e - s));
        std::string_view rest = line.substr(e);
        int rest_col = static_cast<int>(e);
        int key_col = static_cast<int>(s) + 1;

        if (keyword == "algebra") {
            if (have_algebra) throw SyntaxError(line_no, key_col, "a single algebra statement");
            size_t k = 0;
            while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
            size_t k2 = k;
            while (k2 < rest.size() && !std::isspace(static_cast<unsigned char>(rest[k2]))) ++k2;
            std::string kind(rest.substr(k, k2 - k));
            if (kind == "zero")
                sys.algebra.kind = CoefficientKind::Zero;
            else if (kind == "free")
                sys.algebra.kind = CoefficientKind::Free;
            else if (kind == "metabelian")
                sys.algebra.kind = CoefficientKind::Metabelian;
            else
                throw SyntaxError(line_no, rest_col + static_cast<int>(k) + 1, "zero, free or metabelian");
            auto kv = key_values(rest.substr(k2), line_no, rest_col + static_cast<int>(k2), {"rank", "field"});
            if (!kv.count("field")) throw SyntaxError(line_no, static_cast<int>(line.size()) + 1, "field=");
            try {
                sys.algebra.field = Field::parse(kv["field"].first);
            } catch (const Error&) {
                throw SyntaxError(line_no, kv["field"].second, "field specification");
            }
            if (kv.count("rank"))
                sys.algebra.rank = parse_positive(kv["rank"].first, line_no, kv["rank"].second, true);
            if (sys.algebra.kind != CoefficientKind::Zero && sys.algebra.rank < 1)
                throw SyntaxError(line_no, static_cast<int>(line.size()) + 1, "rank=<positive integer>");
            have_algebra = true;
            continue;
        }
        if (!have_algebra) throw SyntaxError(line_no, key_col, "algebra statement first");
        Scope scope{&sys.algebra, &sys.vars, &sys.lets};
        auto consts = sys.algebra.constant_names();
        auto taken = [&](const std::string& n) {
            if (std::find(sys.vars.begin(), sys.vars.end(), n) != sys.vars.end()) return true;
            if (std::find(consts.begin(), consts.end(), n) != consts.end()) return true;
            for (const auto& l : sys.lets)
                if (l.first == n) return true;
            return false;
        };

        if (keyword == "vars") {
            if (have_vars) throw SyntaxError(line_no, key_col, "a single vars statement");
            have_vars = true;
            auto names = split_list(std::string(rest));
            for (const auto& n : names) {
                if (!valid_name(n) || taken(n)) throw SyntaxError(line_no, rest_col + 2, "fresh variable name");
                sys.vars.push_back(n);
            }
            continue;
        }
        if (keyword == "eq") {
            Lexer lex(line, line_no);
            lex.take();  // keyword
            TermParser p(lex, scope);
            TermPtr t = p.sum();
            lex.expect_symbol('=', "'='");
            Token z = lex.take();
            if (z.kind != Token::Kind::Number || z.text != "0") throw SyntaxError(line_no, z.col, "'0'");
            if (lex.peek().kind != Token::Kind::End) throw SyntaxError(line_no, lex.peek().col, "end of line");
            sys.equations.push_back(t);
            sys.equation_lines.push_back(line_no);
            continue;
        }
        if (keyword == "let") {
            Lexer lex(line, line_no);
            lex.take();
            Token name = lex.take();
            if (name.kind != Token::Kind::Ident) throw SyntaxError(line_no, name.col, "name");
            if (taken(name.text)) throw SyntaxError(line_no, name.col, "fresh name");
            lex.expect_symbol('=', "'='");
            TermParser p(lex, scope);
            TermPtr t = p.sum();
            if (lex.peek().kind != Token::Kind::End) throw SyntaxError(line_no, lex.peek().col, "end of line");
            sys.lets.emplace_back(name.text, t);
            continue;
        }
        if (keyword == "polytope") {
            size_t k = 0;
            while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
            if (rest.substr(k, 6) != "factor") throw SyntaxError(line_no, rest_col + static_cast<int>(k) + 1, "'factor'");
            auto kv = key_values(rest.substr(k + 6), line_no, rest_col + static_cast<int>(k) + 6, {"basis", "shift"});
            PolytopeFactorSpec f;
            auto lookup = [&](const std::string& n, int col) -> TermPtr {
                for (const auto& l : sys.lets)
                    if (l.first == n) return l.second;
                auto c = std::find(consts.begin(), consts.end(), n);
                if (c != consts.end()) return Term::constant(static_cast<size_t>(c - consts.begin()));
                fail(ErrorCode::UnknownSymbol, "line " + std::to_string(line_no) + ", col " + std::to_string(col) +
                                                   ": unknown symbol '" + n + "'");
            };
            if (kv.count("basis"))
                for (const auto& n : split_list(kv["basis"].first)) {
                    if (n.empty()) continue;
                    f.basis.push_back(lookup(n, kv["basis"].second));
                    f.basis_names.push_back(n);
                }
            if (kv.count("shift")) {
                f.shift = lookup(kv["shift"].first, kv["shift"].second);
                f.shift_name = kv["shift"].first;
            } else {
                f.shift = Term::zero();
            }
            sys.polytope.push_back(std::move(f));
            continue;
        }
        if (keyword == "carrier") {
            size_t k = 0;
            while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
            size_t k2 = k;
            while (k2 < rest.size() && !std::isspace(static_cast<unsigned char>(rest[k2]))) ++k2;
            CarrierSpec c;
            c.kind = std::string(rest.substr(k, k2 - k));
            static const std::set<std::string> kinds{"free", "metabelian", "abelian", "heisenberg", "nonqw"};
            if (!kinds.count(c.kind))
                throw SyntaxError(line_no, rest_col + static_cast<int>(k) + 1, "free, metabelian, abelian, heisenberg or nonqw");
            auto kv = key_values(rest.substr(k2), line_no, rest_col + static_cast<int>(k2), {"rank", "dim", "module", "trunc"});
            if (kv.count("rank")) c.rank = parse_positive(kv["rank"].first, line_no, kv["rank"].second);
            if (kv.count("dim")) c.rank = parse_positive(kv["dim"].first, line_no, kv["dim"].second);
            if (kv.count("module"))
                c.module = static_cast<size_t>(parse_positive(kv["module"].first, line_no, kv["module"].second, true));
            if (kv.count("trunc")) c.trunc = parse_positive(kv["trunc"].first, line_no, kv["trunc"].second);
            if ((c.kind == "free" || c.kind == "metabelian" || c.kind == "abelian") && c.rank < 1)
                throw SyntaxError(line_no, static_cast<int>(line.size()) + 1, c.kind == "abelian" ? "dim=" : "rank=");
            sys.carrier = c;
            continue;
        }
        if (keyword == "module") {
            auto kv = key_values(rest, line_no, rest_col, {"gens"});
            if (!kv.count("gens")) throw SyntaxError(line_no, static_cast<int>(line.size()) + 1, "gens=");
            if (sys.algebra.rank < 1) throw SyntaxError(line_no, key_col, "an algebra with positive rank");
            size_t g = static_cast<size_t>(parse_positive(kv["gens"].first, line_no, kv["gens"].second, true));
            sys.module = ModulePresentation(metabelian_ring(sys.field(), sys.algebra.rank), g);
            continue;
        }
        if (keyword == "rel") {
            if (!sys.module) throw SyntaxError(line_no, key_col, "module statement before rel");
            auto parts = split_list(std::string(rest));
            if (parts.size() != sys.module->generators)
                throw SyntaxError(line_no, rest_col + 1, std::to_string(sys.module->generators) + " polynomials");
            std::vector<Poly> col;
            for (const auto& p : parts) {
                try {
                    col.push_back(Poly::parse(sys.module->ring, p));
                } catch (const Error& err) {
                    if (err.code() == ErrorCode::UnknownSymbol || err.code() == ErrorCode::FieldLiteralOutOfRange) throw;
                    throw SyntaxError(line_no, rest_col + 1, "polynomial in x1..x" + std::to_string(sys.algebra.rank));
                }
            }
            sys.module->add_relation(col);
            continue;
        }
        throw SyntaxError(line_no, key_col, "statement keyword");
    }
    if (!have_algebra) throw SyntaxError(line_no, 1, "algebra statement");
    return sys;
}

// ---------------------------------------------------------------------------
// Evaluation

Evaluator::Evaluator(const Carrier& carrier, const Field& term_field, std::optional<int> trunc)
    : carrier_(carrier), term_field_(term_field), trunc_(trunc) {
    if (!carrier_.field().contains_subfield(term_field_))
        fail(ErrorCode::CarrierMismatch, "terms over " + term_field_.str() + " cannot be evaluated in " + carrier_.description());
}

void Evaluator::set_point(std::vector<Element> point) {
    point_ = std::move(point);
    memo_.clear();
}

Element Evaluator::eval(const TermPtr& t) { return eval_node(t.get()); }

const Element& Evaluator::eval_node(const Term* t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    Element v;
    switch (t->kind) {
        case Term::Kind::Zero:
            break;
        case Term::Kind::Var:
            if (t->index >= point_.size())
                fail(ErrorCode::CarrierMismatch, "point has no coordinate for variable " + std::to_string(t->index + 1));
            v = point_[t->index];
            break;
        case Term::Kind::Const:
            if (t->index >= carrier_.constant_count())
                fail(ErrorCode::CarrierMismatch, carrier_.description() + " has no constant a" + std::to_string(t->index + 1));
            v = carrier_.constant(t->index);
            break;
        case Term::Kind::Sum: {
            ElementBuilder b(carrier_.field());
            for (const auto& c : t->children) b.add(eval_node(c.get()));
            v = b.finish();
            break;
        }
        case Term::Kind::ScalarMul:
            v = carrier_.scale(eval_node(t->children[0].get()), carrier_.field().coerce(term_field_, t->coeff));
            break;
        case Term::Kind::Bracket: {
            const Element& l = eval_node(t->children[0].get());
            const Element& r = eval_node(t->children[1].get());
            v = carrier_.bracket(l, r, trunc_);
            break;
        }
    }
    return memo_.emplace(t, std::move(v)).first->second;
}

Element evaluate(const TermPtr& t, const std::vector<Element>& point, const Carrier& carrier, const Field& term_field,
                 std::optional<int> trunc) {
    Evaluator ev(carrier, term_field, trunc);
    ev.set_point(point);
    return ev.eval(t);
}

std::shared_ptr<Carrier> coordinate_algebra(const AlgebraSpec& spec, const std::vector<std::string>& vars) {
    std::vector<std::string> names = spec.constant_names();
    names.insert(names.end(), vars.begin(), vars.end());
    if (names.empty()) fail(ErrorCode::UnsupportedCoefficientAlgebra, "A[X] needs at least one generator");
    switch (spec.kind) {
        case CoefficientKind::Zero:
        case CoefficientKind::Free:
            return FreeLieAlgebra::make(spec.field, names, spec.constant_count());
        case CoefficientKind::Metabelian:
            return MetabelianAlgebra::make(spec.field, names, spec.constant_count());
    }
    fail(ErrorCode::UnsupportedCoefficientAlgebra, "unknown coefficient algebra");
}

Element lower_term(const TermPtr& t, const Carrier& ax, size_t constants, size_t variables, const Field& term_field) {
    std::vector<Element> point;
    for (size_t i = 0; i < variables; ++i) {
        auto g = ax.generator(constants + i);
        if (!g) fail(ErrorCode::UnsupportedCoefficientAlgebra, "carrier is not a free algebra on A and X");
        point.push_back(ax.basis_element(*g));
    }
    return evaluate(t, point, ax, term_field);
}

LoweredSystem lower_to_carrier(const EquationSystem& sys) {
    LoweredSystem out;
    out.algebra = coordinate_algebra(sys.algebra, sys.vars);
    out.constants = sys.algebra.constant_count();
    out.variables = sys.vars.size();
    Evaluator ev(*out.algebra, sys.field());
    std::vector<Element> point;
    for (size_t i = 0; i < out.variables; ++i) point.push_back(out.algebra->basis_element(*out.algebra->generator(out.constants + i)));
    ev.set_point(point);
    for (const auto& eq : sys.equations) out.equations.push_back(ev.eval(eq));
    return out;
}

Homomorphism::Homomorphism(const Carrier& source, const Carrier& target, std::vector<Element> images,
                           std::optional<int> trunc)
    : source_(source), target_(target), images_(std::move(images)), trunc_(trunc) {
    if (images_.size() != source_.generator_count())
        fail(ErrorCode::InvalidArgument, "one image per generator of " + source_.description());
    if (!target_.field().contains_subfield(source_.field()))
        fail(ErrorCode::CarrierMismatch, source_.description() + " does not map into " + target_.description());
}

Element Homomorphism::apply_basis(BasisId id) {
    auto it = memo_.find(id);
    if (it != memo_.end()) return it->second;
    Element v;
    if (auto g = source_.generator_index(id)) {
        v = images_[*g];
    } else {
        auto f = source_.factors(id);
        if (!f) fail(ErrorCode::Unsupported, "basis element " + source_.basis_name(id) + " is not generated");
        Element l = apply_basis(f->first);
        Element r = apply_basis(f->second);
        v = target_.bracket(l, r, trunc_);
    }
    return memo_.emplace(id, std::move(v)).first->second;
}

Element Homomorphism::apply(const Element& e) {
    ElementBuilder b(target_.field());
    for (const auto& [id, c] : e.terms) b.add(apply_basis(id), target_.field().coerce(source_.field(), c));
    return b.finish();
}

}  // namespace liegeo
