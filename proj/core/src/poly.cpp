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

#include "liegeo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "liegeo/ratfunc.hpp"

namespace liegeo {

std::string PolyRing::str() const {
    std::string s = coeffs.str() + "[";
    for (size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s + "]";
}

RingPtr make_ring(std::vector<std::string> vars, Field coeffs) {
    return std::make_shared<const PolyRing>(std::move(vars), std::move(coeffs));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

uint32_t total_degree(const Monomial& m) {
    uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p(ring);
    if (!ring->coeffs.is_zero(c)) p.terms_.emplace_back(Monomial(ring->arity(), 0), c);
    return p;
}

Poly Poly::variable(RingPtr ring, size_t i) {
    Monomial m(ring->arity(), 0);
    m.at(i) = 1;
    Scalar one = ring->coeffs.one();
    return monomial(std::move(ring), std::move(m), one);
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Scalar& c) {
    Poly p(ring);
    if (m.size() != ring->arity()) fail(ErrorCode::RingMismatch, "monomial arity differs from ring arity");
    if (!ring->coeffs.is_zero(c)) p.terms_.emplace_back(std::move(m), c);
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const Field& f = ring->coeffs;
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
    Poly p(ring);
    for (auto& t : terms) {
        if (t.first.size() != ring->arity()) fail(ErrorCode::RingMismatch, "monomial arity differs from ring arity");
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second = f.add(p.terms_.back().second, t.second);
        } else {
            if (!p.terms_.empty() && f.is_zero(p.terms_.back().second)) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && f.is_zero(p.terms_.back().second)) p.terms_.pop_back();
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }

bool Poly::is_one() const {
    return terms_.size() == 1 && liegeo::total_degree(terms_[0].first) == 0 && field().is_one(terms_[0].second);
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(liegeo::total_degree(terms_.front().first));
}

int Poly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first[var]));
    return d;
}

Scalar Poly::constant_term() const {
    if (!terms_.empty() && liegeo::total_degree(terms_.back().first) == 0) return terms_.back().second;
    return field().zero();
}

Scalar Poly::coeff(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.first == m) return t.second;
    return field().zero();
}

int Poly::main_variable() const {
    int v = -1;
    for (const auto& t : terms_)
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i] > 0) v = std::max(v, static_cast<int>(i));
    return v;
}

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_))
        fail(ErrorCode::RingMismatch, (ring_ ? ring_->str() : "?") + " vs " + (o.ring_ ? o.ring_->str() : "?"));
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(o);
    const Field& f = field();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = i == terms_.size() ? -1 : (j == o.terms_.size() ? 1 : grlex_cmp(terms_[i].first, o.terms_[j].first));
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = f.add(terms_[i].second, o.terms_[j].second);
            if (!f.is_zero(s)) r.terms_.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, field().neg(t.second));
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scale(const Scalar& c) const {
    if (field().is_zero(c)) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, field().mul(t.second, c));
    return r;
}

Poly Poly::mul_monomial(const Monomial& m, const Scalar& c) const {
    if (field().is_zero(c)) return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(mono_mul(t.first, m), field().mul(t.second, c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].first, o.terms_[0].second);
    if (terms_.size() == 1) return o.mul_monomial(terms_[0].first, terms_[0].second);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.emplace_back(mono_mul(a.first, b.first), field().mul(a.second, b.second));
    return from_terms(ring_, std::move(acc));
}

Poly Poly::pow(uint32_t e) const {
    Poly r = constant(ring_, field().one());
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first) return false;
        if (!field().eq(terms_[i].second, o.terms_[i].second)) return false;
    }
    return true;
}

int Poly::cmp(const Poly& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = grlex_cmp(terms_[i].first, o.terms_[i].first);
        if (c) return c;
        c = field().cmp(terms_[i].second, o.terms_[i].second);
        if (c) return c;
    }
    if (terms_.size() == o.terms_.size()) return 0;
    return terms_.size() < o.terms_.size() ? -1 : 1;
}

size_t Poly::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& t : terms_) {
        for (auto e : t.first) h = (h ^ e) * 1099511628211ull;
        h = (h ^ field().hash(t.second)) * 1099511628211ull;
    }
    return h;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_ring(d);
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const Field& f = field();
    Poly q(ring_), r(ring_), p = *this;
    Scalar lc_inv = f.inv(d.leading_coeff());
    while (!p.is_zero()) {
        const auto& lt = p.terms_.front();
        if (divides(d.leading_monomial(), lt.first)) {
            Monomial m = mono_div(lt.first, d.leading_monomial());
            Scalar c = f.mul(lt.second, lc_inv);
            q = q + monomial(ring_, m, c);
            p = p - d.mul_monomial(m, c);
        } else {
            r.terms_.push_back(lt);
            p.terms_.erase(p.terms_.begin());
        }
    }
    return {q, r};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "inexact division of " + str() + " by " + d.str());
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(field().inv(leading_coeff()));
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const { return evaluate_in(field(), point); }

Scalar Poly::evaluate_in(const Field& target, const std::vector<Scalar>& point) const {
    if (point.size() != ring_->arity()) fail(ErrorCode::RingMismatch, "point arity differs from ring arity");
    Scalar acc = target.zero();
    for (const auto& t : terms_) {
        Scalar term = target.coerce(field(), t.second);
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i]) term = target.mul(term, target.pow(point[i], t.first[i]));
        acc = target.add(acc, term);
    }
    return acc;
}

Poly Poly::substitute(size_t var, const Poly& value) const {
    check_ring(value);
    Poly acc(ring_);
    std::map<uint32_t, Poly> powers;
    for (const auto& t : terms_) {
        Monomial m = t.first;
        uint32_t e = m[var];
        m[var] = 0;
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
        acc = acc + it->second.mul_monomial(m, t.second);
    }
    return acc;
}

Poly Poly::embed(const RingPtr& target) const {
    std::vector<size_t> where(ring_->arity());
    for (size_t i = 0; i < ring_->arity(); ++i) {
        auto it = std::find(target->vars.begin(), target->vars.end(), ring_->vars[i]);
        if (it == target->vars.end()) fail(ErrorCode::RingMismatch, "variable " + ring_->vars[i] + " missing from target ring");
        where[i] = static_cast<size_t>(it - target->vars.begin());
    }
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Monomial m(target->arity(), 0);
        for (size_t i = 0; i < t.first.size(); ++i) m[where[i]] += t.first[i];
        out.emplace_back(std::move(m), target->coeffs.coerce(field(), t.second));
    }
    return from_terms(target, std::move(out));
}

std::map<uint32_t, Poly> Poly::coefficients_in(size_t var) const {
    std::map<uint32_t, std::vector<Term>> parts;
    for (const auto& t : terms_) {
        Monomial m = t.first;
        uint32_t e = m[var];
        m[var] = 0;
        parts[e].emplace_back(std::move(m), t.second);
    }
    std::map<uint32_t, Poly> out;
    for (auto& [e, ts] : parts) out.emplace(e, from_terms(ring_, std::move(ts)));
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    const Field& f = field();
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coef = f.render(c);
        bool negative = f.kind() == Field::Kind::Rationals && !coef.empty() && coef[0] == '-';
        if (negative) coef = coef.substr(1);
        if (f.kind() == Field::Kind::RationalFunctions && coef.find_first_of("+-/ ") != std::string::npos)
            coef = "(" + coef + ")";
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            s += coef;
        } else if (coef == "1") {
            s += mono;
        } else {
            s += coef + "*" + mono;
        }
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) error("end of polynomial");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& expected) {
        throw SyntaxError(1, static_cast<int>(pos_) + 1, expected);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly acc(ring_);
        bool neg = accept('-');
        if (!neg) accept('+');
        Poly t = term();
        acc = neg ? -t : t;
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }
    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }
    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("exponent");
            b = b.pow(static_cast<uint32_t>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return b;
    }
    Poly base() {
        skip();
        if (accept('(')) {
            Poly p = expr();
            if (!accept(')')) error("')'");
            return p;
        }
        if (accept('-')) return -factor();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            Scalar c = ring_->coeffs.parse_literal(s_.substr(start, pos_ - start));
            return Poly::constant(ring_, c);
        }
        if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto it = std::find(ring_->vars.begin(), ring_->vars.end(), name);
            if (it == ring_->vars.end()) fail(ErrorCode::UnknownSymbol, "unknown polynomial variable '" + name + "'");
            return Poly::variable(ring_, static_cast<size_t>(it - ring_->vars.begin()));
        }
        error("number, variable or '('");
    }

    RingPtr ring_;
    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(RingPtr ring, std::string_view text) { return PolyParser(std::move(ring), text).parse(); }

// ---------------------------------------------------------------------------
// gcd by recursive primitive pseudo-remainder sequences.

namespace {

Poly lc_in(const Poly& a, size_t var, int& deg) {
    auto cs = a.coefficients_in(var);
    deg = static_cast<int>(cs.rbegin()->first);
    return cs.rbegin()->second;
}

Poly var_power(const RingPtr& ring, size_t var, uint32_t e) {
    Monomial m(ring->arity(), 0);
    m[var] = e;
    return Poly::monomial(ring, m, ring->coeffs.one());
}

Poly prem(Poly a, const Poly& b, size_t var) {
    int db = 0;
    Poly lcb = lc_in(b, var, db);
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db) break;
        int tmp = 0;
        Poly lca = lc_in(a, var, tmp);
        a = lcb * a - lca * var_power(a.ring(), var, static_cast<uint32_t>(da - db)) * b;
    }
    return a;
}

Poly normalize_unit(const Poly& a) { return a.monic(); }

}  // namespace

Poly content_in(const Poly& a, size_t var) {
    if (a.is_zero()) return a;
    Poly g(a.ring());
    for (const auto& [e, c] : a.coefficients_in(var)) {
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring())) fail(ErrorCode::RingMismatch, "gcd across rings");
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    const RingPtr& ring = a.ring();
    if (a.is_constant() || b.is_constant()) return Poly::constant(ring, ring->coeffs.one());
    int va = a.main_variable(), vb = b.main_variable();
    size_t v = static_cast<size_t>(std::max(va, vb));
    if (a.degree_in(v) <= 0) return gcd(a, content_in(b, v));
    if (b.degree_in(v) <= 0) return gcd(content_in(a, v), b);
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = a.exact_div(ca), pb = b.exact_div(cb);
    Poly g = gcd(ca, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else if (r.degree_in(v) <= 0) {
            return normalize_unit(g);
        } else {
            pb = r.exact_div(content_in(r, v)).monic();
        }
    }
    Poly prim = pa.exact_div(content_in(pa, v));
    return normalize_unit(g * prim);
}

}  // namespace liegeo
