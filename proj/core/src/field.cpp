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

#include "liegeo/field.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "liegeo/poly.hpp"
#include "liegeo/ratfunc.hpp"

namespace liegeo {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::TorsionDetected: return "TorsionDetected";
        case ErrorCode::InfiniteFieldUnsupported: return "InfiniteFieldUnsupported";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::FieldLiteralOutOfRange: return "FieldLiteralOutOfRange";
        case ErrorCode::CarrierMismatch: return "CarrierMismatch";
        case ErrorCode::TruncationRequired: return "TruncationRequired";
        case ErrorCode::UnsupportedCoefficientAlgebra: return "UnsupportedCoefficientAlgebra";
        case ErrorCode::InfiniteCarrier: return "InfiniteCarrier";
        case ErrorCode::EmptyWindow: return "EmptyWindow";
        case ErrorCode::NotADomain: return "NotADomain";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::DependentBasis: return "DependentBasis";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::AnchorDegenerate: return "AnchorDegenerate";
        case ErrorCode::PointOutsidePolytope: return "PointOutsidePolytope";
        case ErrorCode::ShapeViolation: return "ShapeViolation";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::NotInSpan: return "NotInSpan";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Field::Data {
    Kind kind = Kind::Prime;
    int64_t p = 2;
    std::shared_ptr<const Field> base;
    std::vector<std::string> vars;
    RingPtr ring;
    Scalar zero;
    Scalar one;
};

namespace {

using RFPtr = std::shared_ptr<const RationalFunction>;
using QPtr = std::shared_ptr<const Rational>;

int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return t;
}

void collect_vars(const Field& f, std::set<std::string>& out) {
    if (f.kind() != Field::Kind::RationalFunctions) return;
    for (const auto& v : f.variables()) out.insert(v);
    collect_vars(f.base(), out);
}

}  // namespace

Field::Field() : Field(prime(2)) {}

Field Field::prime(int64_t p) {
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "GF(" + std::to_string(p) + ") needs a prime modulus");
    auto d = std::make_shared<Data>();
    d->kind = Kind::Prime;
    d->p = p;
    d->zero = Scalar(int64_t{0});
    d->one = Scalar(int64_t{1});
    return Field(std::move(d));
}

Field Field::rationals() {
    auto d = std::make_shared<Data>();
    d->kind = Kind::Rationals;
    d->p = 0;
    d->zero = Scalar(std::make_shared<const Rational>(0));
    d->one = Scalar(std::make_shared<const Rational>(1));
    return Field(std::move(d));
}

Field Field::rational_functions(const Field& base, const std::vector<std::string>& vars) {
    if (vars.empty()) fail(ErrorCode::InvalidArgument, "rational-function field needs at least one variable");
    std::set<std::string> seen;
    collect_vars(base, seen);
    for (const auto& v : vars) {
        if (!seen.insert(v).second)
            fail(ErrorCode::InvalidArgument, "variable '" + v + "' shadows or repeats a field variable");
    }
    auto d = std::make_shared<Data>();
    d->kind = Kind::RationalFunctions;
    d->p = base.characteristic();
    d->base = std::make_shared<const Field>(base);
    d->vars = vars;
    d->ring = make_ring(vars, base);
    d->zero = Scalar(std::make_shared<const RationalFunction>(d->ring));
    d->one = Scalar(std::make_shared<const RationalFunction>(Poly::constant(d->ring, base.one())));
    return Field(std::move(d));
}

Field Field::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    size_t pos = 0;
    Field f;
    if (s.rfind("GF(", 0) == 0) {
        size_t close = s.find(')');
        if (close == std::string::npos) fail(ErrorCode::InvalidArgument, "bad field spec '" + s + "'");
        std::string num = s.substr(3, close - 3);
        if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
            fail(ErrorCode::InvalidArgument, "bad field spec '" + s + "'");
        f = prime(std::stoll(num));
        pos = close + 1;
    } else if (!s.empty() && s[0] == 'Q') {
        f = rationals();
        pos = 1;
    } else {
        fail(ErrorCode::InvalidArgument, "bad field spec '" + s + "'");
    }
    while (pos < s.size()) {
        if (s[pos] != '(') fail(ErrorCode::InvalidArgument, "bad field spec '" + s + "'");
        size_t close = s.find(')', pos);
        if (close == std::string::npos) fail(ErrorCode::InvalidArgument, "bad field spec '" + s + "'");
        std::vector<std::string> vars;
        std::string cur;
        for (size_t i = pos + 1; i <= close; ++i) {
            if (i == close || s[i] == ',') {
                if (cur.empty() || !std::isalpha(static_cast<unsigned char>(cur[0])))
                    fail(ErrorCode::InvalidArgument, "bad variable list in '" + s + "'");
                vars.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(s[i]);
            }
        }
        f = rational_functions(f, vars);
        pos = close + 1;
    }
    return f;
}

Field::Kind Field::kind() const { return d_->kind; }
int64_t Field::characteristic() const { return d_->p; }

int64_t Field::size() const {
    if (kind() != Kind::Prime) fail(ErrorCode::InfiniteFieldUnsupported, str() + " is infinite");
    return d_->p;
}

const Field& Field::base() const {
    if (kind() != Kind::RationalFunctions) fail(ErrorCode::InvalidArgument, str() + " has no base field");
    return *d_->base;
}

const std::vector<std::string>& Field::variables() const { return d_->vars; }
const std::shared_ptr<const PolyRing>& Field::ring() const { return d_->ring; }

const Field& Field::prime_subfield() const {
    if (kind() == Kind::RationalFunctions) return base().prime_subfield();
    return *this;
}

std::string Field::str() const {
    switch (kind()) {
        case Kind::Prime: return "GF(" + std::to_string(d_->p) + ")";
        case Kind::Rationals: return "Q";
        case Kind::RationalFunctions: {
            std::string s = base().str() + "(";
            for (size_t i = 0; i < d_->vars.size(); ++i) s += (i ? "," : "") + d_->vars[i];
            return s + ")";
        }
    }
    return "?";
}

bool Field::operator==(const Field& o) const {
    if (d_ == o.d_) return true;
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case Kind::Prime: return d_->p == o.d_->p;
        case Kind::Rationals: return true;
        case Kind::RationalFunctions: return d_->vars == o.d_->vars && base() == o.base();
    }
    return false;
}

Scalar Field::zero() const { return d_->zero; }
Scalar Field::one() const { return d_->one; }

Scalar Field::from_int(int64_t n) const {
    switch (kind()) {
        case Kind::Prime: {
            int64_t r = n % d_->p;
            if (r < 0) r += d_->p;
            return Scalar(r);
        }
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(n));
        case Kind::RationalFunctions:
            if (n == 0) return zero();
            if (n == 1) return one();
            return Scalar(std::make_shared<const RationalFunction>(Poly::constant(d_->ring, base().from_int(n))));
    }
    return Scalar();
}

Scalar Field::from_rational(const Rational& q) const {
    switch (kind()) {
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(q));
        case Kind::Prime: {
            using boost::multiprecision::cpp_int;
            cpp_int n = boost::multiprecision::numerator(q) % d_->p;
            cpp_int m = boost::multiprecision::denominator(q) % d_->p;
            if (m == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes in " + str());
            return div(from_int(n.convert_to<int64_t>()), from_int(m.convert_to<int64_t>()));
        }
        case Kind::RationalFunctions:
            return Scalar(std::make_shared<const RationalFunction>(Poly::constant(d_->ring, base().from_rational(q))));
    }
    return Scalar();
}

namespace {

QPtr as_q(const Scalar& a) {
    if (auto p = std::get_if<QPtr>(&a.v)) return *p;
    if (auto i = std::get_if<int64_t>(&a.v)) return std::make_shared<const Rational>(*i);
    fail(ErrorCode::FieldMismatch, "scalar is not rational");
}

}  // namespace

const RationalFunction& Field::rf_value(const Scalar& a) const {
    if (auto p = std::get_if<RFPtr>(&a.v)) return **p;
    if (auto i = std::get_if<int64_t>(&a.v)) {
        if (*i == 0) return *std::get<RFPtr>(d_->zero.v);
        if (*i == 1) return *std::get<RFPtr>(d_->one.v);
    }
    fail(ErrorCode::FieldMismatch, "scalar is not a rational function of " + str());
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    switch (kind()) {
        case Kind::Prime: {
            int64_t r = std::get<int64_t>(a.v) + std::get<int64_t>(b.v);
            if (r >= d_->p) r -= d_->p;
            return Scalar(r);
        }
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(*as_q(a) + *as_q(b)));
        case Kind::RationalFunctions: {
            const auto& x = rf_value(a);
            const auto& y = rf_value(b);
            if (x.is_zero()) return b;
            if (y.is_zero()) return a;
            return Scalar(std::make_shared<const RationalFunction>(x + y));
        }
    }
    return Scalar();
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    switch (kind()) {
        case Kind::Prime: {
            int64_t r = std::get<int64_t>(a.v) - std::get<int64_t>(b.v);
            if (r < 0) r += d_->p;
            return Scalar(r);
        }
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(*as_q(a) - *as_q(b)));
        case Kind::RationalFunctions: {
            const auto& y = rf_value(b);
            if (y.is_zero()) return a;
            return Scalar(std::make_shared<const RationalFunction>(rf_value(a) - y));
        }
    }
    return Scalar();
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    switch (kind()) {
        case Kind::Prime: {
            __int128 r = static_cast<__int128>(std::get<int64_t>(a.v)) * std::get<int64_t>(b.v);
            return Scalar(static_cast<int64_t>(r % d_->p));
        }
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(*as_q(a) * *as_q(b)));
        case Kind::RationalFunctions: {
            const auto& x = rf_value(a);
            const auto& y = rf_value(b);
            if (x.is_zero() || y.is_zero()) return zero();
            if (x.num().is_one() && x.den().is_one()) return b;
            if (y.num().is_one() && y.den().is_one()) return a;
            return Scalar(std::make_shared<const RationalFunction>(x * y));
        }
    }
    return Scalar();
}

Scalar Field::neg(const Scalar& a) const {
    switch (kind()) {
        case Kind::Prime: {
            int64_t x = std::get<int64_t>(a.v);
            return Scalar(x == 0 ? int64_t{0} : d_->p - x);
        }
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(-*as_q(a)));
        case Kind::RationalFunctions: return Scalar(std::make_shared<const RationalFunction>(-rf_value(a)));
    }
    return Scalar();
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero in " + str());
    switch (kind()) {
        case Kind::Prime: return Scalar(mod_inverse(std::get<int64_t>(a.v), d_->p));
        case Kind::Rationals: return Scalar(std::make_shared<const Rational>(Rational(1) / *as_q(a)));
        case Kind::RationalFunctions: return Scalar(std::make_shared<const RationalFunction>(rf_value(a).inverse()));
    }
    return Scalar();
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) fail(ErrorCode::DivisionByZero, "division by zero in " + str());
    if (kind() == Kind::RationalFunctions)
        return Scalar(std::make_shared<const RationalFunction>(rf_value(a) / rf_value(b)));
    return mul(a, inv(b));
}

Scalar Field::pow(const Scalar& a, int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar result = one();
    Scalar base_ = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base_);
        e >>= 1;
        if (e) base_ = mul(base_, base_);
    }
    return result;
}

bool Field::is_zero(const Scalar& a) const {
    if (auto i = std::get_if<int64_t>(&a.v)) return *i == 0;
    if (auto q = std::get_if<QPtr>(&a.v)) return (*q)->is_zero();
    return std::get<RFPtr>(a.v)->is_zero();
}

bool Field::is_one(const Scalar& a) const {
    if (auto i = std::get_if<int64_t>(&a.v)) return *i == 1;
    if (auto q = std::get_if<QPtr>(&a.v)) return **q == 1;
    const auto& f = *std::get<RFPtr>(a.v);
    return f.num().is_one() && f.den().is_one();
}

bool Field::eq(const Scalar& a, const Scalar& b) const { return cmp(a, b) == 0; }

int Field::cmp(const Scalar& a, const Scalar& b) const {
    switch (kind()) {
        case Kind::Prime: {
            int64_t x = std::get<int64_t>(a.v), y = std::get<int64_t>(b.v);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case Kind::Rationals: {
            auto x = as_q(a), y = as_q(b);
            return *x < *y ? -1 : (*x > *y ? 1 : 0);
        }
        case Kind::RationalFunctions: return rf_value(a).cmp(rf_value(b));
    }
    return 0;
}

size_t Field::hash(const Scalar& a) const {
    switch (kind()) {
        case Kind::Prime: return std::hash<int64_t>()(std::get<int64_t>(a.v));
        case Kind::Rationals: {
            auto q = as_q(a);
            return std::hash<std::string>()(boost::multiprecision::numerator(*q).str()) * 31 +
                   std::hash<std::string>()(boost::multiprecision::denominator(*q).str());
        }
        case Kind::RationalFunctions: return rf_value(a).hash();
    }
    return 0;
}

std::string Field::render(const Scalar& a) const {
    switch (kind()) {
        case Kind::Prime: return std::to_string(std::get<int64_t>(a.v));
        case Kind::Rationals: return as_q(a)->str();
        case Kind::RationalFunctions: return rf_value(a).str();
    }
    return "?";
}

Scalar Field::parse_literal(std::string_view text) const {
    if (kind() == Kind::RationalFunctions) return coerce(prime_subfield(), prime_subfield().parse_literal(text));
    std::string s(text);
    size_t slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [](const std::string& x) {
        return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit((unsigned char)c); });
    };
    if (!digits(num) || !digits(den)) fail(ErrorCode::InvalidArgument, "bad scalar literal '" + s + "'");
    if (kind() == Kind::Rationals) {
        Rational q{boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den)};
        return Scalar(std::make_shared<const Rational>(q));
    }
    auto parse_mod = [&](const std::string& x) {
        if (x.size() > 18 || std::stoll(x) >= d_->p)
            fail(ErrorCode::FieldLiteralOutOfRange, "literal " + x + " is not a canonical element of " + str());
        return Scalar(static_cast<int64_t>(std::stoll(x)));
    };
    return div(parse_mod(num), parse_mod(den));
}

Scalar Field::parse_expression(std::string_view text) const {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto bad = [&](const std::string& what) -> Scalar {
        fail(ErrorCode::InvalidArgument, "bad field expression '" + std::string(text) + "': expected " + what);
    };
    std::function<Scalar()> expr;
    std::function<Scalar()> atom = [&]() -> Scalar {
        skip();
        if (pos >= text.size()) return bad("operand");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Scalar v = expr();
            skip();
            if (pos >= text.size() || text[pos] != ')') return bad("')'");
            ++pos;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return parse_literal(text.substr(start, pos - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
            std::string name(text.substr(start, pos - start));
            for (const Field* f = this; f->kind() == Kind::RationalFunctions; f = &f->base()) {
                const auto& vars = f->variables();
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it != vars.end()) return coerce(*f, f->variable(static_cast<size_t>(it - vars.begin())));
            }
            fail(ErrorCode::UnknownSymbol, "'" + name + "' is not a variable of " + str());
        }
        return bad("operand");
    };
    std::function<Scalar()> power = [&]() -> Scalar {
        Scalar b = atom();
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) return bad("exponent");
            return pow(b, std::stoll(std::string(text.substr(start, pos - start))));
        }
        return b;
    };
    std::function<Scalar()> unary = [&]() -> Scalar {
        skip();
        if (pos < text.size() && text[pos] == '-') {
            ++pos;
            return neg(unary());
        }
        return power();
    };
    std::function<Scalar()> term = [&]() -> Scalar {
        Scalar v = unary();
        while (true) {
            skip();
            if (pos < text.size() && (text[pos] == '*' || text[pos] == '/')) {
                char op = text[pos++];
                Scalar w = unary();
                v = op == '*' ? mul(v, w) : div(v, w);
            } else {
                return v;
            }
        }
    };
    expr = [&]() -> Scalar {
        Scalar v = term();
        while (true) {
            skip();
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                char op = text[pos++];
                Scalar w = term();
                v = op == '+' ? add(v, w) : sub(v, w);
            } else {
                return v;
            }
        }
    };
    Scalar v = expr();
    skip();
    if (pos != text.size()) return bad("end of expression");
    return v;
}

bool Field::contains_subfield(const Field& from) const {
    if (*this == from) return true;
    if (kind() == Kind::RationalFunctions) return base().contains_subfield(from);
    return false;
}

Scalar Field::coerce(const Field& from, const Scalar& a) const {
    if (*this == from) return a;
    if (kind() == Kind::RationalFunctions && base().contains_subfield(from)) {
        Scalar inner = base().coerce(from, a);
        if (base().is_zero(inner)) return zero();
        return Scalar(std::make_shared<const RationalFunction>(Poly::constant(d_->ring, inner)));
    }
    fail(ErrorCode::FieldMismatch, "cannot map " + from.str() + " into " + str());
}

Scalar Field::element(int64_t index) const {
    if (kind() != Kind::Prime) fail(ErrorCode::InfiniteFieldUnsupported, str() + " is not enumerable");
    return Scalar(index);
}

int64_t Field::index_of(const Scalar& a) const {
    if (kind() != Kind::Prime) fail(ErrorCode::InfiniteFieldUnsupported, str() + " is not enumerable");
    return std::get<int64_t>(a.v);
}

Scalar Field::variable(size_t i) const {
    if (kind() != Kind::RationalFunctions || i >= d_->vars.size())
        fail(ErrorCode::InvalidArgument, "no variable " + std::to_string(i) + " in " + str());
    return Scalar(std::make_shared<const RationalFunction>(Poly::variable(d_->ring, i)));
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) fail(ErrorCode::FieldMismatch, field_.str() + " vs " + o.field_.str());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    return field_.eq(value_, o.value_);
}

}  // namespace liegeo
