#include "rllforge/scalar.hpp"

#include "rllforge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rllforge {

namespace {

int degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

Exps add_exps(const Exps& a, const Exps& b) {
    Exps c{};
    for (int k = 0; k < kVars; ++k) c[k] = a[k] + b[k];
    return c;
}

Exps neg_exps(const Exps& a) {
    Exps c{};
    for (int k = 0; k < kVars; ++k) c[k] = -a[k];
    return c;
}

Rational qpow(const Rational& q, int e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw DivisionByZero("zero raised to a negative power");
        return Rational(0);
    }
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), k);
    Rational out = e > 0 ? Rational(n, d) : Rational(d, n);
    out.canonicalize();
    return out;
}

// Dense univariate polynomials (index = degree) for the gcd path.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense poly_rem(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense t = poly_rem(a, b);
        a = std::move(b);
        b = std::move(t);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

Dense to_dense(const LaurentPoly& p, int var) {
    Dense d;
    for (const auto& m : p.terms()) {
        std::size_t k = static_cast<std::size_t>(m.exps[var]);
        if (d.size() <= k) d.resize(k + 1);
        d[k] = m.coeff;
    }
    return d;
}

LaurentPoly from_dense(const Dense& d, int var) {
    LaurentPoly out;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] == 0) continue;
        Exps e{};
        e[var] = static_cast<int>(k);
        out = out + LaurentPoly(Monomial{d[k], e});
    }
    return out;
}

}  // namespace

const char* var_name(Var x) {
    static const char* names[] = {"u", "v", "z", "w"};
    return names[static_cast<int>(x)];
}

bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps && a.coeff == b.coeff; }

bool term_before(const Exps& a, const Exps& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da > db;
    return a > b;
}

Monomial rs_monomial(Half a, Half b) { return Monomial{Rational(1), {a.twice, b.twice, 0, 0}}; }

Assignment& Assignment::set(Var x, const Rational& q) {
    if (q == 0) throw DivisionByZero(std::string("zero value assigned to ") + var_name(x));
    value[static_cast<int>(x)] = q;
    return *this;
}

bool Assignment::empty() const {
    return std::none_of(value.begin(), value.end(), [](const auto& x) { return x.has_value(); });
}

std::string Assignment::str() const {
    std::string out;
    for (int k = 0; k < kVars; ++k) {
        if (!value[k]) continue;
        if (!out.empty()) out += ", ";
        out += var_name(static_cast<Var>(k));
        out += "=" + to_string(*value[k]);
    }
    return out;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back(Monomial{Rational(c), {}});
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.push_back(Monomial{c, {}});
}

LaurentPoly::LaurentPoly(const Monomial& m) {
    if (m.coeff != 0) terms_.push_back(m);
}

LaurentPoly LaurentPoly::var(Var x, int k) {
    Exps e{};
    e[static_cast<int>(x)] = k;
    return LaurentPoly(Monomial{Rational(1), e});
}

LaurentPoly LaurentPoly::from_unsorted(std::vector<Monomial> t) {
    std::sort(t.begin(), t.end(), [](const Monomial& a, const Monomial& b) { return term_before(a.exps, b.exps); });
    LaurentPoly out;
    for (auto& m : t) {
        if (!out.terms_.empty() && out.terms_.back().exps == m.exps) {
            out.terms_.back().coeff += m.coeff;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
            out.terms_.push_back(std::move(m));
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
    return out;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exps{});
}

std::optional<Rational> LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_[0].coeff;
    return std::nullopt;
}

unsigned LaurentPoly::var_mask() const {
    unsigned mask = 0;
    for (const auto& m : terms_)
        for (int k = 0; k < kVars; ++k)
            if (m.exps[k] != 0) mask |= 1u << k;
    return mask;
}

Exps LaurentPoly::min_exps() const {
    if (terms_.empty()) return {};
    Exps e = terms_[0].exps;
    for (const auto& m : terms_)
        for (int k = 0; k < kVars; ++k) e[k] = std::min(e[k], m.exps[k]);
    return e;
}

LaurentPoly LaurentPoly::shifted(const Exps& d) const {
    // a shift preserves graded-lex order
    LaurentPoly out = *this;
    for (auto& m : out.terms_) m.exps = add_exps(m.exps, d);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly out = *this;
    for (auto& m : out.terms_) m.coeff *= c;
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    if (is_zero()) return LaurentPoly{};
    if (d.is_monomial()) {
        const auto& m = d.leading();
        return shifted(neg_exps(m.exps)).scaled(1 / m.coeff);
    }
    Exps ma = min_exps(), md = d.min_exps();
    LaurentPoly rem = shifted(neg_exps(ma));
    LaurentPoly den = d.shifted(neg_exps(md));
    const Monomial& ld = den.leading();
    std::vector<Monomial> q;
    while (!rem.is_zero()) {
        const Monomial& lt = rem.leading();
        Exps e{};
        for (int k = 0; k < kVars; ++k) {
            e[k] = lt.exps[k] - ld.exps[k];
            if (e[k] < 0) return std::nullopt;
        }
        Monomial t{lt.coeff / ld.coeff, e};
        q.push_back(t);
        rem = rem - den * LaurentPoly(t);
    }
    return from_unsorted(std::move(q)).shifted(add_exps(ma, neg_exps(md)));
}

LaurentPoly LaurentPoly::eval(const Assignment& a) const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& m : terms_) {
        Monomial t = m;
        for (int k = 0; k < kVars; ++k) {
            if (!a.value[k] || m.exps[k] == 0) continue;
            t.coeff *= qpow(*a.value[k], m.exps[k]);
            t.exps[k] = 0;
        }
        out.push_back(std::move(t));
    }
    return from_unsorted(std::move(out));
}

LaurentPoly LaurentPoly::substitute(Var x, const Exps& image) const {
    int k = static_cast<int>(x);
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& m : terms_) {
        Monomial t = m;
        int e = m.exps[k];
        t.exps[k] = 0;
        for (int j = 0; j < kVars; ++j) t.exps[j] += e * image[j];
        out.push_back(std::move(t));
    }
    return from_unsorted(std::move(out));
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : terms_) {
        bool neg = m.coeff < 0;
        Rational a = abs(m.coeff);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool has_vars = m.exps != Exps{};
        bool wrote = false;
        if (a != 1 || !has_vars) {
            out += to_string(a);
            wrote = true;
        }
        for (int k = 0; k < kVars; ++k) {
            if (m.exps[k] == 0) continue;
            if (wrote) out += ' ';
            out += var_name(static_cast<Var>(k));
            if (m.exps[k] != 1) out += "^" + std::to_string(m.exps[k]);
            wrote = true;
        }
    }
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && term_before(i->exps, j->exps))) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || term_before(j->exps, i->exps)) {
            out.terms_.push_back(*j++);
        } else {
            Rational c = i->coeff + j->coeff;
            if (c != 0) out.terms_.push_back(Monomial{c, i->exps});
            ++i;
            ++j;
        }
    }
    return out;
}

LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(Rational(-1)); }

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.shifted(a.leading().exps).scaled(a.leading().coeff);
    if (b.is_monomial()) return a.shifted(b.leading().exps).scaled(b.leading().coeff);
    std::vector<Monomial> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) t.push_back(Monomial{x.coeff * y.coeff, add_exps(x.exps, y.exps)});
    return LaurentPoly::from_unsorted(std::move(t));
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

RatFunc RatFunc::uv(int a, int b) { return RatFunc(Monomial{Rational(1), {a, b, 0, 0}}); }

void RatFunc::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_monomial()) {
        const Monomial& m = den_.leading();
        num_ = num_.shifted(neg_exps(m.exps)).scaled(1 / m.coeff);
        den_ = LaurentPoly(1);
        return;
    }
    Exps md = den_.min_exps();
    den_ = den_.shifted(neg_exps(md));
    num_ = num_.shifted(neg_exps(md));
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly(1);
        return;
    }
    unsigned mn = num_.var_mask(), mdk = den_.var_mask();
    unsigned both = mn | mdk;
    if (both != 0 && (both & (both - 1)) == 0) {
        int var = __builtin_ctz(both);
        Exps cn = num_.min_exps();
        LaurentPoly p = num_.shifted(neg_exps(cn));
        Dense g = dense_gcd(to_dense(p, var), to_dense(den_, var));
        if (g.size() > 1) {
            LaurentPoly gp = from_dense(g, var);
            p = *p.divide_exact(gp);
            den_ = *den_.divide_exact(gp);
            num_ = p.shifted(cn);
            if (den_.is_constant()) {
                num_ = num_.scaled(1 / den_.leading().coeff);
                den_ = LaurentPoly(1);
                return;
            }
        }
    }
    Rational lc = den_.leading().coeff;
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::optional<Rational> RatFunc::constant_value() const {
    if (!den_.is_constant()) return std::nullopt;
    auto c = num_.constant_value();
    if (!c) return std::nullopt;
    return *c / *den_.constant_value();
}

RatFunc RatFunc::inv() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::eval(const Assignment& a) const {
    LaurentPoly d = den_.eval(a);
    if (d.is_zero()) throw DivisionByZero("denominator " + den_.str() + " vanishes at " + a.str());
    return RatFunc(num_.eval(a), d);
}

RatFunc RatFunc::substitute(Var x, const Exps& image) const {
    return RatFunc(num_.substitute(x, image), den_.substitute(x, image));
}

RatFunc RatFunc::pow(int k) const {
    RatFunc base = k < 0 ? inv() : *this;
    RatFunc out(1);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
    return out;
}

std::string RatFunc::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_, LaurentPoly(1), RatFunc::Canonical{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
    if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
    if (auto q = a.den_.divide_exact(b.den_)) return RatFunc(a.num_ + b.num_ * *q, a.den_);
    if (auto q = b.den_.divide_exact(a.den_)) return RatFunc(a.num_ * *q + b.num_, b.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Canonical{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, LaurentPoly(1), RatFunc::Canonical{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool rf_equal(const RatFunc& a, const RatFunc& b) { return a == b; }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) throw ParseError("bad rational: " + std::string(text));
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in " + std::string(text));
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
    }
    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string digits() {
        std::size_t b = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string(s.substr(b, pos - b));
    }
    int integer() {
        ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        std::string d = digits();
        if (d.empty()) fail("expected integer");
        return neg ? -std::stoi(d) : std::stoi(d);
    }
    static int var_index(char c) {
        switch (c) {
            case 'u': return 0;
            case 'v': return 1;
            case 'z': return 2;
            case 'w': return 3;
            default: return -1;
        }
    }
    Monomial term() {
        ws();
        Monomial m{Rational(1), {}};
        bool any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::string num = digits();
            if (pos + 1 < s.size() && s[pos] == '/' && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                ++pos;
                num += "/" + digits();
            }
            m.coeff = parse_rational(num);
            any = true;
        }
        for (;;) {
            ws();
            if (pos >= s.size() || var_index(s[pos]) < 0) break;
            int k = var_index(s[pos++]);
            int e = 1;
            if (peek('^')) {
                ++pos;
                e = integer();
            }
            m.exps[k] += e;
            any = true;
        }
        if (!any) fail("expected term");
        return m;
    }
    LaurentPoly poly() {
        std::vector<Monomial> t;
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos;
        } else if (peek('+')) {
            ++pos;
        }
        for (;;) {
            Monomial m = term();
            if (neg) m.coeff = -m.coeff;
            t.push_back(std::move(m));
            if (peek('+')) {
                neg = false;
                ++pos;
            } else if (peek('-')) {
                neg = true;
                ++pos;
            } else {
                break;
            }
        }
        return LaurentPoly::from_unsorted(std::move(t));
    }
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) {
    Parser p{text};
    RatFunc out;
    if (p.peek('(')) {
        ++p.pos;
        LaurentPoly num = p.poly();
        p.expect(')');
        if (p.peek('/')) {
            ++p.pos;
            p.expect('(');
            LaurentPoly den = p.poly();
            p.expect(')');
            out = RatFunc(std::move(num), std::move(den));
        } else {
            out = RatFunc(std::move(num));
        }
    } else {
        out = RatFunc(p.poly());
    }
    p.ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace rllforge
