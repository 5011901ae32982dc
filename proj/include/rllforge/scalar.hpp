#pragma once

// Exact scalars: Laurent polynomials and rational functions over Q in the
// variables u, v, z, w.  r = u^2 and s = v^2, so half powers of r and s
// never need fractional exponents.

#include <array>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rllforge {

using Rational = mpq_class;

enum class Var : int { u = 0, v = 1, z = 2, w = 3 };
inline constexpr int kVars = 4;
using Exps = std::array<int, kVars>;

const char* var_name(Var x);

struct Monomial {
    Rational coeff;
    Exps exps{};
};

bool operator==(const Monomial& a, const Monomial& b);

// half-integer stored doubled
struct Half {
    int twice;
    static constexpr Half of(int k) { return Half{2 * k}; }
    static constexpr Half halves(int k) { return Half{k}; }
};

// r^a s^b as u^{2a} v^{2b}
Monomial rs_monomial(Half a, Half b);

// Partial assignment of rational values to variables.
struct Assignment {
    std::array<std::optional<Rational>, kVars> value;

    Assignment& set(Var x, const Rational& q);
    bool has(Var x) const { return value[static_cast<int>(x)].has_value(); }
    bool empty() const;
    std::string str() const;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    LaurentPoly(const Rational& c);
    explicit LaurentPoly(const Monomial& m);

    static LaurentPoly var(Var x, int k = 1);

    // Terms in descending graded-lex order, no zero coefficients.
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Monomial& leading() const { return terms_.front(); }
    std::optional<Rational> constant_value() const;

    // bit k set iff variable k occurs with nonzero exponent
    unsigned var_mask() const;
    Exps min_exps() const;
    LaurentPoly shifted(const Exps& d) const;
    LaurentPoly scaled(const Rational& c) const;

    // Exact quotient in the Laurent ring, if the division is exact.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    LaurentPoly eval(const Assignment& a) const;
    // replace x by the monomial with exponent vector image
    LaurentPoly substitute(Var x, const Exps& image) const;

    std::string str() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    // sorts, merges equal exponents and drops zeros
    static LaurentPoly from_unsorted(std::vector<Monomial> t);

private:
    friend class RatFunc;
    std::vector<Monomial> terms_;
};

// Graded-lex order on exponent vectors; true if a sorts before b (a is "larger").
bool term_before(const Exps& a, const Exps& b);

class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
    RatFunc(const Monomial& m) : num_(m), den_(1) {}  // NOLINT
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc var(Var x, int k = 1) { return RatFunc(LaurentPoly::var(x, k)); }
    static RatFunc u() { return var(Var::u); }
    static RatFunc v() { return var(Var::v); }
    static RatFunc z() { return var(Var::z); }
    static RatFunc w() { return var(Var::w); }
    static RatFunc r() { return var(Var::u, 2); }
    static RatFunc s() { return var(Var::v, 2); }
    // u^a v^b
    static RatFunc uv(int a, int b);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::optional<Rational> constant_value() const;

    RatFunc inv() const;
    RatFunc eval(const Assignment& a) const;
    RatFunc substitute(Var x, const Exps& image) const;
    RatFunc pow(int k) const;

    std::string str() const;
    static RatFunc parse(std::string_view text);

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    // cross-multiplication equality
    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    struct Canonical {};
    RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

using Scalar = RatFunc;

bool rf_equal(const RatFunc& a, const RatFunc& b);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace rllforge
