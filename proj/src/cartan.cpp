#include "rllforge/cartan.hpp"

#include "rllforge/errors.hpp"

#include <string>

namespace rllforge {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi)
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside " + std::to_string(lo) +
                              ".." + std::to_string(hi));
}

}  // namespace

WeightVector WeightVector::epsilon(int i, int n) {
    check_index(i, 1, n, "epsilon");
    WeightVector w{std::vector<int>(static_cast<std::size_t>(n), 0)};
    w.twice[static_cast<std::size_t>(i - 1)] = 2;
    return w;
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    if (a.rank() != b.rank()) throw RankMismatch("weight ranks differ");
    WeightVector c = a;
    for (std::size_t k = 0; k < c.twice.size(); ++k) c.twice[k] += b.twice[k];
    return c;
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    if (a.rank() != b.rank()) throw RankMismatch("weight ranks differ");
    WeightVector c = a;
    for (std::size_t k = 0; k < c.twice.size(); ++k) c.twice[k] -= b.twice[k];
    return c;
}

Rational inner_product(const WeightVector& a, const WeightVector& b) {
    if (a.rank() != b.rank()) throw RankMismatch("weight ranks differ");
    long acc = 0;
    for (std::size_t k = 0; k < a.twice.size(); ++k) acc += static_cast<long>(a.twice[k]) * b.twice[k];
    Rational q(acc, 4);
    q.canonicalize();
    return q;
}

RootDataD::RootDataD(int n) : n_(n) {
    if (n < 2) throw RankUnsupported("type D needs rank >= 2");
    for (int i = 1; i < n; ++i) alpha_.push_back(WeightVector::epsilon(i, n) - WeightVector::epsilon(i + 1, n));
    alpha_.push_back(WeightVector::epsilon(n - 1, n) + WeightVector::epsilon(n, n));
}

const WeightVector& RootDataD::simple_root(int i) const {
    check_index(i, 1, n_, "simple root");
    return alpha_[static_cast<std::size_t>(i - 1)];
}

std::vector<std::vector<int>> RootDataD::cartan_matrix() const {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            a[i - 1][j - 1] = static_cast<int>(inner_product(simple_root(i), simple_root(j)).get_num().get_si());
    return a;
}

std::pair<int, int> pairing_exponents(int i, int j, int n) {
    if (n < 3) throw RankUnsupported("structure-constant table is ambiguous for n = 2");
    check_index(i, 1, n, "pairing");
    check_index(j, 1, n, "pairing");
    if (i == j) return {1, -1};
    // the fork: nodes n-2, n-1, n
    if (i == n - 1 && j == n) return {-1, -1};
    if (i == n && j == n - 1) return {1, 1};
    if (i == n - 2 && j == n) return {-1, 0};
    if (i == n && j == n - 2) return {0, 1};
    if (j == i + 1 && i <= n - 2) return {-1, 0};
    if (i == j + 1 && j <= n - 2) return {0, 1};
    return {0, 0};
}

Scalar pairing(int i, int j, int n) {
    auto [a, b] = pairing_exponents(i, j, n);
    return RatFunc(rs_monomial(Half::of(a), Half::of(b)));
}

int rho(int i, int n) {
    check_index(i, 1, 2 * n, "rho");
    if (i <= n) return n - i;
    if (i == n + 1) return 0;
    return n - i + 1;
}

std::vector<int> beta_alpha_coords(int i, int n) {
    check_index(i, 1, n, "beta");
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    if (i < n) {
        for (int k = i; k <= n - 2; ++k) c[k - 1] = 2;
        c[n - 2] += 1;
        c[n - 1] += 1;
    } else {
        c[n - 1] = 1;
        c[n - 2] = -1;
    }
    return c;
}

WeightVector beta_weight(int i, int n) {
    RootDataD rd(n);
    auto c = beta_alpha_coords(i, n);
    WeightVector w{std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int k = 1; k <= n; ++k)
        for (int p = 0; p < n; ++p) w.twice[p] += c[k - 1] * rd.simple_root(k).twice[p];
    // c was doubled, so halve once
    for (auto& x : w.twice) x /= 2;
    return w;
}

Scalar g_series(int i, int j, int sign, int n) {
    if (sign != 1 && sign != -1) throw InvalidOption("g-series sign must be +1 or -1");
    auto [pa, pb] = pairing_exponents(j, i, n);  // <w'_j, w_i>
    auto [qa, qb] = pairing_exponents(i, j, n);  // <w'_i, w_j>
    // (r^a s^b)^{1/2} = u^a v^b
    Scalar z = RatFunc::z();
    Scalar num = RatFunc::uv(2 * sign * pa, 2 * sign * pb) * z - RatFunc::uv(sign * (pa - qa), sign * (pb - qb));
    Scalar den = z - RatFunc::uv(sign * (pa + qa), sign * (pb + qb));
    return num / den;
}

}  // namespace rllforge
