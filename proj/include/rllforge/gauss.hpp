#pragma once

// Quasi-determinants and the Gauss decomposition L = F K E over an
// arbitrary associative unital ring.  A ring is described by RingOps<T>;
// instances exist for Rational, Scalar and k x k rational matrices.

#include "rllforge/errors.hpp"
#include "rllforge/report.hpp"
#include "rllforge/scalar.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace rllforge {

template <class T>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero_like(const Rational&) { return 0; }
    static Rational one_like(const Rational&) { return 1; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::optional<Rational> inverse(const Rational& x) {
        if (x == 0) return std::nullopt;
        return Rational(1) / x;
    }
    static std::string str(const Rational& x) { return to_string(x); }
};

template <>
struct RingOps<Scalar> {
    static Scalar zero_like(const Scalar&) { return 0; }
    static Scalar one_like(const Scalar&) { return 1; }
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
    static std::optional<Scalar> inverse(const Scalar& x) {
        if (x.is_zero()) return std::nullopt;
        return x.inv();
    }
    static std::string str(const Scalar& x) { return x.str(); }
};

// Dense k x k rational matrix, the noncommutative test ring.
struct MatElem {
    int k = 1;
    std::vector<Rational> a;  // row-major

    MatElem() : a(1) {}
    explicit MatElem(int size) : k(size), a(static_cast<std::size_t>(size) * size) {}
    static MatElem identity(int size);

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * k + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * k + j]; }

    friend MatElem operator+(const MatElem& x, const MatElem& y);
    friend MatElem operator-(const MatElem& x, const MatElem& y);
    friend MatElem operator*(const MatElem& x, const MatElem& y);
    friend MatElem operator-(const MatElem& x);
    friend bool operator==(const MatElem& x, const MatElem& y) { return x.k == y.k && x.a == y.a; }
};

template <>
struct RingOps<MatElem> {
    static MatElem zero_like(const MatElem& x) { return MatElem(x.k); }
    static MatElem one_like(const MatElem& x) { return MatElem::identity(x.k); }
    static bool is_zero(const MatElem& x);
    static std::optional<MatElem> inverse(const MatElem& x);
    static std::string str(const MatElem& x);
};

template <class T>
class RingMatrix {
public:
    // proto fixes the ring (e.g. the block size); entries start at zero
    RingMatrix(int size, const T& proto) : n_(size), e_(static_cast<std::size_t>(size) * size, RingOps<T>::zero_like(proto)) {
        if (size < 1) throw DimensionMismatch("ring matrix size must be >= 1");
    }
    static RingMatrix identity(int size, const T& proto) {
        RingMatrix m(size, proto);
        for (int i = 1; i <= size; ++i) m(i, i) = RingOps<T>::one_like(proto);
        return m;
    }

    int size() const { return n_; }
    // 1-based
    T& operator()(int i, int j) { return e_[index(i, j)]; }
    const T& operator()(int i, int j) const { return e_[index(i, j)]; }
    const T& proto() const { return e_.front(); }

    // rows and columns given as 1-based index lists
    RingMatrix sub(const std::vector<int>& rows, const std::vector<int>& cols) const {
        if (rows.size() != cols.size() || rows.empty()) throw DimensionMismatch("submatrix must be square and nonempty");
        RingMatrix out(static_cast<int>(rows.size()), proto());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                out(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = (*this)(rows[a], cols[b]);
        return out;
    }

    friend RingMatrix operator*(const RingMatrix& x, const RingMatrix& y) {
        if (x.n_ != y.n_) throw DimensionMismatch("ring matrix product");
        RingMatrix out(x.n_, x.proto());
        for (int i = 1; i <= x.n_; ++i)
            for (int k = 1; k <= x.n_; ++k) {
                if (RingOps<T>::is_zero(x(i, k))) continue;
                for (int j = 1; j <= x.n_; ++j) out(i, j) = out(i, j) + x(i, k) * y(k, j);
            }
        return out;
    }
    friend bool operator==(const RingMatrix& x, const RingMatrix& y) { return x.n_ == y.n_ && x.e_ == y.e_; }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw IndexOutOfRange("ring matrix index");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<T> e_;
};

template <class T>
T ring_inverse(const T& x, int pivot) {
    auto inv = RingOps<T>::inverse(x);
    if (!inv) throw MinorNotInvertible(pivot);
    return *inv;
}

// Gauss-Jordan in the ring, left multiplications only, no row exchanges.
// Throws MinorNotInvertible with the 1-based pivot that had no inverse.
template <class T>
RingMatrix<T> ring_inverse(const RingMatrix<T>& m) {
    const int n = m.size();
    RingMatrix<T> a = m;
    RingMatrix<T> b = RingMatrix<T>::identity(n, m.proto());
    for (int k = 1; k <= n; ++k) {
        T p = ring_inverse(a(k, k), k);
        for (int c = 1; c <= n; ++c) {
            a(k, c) = p * a(k, c);
            b(k, c) = p * b(k, c);
        }
        for (int i = 1; i <= n; ++i) {
            if (i == k || RingOps<T>::is_zero(a(i, k))) continue;
            T f = a(i, k);
            for (int c = 1; c <= n; ++c) {
                a(i, c) = a(i, c) - f * a(k, c);
                b(i, c) = b(i, c) - f * b(k, c);
            }
        }
    }
    return b;
}

// |X|_ij = x_ij - r (X^ij)^-1 c, factor order kept.
template <class T>
T quasidet(const RingMatrix<T>& x, int i, int j) {
    const int n = x.size();
    if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange("quasidet index");
    if (n == 1) return x(1, 1);
    std::vector<int> rows, cols;
    for (int a = 1; a <= n; ++a) {
        if (a != i) rows.push_back(a);
        if (a != j) cols.push_back(a);
    }
    RingMatrix<T> minv = ring_inverse(x.sub(rows, cols));
    T out = x(i, j);
    for (int a = 1; a < n; ++a) {
        T left = RingOps<T>::zero_like(x.proto());
        for (int b = 1; b < n; ++b) left = left + minv(a, b) * x(rows[b - 1], j);
        out = out - x(i, cols[a - 1]) * left;
    }
    return out;
}

template <class T>
struct GaussFactors {
    RingMatrix<T> F, K, E;
};

template <class T>
GaussFactors<T> gauss_decompose(const RingMatrix<T>& l) {
    const int n = l.size();
    const T& proto = l.proto();
    GaussFactors<T> g{RingMatrix<T>::identity(n, proto), RingMatrix<T>(n, proto), RingMatrix<T>::identity(n, proto)};
    std::vector<T> kinv;
    for (int m = 1; m <= n; ++m) {
        std::vector<int> lead;
        for (int a = 1; a <= m; ++a) lead.push_back(a);
        g.K(m, m) = quasidet(l.sub(lead, lead), m, m);
        kinv.push_back(ring_inverse(g.K(m, m), m));
    }
    for (int i = 1; i < n; ++i) {
        std::vector<int> head;
        for (int a = 1; a < i; ++a) head.push_back(a);
        std::vector<int> corner = head;
        corner.push_back(i);
        for (int j = i + 1; j <= n; ++j) {
            // corner with its last column (resp. row) replaced by j
            std::vector<int> last = head;
            last.push_back(j);
            g.E(i, j) = kinv[i - 1] * quasidet(l.sub(corner, last), i, i);
            g.F(j, i) = quasidet(l.sub(last, corner), i, i) * kinv[i - 1];
        }
    }
    return g;
}

template <class T>
std::optional<std::pair<int, int>> first_difference(const RingMatrix<T>& x, const RingMatrix<T>& y) {
    for (int i = 1; i <= x.size(); ++i)
        for (int j = 1; j <= x.size(); ++j)
            if (!(x(i, j) == y(i, j))) return std::make_pair(i, j);
    return std::nullopt;
}

// Shapes, F K E = L, and uniqueness by decomposing F K E again.
template <class T>
CheckReport verify_triangular_roundtrip(const RingMatrix<T>& l) {
    CheckReport rep;
    rep.name = "gauss";
    rep.n = l.size();
    rep.anchor = "unique decomposition L = F K E";
    const T zero = RingOps<T>::zero_like(l.proto());
    const T one = RingOps<T>::one_like(l.proto());
    auto where = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    std::optional<GaussFactors<T>> decomposed;
    try {
        decomposed = gauss_decompose(l);
    } catch (const MinorNotInvertible& e) {
        CheckItem it("decomposition exists");
        it.status = Status::fail;
        it.residual = "pivot " + std::to_string(e.pivot);
        rep.add(it);
        rep.finalize();
        return rep;
    }
    const GaussFactors<T>& g = *decomposed;
    auto shape = [&](const std::string& id, const RingMatrix<T>& m, auto expected) {
        CheckItem it(id);
        for (int i = 1; i <= m.size() && it.status == Status::pass; ++i)
            for (int j = 1; j <= m.size(); ++j) {
                auto want = expected(i, j);
                if (want && !(m(i, j) == *want)) {
                    it.status = Status::fail;
                    it.residual = where(i, j) + ": " + RingOps<T>::str(m(i, j));
                    break;
                }
            }
        rep.add(it);
    };
    shape("F unit lower triangular", g.F, [&](int i, int j) -> std::optional<T> {
        if (i == j) return one;
        if (i < j) return zero;
        return std::nullopt;
    });
    shape("E unit upper triangular", g.E, [&](int i, int j) -> std::optional<T> {
        if (i == j) return one;
        if (i > j) return zero;
        return std::nullopt;
    });
    shape("K diagonal", g.K, [&](int i, int j) -> std::optional<T> {
        if (i != j) return zero;
        return std::nullopt;
    });
    CheckItem inv("K entries invertible");
    for (int m = 1; m <= l.size(); ++m)
        if (!RingOps<T>::inverse(g.K(m, m))) {
            inv.status = Status::fail;
            inv.residual = "k" + std::to_string(m);
            break;
        }
    rep.add(inv);
    RingMatrix<T> prod = g.F * g.K * g.E;
    CheckItem pr("F K E = L");
    if (auto d = first_difference(prod, l)) {
        pr.status = Status::fail;
        pr.residual = where(d->first, d->second) + ": " + RingOps<T>::str(prod(d->first, d->second)) + " vs " +
                      RingOps<T>::str(l(d->first, d->second));
    }
    rep.add(pr);
    CheckItem un("decompose(F K E) = (F, K, E)");
    try {
        GaussFactors<T> again = gauss_decompose(prod);
        const char* names[] = {"F", "K", "E"};
        const RingMatrix<T>* mine[] = {&g.F, &g.K, &g.E};
        const RingMatrix<T>* theirs[] = {&again.F, &again.K, &again.E};
        for (int t = 0; t < 3; ++t)
            if (auto d = first_difference(*mine[t], *theirs[t])) {
                un.status = Status::fail;
                un.residual = std::string(names[t]) + where(d->first, d->second);
                break;
            }
    } catch (const MinorNotInvertible& e) {
        un.status = Status::fail;
        un.residual = e.what();
    }
    rep.add(un);
    rep.finalize();
    return rep;
}

// Independent oracle for the matrix ring: flatten blocks into one rational
// matrix.  Inversion with partial pivoting; nullopt when singular.
std::vector<std::vector<Rational>> flatten(const RingMatrix<MatElem>& x);
std::optional<std::vector<std::vector<Rational>>> dense_inverse(std::vector<std::vector<Rational>> a);
Rational dense_det(std::vector<std::vector<Rational>> a);
std::vector<std::vector<Rational>> to_dense(const RingMatrix<Rational>& x);

// Small-height random entries; k = 0 means the rational ring.
class GaussSampler {
public:
    explicit GaussSampler(std::uint64_t seed) : rng_(seed) {}
    Rational rational();
    RingMatrix<Rational> rational_matrix(int size);
    RingMatrix<MatElem> block_matrix(int size, int k);

private:
    std::mt19937_64 rng_;
};

// Round-trips on `cases` random rational matrices of size 1..6 plus a few
// block matrices, and the quasi-determinant/inverse identity on
// `identity_cases` instances split between both rings.
CheckReport check_gauss(std::uint64_t seed, int cases = 100, int identity_cases = 50);

}  // namespace rllforge
