#include "rllforge/gauss.hpp"

#include <sstream>
#include <type_traits>

namespace rllforge {

MatElem MatElem::identity(int size) {
    MatElem m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

void same_size(const MatElem& x, const MatElem& y) {
    if (x.k != y.k) throw DimensionMismatch("matrix ring elements of different sizes");
}

using Dense = std::vector<std::vector<Rational>>;

Dense dense_of(const MatElem& x) {
    Dense d(x.k, std::vector<Rational>(x.k));
    for (int i = 0; i < x.k; ++i)
        for (int j = 0; j < x.k; ++j) d[i][j] = x.at(i, j);
    return d;
}

}  // namespace

MatElem operator+(const MatElem& x, const MatElem& y) {
    same_size(x, y);
    MatElem out(x.k);
    for (std::size_t t = 0; t < x.a.size(); ++t) out.a[t] = x.a[t] + y.a[t];
    return out;
}

MatElem operator-(const MatElem& x, const MatElem& y) {
    same_size(x, y);
    MatElem out(x.k);
    for (std::size_t t = 0; t < x.a.size(); ++t) out.a[t] = x.a[t] - y.a[t];
    return out;
}

MatElem operator-(const MatElem& x) {
    MatElem out(x.k);
    for (std::size_t t = 0; t < x.a.size(); ++t) out.a[t] = -x.a[t];
    return out;
}

MatElem operator*(const MatElem& x, const MatElem& y) {
    same_size(x, y);
    MatElem out(x.k);
    for (int i = 0; i < x.k; ++i)
        for (int m = 0; m < x.k; ++m) {
            if (x.at(i, m) == 0) continue;
            for (int j = 0; j < x.k; ++j) out.at(i, j) += x.at(i, m) * y.at(m, j);
        }
    return out;
}

bool RingOps<MatElem>::is_zero(const MatElem& x) {
    for (const auto& q : x.a)
        if (q != 0) return false;
    return true;
}

std::optional<MatElem> RingOps<MatElem>::inverse(const MatElem& x) {
    auto d = dense_inverse(dense_of(x));
    if (!d) return std::nullopt;
    MatElem out(x.k);
    for (int i = 0; i < x.k; ++i)
        for (int j = 0; j < x.k; ++j) out.at(i, j) = (*d)[i][j];
    return out;
}

std::string RingOps<MatElem>::str(const MatElem& x) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < x.k; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < x.k; ++j) os << (j ? "," : "") << to_string(x.at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<Rational>> flatten(const RingMatrix<MatElem>& x) {
    const int k = x.proto().k;
    const int n = x.size();
    Dense d(n * k, std::vector<Rational>(n * k));
    for (int bi = 1; bi <= n; ++bi)
        for (int bj = 1; bj <= n; ++bj)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) d[(bi - 1) * k + i][(bj - 1) * k + j] = x(bi, bj).at(i, j);
    return d;
}

std::vector<std::vector<Rational>> to_dense(const RingMatrix<Rational>& x) {
    Dense d(x.size(), std::vector<Rational>(x.size()));
    for (int i = 1; i <= x.size(); ++i)
        for (int j = 1; j <= x.size(); ++j) d[i - 1][j - 1] = x(i, j);
    return d;
}

std::optional<std::vector<std::vector<Rational>>> dense_inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Dense b(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        Rational inv = Rational(1) / a[k][k];
        for (std::size_t c = 0; c < n; ++c) {
            a[k][c] *= inv;
            b[k][c] *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t c = 0; c < n; ++c) {
                a[i][c] -= f * a[k][c];
                b[i][c] -= f * b[k][c];
            }
        }
    }
    return b;
}

Rational dense_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
        }
    }
    return det;
}

Rational GaussSampler::rational() {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
}

RingMatrix<Rational> GaussSampler::rational_matrix(int size) {
    RingMatrix<Rational> m(size, Rational(0));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) m(i, j) = rational();
    return m;
}

RingMatrix<MatElem> GaussSampler::block_matrix(int size, int k) {
    RingMatrix<MatElem> m(size, MatElem(k));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j)
            for (auto& q : m(i, j).a) q = rational();
    return m;
}

namespace {

std::string shape_name(int n, int k) {
    std::string s = std::to_string(n) + "x" + std::to_string(n);
    return k == 0 ? s + " rational" : s + " over " + std::to_string(k) + "x" + std::to_string(k) + " matrices";
}

CheckItem fold(std::string id, const CheckReport& sub) {
    CheckItem it(std::move(id));
    it.status = sub.status;
    it.residual = sub.residual;
    return it;
}

Dense block_of(const Dense& inv, int bi, int bj, int k) {
    Dense d(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d[i][j] = inv[(bi - 1) * k + i][(bj - 1) * k + j];
    return d;
}

template <class T>
bool decomposable(const RingMatrix<T>& m) {
    try {
        gauss_decompose(m);
        return true;
    } catch (const MinorNotInvertible&) {
        return false;
    }
}

// Compares |X|_ij with ((X^-1)_ji)^-1 for every (i, j).  Returns false when
// the instance is outside the identity's domain and must be redrawn.
template <class T>
bool inverse_identity(const RingMatrix<T>& x, const Dense& flat, int k, CheckItem& it) {
    auto inv = dense_inverse(flat);
    if (!inv) return false;
    const int n = x.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            T q;
            try {
                q = quasidet(x, i, j);
            } catch (const MinorNotInvertible&) {
                return false;
            }
            auto blk = dense_inverse(block_of(*inv, j, i, k));
            if (!blk) return false;
            bool same = true;
            if constexpr (std::is_same_v<T, Rational>) {
                same = q == (*blk)[0][0];
            } else {
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) same = same && q.at(a, b) == (*blk)[a][b];
            }
            if (!same && it.status == Status::pass) {
                it.status = Status::fail;
                it.residual = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + RingOps<T>::str(q);
            }
        }
    return true;
}

}  // namespace

CheckReport check_gauss(std::uint64_t seed, int cases, int identity_cases) {
    if (cases < 0 || identity_cases < 0) throw InvalidOption("case counts must be nonnegative");
    Stopwatch sw;
    CheckReport rep;
    rep.name = "gauss";
    rep.backend = "sampled";
    rep.seed = seed;
    rep.anchor = "unique decomposition L = F K E; |X|_ij = x_ij - r (X^ij)^-1 c";
    GaussSampler g(seed);
    int redrawn = 0;

    for (int c = 0; c < cases; ++c) {
        const int size = 1 + c % 6;
        RingMatrix<Rational> m = g.rational_matrix(size);
        while (dense_det(to_dense(m)) == 0 || !decomposable(m)) {
            ++redrawn;
            m = g.rational_matrix(size);
        }
        rep.add(fold("roundtrip " + shape_name(size, 0) + " #" + std::to_string(c + 1), verify_triangular_roundtrip(m)));
    }
    // noncommutative round-trips, one per ten rational cases
    for (int c = 0; c < (cases + 9) / 10; ++c) {
        const int size = 2 + c % 3;
        RingMatrix<MatElem> m = g.block_matrix(size, 2);
        while (!dense_inverse(flatten(m)) || !decomposable(m)) {
            ++redrawn;
            m = g.block_matrix(size, 2);
        }
        rep.add(fold("roundtrip " + shape_name(size, 2) + " #" + std::to_string(c + 1), verify_triangular_roundtrip(m)));
    }

    for (int c = 0; c < identity_cases; ++c) {
        const bool block = c % 2 == 1;
        const int size = block ? 2 + (c / 2) % 2 : 2 + (c / 2) % 4;
        const std::string tag = shape_name(size, block ? 2 : 0) + " #" + std::to_string(c + 1);
        CheckItem it("quasidet vs inverse " + tag);
        if (block) {
            for (;;) {
                RingMatrix<MatElem> x = g.block_matrix(size, 2);
                it.status = Status::pass;
                it.residual = "0";
                if (inverse_identity(x, flatten(x), 2, it)) break;
                ++redrawn;
            }
            rep.add(it);
            continue;
        }
        RingMatrix<Rational> x(size, Rational(0));
        for (;;) {
            x = g.rational_matrix(size);
            it.status = Status::pass;
            it.residual = "0";
            if (inverse_identity(x, to_dense(x), 1, it)) break;
            ++redrawn;
        }
        rep.add(it);
        // commutative consistency with determinant ratios
        CheckItem dr("det ratio " + tag);
        const Rational det = dense_det(to_dense(x));
        for (int i = 1; i <= size && dr.status == Status::pass; ++i)
            for (int j = 1; j <= size; ++j) {
                std::vector<int> rows, cols;
                for (int a = 1; a <= size; ++a) {
                    if (a != i) rows.push_back(a);
                    if (a != j) cols.push_back(a);
                }
                Rational expect = det / dense_det(to_dense(x.sub(rows, cols)));
                if ((i + j) % 2 == 1) expect = -expect;
                Rational q = quasidet(x, i, j);
                if (q != expect) {
                    dr.status = Status::fail;
                    dr.residual = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(q) + " vs " +
                                  to_string(expect);
                    break;
                }
            }
        rep.add(dr);
    }
    rep.extra["redrawn"] = redrawn;
    rep.finalize();
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace rllforge
