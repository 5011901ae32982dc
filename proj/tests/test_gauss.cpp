#include "rllforge/errors.hpp"
#include "rllforge/gauss.hpp"

#include <doctest.h>

using namespace rllforge;

namespace {

RingMatrix<Rational> rational(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    RingMatrix<Rational> m(n, Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = rows[i - 1][j - 1];
    return m;
}

MatElem elem(int a, int b, int c, int d) {
    MatElem x(2);
    x.at(0, 0) = a;
    x.at(0, 1) = b;
    x.at(1, 0) = c;
    x.at(1, 1) = d;
    return x;
}

std::vector<int> all_but(int n, int k) {
    std::vector<int> out;
    for (int a = 1; a <= n; ++a)
        if (a != k) out.push_back(a);
    return out;
}

}  // namespace

TEST_CASE("quasi-determinant small cases") {
    CHECK(quasidet(rational({{7}}), 1, 1) == 7);
    RingMatrix<Scalar> x(2, Scalar(0));
    x(1, 1) = RatFunc::u();
    x(1, 2) = RatFunc::v();
    x(2, 1) = RatFunc::z();
    x(2, 2) = RatFunc::w();
    CHECK(quasidet(x, 2, 2) == RatFunc::w() - RatFunc::z() * RatFunc::u().inv() * RatFunc::v());
    CHECK(quasidet(x, 1, 2) == RatFunc::v() - RatFunc::u() * RatFunc::z().inv() * RatFunc::w());
    CHECK_THROWS_AS(quasidet(rational({{0, 1}, {1, 0}}), 2, 2), MinorNotInvertible);
    CHECK_THROWS_AS(quasidet(rational({{1}}), 2, 1), IndexOutOfRange);
    CHECK_THROWS_AS(RingMatrix<Rational>(0, Rational(0)), DimensionMismatch);
}

TEST_CASE("matrix entries do not commute") {
    const MatElem a = elem(1, 1, 0, 1), b = elem(1, 0, 1, 1);
    CHECK_FALSE(a * b == b * a);
    CHECK(RingOps<MatElem>::inverse(a).value() * a == MatElem::identity(2));
    CHECK_FALSE(RingOps<MatElem>::inverse(elem(1, 2, 2, 4)));
}

TEST_CASE("decomposition of the identity") {
    const auto I = RingMatrix<Rational>::identity(4, Rational(0));
    const GaussFactors<Rational> g = gauss_decompose(I);
    CHECK(g.F == I);
    CHECK(g.K == I);
    CHECK(g.E == I);
}

TEST_CASE("2 x 2 factor formulas") {
    const auto l = rational({{3, 5}, {2, 7}});
    const GaussFactors<Rational> g = gauss_decompose(l);
    CHECK(g.K(1, 1) == 3);
    CHECK(g.E(1, 2) == Rational(5, 3));
    CHECK(g.F(2, 1) == Rational(2, 3));
    CHECK(g.K(2, 2) == 7 - Rational(2, 3) * 5);
    // the same formulas keep their factor order over a noncommutative ring
    RingMatrix<MatElem> m(2, MatElem(2));
    m(1, 1) = elem(1, 1, 0, 1);
    m(1, 2) = elem(2, 0, 1, 1);
    m(2, 1) = elem(0, 1, 1, 3);
    m(2, 2) = elem(4, 1, 1, 3);
    const GaussFactors<MatElem> h = gauss_decompose(m);
    const MatElem inv = RingOps<MatElem>::inverse(m(1, 1)).value();
    CHECK(h.E(1, 2) == inv * m(1, 2));
    CHECK(h.F(2, 1) == m(2, 1) * inv);
    CHECK(h.K(2, 2) == m(2, 2) - m(2, 1) * inv * m(1, 2));
}

TEST_CASE("round trips") {
    GaussSampler g(31);
    int checked = 0;
    while (checked < 100) {
        const auto l = g.rational_matrix(4);
        const CheckReport rep = verify_triangular_roundtrip(l);
        if (rep.items.size() == 1) continue;  // a leading minor vanished; draw again
        CHECK(rep.status == Status::pass);
        ++checked;
    }
    const auto five = g.rational_matrix(5);
    const CheckReport rep5 = verify_triangular_roundtrip(five);
    if (rep5.items.size() > 1) {
        const GaussFactors<Rational> f = gauss_decompose(five);
        CHECK(f.F * f.K * f.E == five);
    }
    int blocks = 0;
    while (blocks < 5) {
        const auto b = g.block_matrix(3, 2);
        const CheckReport rep = verify_triangular_roundtrip(b);
        if (rep.items.size() == 1) continue;
        CHECK(rep.status == Status::pass);
        ++blocks;
    }
}

TEST_CASE("a vanishing corner is reported at its pivot") {
    const CheckReport rep = verify_triangular_roundtrip(rational({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}));
    REQUIRE(rep.items.size() == 1);
    CHECK(rep.items[0].id == "decomposition exists");
    CHECK(rep.status == Status::fail);
    CHECK(rep.items[0].residual == "pivot 1");
    try {
        gauss_decompose(rational({{1, 2}, {2, 4}}));
        FAIL("expected MinorNotInvertible");
    } catch (const MinorNotInvertible& e) {
        CHECK(e.pivot == 2);
    }
}

TEST_CASE("quasi-determinants against inverses and determinants") {
    GaussSampler g(32);
    int done = 0;
    while (done < 20) {
        const auto x = g.rational_matrix(4);
        const auto dense = to_dense(x);
        const auto inv = dense_inverse(dense);
        if (!inv) continue;
        const Rational det = dense_det(dense);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                const Rational cell = (*inv)[j - 1][i - 1];
                const Rational minor = dense_det(to_dense(x.sub(all_but(4, i), all_but(4, j))));
                if (cell == 0 || minor == 0) continue;
                Rational q;
                try {
                    q = quasidet(x, i, j);
                } catch (const MinorNotInvertible&) {
                    continue;  // elimination without row swaps met a zero pivot inside the minor
                }
                CHECK(q == 1 / cell);
                CHECK(q == ((i + j) % 2 ? -1 : 1) * det / minor);
            }
        ++done;
    }
}

TEST_CASE("battery is deterministic and passes") {
    const CheckReport a = check_gauss(5, 30, 10);
    const CheckReport b = check_gauss(5, 30, 10);
    CHECK(a.status == Status::pass);
    CHECK(a.to_json().dump() == b.to_json().dump());
}
