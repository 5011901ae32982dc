#include "rllforge/errors.hpp"
#include "rllforge/matrix.hpp"
#include "rllforge/report.hpp"
#include "rllforge/rmat.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rllforge;

TEST_CASE("basis units") {
    const SparseMatrix e12 = basis_unit(4, 1, 2);
    CHECK(e12.nnz() == 1);
    CHECK(e12.at(0, 1) == Scalar(1));
    CHECK(basis_unit(4, 3, 3) * Vector::unit(4, 3) == Vector::unit(4, 3));
    CHECK((e12 * Vector::unit(4, 1)).is_zero());
    CHECK(e12 * Vector::unit(4, 2) == Vector::unit(4, 1));
    CHECK_THROWS_AS(basis_unit(4, 5, 1), IndexOutOfRange);
    CHECK_THROWS_AS(basis_unit(4, 0, 1), IndexOutOfRange);
}

TEST_CASE("matrix operations") {
    std::mt19937_64 g(21);
    const SparseMatrix x = rlltest::random_rational_matrix(g, 4);
    CHECK(SparseMatrix::identity(4) * x == x);
    const SparseMatrix d1 = SparseMatrix::diagonal({RatFunc::u(), 2, RatFunc::v(), 3});
    const SparseMatrix d2 = SparseMatrix::diagonal({RatFunc::z(), RatFunc::r(), 5, RatFunc::s()});
    CHECK(commutator(d1, d2).is_zero());
    CHECK(basis_unit(3, 1, 2) * basis_unit(3, 2, 3) == basis_unit(3, 1, 3));
    CHECK_THROWS_AS(SparseMatrix(3) * SparseMatrix(4), DimensionMismatch);
    CHECK_THROWS_AS(SparseMatrix(3) + SparseMatrix(4), DimensionMismatch);
    CHECK((RatFunc::u() * basis_unit(2, 1, 1)).at(0, 0) == RatFunc::u());
}

TEST_CASE("kron index convention") {
    CHECK(kron(SparseMatrix::identity(2), SparseMatrix::identity(3)) == SparseMatrix::identity(6));
    const SparseMatrix k = kron(basis_unit(2, 1, 2), basis_unit(2, 2, 1));
    CHECK(k.nnz() == 1);
    CHECK(k == basis_unit(4, 2, 3));
}

TEST_CASE("kron laws on random matrices") {
    std::mt19937_64 g(22);
    for (int t = 0; t < 5; ++t) {
        const SparseMatrix a = rlltest::random_rational_matrix(g, 3), b = rlltest::random_rational_matrix(g, 3),
                           c = rlltest::random_rational_matrix(g, 3), d = rlltest::random_rational_matrix(g, 3);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
        CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
        const SparseMatrix P = permutation_op(3);
        CHECK(P * kron(a, b) * P == kron(b, a));
    }
}

TEST_CASE("flip operator") {
    for (std::size_t d : {1u, 2u, 4u}) CHECK(permutation_op(d) * permutation_op(d) == SparseMatrix::identity(d * d));
    CHECK(permutation_op(4) * tensor_unit(4, 1, 2) == tensor_unit(4, 2, 1));
}

TEST_CASE("exact rank") {
    CHECK(nullspace_rank(SparseMatrix::identity(16)) == 16);
    CHECK(nullspace_rank(SparseMatrix(5)) == 0);
    // at u=2, v=3 the r^{3/2}s^{-3/2}-eigenspace of R is one-dimensional
    const Assignment p = rlltest::point(2, 3);
    const SparseMatrix R = build_R_basic(2).matrix.eval(p);
    const Scalar lam = RatFunc::uv(3, -3).eval(p);
    CHECK(nullspace_rank(R - lam * SparseMatrix::identity(16)) == 15);
    CHECK_THROWS_AS(nullspace_rank(RatFunc::u() * SparseMatrix::identity(2) + RatFunc::v() * basis_unit(2, 1, 2)),
                    BackendUnsupported);
}

TEST_CASE("rank plus nullity equals dimension") {
    std::mt19937_64 g(23);
    for (int t = 0; t < 8; ++t) {
        SparseMatrix m = rlltest::random_rational_matrix(g, 6);
        // force a dependency now and then
        if (t % 2 == 0)
            for (std::size_t j = 0; j < 6; ++j) m.set(5, j, m.at(0, j) + m.at(1, j));
        const std::size_t rank = nullspace_rank(m);
        const std::size_t nullity = nullspace_basis(m).size();
        CHECK(rank + nullity == 6);
        if (t % 2 == 0) CHECK(rank <= 5);
    }
}

TEST_CASE("minimal polynomial verification") {
    const SparseMatrix I = SparseMatrix::identity(4);
    CHECK(minpoly_verify(I, {Scalar(1)}).status == Status::pass);
    const CheckReport two = minpoly_verify(I, {Scalar(1), Scalar(2)});
    CHECK(two.status == Status::fail);
    const auto roots = minpoly_roots(3);
    const CheckReport r3 = minpoly_verify(build_R_basic(3).matrix, {roots.begin(), roots.end()});
    CHECK(r3.status == Status::pass);
    // every proper sub-product carries a witness
    std::size_t witnessed = 0;
    for (const auto& it : r3.items)
        if (it.id.rfind("sub-product", 0) == 0) {
            CHECK(it.note.rfind("witness v", 0) == 0);
            ++witnessed;
        }
    CHECK(witnessed == 6);
}
