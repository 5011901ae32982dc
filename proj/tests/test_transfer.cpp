#include "rllforge/dump.hpp"
#include "rllforge/errors.hpp"
#include "rllforge/transfer.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rllforge;

namespace {

Scalar trace(const SparseMatrix& m) {
    Scalar t = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) t = t + m.at(i, i);
    return t;
}

ChainSpec chain(int n, int sites) {
    ChainSpec c;
    c.n = n;
    c.sites = sites;
    return c;
}

const Backend desk = Backend::sampled(rlltest::point(2, 3));

}  // namespace

TEST_CASE("chain dimensions and limits") {
    CHECK(chain_dim(chain(2, 2)) == 64);
    CHECK(chain_dim(chain(3, 1)) == 36);
    CHECK_THROWS_AS(chain_dim(chain(2, 6)), CapExceeded);
    CHECK_THROWS_AS(chain_dim(chain(2, 0)), InvalidOption);
    CHECK_THROWS_AS(chain_dim(chain(1, 1)), RankUnsupported);
    ChainSpec big = chain(2, 6);
    big.cap = 20000;
    CHECK(chain_dim(big) == 16384);
}

TEST_CASE("monodromy") {
    const ChainSpec one = chain(2, 1);
    CHECK(monodromy(one, desk, 5) == lax_at(one, desk, 5));
    const SparseMatrix m = monodromy(chain(2, 2), desk, 5);
    CHECK(m.dim() == 64);
    CHECK(nullspace_rank(m) == 64);
}

TEST_CASE("transfer matrices") {
    const ChainSpec one = chain(2, 1);
    const SparseMatrix lax = lax_at(one, desk, 5);
    const SparseMatrix t = transfer_trace(one, desk, 5);
    CHECK(t.dim() == 4);
    CHECK(trace(t) == trace(lax));
    // tr_0(I (x) X) = 2n X
    const ChainSpec two = chain(2, 2);
    const SparseMatrix id = SparseMatrix::identity(16);
    CHECK(transfer_of(two, id) == Scalar(4) * SparseMatrix::identity(16));
    const SparseMatrix a = transfer_trace(two, desk, 5), b = transfer_trace(two, desk, 5);
    CHECK(a.dim() == 16);
    CHECK(dump_matrix_text(a) == dump_matrix_text(b));
}

TEST_CASE("transfer matrices commute") {
    CHECK(check_commuting(chain(2, 2), desk, 5, 7).status == Status::pass);
    CHECK(check_commuting(chain(2, 2), desk, 5, 5).status == Status::pass);
    CHECK(check_commuting(chain(2, 3), desk, 5, 7).status == Status::pass);
    const CheckReport rep = check_transfer(chain(2, 2), 3, 3);
    CHECK(rep.status == Status::pass);
    CHECK(rep.extra["sites"] == 2);
}

TEST_CASE("plain R(z) as Lax operator stops commuting at three sites") {
    ChainSpec plain = chain(2, 2);
    plain.variant = Variant::plain;
    CHECK(check_commuting(plain, desk, 5, 7).status == Status::pass);
    plain.sites = 3;
    CHECK(check_commuting(plain, desk, 5, 7).status == Status::fail);
}
