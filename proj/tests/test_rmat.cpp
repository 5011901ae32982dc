#include "rllforge/errors.hpp"
#include "rllforge/repr.hpp"
#include "rllforge/rmat.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace rllforge;

namespace {

const Scalar r = RatFunc::r(), s = RatFunc::s(), z = RatFunc::z();

// coefficient of E_ij (x) E_kl, 1-based
Scalar coeff(const SparseMatrix& m, int n, int i, int j, int k, int l) {
    const std::size_t N = 2 * n;
    return m.at((i - 1) * N + (k - 1), (j - 1) * N + (l - 1));
}

const CheckItem* find_item(const CheckReport& rep, const std::string& id) {
    for (const auto& it : rep.items)
        if (it.id == id) return &it;
    return nullptr;
}

}  // namespace

TEST_CASE("basic R entries and eigenvectors") {
    for (int n : {2, 3}) {
        const SparseMatrix R = build_R_basic(n).matrix;
        CHECK(coeff(R, n, 1, 1, 1, 1) == RatFunc::uv(-1, 1));
        CHECK(build_Rhat_basic(n) == permutation_op(2 * n) * R);
    }
    const SparseMatrix R = build_R_basic(3).matrix;
    const Vector x = tensor_unit(6, 1, 2) - r * tensor_unit(6, 2, 1);
    CHECK(R * x == -RatFunc::uv(1, -1) * x);
    Vector s0(36);
    for (int i = 1; i <= 6; ++i) s0 = s0 + s0_coefficient(i, 3) * tensor_unit(6, prime(i, 3), i);
    CHECK(R * s0 == RatFunc::uv(5, -5) * s0);
    CHECK_THROWS_AS(build_R_basic(1), RankUnsupported);
}

TEST_CASE("braid and qybe forms") {
    const CheckReport two = check_braid(2);
    CHECK(two.status == Status::pass);
    const CheckItem* braid = find_item(two, "R braid: R1 R2 R1 = R2 R1 R2");
    const CheckItem* qybe = find_item(two, "P R qybe: R12 R13 R23 = R23 R13 R12");
    REQUIRE(braid);
    REQUIRE(qybe);
    CHECK(braid->status == Status::pass);
    CHECK(qybe->status == Status::pass);
    CHECK(check_braid(3, Backend::sampled(rlltest::point(2, 3))).status == Status::pass);
    Sampler sampler(3);
    for (int k = 0; k < 3; ++k) CHECK(check_braid(4, Backend::sampled(sampler.next())).status == Status::pass);
}

TEST_CASE("minimal polynomial") {
    CHECK(minpoly_roots(2)[2] == RatFunc::uv(3, -3));
    CHECK(minpoly_roots(3)[2] == RatFunc::uv(5, -5));
    for (int n : {2, 3}) CHECK(check_minpoly(n).status == Status::pass);
    // dropping any root leaves a nonzero product
    const auto roots = minpoly_roots(2);
    const SparseMatrix R = build_R_basic(2).matrix;
    const SparseMatrix I = SparseMatrix::identity(16);
    CHECK_FALSE(((R - roots[0] * I) * (R - roots[1] * I)).is_zero());
}

TEST_CASE("V (x) V decomposition") {
    const CheckReport three = decompose_VV(3);
    CHECK(three.status == Status::pass);
    CHECK(three.extra["dims"] == nlohmann::ordered_json::array({1, 20, 15}));
    const std::vector<Scalar> a = {r / s, RatFunc::uv(1, -1), 1, 1, RatFunc::uv(-1, 1), s / r};
    for (int i = 1; i <= 6; ++i) CHECK(s0_coefficient(i, 3) == a[i - 1]);
    const VVDecomposition d = decomposition_bases(3);
    CHECK(d.s_prime.size() + d.lambda.size() + 1 == 36);
    const CheckReport two = decompose_VV(2);
    CHECK(two.status == Status::pass);
    CHECK(two.extra["dims"] == nlohmann::ordered_json::array({1, 9, 6}));
    for (int n : {4, 5}) {
        const CheckReport rep = decompose_VV(n, Backend::sampled(rlltest::point(2, 3)));
        CHECK(rep.status == Status::pass);
        int total = 0;
        for (const auto& k : rep.extra["dims"]) total += k.get<int>();
        CHECK(total == 4 * n * n);
    }
}

TEST_CASE("spectral R entries") {
    for (int n : {2, 3}) {
        const Scalar rn = (r / s).pow(2 - n);
        for (int i = 1; i <= 2 * n; ++i) CHECK(d_coeff(i, i, n) == s * (z - rn) * (z - 1));
    }
    const SparseMatrix Rz = build_R_spectral(3, Variant::plain).matrix;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) CHECK(coeff(Rz, 3, i, j, j, i) == r * s * (z - 1) / (r * z - s));
    for (int n : {2, 3}) {
        const SparseMatrix P = permutation_op(2 * n);
        const SparseMatrix hat = build_R_spectral(n, Variant::hat).matrix;
        CHECK(hat == P * build_R_spectral(n, Variant::plain).matrix);
        CHECK(hat == build_Rhat_spectral_direct(n));
        CHECK(denominator_scan(n).status == Status::pass);
    }
}

TEST_CASE("spectral Yang-Baxter and unitarity") {
    Assignment uv = rlltest::point(2, 3);
    const CheckReport two = check_ybe_unitarity(2, Backend::sampled(uv));
    CHECK(two.status == Status::pass);
    for (const char* id : {"qybe", "unitarity R^21(z) R^(1/z) = 1", "unitarity R^(1/z) R^21(z) = 1"}) {
        const CheckItem* it = find_item(two, id);
        REQUIRE(it);
        CHECK(it->status == Status::pass);
    }
    CHECK(check_ybe_unitarity(3, Backend::sampled(desk_point(true, true))).status == Status::pass);
}

TEST_CASE("block structure") {
    CHECK(block_coeffs(2).a(1, 1) == Scalar(1));
    const int n = 2, N = 4;
    const SparseMatrix hat = build_R_spectral(n, Variant::hat).matrix;
    std::set<std::pair<int, int>> nz;
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            if (!hat.at((1 - 1) * N + a - 1, (2 - 1) * N + b - 1).is_zero()) nz.insert({a, b});
    CHECK(nz == std::set<std::pair<int, int>>{{2, 1}, {4, 3}});
    Sampler sampler(4);
    for (int m = 2; m <= 4; ++m) CHECK(check_blocks(m, Backend::sampled(sampler.next(true))).status == Status::pass);
    CHECK(check_blocks(2).status == Status::pass);
}

TEST_CASE("R is invertible at generic points") {
    Sampler sampler(9);
    for (int n = 2; n <= 4; ++n) {
        const SparseMatrix R = build_R_basic(n).matrix.eval(sampler.next());
        CHECK(nullspace_rank(R) == static_cast<std::size_t>(4 * n * n));
    }
}

TEST_CASE("a corrupted d coefficient is caught and localized") {
    const Backend b = Backend::sampled(desk_point(true, true));
    {
        DCoeffSignFlip flip(1, 2);
        const CheckReport rep = check_ybe_unitarity(2, b);
        CHECK(rep.status == Status::fail);
        const CheckItem* it = find_item(rep, "qybe");
        REQUIRE(it);
        CHECK(it->status == Status::fail);
        CHECK(it->note.find("row triple") != std::string::npos);
    }
    CHECK(check_ybe_unitarity(2, b).status == Status::pass);
}

TEST_CASE("limits of R(z) against the basic R") {
    const auto j = compare_basic_and_spectral(2);
    CHECK(j["z->0"]["vs_R21"]["proportional"] == true);
    CHECK(j["z->inf"]["vs_R21_inverse"]["proportional"] == true);
    CHECK(j["z->0"]["vs_R"]["proportional"] == false);
}
