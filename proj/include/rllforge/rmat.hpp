#pragma once

// R-matrices on V (x) V: the basic braiding R, R^ = P R, and their
// spectral versions R(z), R^(z).

#include "rllforge/backend.hpp"
#include "rllforge/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace rllforge {

struct RBasic {
    int n = 0;
    SparseMatrix matrix{1};
};

enum class Variant { plain, hat };

struct RSpectral {
    int n = 0;
    Variant variant = Variant::plain;
    SparseMatrix matrix{1};  // entries rational in z
};

// E_{ij} (x) E_{kl} with 1-based indices, in dimension (2n)^2
SparseMatrix unit_pair(int n, int i, int j, int k, int l);

RBasic build_R_basic(int n);
SparseMatrix build_Rhat_basic(int n);

// (t - r^{-1/2}s^{1/2}), (t + r^{1/2}s^{-1/2}), (t - r^{(2n-1)/2}s^{-(2n-1)/2})
std::array<Scalar, 3> minpoly_roots(int n);

// d_ij(z), 1-based
Scalar d_coeff(int i, int j, int n);

// Fault injection for mutation tests: while an instance is alive, d_ij(z)
// for this (i, j) comes back with its sign flipped.
class DCoeffSignFlip {
public:
    DCoeffSignFlip(int i, int j);
    ~DCoeffSignFlip();
    DCoeffSignFlip(const DCoeffSignFlip&) = delete;
    DCoeffSignFlip& operator=(const DCoeffSignFlip&) = delete;
};
// (x - r^{1-n}s^{n-1})(r x - s)
Scalar spectral_denominator(int n, const Scalar& x);

RSpectral build_R_spectral(int n, Variant variant);
// R^(z) assembled directly from its own term families, independent of P R(z)
SparseMatrix build_Rhat_spectral_direct(int n);

CheckReport check_braid(int n, const Backend& b = Backend::symbolic());
CheckReport check_minpoly(int n, const Backend& b = Backend::symbolic());

struct VVDecomposition {
    Vector s0{1};
    std::vector<Vector> s_prime, lambda;
    std::vector<std::string> s_prime_tags, lambda_tags;
};

// a_i of the S^o vector, 1-based
Scalar s0_coefficient(int i, int n);
VVDecomposition decomposition_bases(int n);

// n >= 3: basis construction, eigenvectors, independence, invariance.
// n = 2: eigen-ranks at a sample point only.  Dimensions go to extra["dims"].
CheckReport decompose_VV(int n, const Backend& b = Backend::symbolic());

// Spectral QYBE for R^(z) and unitarity.  With z, w unassigned the identity
// is checked with z, w symbolic.
CheckReport check_ybe_unitarity(int n, const Backend& b = Backend::symbolic());

struct BlockCoeffs {
    int n = 0;
    SparseMatrix rhat{1};
    Scalar a(int l, int j) const;
    Scalar b(int i, int j) const;
    Scalar c(int i, int j) const;
};

BlockCoeffs block_coeffs(int n);
CheckReport check_blocks(int n, const Backend& b = Backend::symbolic());

// denominators of R^(z) divide (rz - s)(z - r^{1-n}s^{n-1})
CheckReport denominator_scan(int n);

// Exploratory: limits of R(z) at z -> 0 and z -> oo against the basic R.
nlohmann::ordered_json compare_basic_and_spectral(int n);

}  // namespace rllforge
