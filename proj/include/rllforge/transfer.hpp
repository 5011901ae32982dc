#pragma once

// Monodromy and transfer matrices of a closed chain whose Lax operator is
// the spectral R-matrix, auxiliary space in slot 0.

#include "rllforge/backend.hpp"
#include "rllforge/report.hpp"
#include "rllforge/rmat.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rllforge {

struct ChainSpec {
    int n = 2;
    int sites = 1;                 // L
    std::vector<Rational> points;  // spectral values used by the checks
    std::size_t cap = 10000;       // bound on (2n)^(L+1)
    Variant variant = Variant::hat;
};

// (2n)^(L+1); throws CapExceeded above chain.cap
std::size_t chain_dim(const ChainSpec& chain);

// Lax operator at spectral value z; b fixes u, v (or leaves them symbolic)
SparseMatrix lax_at(const ChainSpec& chain, const Backend& b, const Rational& z);

// R_{0L} ... R_{01}, folded from site 1 upward
SparseMatrix monodromy(const ChainSpec& chain, const Backend& b, const Rational& z);
SparseMatrix monodromy_of(const ChainSpec& chain, const SparseMatrix& lax);

SparseMatrix transfer_trace(const ChainSpec& chain, const Backend& b, const Rational& z);
SparseMatrix transfer_of(const ChainSpec& chain, const SparseMatrix& lax);

// [T(z), T(w)] = 0 at the backend's u, v
CheckReport check_commuting(const ChainSpec& chain, const Backend& b, const Rational& z, const Rational& w);

// `pairs` sampled (u, v, z, w) points, resampling at poles
CheckReport check_transfer(const ChainSpec& chain, std::uint64_t seed, int pairs = 3);

}  // namespace rllforge
