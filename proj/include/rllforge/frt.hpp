#pragma once

// Images of the L-functionals l^{+-}_{ij} inside End(V) under phi_n and T1,
// the relations among them, and the inverse map psi_n.

#include "rllforge/backend.hpp"
#include "rllforge/repr.hpp"
#include "rllforge/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace rllforge {

struct LGeneratorImages {
    int n = 0;
    // keyed by 1-based (i, j); only the listed generators are present
    std::map<std::pair<int, int>, SparseMatrix> plus, minus;

    const SparseMatrix& lp(int i, int j) const;
    const SparseMatrix& lm(int i, int j) const;
    bool has(bool is_plus, int i, int j) const;
    // "l+12", "l-21", "l+3,5"
    static std::string name(bool is_plus, int i, int j);
    LGeneratorImages specialize(const Backend& b) const;
};

// n >= 3
LGeneratorImages build_phi_images(int n);

// inverse of an invertible diagonal matrix
SparseMatrix diagonal_inverse(const SparseMatrix& d);

// The checks take symbolic images and specialize them through b.
CheckReport check_B_relations(const LGeneratorImages& L, const Backend& b = Backend::symbolic());
// needs n = 4
CheckReport check_n4_table(const LGeneratorImages& L, const Backend& b = Backend::symbolic());
CheckReport psi_roundtrip(const LGeneratorImages& L, const GeneratorImages& T,
                          const Backend& b = Backend::symbolic());

// c with a b = c b a when one exists (a b and b a nonzero and proportional)
std::optional<Scalar> commutation_scalar(const SparseMatrix& a, const SparseMatrix& b);

// largest n accepted by the frt checks on the symbolic backend
constexpr int kSymbolicFrtBudget = 6;

}  // namespace rllforge
