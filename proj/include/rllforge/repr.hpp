#pragma once

// Vector representation T1 of U_{r,s}(so_{2n}) on V = Q(u,v)^{2n}.

#include "rllforge/backend.hpp"
#include "rllforge/report.hpp"

#include <string>
#include <vector>

namespace rllforge {

// i' = 2n + 1 - i
inline int prime(int i, int n) { return 2 * n + 1 - i; }

struct Generator {
    enum class Kind { e, f, w, w_inv, wp, wp_inv };
    Kind kind;
    int i;  // 1-based

    // "e1", "f2", "w3", "w3inv", "wp1", "wp1inv"
    static Generator parse(const std::string& name);
    std::string name() const;
};

struct GeneratorImages {
    int n = 0;
    std::vector<SparseMatrix> e, f, w, w_inv, wp, wp_inv;  // slot i-1 holds generator i

    const SparseMatrix& get(Generator g) const;
    const SparseMatrix& E(int i) const { return e.at(static_cast<std::size_t>(i - 1)); }
    const SparseMatrix& F(int i) const { return f.at(static_cast<std::size_t>(i - 1)); }
    const SparseMatrix& W(int i) const { return w.at(static_cast<std::size_t>(i - 1)); }
    const SparseMatrix& Winv(int i) const { return w_inv.at(static_cast<std::size_t>(i - 1)); }
    const SparseMatrix& Wp(int i) const { return wp.at(static_cast<std::size_t>(i - 1)); }
    const SparseMatrix& Wpinv(int i) const { return wp_inv.at(static_cast<std::size_t>(i - 1)); }

    GeneratorImages specialize(const Backend& b) const;
};

// n >= 3
GeneratorImages build_T1(int n);

// Exponents (a, b) of r^a s^b on the diagonal of T1(w_k) and T1(w'_k).
std::vector<std::pair<int, int>> w_diag_exponents(int k, int n, bool primed);

CheckReport check_defining_relations(const GeneratorImages& T, const Backend& b = Backend::symbolic());

// Action on V (x) V through the coproduct.
SparseMatrix coproduct_action(const GeneratorImages& T, Generator g);

CheckReport highest_weight_report(const GeneratorImages& T, const Backend& b = Backend::symbolic());

}  // namespace rllforge
