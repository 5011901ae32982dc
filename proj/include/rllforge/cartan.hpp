#pragma once

// Root data of type D_n in the epsilon basis.

#include "rllforge/scalar.hpp"

#include <utility>
#include <vector>

namespace rllforge {

// epsilon coordinates, stored doubled so that half-integers stay exact
struct WeightVector {
    std::vector<int> twice;

    static WeightVector epsilon(int i, int n);  // 1-based
    std::size_t rank() const { return twice.size(); }
    friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
    friend WeightVector operator-(const WeightVector& a, const WeightVector& b);
    friend bool operator==(const WeightVector& a, const WeightVector& b) = default;
};

Rational inner_product(const WeightVector& a, const WeightVector& b);

class RootDataD {
public:
    explicit RootDataD(int n);
    int n() const { return n_; }
    // alpha_i = e_i - e_{i+1} (i < n), alpha_n = e_{n-1} + e_n
    const WeightVector& simple_root(int i) const;
    std::vector<std::vector<int>> cartan_matrix() const;

private:
    int n_;
    std::vector<WeightVector> alpha_;
};

// <w'_i, w_j> as r^a s^b, returned as (a, b).  Refused for n = 2.
std::pair<int, int> pairing_exponents(int i, int j, int n);
Scalar pairing(int i, int j, int n);

int rho(int i, int n);

WeightVector beta_weight(int i, int n);
// beta_i in the alpha basis, coefficients doubled
std::vector<int> beta_alpha_coords(int i, int n);

// sign = +1 or -1
Scalar g_series(int i, int j, int sign, int n);

}  // namespace rllforge
