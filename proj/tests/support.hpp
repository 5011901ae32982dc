#pragma once

// Random scalars and matrices for the property tests.

#include "rllforge/matrix.hpp"

#include <random>

namespace rlltest {

using namespace rllforge;

inline LaurentPoly random_poly(std::mt19937_64& g, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-5, 5), e(-2, 2), ez(0, 2);
    std::vector<Monomial> t;
    const int k = nterms(g);
    for (int i = 0; i < k; ++i) {
        int c = 0;
        while (c == 0) c = coeff(g);
        t.push_back(Monomial{Rational(c), Exps{e(g), e(g), ez(g), 0}});
    }
    LaurentPoly p = LaurentPoly::from_unsorted(t);
    return p.is_zero() ? LaurentPoly(1) : p;
}

inline Scalar random_scalar(std::mt19937_64& g) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(g) == 0) return Scalar(random_poly(g));
    return Scalar(random_poly(g), random_poly(g, 2));
}

inline Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Rational q(num(g), den(g));
    q.canonicalize();
    return q;
}

inline SparseMatrix random_rational_matrix(std::mt19937_64& g, std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.set(i, j, random_rational(g));
    return m;
}

inline Assignment point(const Rational& u, const Rational& v) {
    Assignment a;
    a.set(Var::u, u).set(Var::v, v);
    return a;
}

}  // namespace rlltest
