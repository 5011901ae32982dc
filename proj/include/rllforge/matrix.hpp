#pragma once

// Sparse square matrices over Scalar.
//
// Storage and the accessors at/set/row are 0-based.  The paper-facing
// helpers (basis_unit, dumps, residual strings) use 1-based indices, as
// do E_{kl} in the formulas.

#include "rllforge/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rllforge {

class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;  // (col, value)

    explicit SparseMatrix(std::size_t dim);

    static SparseMatrix identity(std::size_t dim);
    static SparseMatrix diagonal(const std::vector<Scalar>& d);

    std::size_t dim() const { return rows_.size(); }
    const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }
    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& x);
    void add_to(std::size_t i, std::size_t j, const Scalar& x);

    std::size_t nnz() const;
    bool is_zero() const;
    bool is_diagonal() const;

    // first nonzero entry in row-major order, 0-based
    std::optional<std::tuple<std::size_t, std::size_t, Scalar>> first_nonzero() const;

    SparseMatrix map(const std::function<Scalar(const Scalar&)>& f) const;
    SparseMatrix eval(const Assignment& a) const;
    SparseMatrix substitute(Var x, const Exps& image) const;
    SparseMatrix transpose() const;

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Scalar& c, const SparseMatrix& a);
    friend SparseMatrix operator-(const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract);
    std::vector<std::vector<Entry>> rows_;
};

// Sparse vector, 0-based storage.
class Vector {
public:
    explicit Vector(std::size_t dim) : dim_(dim) {}
    static Vector unit(std::size_t dim, std::size_t k);  // 1-based k

    std::size_t dim() const { return dim_; }
    const std::map<std::size_t, Scalar>& entries() const { return entries_; }
    Scalar at(std::size_t i) const;
    void add_to(std::size_t i, const Scalar& x);
    bool is_zero() const { return entries_.empty(); }

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Scalar& c, const Vector& a);
    friend Vector operator*(const SparseMatrix& m, const Vector& x);
    friend bool operator==(const Vector& a, const Vector& b);

private:
    std::size_t dim_;
    std::map<std::size_t, Scalar> entries_;
};

// v_i (x) v_j in a dim-by-dim tensor square, 1-based i, j
Vector tensor_unit(std::size_t dim, std::size_t i, std::size_t j);

// E_{kl}, 1-based
SparseMatrix basis_unit(std::size_t dim, std::size_t k, std::size_t l);

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

// (i,j) tensor slot -> row (i-1)*b.dim + j
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

// flip operator on V (x) V, dim(V) = d
SparseMatrix permutation_op(std::size_t d);

// Acts with m (on V (x) V) on slots a, b of a tensor power of nslots
// copies of V; the first tensor factor of m goes to slot a.  Slots are
// 0-based.  Slot ordering a > b is allowed.
SparseMatrix embed_two_site(const SparseMatrix& m, std::size_t d, std::size_t nslots, std::size_t a,
                            std::size_t b);

// partial trace over the leading factor of dimension d
SparseMatrix trace_first(const SparseMatrix& m, std::size_t d);

// Dense rational view; throws BackendUnsupported if an entry is not a constant.
std::vector<std::vector<Rational>> to_rational(const SparseMatrix& m);

// Exact rank by fraction-free (Bareiss) elimination.
std::size_t nullspace_rank(const SparseMatrix& m);
std::size_t rank_of(std::vector<std::vector<Rational>> rows);

// Basis of the right kernel by reduced row echelon form over Q.
std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m);

// "0" or "(row,col): value", 1-based
std::string residual_string(const SparseMatrix& diff);
std::string residual_string(const Vector& diff);

}  // namespace rllforge
