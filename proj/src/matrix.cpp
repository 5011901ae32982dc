#include "rllforge/matrix.hpp"

#include "rllforge/errors.hpp"

#include <algorithm>

namespace rllforge {

namespace {

void check_dims(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("dims " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t dim) : rows_(dim) {
    if (dim == 0) throw DimensionMismatch("matrix dimension must be positive");
}

SparseMatrix SparseMatrix::identity(std::size_t dim) {
    SparseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace_back(i, Scalar(1));
    return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Scalar>& d) {
    SparseMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) m.rows_[i].emplace_back(i, d[i]);
    return m;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) return it->second;
    return Scalar();
}

void SparseMatrix::set(std::size_t i, std::size_t j, const Scalar& x) {
    if (i >= dim() || j >= dim()) throw IndexOutOfRange("entry outside matrix");
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        if (x.is_zero())
            r.erase(it);
        else
            it->second = x;
    } else if (!x.is_zero()) {
        r.insert(it, Entry(j, x));
    }
}

void SparseMatrix::add_to(std::size_t i, std::size_t j, const Scalar& x) {
    if (x.is_zero()) return;
    set(i, j, at(i, j) + x);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

bool SparseMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (const auto& [j, x] : rows_[i])
            if (j != i) return false;
    return true;
}

std::optional<std::tuple<std::size_t, std::size_t, Scalar>> SparseMatrix::first_nonzero() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (!rows_[i].empty()) return std::make_tuple(i, rows_[i][0].first, rows_[i][0].second);
    return std::nullopt;
}

SparseMatrix SparseMatrix::map(const std::function<Scalar(const Scalar&)>& f) const {
    SparseMatrix out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        auto& dst = out.rows_[i];
        dst.reserve(rows_[i].size());
        for (const auto& [j, x] : rows_[i]) {
            Scalar y = f(x);
            if (!y.is_zero()) dst.emplace_back(j, std::move(y));
        }
    }
    return out;
}

SparseMatrix SparseMatrix::eval(const Assignment& a) const {
    if (a.empty()) return *this;
    return map([&](const Scalar& x) { return x.eval(a); });
}

SparseMatrix SparseMatrix::substitute(Var x, const Exps& image) const {
    return map([&](const Scalar& y) { return y.substitute(x, image); });
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (const auto& [j, x] : rows_[i]) out.rows_[j].emplace_back(i, x);
    return out;
}

SparseMatrix SparseMatrix::combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    check_dims(a, b);
    SparseMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& x = a.rows_[i];
        const auto& y = b.rows_[i];
        auto& dst = out.rows_[i];
        auto p = x.begin(), q = y.begin();
        while (p != x.end() || q != y.end()) {
            if (q == y.end() || (p != x.end() && p->first < q->first)) {
                dst.push_back(*p++);
            } else if (p == x.end() || q->first < p->first) {
                dst.emplace_back(q->first, subtract ? -q->second : q->second);
                ++q;
            } else {
                Scalar s = subtract ? p->second - q->second : p->second + q->second;
                if (!s.is_zero()) dst.emplace_back(p->first, std::move(s));
                ++p;
                ++q;
            }
        }
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return SparseMatrix::combine(a, b, false); }

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return SparseMatrix::combine(a, b, true); }

SparseMatrix operator-(const SparseMatrix& a) {
    return a.map([](const Scalar& x) { return -x; });
}

SparseMatrix operator*(const Scalar& c, const SparseMatrix& a) {
    if (c.is_zero()) return SparseMatrix(a.dim());
    return a.map([&](const Scalar& x) { return c * x; });
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    check_dims(a, b);
    SparseMatrix out(a.dim());
    std::map<std::size_t, Scalar> acc;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc.clear();
        for (const auto& [k, x] : a.rows_[i])
            for (const auto& [j, y] : b.rows_[k]) {
                auto [it, fresh] = acc.try_emplace(j, x * y);
                if (!fresh) it->second += x * y;
            }
        auto& dst = out.rows_[i];
        for (auto& [j, x] : acc)
            if (!x.is_zero()) dst.emplace_back(j, std::move(x));
    }
    return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim() != b.dim()) return false;
    return (a - b).is_zero();
}

// ---------------------------------------------------------------- Vector

Vector Vector::unit(std::size_t dim, std::size_t k) {
    if (k < 1 || k > dim) throw IndexOutOfRange("unit vector index " + std::to_string(k));
    Vector v(dim);
    v.entries_[k - 1] = Scalar(1);
    return v;
}

Scalar Vector::at(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Scalar() : it->second;
}

void Vector::add_to(std::size_t i, const Scalar& x) {
    if (i >= dim_) throw IndexOutOfRange("vector index");
    if (x.is_zero()) return;
    auto [it, fresh] = entries_.try_emplace(i, x);
    if (!fresh) {
        it->second += x;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("vector dims");
    Vector out = a;
    for (const auto& [i, x] : b.entries_) out.add_to(i, x);
    return out;
}

Vector operator-(const Vector& a, const Vector& b) { return a + Scalar(-1) * b; }

Vector operator*(const Scalar& c, const Vector& a) {
    Vector out(a.dim_);
    if (c.is_zero()) return out;
    for (const auto& [i, x] : a.entries_) out.entries_[i] = c * x;
    return out;
}

Vector operator*(const SparseMatrix& m, const Vector& x) {
    if (m.dim() != x.dim_) throw DimensionMismatch("matrix-vector dims");
    Vector out(x.dim_);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Scalar acc;
        for (const auto& [j, y] : m.row(i)) {
            auto it = x.entries_.find(j);
            if (it != x.entries_.end()) acc += y * it->second;
        }
        if (!acc.is_zero()) out.entries_[i] = acc;
    }
    return out;
}

bool operator==(const Vector& a, const Vector& b) { return a.dim_ == b.dim_ && (a - b).is_zero(); }

Vector tensor_unit(std::size_t dim, std::size_t i, std::size_t j) {
    if (i < 1 || i > dim || j < 1 || j > dim) throw IndexOutOfRange("tensor unit index");
    return Vector::unit(dim * dim, (i - 1) * dim + j);
}

// ---------------------------------------------------------------- builders

SparseMatrix basis_unit(std::size_t dim, std::size_t k, std::size_t l) {
    if (k < 1 || k > dim || l < 1 || l > dim)
        throw IndexOutOfRange("E(" + std::to_string(k) + "," + std::to_string(l) + ") in dim " + std::to_string(dim));
    SparseMatrix m(dim);
    m.set(k - 1, l - 1, Scalar(1));
    return m;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    std::size_t db = b.dim();
    SparseMatrix out(a.dim() * db);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < db; ++k)
            for (const auto& [j, x] : a.row(i))
                for (const auto& [l, y] : b.row(k)) out.set(i * db + k, j * db + l, x * y);
    return out;
}

SparseMatrix permutation_op(std::size_t d) {
    SparseMatrix p(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p.set(i * d + j, j * d + i, Scalar(1));
    return p;
}

SparseMatrix embed_two_site(const SparseMatrix& m, std::size_t d, std::size_t nslots, std::size_t a,
                            std::size_t b) {
    if (m.dim() != d * d) throw DimensionMismatch("two-site operator must act on V (x) V");
    if (a >= nslots || b >= nslots || a == b) throw IndexOutOfRange("bad slot pair");
    std::size_t total = 1;
    for (std::size_t k = 0; k < nslots; ++k) total *= d;
    // stride of slot k: slot 0 is the most significant digit
    std::vector<std::size_t> stride(nslots, 1);
    for (std::size_t k = nslots - 1; k > 0; --k) stride[k - 1] = stride[k] * d;
    SparseMatrix out(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = (idx / stride[a]) % d, y = (idx / stride[b]) % d;
        std::size_t rest = idx - x * stride[a] - y * stride[b];
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (const auto& [c, val] : m.row(x * d + y)) {
            std::size_t x2 = c / d, y2 = c % d;
            row.emplace_back(rest + x2 * stride[a] + y2 * stride[b], val);
        }
        std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        for (auto& [c, val] : row) out.set(idx, c, val);
    }
    return out;
}

SparseMatrix trace_first(const SparseMatrix& m, std::size_t d) {
    if (m.dim() % d != 0) throw DimensionMismatch("trace factor does not divide dimension");
    std::size_t rest = m.dim() / d;
    SparseMatrix out(rest);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < rest; ++i)
            for (const auto& [c, x] : m.row(a * rest + i))
                if (c / rest == a) out.add_to(i, c % rest, x);
    return out;
}

// ---------------------------------------------------------------- exact elimination

std::vector<std::vector<Rational>> to_rational(const SparseMatrix& m) {
    std::vector<std::vector<Rational>> out(m.dim(), std::vector<Rational>(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (const auto& [j, x] : m.row(i)) {
            auto c = x.constant_value();
            if (!c) throw BackendUnsupported("symbolic entry " + x.str() + "; rank needs sampled scalars");
            out[i][j] = *c;
        }
    return out;
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    // clear denominators row by row, then Bareiss over Z
    std::size_t nr = rows.size(), nc = rows[0].size();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
    }
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t nullspace_rank(const SparseMatrix& m) { return rank_of(to_rational(m)); }

std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m) {
    auto a = to_rational(m);
    std::size_t n = m.dim();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string residual_string(const SparseMatrix& diff) {
    auto nz = diff.first_nonzero();
    if (!nz) return "0";
    auto& [i, j, x] = *nz;
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + x.str();
}

std::string residual_string(const Vector& diff) {
    if (diff.is_zero()) return "0";
    const auto& [i, x] = *diff.entries().begin();
    return "(" + std::to_string(i + 1) + "): " + x.str();
}

}  // namespace rllforge
