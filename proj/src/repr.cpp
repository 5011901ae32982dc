#include "rllforge/repr.hpp"

#include "rllforge/cartan.hpp"
#include "rllforge/errors.hpp"

namespace rllforge {

namespace {

SparseMatrix E(int n, int k, int l) { return basis_unit(static_cast<std::size_t>(2 * n), k, l); }

Scalar rs_pow(int a, int b) { return RatFunc(rs_monomial(Half::of(a), Half::of(b))); }

SparseMatrix diag_rs(const std::vector<std::pair<int, int>>& d, int sign) {
    std::vector<Scalar> v;
    for (auto [a, b] : d) v.push_back(rs_pow(sign * a, sign * b));
    return SparseMatrix::diagonal(v);
}

int ip(const WeightVector& a, const WeightVector& b) {
    return static_cast<int>(inner_product(a, b).get_num().get_si());
}

}  // namespace

Generator Generator::parse(const std::string& name) {
    Generator g{Kind::e, 0};
    std::string rest;
    if (name.rfind("wp", 0) == 0) {
        g.kind = Kind::wp;
        rest = name.substr(2);
    } else if (!name.empty() && (name[0] == 'e' || name[0] == 'f' || name[0] == 'w')) {
        g.kind = name[0] == 'e' ? Kind::e : name[0] == 'f' ? Kind::f : Kind::w;
        rest = name.substr(1);
    } else {
        throw InvalidOption("unknown generator " + name);
    }
    bool inv = rest.size() > 3 && rest.compare(rest.size() - 3, 3, "inv") == 0;
    if (inv) {
        if (g.kind == Kind::w)
            g.kind = Kind::w_inv;
        else if (g.kind == Kind::wp)
            g.kind = Kind::wp_inv;
        else
            throw InvalidOption("only w and wp have inverses: " + name);
        rest = rest.substr(0, rest.size() - 3);
    }
    try {
        std::size_t used = 0;
        g.i = std::stoi(rest, &used);
        if (used != rest.size()) throw InvalidOption("bad generator " + name);
    } catch (const std::logic_error&) {
        throw InvalidOption("bad generator " + name);
    }
    return g;
}

std::string Generator::name() const {
    std::string idx = std::to_string(i);
    switch (kind) {
        case Kind::e: return "e" + idx;
        case Kind::f: return "f" + idx;
        case Kind::w: return "w" + idx;
        case Kind::w_inv: return "w" + idx + "inv";
        case Kind::wp: return "wp" + idx;
        case Kind::wp_inv: return "wp" + idx + "inv";
    }
    return "?";
}

const SparseMatrix& GeneratorImages::get(Generator g) const {
    if (g.i < 1 || g.i > n) throw IndexOutOfRange("generator index " + std::to_string(g.i));
    switch (g.kind) {
        case Generator::Kind::e: return E(g.i);
        case Generator::Kind::f: return F(g.i);
        case Generator::Kind::w: return W(g.i);
        case Generator::Kind::w_inv: return Winv(g.i);
        case Generator::Kind::wp: return Wp(g.i);
        case Generator::Kind::wp_inv: return Wpinv(g.i);
    }
    throw InvalidOption("bad generator kind");
}

GeneratorImages GeneratorImages::specialize(const Backend& b) const {
    if (!b.is_sampled()) return *this;
    GeneratorImages out;
    out.n = n;
    for (auto [src, dst] : {std::pair{&e, &out.e}, {&f, &out.f}, {&w, &out.w}, {&w_inv, &out.w_inv}, {&wp, &out.wp},
                            {&wp_inv, &out.wp_inv}})
        for (const auto& m : *src) dst->push_back(b(m));
    return out;
}

std::vector<std::pair<int, int>> w_diag_exponents(int k, int n, bool primed) {
    const int N = 2 * n;
    std::vector<std::pair<int, int>> d(static_cast<std::size_t>(N), {0, 0});
    auto at = [&](int pos) -> std::pair<int, int>& { return d[static_cast<std::size_t>(pos - 1)]; };
    if (k < n) {
        if (!primed) {
            at(k) = {1, 0};
            at(k + 1) = {0, 1};
            at(prime(k + 1, n)) = {0, -1};
            at(prime(k, n)) = {-1, 0};
        } else {
            at(k) = {0, 1};
            at(k + 1) = {1, 0};
            at(prime(k + 1, n)) = {-1, 0};
            at(prime(k, n)) = {0, -1};
        }
        return d;
    }
    // the standalone r^{-1}s^{-1}E_{11} term is already part of the j <= n-2 sum
    for (int j = 1; j <= n - 2; ++j) {
        at(j) = {-1, -1};
        at(prime(j, n)) = {1, 1};
    }
    if (!primed) {
        at(n - 1) = {0, -1};
        at(n) = {1, 0};
        at(prime(n, n)) = {-1, 0};
        at(prime(n - 1, n)) = {0, 1};
    } else {
        at(n - 1) = {-1, 0};
        at(n) = {0, 1};
        at(prime(n, n)) = {0, -1};
        at(prime(n - 1, n)) = {1, 0};
    }
    return d;
}

GeneratorImages build_T1(int n) {
    if (n < 3) throw RankUnsupported("vector representation needs n >= 3");
    GeneratorImages T;
    T.n = n;
    const Scalar q = RatFunc::uv(-1, -1);  // r^{-1/2} s^{-1/2}
    for (int i = 1; i <= n; ++i) {
        int j = i < n ? i + 1 : n + 2;  // partner index for e_i
        T.e.push_back(E(n, i, j) - q * E(n, prime(j, n), prime(i, n)));
        T.f.push_back(E(n, j, i) - q * E(n, prime(i, n), prime(j, n)));
        auto dw = w_diag_exponents(i, n, false);
        auto dwp = w_diag_exponents(i, n, true);
        T.w.push_back(diag_rs(dw, 1));
        T.w_inv.push_back(diag_rs(dw, -1));
        T.wp.push_back(diag_rs(dwp, 1));
        T.wp_inv.push_back(diag_rs(dwp, -1));
    }
    return T;
}

CheckReport check_defining_relations(const GeneratorImages& T0, const Backend& b) {
    Stopwatch sw;
    const int n = T0.n;
    GeneratorImages T = T0.specialize(b);
    CheckReport rep;
    rep.name = "relations";
    rep.n = n;
    rep.backend = b.describe();
    rep.assignment = b.at.str();
    rep.anchor = "Drinfeld-Jimbo defining relations under the vector representation";
    const Scalar r = b(RatFunc::r()), s = b(RatFunc::s());
    const SparseMatrix I = SparseMatrix::identity(static_cast<std::size_t>(2 * n));
    RootDataD rd(n);
    auto eps = [&](int j) { return WeightVector::epsilon(j, n); };
    auto al = [&](int i) { return rd.simple_root(i); };
    auto coef = [&](int a, int bb) { return b(rs_pow(a, bb)); };
    auto qcomm = [&](const std::string& id, const SparseMatrix& x, const SparseMatrix& y, const Scalar& c,
                     bool gating = true) -> CheckItem& {
        // x y = c y x
        return rep.add(compare_matrices(id, x * y, c * (y * x), gating));
    };
    auto nm = [](const char* g, int i) { return std::string(g) + std::to_string(i); };

    // group-likes commute and invert
    std::vector<std::pair<std::string, const SparseMatrix*>> cartan;
    for (int i = 1; i <= n; ++i) {
        cartan.emplace_back(nm("w", i), &T.W(i));
        cartan.emplace_back(nm("w'", i), &T.Wp(i));
        rep.add(compare_matrices("cartan " + nm("w", i) + " inverse", T.W(i) * T.Winv(i), I));
        rep.add(compare_matrices("cartan " + nm("w'", i) + " inverse", T.Wp(i) * T.Wpinv(i), I));
    }
    for (std::size_t a = 0; a < cartan.size(); ++a)
        for (std::size_t c = a + 1; c < cartan.size(); ++c)
            rep.add(expect_zero("cartan [" + cartan[a].first + "," + cartan[c].first + "]",
                                commutator(*cartan[a].second, *cartan[c].second)));

    // weights, 1 <= j <= n-1 (refers to eps_{j+1})
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            int a = ip(eps(j), al(i)), c = ip(eps(j + 1), al(i));
            std::string tag = " e" + std::to_string(i);
            std::string ftag = " f" + std::to_string(i);
            qcomm("weight " + nm("w", j) + tag, T.W(j), T.E(i), coef(a, c));
            qcomm("weight " + nm("w", j) + ftag, T.W(j), T.F(i), coef(-a, -c));
            qcomm("weight " + nm("w'", j) + tag, T.Wp(j), T.E(i), coef(c, a));
            qcomm("weight " + nm("w'", j) + ftag, T.Wp(j), T.F(i), coef(-c, -a));
        }
    // weights of w_n, w'_n
    for (int k = 1; k <= n; ++k) {
        bool excluded = k == n - 1;
        int a = ip(eps(n - 1), al(k)), c = ip(eps(n), al(k));
        std::string pre = excluded ? "weight pattern at excluded k=n-1: " : "weight ";
        std::string note = excluded ? "w_n weight formula extended to k=n-1; compare with the fork relation" : "";
        auto put = [&](const std::string& id, const SparseMatrix& x, const SparseMatrix& y, const Scalar& cf) {
            CheckItem& it = qcomm(pre + id, x, y, cf, !excluded);
            it.note = note;
        };
        std::string ek = " e" + std::to_string(k), fk = " f" + std::to_string(k);
        put(nm("w", n) + ek, T.W(n), T.E(k), coef(a, -c));
        put(nm("w", n) + fk, T.W(n), T.F(k), coef(-a, c));
        put(nm("w'", n) + ek, T.Wp(n), T.E(k), coef(-c, a));
        put(nm("w'", n) + fk, T.Wp(n), T.F(k), coef(c, -a));
    }
    // fork node
    {
        int a = ip(eps(n), al(n - 1)), c = ip(eps(n - 1), al(n - 1));
        std::string ek = " e" + std::to_string(n - 1), fk = " f" + std::to_string(n - 1);
        qcomm("fork weight " + nm("w", n) + ek, T.W(n), T.E(n - 1), coef(a, -c));
        qcomm("fork weight " + nm("w", n) + fk, T.W(n), T.F(n - 1), coef(-a, c));
        qcomm("fork weight " + nm("w'", n) + ek, T.Wp(n), T.E(n - 1), coef(-c, a));
        qcomm("fork weight " + nm("w'", n) + fk, T.Wp(n), T.F(n - 1), coef(c, -a));
    }
    // [e_i, f_j]
    const Scalar inv_rs = Scalar(1) / (r - s);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SparseMatrix lhs = commutator(T.E(i), T.F(j));
            std::string id = "ef [e" + std::to_string(i) + ",f" + std::to_string(j) + "]";
            if (i != j) {
                rep.add(expect_zero(id, lhs));
                continue;
            }
            rep.add(compare_matrices(id + " = (w - w')/(r-s)", lhs, inv_rs * (T.W(i) - T.Wp(i))));
            CheckItem& printed =
                rep.add(compare_matrices(id + " = (w - w'^-1)/(r-s)", lhs, inv_rs * (T.W(i) - T.Wpinv(i)), false));
            printed.note = "printed variant with w'^-1";
        }
    // far commutation
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || ip(al(i), al(j)) != 0) continue;
            if ((i == n - 1 && j == n) || (i == n && j == n - 1)) continue;
            if (i > j) continue;  // [x,y] = 0 is symmetric
            std::string p = std::to_string(i) + "," + std::to_string(j);
            rep.add(expect_zero("commute [e" + p + "]", commutator(T.E(i), T.E(j))));
            rep.add(expect_zero("commute [f" + p + "]", commutator(T.F(i), T.F(j))));
        }
    qcomm("commute e" + std::to_string(n - 1) + " e" + std::to_string(n), T.E(n - 1), T.E(n), r * s);
    qcomm("commute f" + std::to_string(n) + " f" + std::to_string(n - 1), T.F(n), T.F(n - 1), r * s);
    // Serre
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (ip(al(i), al(j)) != -1) continue;
            const auto &ei = T.E(i), &ej = T.E(j), &fi = T.F(i), &fj = T.F(j);
            std::string p = std::to_string(i) + "," + std::to_string(j);
            rep.add(expect_zero("serre e-Serre(" + p + ")", ei * ei * ej - (r + s) * (ei * ej * ei) + (r * s) * (ej * ei * ei)));
            rep.add(expect_zero("serre f-Serre(" + p + ")", fj * fi * fi - (r + s) * (fi * fj * fi) + (r * s) * (fi * fi * fj)));
            Scalar ri = r.inv(), si = s.inv();
            rep.add(expect_zero("serre e-Serre'(" + p + ")",
                                ej * ej * ei - (ri + si) * (ej * ei * ej) + (ri * si) * (ei * ej * ej)));
            rep.add(expect_zero("serre f-Serre'(" + p + ")",
                                fi * fj * fj - (ri + si) * (fj * fi * fj) + (ri * si) * (fj * fj * fi)));
        }
    rep.finalize();
    rep.elapsed_ms = sw.ms();
    return rep;
}

SparseMatrix coproduct_action(const GeneratorImages& T, Generator g) {
    const SparseMatrix I = SparseMatrix::identity(static_cast<std::size_t>(2 * T.n));
    switch (g.kind) {
        case Generator::Kind::e: return kron(T.E(g.i), I) + kron(T.W(g.i), T.E(g.i));
        case Generator::Kind::f: return kron(I, T.F(g.i)) + kron(T.F(g.i), T.Wp(g.i));
        default: {
            const SparseMatrix& m = T.get(g);
            return kron(m, m);
        }
    }
}

CheckReport highest_weight_report(const GeneratorImages& T0, const Backend& b) {
    Stopwatch sw;
    const int n = T0.n;
    GeneratorImages T = T0.specialize(b);
    CheckReport rep;
    rep.name = "highest-weight";
    rep.n = n;
    rep.backend = b.describe();
    rep.assignment = b.at.str();
    rep.anchor = "highest weight vector of the vector representation";
    const std::size_t N = static_cast<std::size_t>(2 * n);
    Vector v1 = Vector::unit(N, 1);
    auto c = [&](int a, int bb) { return b(rs_pow(a, bb)); };
    for (int j = 1; j <= n; ++j) rep.add(compare_vectors("e" + std::to_string(j) + " v1 = 0", T.E(j) * v1, Vector(N)));
    rep.add(compare_vectors("w1 v1 = r v1", T.W(1) * v1, c(1, 0) * v1));
    for (int i = 2; i <= n - 1; ++i) rep.add(compare_vectors("w" + std::to_string(i) + " v1 = v1", T.W(i) * v1, v1));
    rep.add(compare_vectors("w" + std::to_string(n) + " v1 = r^-1 s^-1 v1", T.W(n) * v1, c(-1, -1) * v1));
    rep.add(compare_vectors("w'1 v1 = s v1", T.Wp(1) * v1, c(0, 1) * v1));
    for (int i = 2; i <= n - 1; ++i)
        rep.add(compare_vectors("w'" + std::to_string(i) + " v1 = v1", T.Wp(i) * v1, v1));
    rep.add(compare_vectors("w'" + std::to_string(n) + " v1 = r^-1 s^-1 v1", T.Wp(n) * v1, c(-1, -1) * v1));
    CheckItem& printed =
        rep.add(compare_vectors("w'" + std::to_string(n) + " v1 = rs v1", T.Wp(n) * v1, c(1, 1) * v1, false));
    printed.note = "eigenvalue as stated in the highest-weight argument";
    rep.finalize();
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace rllforge
