#include "rinf/reidemeister.hpp"

#include <numeric>

namespace rinf {

CokernelOrder reidemeister_lattice(const Mat2& m) {
    return cokernel_order(Mat2::identity() - m);
}

CokernelOrder reidemeister_lattice(const Mat3& m) {
    return cokernel_order(Mat3::identity() - m);
}

CokernelOrder reidemeister_sol(const SolAut& phi) {
    const Int d = phi.s.det();
    if (d != 1 && d != -1)
        throw precondition_error("InvalidAutomorphism", "S not unimodular");
    const Mat2 conj = phi.s * phi.base * inverse_unimodular(phi.s);
    const Mat2 target =
        phi.eps == 1 ? phi.base : inverse_unimodular(phi.base);
    if (conj != target)
        throw precondition_error("InvalidAutomorphism",
                                 "S*A*S^-1 != A^eps for eps = " +
                                     std::to_string(phi.eps));
    if (phi.eps == 1) return CokernelOrder::inf();
    return reidemeister_lattice(phi.s) + reidemeister_lattice(phi.base * phi.s);
}

void FiniteGroupSpec::validate() const {
    if (n == 0 || table.size() != n)
        throw precondition_error("NotAGroup", "empty or ragged table");
    for (const auto& row : table) {
        if (row.size() != n) throw precondition_error("NotAGroup", "ragged row");
        for (auto v : row)
            if (v >= n) throw precondition_error("NotAGroup", "index out of range");
    }
    // identity: element e with e*x = x*e = x
    std::size_t e = n;
    for (std::size_t i = 0; i < n && e == n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] != j || table[j][i] != j) { ok = false; break; }
        if (ok) e = i;
    }
    if (e == n) throw precondition_error("NotAGroup", "no identity");
    // inverses: each row is a permutation hitting e
    for (std::size_t i = 0; i < n; ++i) {
        bool hit = false;
        std::vector<bool> seen(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[table[i][j]]) throw precondition_error("NotAGroup", "row not a permutation");
            seen[table[i][j]] = true;
            if (table[i][j] == e) hit = true;
        }
        if (!hit) throw precondition_error("NotAGroup", "no inverse");
    }
    // associativity spot-check on a deterministic sample
    const std::size_t step = n < 8 ? 1 : n / 8;
    for (std::size_t i = 0; i < n; i += step)
        for (std::size_t j = 0; j < n; j += step)
            for (std::size_t k = 0; k < n; k += step)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw precondition_error("NotAGroup", "not associative");

    if (aut.size() != n) throw precondition_error("NotAutomorphism", "wrong size");
    std::vector<bool> seen(n, false);
    for (auto v : aut) {
        if (v >= n || seen[v]) throw precondition_error("NotAutomorphism", "not bijective");
        seen[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (aut[table[i][j]] != table[aut[i]][aut[j]])
                throw precondition_error("NotAutomorphism", "not multiplicative");
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t classes() {
        std::size_t c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

}  // namespace

std::size_t twisted_classes_finite(const FiniteGroupSpec& g) {
    g.validate();
    // inverse lookup
    std::size_t e = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < g.n; ++j)
            if (g.table[i][j] != j) { ok = false; break; }
        if (ok) { e = i; break; }
    }
    std::vector<std::size_t> inv(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            if (g.table[i][j] == e) { inv[i] = j; break; }

    UnionFind uf(g.n);
    for (std::size_t alpha = 0; alpha < g.n; ++alpha)
        for (std::size_t sigma = 0; sigma < g.n; ++sigma)
            uf.unite(alpha, g.table[g.table[sigma][alpha]][inv[g.aut[sigma]]]);
    return uf.classes();
}

namespace {

long mod_reduce(const Int& v, long m) {
    Int r = v % m;
    if (r < 0) r += m;
    return static_cast<long>(r);
}

struct ModMat {
    long a, b, c, d;
    bool operator==(const ModMat&) const = default;
};

ModMat reduce_mod(const Mat2& x, long m) {
    return {mod_reduce(x.a, m), mod_reduce(x.b, m), mod_reduce(x.c, m),
            mod_reduce(x.d, m)};
}

ModMat mod_mul(const ModMat& x, const ModMat& y, long m) {
    return {(x.a * y.a + x.b * y.c) % m, (x.a * y.b + x.b * y.d) % m,
            (x.c * y.a + x.d * y.c) % m, (x.c * y.b + x.d * y.d) % m};
}

}  // namespace

std::size_t finite_quotient_sol_oracle(const Mat2& a, const SolAut& phi,
                                       long m) {
    if (m < 2) throw precondition_error("DoesNotDescend", "modulus < 2");
    const ModMat A = reduce_mod(a, m);
    const ModMat S = reduce_mod(phi.s, m);
    const ModMat Aeps =
        phi.eps == 1 ? A : reduce_mod(inverse_unimodular(a), m);
    if (mod_mul(S, A, m) != mod_mul(Aeps, S, m))
        throw precondition_error("DoesNotDescend",
                                 "S*A != A^eps*S mod " + std::to_string(m));

    // multiplicative order of A mod m (finite since det A = +-1)
    const ModMat I{1, 0, 0, 1};
    long k = 1;
    ModMat p = A;
    while (p != I) {
        p = mod_mul(p, A, m);
        ++k;
        if (k > m * m * m * m + 1)
            throw precondition_error("OrderNotFinite",
                                     "A mod " + std::to_string(m));
    }

    // group (Z/m)^2 x| Z/k: element (v1, v2, t), index = (v1*m + v2)*k + t
    const std::size_t n = static_cast<std::size_t>(m) * m * k;
    std::vector<ModMat> apow(k, I);
    for (long t = 1; t < k; ++t) apow[t] = mod_mul(apow[t - 1], A, m);

    auto idx = [&](long v1, long v2, long t) {
        return static_cast<std::size_t>((v1 * m + v2) * k + t);
    };

    FiniteGroupSpec g;
    g.n = n;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.aut.assign(n, 0);
    for (long v1 = 0; v1 < m; ++v1)
        for (long v2 = 0; v2 < m; ++v2)
            for (long t = 0; t < k; ++t) {
                const std::size_t i = idx(v1, v2, t);
                const ModMat& At = apow[t];
                for (long w1 = 0; w1 < m; ++w1)
                    for (long w2 = 0; w2 < m; ++w2)
                        for (long tt = 0; tt < k; ++tt)
                            g.table[i][idx(w1, w2, tt)] =
                                idx((v1 + At.a * w1 + At.b * w2) % m,
                                    (v2 + At.c * w1 + At.d * w2) % m,
                                    (t + tt) % k);
                const long te = phi.eps == 1 ? t : (k - t) % k;
                g.aut[i] = idx((S.a * v1 + S.b * v2) % m,
                               (S.c * v1 + S.d * v2) % m, te);
            }
    return twisted_classes_finite(g);
}

std::optional<long> smallest_valid_quotient(const Mat2& a, const SolAut& phi) {
    for (long m = 2; m <= 50; ++m) {
        const ModMat A = reduce_mod(a, m);
        const ModMat S = reduce_mod(phi.s, m);
        const ModMat Aeps =
            phi.eps == 1 ? A : reduce_mod(inverse_unimodular(a), m);
        if (mod_mul(S, A, m) == mod_mul(Aeps, S, m)) return m;
    }
    return std::nullopt;
}

Case6Report verify_case6() {
    Case6Report r;
    r.phi_prime = Mat3{{{{0, 1, 0}, {0, 0, -1}, {1, 0, 0}}}};

    // holonomy lifts: identity plus the three determinant +1 diagonal
    // sign matrices (exactly two -1 entries)
    std::array<std::array<Int, 3>, 4> signs = {{{1, 1, 1},
                                                {-1, -1, 1},
                                                {-1, 1, -1},
                                                {1, -1, -1}}};
    CokernelOrder total = CokernelOrder::finite(0);
    for (std::size_t i = 0; i < 4; ++i) {
        Mat3 theta;
        for (std::size_t j = 0; j < 3; ++j) theta(j, j) = signs[i][j];
        r.lifts[i] = theta * r.phi_prime;
        const CokernelOrder v = reidemeister_lattice(r.lifts[i]);
        if (v.infinite)
            throw verification_error("verify_case6: infinite lift value");
        r.lift_values[i] = v.value;
        total = total + v;
    }
    r.phi_value = r.lift_values[0];
    r.total = total;
    return r;
}

}  // namespace rinf
