#include "rinf/exact_linear.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rinf {

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

Mat3 Mat3::identity() {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) r.e[i][i] = 1;
    return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += e[i][k] * o.e[k][j];
            r.e[i][j] = s;
        }
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.e[i][j] = e[i][j] - o.e[i][j];
    return r;
}

Int Mat3::det() const {
    return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
           e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
           e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

std::string Mat3::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < 3; ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < 3; ++j) os << (j ? "," : "") << e[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat2 inverse_unimodular(const Mat2& x) {
    const Int det = x.det();
    if (det != 1 && det != -1)
        throw precondition_error("NotUnimodular", "det = " + det.str());
    // adj(x)/det with det = +-1
    return {x.d * det, -x.b * det, -x.c * det, x.a * det};
}

Mat2 mat_pow(const Mat2& x, long long n) {
    Mat2 base = x;
    if (n < 0) {
        base = inverse_unimodular(x);  // throws NotUnimodular when needed
        n = -n;
    }
    Mat2 acc = Mat2::identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool is_anosov(const Mat2& x) {
    // No eigenvalue on the unit circle.  For det +1 that is |trace| > 2;
    // for det -1 the eigenvalues are real of product -1, and both avoid
    // +-1 exactly when the trace is nonzero.
    const Int det = x.det();
    if (det == 1) return abs(x.trace()) > 2;
    if (det == -1) return x.trace() != 0;
    return false;
}

namespace {

template <std::size_t N>
using Grid = std::array<std::array<Int, N>, N>;

template <std::size_t N>
Grid<N> grid_identity() {
    Grid<N> g{};
    for (std::size_t i = 0; i < N; ++i) g[i][i] = 1;
    return g;
}

template <std::size_t N>
Grid<N> grid_mul(const Grid<N>& x, const Grid<N>& y) {
    Grid<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < N; ++k) s += x[i][k] * y[k][j];
            r[i][j] = s;
        }
    return r;
}

// Smith normal form by elementary row/column operations over Z.
// Pivot choice: smallest nonzero absolute value, ties broken row-major.
template <std::size_t N>
SmithForm<N> snf(Grid<N> m) {
    SmithForm<N> out;
    out.U = grid_identity<N>();
    out.V = grid_identity<N>();
    Grid<N>& a = m;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(out.U[i], out.U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < N; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < N; ++r) std::swap(out.V[r][i], out.V[r][j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t j = 0; j < N; ++j) a[dst][j] += k * a[src][j];
        for (std::size_t j = 0; j < N; ++j) out.U[dst][j] += k * out.U[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t i = 0; i < N; ++i) a[i][dst] += k * a[i][src];
        for (std::size_t i = 0; i < N; ++i) out.V[i][dst] += k * out.V[i][src];
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < N; ++j) a[i][j] = -a[i][j];
        for (std::size_t j = 0; j < N; ++j) out.U[i][j] = -out.U[i][j];
    };

    for (std::size_t k = 0; k < N; ++k) {
        for (;;) {
            // pick pivot: smallest |v| != 0 in the trailing block, row-major ties
            std::size_t pi = N, pj = N;
            for (std::size_t i = k; i < N; ++i)
                for (std::size_t j = k; j < N; ++j)
                    if (a[i][j] != 0 &&
                        (pi == N || abs(a[i][j]) < abs(a[pi][pj])))
                        pi = i, pj = j;
            if (pi == N) break;  // trailing block is zero
            swap_rows(k, pi);
            swap_cols(k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < N; ++i)
                if (a[i][k] != 0) {
                    add_row(i, k, -(a[i][k] / a[k][k]));
                    if (a[i][k] != 0) clean = false;
                }
            for (std::size_t j = k + 1; j < N; ++j)
                if (a[k][j] != 0) {
                    add_col(j, k, -(a[k][j] / a[k][k]));
                    if (a[k][j] != 0) clean = false;
                }
            if (!clean) continue;

            // enforce divisibility d_k | a[i][j] on the trailing block
            bool divides = true;
            for (std::size_t i = k + 1; i < N && divides; ++i)
                for (std::size_t j = k + 1; j < N && divides; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        add_row(k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a[k][k] < 0) negate_row(k);
    }

    out.D = a;
    return out;
}

// hard assertion on every call: U*M*V = D and the divisibility chain
template <std::size_t N>
SmithForm<N> snf_checked(const Grid<N>& m) {
    SmithForm<N> out = snf<N>(m);
    const Grid<N> umv = grid_mul(grid_mul(out.U, m), out.V);
    if (umv != out.D) throw verification_error("smith_normal_form: UMV != D");
    for (std::size_t i = 0; i + 1 < N; ++i) {
        if (out.D[i][i] != 0 && out.D[i + 1][i + 1] % out.D[i][i] != 0)
            throw verification_error("smith_normal_form: divisibility chain broken");
        if (out.D[i][i] == 0 && out.D[i + 1][i + 1] != 0)
            throw verification_error("smith_normal_form: zero before nonzero");
    }
    return out;
}

Grid<2> to_grid(const Mat2& m) { return {{{m.a, m.b}, {m.c, m.d}}}; }
Grid<3> to_grid(const Mat3& m) { return m.e; }

template <std::size_t N>
CokernelOrder coker(const Grid<N>& g) {
    const SmithForm<N> s = snf_checked<N>(g);
    Int p = 1;
    for (std::size_t i = 0; i < N; ++i) {
        if (s.D[i][i] == 0) return CokernelOrder::inf();
        p *= s.D[i][i];
    }
    return CokernelOrder::finite(p);
}

}  // namespace

SmithForm<2> smith_normal_form(const Mat2& m) { return snf_checked<2>(to_grid(m)); }
SmithForm<3> smith_normal_form(const Mat3& m) { return snf_checked<3>(to_grid(m)); }

CokernelOrder cokernel_order(const Mat2& m) { return coker<2>(to_grid(m)); }
CokernelOrder cokernel_order(const Mat3& m) { return coker<3>(to_grid(m)); }

}  // namespace rinf
