#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rinf {

using Int = boost::multiprecision::cpp_int;

/// Precondition violations raised by library entry points.
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Internal consistency failure (a verified witness did not verify).
class verification_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// 2x2 matrices over unbounded integers
// ---------------------------------------------------------------------------

struct Mat2 {
    Int a, b, c, d;  // row-major [[a,b],[c,d]]

    bool operator==(const Mat2&) const = default;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 zero() { return {0, 0, 0, 0}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Int& k) const { return {a * k, b * k, c * k, d * k}; }

    Mat2 transpose() const { return {a, c, b, d}; }
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    std::string str() const;
};

/// 3x3 grid of unbounded integers.
struct Mat3 {
    std::array<std::array<Int, 3>, 3> e{};

    bool operator==(const Mat3&) const = default;

    static Mat3 identity();
    static Mat3 zero() { return {}; }

    Int& operator()(std::size_t i, std::size_t j) { return e[i][j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e[i][j]; }

    Mat3 operator*(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Int det() const;
    Int trace() const { return e[0][0] + e[1][1] + e[2][2]; }

    std::string str() const;
};

/// Exact inverse of a matrix with det = +-1.  Throws NotUnimodular otherwise.
Mat2 inverse_unimodular(const Mat2& x);

/// x^n by repeated squaring; n < 0 requires |det x| = 1.
Mat2 mat_pow(const Mat2& x, long long n);

/// No eigenvalue of modulus 1: det +1 with |trace| > 2, or det -1 with
/// trace != 0.
bool is_anosov(const Mat2& x);

// ---------------------------------------------------------------------------
// Smith normal form (N <= 3) and cokernel orders
// ---------------------------------------------------------------------------

/// U*M*V = D with U, V unimodular, D diagonal, non-negative, d_i | d_{i+1}.
template <std::size_t N>
struct SmithForm {
    std::array<std::array<Int, N>, N> U, D, V;
};

SmithForm<2> smith_normal_form(const Mat2& m);
SmithForm<3> smith_normal_form(const Mat3& m);

/// Order of Z^N / im(M), possibly infinite.
struct CokernelOrder {
    bool infinite = false;
    Int value = 0;  // meaningful only when !infinite

    bool operator==(const CokernelOrder&) const = default;

    static CokernelOrder inf() { return {true, 0}; }
    static CokernelOrder finite(Int v) { return {false, std::move(v)}; }

    CokernelOrder operator+(const CokernelOrder& o) const {
        if (infinite || o.infinite) return inf();
        return finite(value + o.value);
    }
    std::string str() const { return infinite ? "infinite" : value.str(); }
};

CokernelOrder cokernel_order(const Mat2& m);
CokernelOrder cokernel_order(const Mat3& m);

}  // namespace rinf
