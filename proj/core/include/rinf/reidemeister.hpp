#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rinf/exact_linear.hpp"

namespace rinf {

// Reidemeister numbers: |det(I - M)| realized as a cokernel order for
// lattice automorphisms, the addition formula for Sol torus-bundle groups,
// the flat Case-6 computation, and brute-force twisted-conjugacy counting
// on finite groups as an independent oracle.

/// R(M) for an automorphism of Z^2 or Z^3 given by a unimodular matrix.
CokernelOrder reidemeister_lattice(const Mat2& m);
CokernelOrder reidemeister_lattice(const Mat3& m);

/// Automorphism of G = Z^2 x|_A Z, translation part omitted: S is the
/// restriction to N = Z^2 and eps the induced map on G/N = Z.
struct SolAut {
    Mat2 s;
    int eps = 1;  // +1 or -1
    Mat2 base;    // A
};

/// Addition formula: eps = +1 gives infinity; eps = -1 gives R(S) + R(AS).
/// Throws InvalidAutomorphism unless S*A*S^-1 = A^eps exactly.
CokernelOrder reidemeister_sol(const SolAut& phi);

/// Finite group as an explicit multiplication table plus an automorphism
/// given as a permutation of element indices.
struct FiniteGroupSpec {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = i*j
    std::vector<std::size_t> aut;                 // phi(i)

    /// Throws NotAGroup / NotAutomorphism on malformed input.
    void validate() const;
};

/// Number of orbits of sigma . alpha = sigma * alpha * phi(sigma)^-1.
std::size_t twisted_classes_finite(const FiniteGroupSpec& g);

/// Builds (Z/m)^2 x| Z/k, k = order of A mod m, with the descended
/// automorphism of phi, and counts twisted classes there.  Corroborates
/// the addition formula at finite level; never computes infinite values.
/// Throws DoesNotDescend if S*A != A^eps*S mod m.
std::size_t finite_quotient_sol_oracle(const Mat2& a, const SolAut& phi, long m);

/// Smallest modulus in [2, 50] where the oracle applies, or nullopt.
std::optional<long> smallest_valid_quotient(const Mat2& a, const SolAut& phi);

/// Flat Case 6 (Hantzsche-Wendt): |det(I - phi')| for the order-3 sign
/// permutation phi' and its four holonomy lifts theta_i * phi'.
struct Case6Report {
    Mat3 phi_prime;
    std::array<Mat3, 4> lifts;       // theta_i * phi', theta_0 = I
    std::array<Int, 4> lift_values;  // |det(I - theta_i*phi')|
    Int phi_value;                   // |det(I - phi')|
    CokernelOrder total;             // sum over the four lifts
};
Case6Report verify_case6();

}  // namespace rinf
