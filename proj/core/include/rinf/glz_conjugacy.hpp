#pragma once

#include <optional>
#include <string>

#include "rinf/exact_linear.hpp"
#include "rinf/modular_group.hpp"

namespace rinf {

// GL(2,Z)-level conjugacy decisions for Anosov matrices, and the Sol
// torus-bundle R-infinity decision they feed.

/// The rank-2 ring of integer matrices commuting with a non-scalar A:
/// every such matrix is x*I + y*M1 with M1 = (A - d*I)/g, g = gcd(b,c,a-d).
/// An order in a real quadratic field; its norm form is
/// det(x*I + y*M1) = x^2 + p*x*y + q*y^2 with p = tr(M1), q = det(M1).
struct CommutantLattice {
    Mat2 base;          // A
    Int g;              // gcd(b, c, a-d)
    Mat2 m1;            // second basis element, integer entries
    Int form_p, form_q; // norm form coefficients
    Int discriminant;   // p^2 - 4q, positive for Anosov base
};

CommutantLattice commutant_lattice(const Mat2& a);

/// Element x*I + y*M1 as a matrix.
Mat2 lattice_element(const CommutantLattice& L, const Int& x, const Int& y);

/// Unit group {+-eps^n} of the commutant lattice, with +-A located in it.
struct UnitGroup {
    Mat2 eps;        // fundamental unit: smallest unit > 1 (real embedding)
    Int eps_x, eps_y;
    Int eps_det;     // +1 or -1
    long long m = 0; // eps^m = delta0 * A
    int delta0 = 1;  // +1 or -1
};

UnitGroup fundamental_unit(const CommutantLattice& L);

/// True iff +-A = X^p for some X in GL(2,Z) with det X = -1; equivalently
/// the fundamental unit of the commutant lattice has det -1.
struct DetMinusOneRoot {
    bool exists = false;
    Mat2 witness;       // X with X^p = delta * A when exists
    long long p = 0;
    int delta = 1;
};
DetMinusOneRoot has_det_minus_one_root(const Mat2& a);

/// Conjugator witness P*a*P^-1 = b.
struct Conjugator {
    Mat2 p;
    Int det;  // +1 or -1
};

/// SL(2,Z) conjugacy of Anosov matrices: decides whether some P with
/// det P = +1 satisfies P*a*P^-1 = b.  Works via rotation search on cyclic
/// words (direct route and diag(1,-1)-twisted route); a det -1 candidate
/// is repaired with a det -1 unit of the commutant when one exists.  Every
/// witness is verified by exact multiplication and has det +1.
/// nullopt = not conjugate by any det +1 matrix (GL(2,Z) conjugacy by a
/// det -1 matrix may still hold; find_reverser reports that case).
std::optional<Conjugator> gl2z_conjugate(const Mat2& a, const Mat2& b);

/// Reverser data for an Anosov A in SL(2,Z).  `exists` covers all of
/// GL(2,Z); `symmetric_conjugate` is the stronger condition that a det +1
/// reverser exists (equivalently, A is conjugate to a symmetric matrix).
/// The distinction is what the Sol decision turns on: every reverser has
/// trace 0, so a det -1 reverser S has eigenvalue +1 and R(S) is infinite.
struct ReverserReport {
    bool exists = false;
    Mat2 witness;              // S1 with S1*A*S1^-1 = A^-1 when exists
    Int witness_det;           // +1 or -1
    bool symmetric_conjugate = false;  // a det +1 reverser exists
    std::optional<Mat2> symmetric_witness;  // det +1 reverser, when it exists
};
ReverserReport find_reverser(const Mat2& a);

enum class SolClause {
    DetMinusOne,
    NotReversible,
    SymmetricConjugate,
    DetMinusOneRoot,
    RInfinityB0C0,
};

std::string sol_clause_name(SolClause c);

/// Outcome of the torus-bundle decision for G = Z^2 x|_A Z.
struct SolVerdict {
    bool r_infinity = true;
    SolClause clause = SolClause::DetMinusOne;
    // present iff r_infinity == false: an automorphism witness with
    // finite Reidemeister number (computed by the reidemeister module)
    struct Certificate {
        Mat2 reverser;  // S with S*A*S^-1 = A^-1
        int eps = -1;   // induced map on G/N = Z
        Int reidemeister_number;
    };
    std::optional<Certificate> certificate;
};

/// R-infinity decision for the Sol torus bundle with monodromy a.
/// Clause order: det(a) = -1; no det +1 reverser (NotReversible); det +1
/// reverser found (SymmetricConjugate, certificate R = 4).  The enum also
/// names the DetMinusOneRoot and RInfinityB0C0 sub-cases of the underlying
/// classification, but both are subsumed: a det -1 root of +-a upgrades a
/// det -1 reverser to det +1, and the B0/C0 matrices with all roots of
/// det +1 are exactly the ones with no det +1 reverser.  Throws NotAnosov.
SolVerdict decide_sol_torus_bundle(const Mat2& a);

/// Independent bounded oracle for SL(2,Z) conjugacy: exhaustive search
/// over words of length <= bound in {S, T, T^-1, D}, D = diag(1,-1), for
/// P with P*a*P^-1 = b and det P = +1.  A miss is not a proof of
/// non-conjugacy; the first witness in breadth-first word order wins.
std::optional<Conjugator> bruteforce_conjugator_search(const Mat2& a,
                                                       const Mat2& b,
                                                       int bound);

}  // namespace rinf
