#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rinf/exact_linear.hpp"

namespace rinf {

// Numeric verification of monomial quaternion self-maps of S^3 x S^3
// realizing a 2x2 integer matrix on H_3.

struct Quaternion {
    double w = 1, x = 0, y = 0, z = 0;

    Quaternion operator*(const Quaternion& q) const;  // Hamilton product
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    Quaternion inverse() const;  // for unit quaternions: the conjugate scaled
    double norm() const;
    Quaternion normalized() const;
};

double distance(const Quaternion& p, const Quaternion& q);

enum class QLetter : std::uint8_t { Q1, Q1inv, Q2, Q2inv };

/// Two formal words in q1^+-1, q2^+-1 (one per output coordinate) plus the
/// matrix the map is meant to induce on H_3.
struct TorusMapSpec {
    std::vector<QLetter> word1, word2;
    Mat2 intended;

    /// Parse words like "q1 q2" / "q1^2 q2" / "q2 q1^-1".
    static TorusMapSpec parse(const std::string& w1, const std::string& w2,
                              const Mat2& intended);
};

std::pair<Quaternion, Quaternion> h_map(const TorusMapSpec& spec,
                                        const Quaternion& q1,
                                        const Quaternion& q2);

/// Exponent-sum matrix: row j = (q1-sum, q2-sum) of output word j.
/// Throws MatrixMismatch if it differs from spec.intended.
Mat2 induced_h3_matrix(const TorusMapSpec& spec);

/// Samples n uniform unit-quaternion pairs (seeded), composes the two maps
/// in both orders, and returns the maximum Euclidean deviation from the
/// identity.
double verify_inverse_pair(const TorusMapSpec& spec_a,
                           const TorusMapSpec& spec_a_inv, int n,
                           std::uint64_t seed);

}  // namespace rinf
