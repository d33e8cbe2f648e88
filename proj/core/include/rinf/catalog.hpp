#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rinf/glz_conjugacy.hpp"

namespace rinf {

// Geometry-indexed classification layer: descriptors for the eight
// geometries, the flat and Nil tables, the S^2 x R list, and the
// dispatcher.

enum class S2xRManifold { S2xS1, S2twistS1, RP2xS1, RP3connRP3 };
enum class NilFamily {
    M1, M2, M3, M4, M5, M6, M7, M8, M9, M10, M11, M12, M13, M14, M15
};

struct Spherical {};
struct S2xR { S2xRManifold manifold; };
struct Euclidean { int index; };          // 1..10
struct Nil { NilFamily family; long k; }; // k >= 1
struct SLtilde {};
struct H2xR {};
struct SolTorusBundle { Mat2 monodromy; };
struct SolSapphire {};
struct Hyperbolic { bool compact = true; };

using GeometryDescriptor =
    std::variant<Spherical, S2xR, Euclidean, Nil, SLtilde, H2xR,
                 SolTorusBundle, SolSapphire, Hyperbolic>;

enum class Holonomy { Trivial, Z2, Z3, Z4, Z6, Z2xZ2 };
std::string holonomy_name(Holonomy h);

struct FlatGroupEntry {
    int index;                 // 1..10
    std::string presentation;  // display string
    Holonomy holonomy;
    std::string center;
    bool orientable;
    bool r_infinity;
};

struct NilEntry {
    NilFamily family;
    int type;                  // 1..7 for i..vii
    std::string invariants;    // Seifert invariant symbol, k left symbolic
    Holonomy holonomy;
    bool r_infinity;
};

struct S2xREntry {
    S2xRManifold manifold;
    std::string group_name;
    bool group_r_infinity;
    bool manifold_r_infinity;
};

/// Full row of the flat ten-group table.  Throws OutOfRange.
const FlatGroupEntry& flat_entry(int i);

/// The fifteen Nil families in table order M1..M15.
const std::vector<NilEntry>& nil_table();

const S2xREntry& s2xr_entry(S2xRManifold m);
const std::vector<S2xREntry>& s2xr_table();

enum class GroupRInfinity { Yes, No, NotApplicableFiniteGroup };

struct Verdict {
    GroupRInfinity group_r_infinity;
    bool manifold_r_infinity;
    std::string reason_code;
    std::optional<SolVerdict::Certificate> certificate;
    std::vector<std::string> citations;
};

/// The dispatcher over all eight geometries.  Throws InvalidDescriptor on
/// violated descriptor invariants (Nil k < 1, non-Anosov Sol monodromy,
/// flat index out of range).
Verdict decide(const GeometryDescriptor& d);

std::string nil_family_name(NilFamily f);
std::string s2xr_manifold_name(S2xRManifold m);

}  // namespace rinf
