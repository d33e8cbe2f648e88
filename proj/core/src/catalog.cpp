#include "rinf/catalog.hpp"

namespace rinf {

std::string holonomy_name(Holonomy h) {
    switch (h) {
        case Holonomy::Trivial: return "1";
        case Holonomy::Z2: return "Z2";
        case Holonomy::Z3: return "Z3";
        case Holonomy::Z4: return "Z4";
        case Holonomy::Z6: return "Z6";
        case Holonomy::Z2xZ2: return "Z2xZ2";
    }
    return "?";
}

std::string nil_family_name(NilFamily f) {
    return "M" + std::to_string(static_cast<int>(f) + 1);
}

std::string s2xr_manifold_name(S2xRManifold m) {
    switch (m) {
        case S2xRManifold::S2xS1: return "S2xS1";
        case S2xRManifold::S2twistS1: return "S2~xS1";
        case S2xRManifold::RP2xS1: return "RP2xS1";
        case S2xRManifold::RP3connRP3: return "RP3#RP3";
    }
    return "?";
}

namespace {

const std::vector<FlatGroupEntry>& flat_table() {
    static const std::vector<FlatGroupEntry> t = {
        {1,
         "<a1,a2,a3 | ai aj = aj ai>",
         Holonomy::Trivial, "Z^3", true, false},
        {2,
         "<a1,a2,a3,t | a1 = t^2, t a2 t^-1 = a2^-1, t a3 t^-1 = a3^-1, "
         "ai aj = aj ai>",
         Holonomy::Z2, "<a1>", true, false},
        {3,
         "<a1,a2,a3,t | a1 = t^3, t a2 t^-1 = a3, t a3 t^-1 = a2^-1 a3^-1, "
         "ai aj = aj ai>",
         Holonomy::Z3, "<a1>", true, true},
        {4,
         "<a1,a2,a3,t | a1 = t^4, t a2 t^-1 = a3, t a3 t^-1 = a2^-1, "
         "ai aj = aj ai>",
         Holonomy::Z4, "<a1>", true, true},
        {5,
         "<a1,a2,a3,t | a1 = t^6, t a2 t^-1 = a3, t a3 t^-1 = a2^-1 a3, "
         "ai aj = aj ai>",
         Holonomy::Z6, "<a1>", true, true},
        {6,
         "<a1,a2,a3,t1,t2,t3 | a1 a3 = t3 t2 t1, ai = ti^2, "
         "ti aj ti^-1 = aj^-1 (i != j), ai aj = aj ai>",
         Holonomy::Z2xZ2, "1", true, false},
        {7,
         "<a,b | b a b^-1 = a^-1> x <t>",
         Holonomy::Z2, "<b^2, t>", false, true},
        {8,
         "<a,b,t | b a b^-1 = a^-1, t a t^-1 = a, t b t^-1 = a b>",
         Holonomy::Z2, "<b^2>", false, true},
        {9,
         "<a,b,t | b a b^-1 = a^-1, t a t^-1 = a, t b t^-1 = b^-1>",
         Holonomy::Z2xZ2, "<t^2>", false, true},
        {10,
         "<a,b,t | b a b^-1 = a^-1, t a t^-1 = a, t b t^-1 = a b^-1>",
         Holonomy::Z2xZ2, "<t^2>", false, true},
    };
    return t;
}

}  // namespace

const FlatGroupEntry& flat_entry(int i) {
    if (i < 1 || i > 10)
        throw precondition_error("OutOfRange",
                                 "flat index " + std::to_string(i));
    return flat_table()[static_cast<std::size_t>(i - 1)];
}

const std::vector<NilEntry>& nil_table() {
    static const std::vector<NilEntry> t = {
        {NilFamily::M1, 1, "{k,(o1,1);}", Holonomy::Trivial, false},
        {NilFamily::M2, 2, "{k-2,(o1,0);(2,1),(2,1),(2,1),(2,1)}",
         Holonomy::Z2, false},
        {NilFamily::M3, 3, "{k,(n2,2);}", Holonomy::Z2, true},
        {NilFamily::M4, 4, "{k-1,(n2,1);(2,1),(2,1)}", Holonomy::Z2xZ2, true},
        {NilFamily::M5, 5, "{k-2,(o1,0);(4,3),(4,3),(2,1)}", Holonomy::Z4, true},
        {NilFamily::M6, 5, "{k-1,(o1,0);(4,1),(4,1),(2,1)}", Holonomy::Z4, true},
        {NilFamily::M7, 5, "{k-2,(o1,0);(4,3),(4,1),(2,1)}", Holonomy::Z4, true},
        {NilFamily::M8, 6, "{k-2,(o1,0);(3,2),(3,2),(3,2)}", Holonomy::Z3, true},
        {NilFamily::M9, 6, "{k-1,(o1,0);(3,1),(3,1),(3,1)}", Holonomy::Z3, true},
        {NilFamily::M10, 6, "{k-2,(o1,0);(3,2),(3,1),(3,1)}", Holonomy::Z3, true},
        {NilFamily::M11, 6, "{k-2,(o1,0);(3,2),(3,2),(3,1)}", Holonomy::Z3, true},
        {NilFamily::M12, 7, "{k-2,(o1,0);(6,5),(3,2),(2,1)}", Holonomy::Z6, true},
        {NilFamily::M13, 7, "{k-1,(o1,0);(6,1),(3,1),(2,1)}", Holonomy::Z6, true},
        {NilFamily::M14, 7, "{k-2,(o1,0);(6,1),(3,2),(2,1)}", Holonomy::Z6, true},
        {NilFamily::M15, 7, "{k-2,(o1,0);(6,5),(3,1),(2,1)}", Holonomy::Z6, true},
    };
    return t;
}

const std::vector<S2xREntry>& s2xr_table() {
    static const std::vector<S2xREntry> t = {
        {S2xRManifold::S2xS1, "Z", false, false},
        {S2xRManifold::RP2xS1, "Z2xZ", false, false},
        {S2xRManifold::S2twistS1, "Z", false, false},
        {S2xRManifold::RP3connRP3, "Z2*Z2", true, true},
    };
    return t;
}

const S2xREntry& s2xr_entry(S2xRManifold m) {
    for (const auto& e : s2xr_table())
        if (e.manifold == m) return e;
    throw precondition_error("InvalidDescriptor", "unknown S2xR manifold");
}

namespace {

Verdict always_r_infinity(std::string reason, std::vector<std::string> cites) {
    return {GroupRInfinity::Yes, true, std::move(reason), std::nullopt,
            std::move(cites)};
}

struct Dispatcher {
    Verdict operator()(const Spherical&) const {
        // finite fundamental group: R(phi) <= |G| for every phi, so the
        // group question does not arise and the manifold flag is false
        return {GroupRInfinity::NotApplicableFiniteGroup, false,
                "spherical_finite_group", std::nullopt,
                {"Main Theorem (preamble)"}};
    }
    Verdict operator()(const S2xR& g) const {
        const S2xREntry& e = s2xr_entry(g.manifold);
        return {e.group_r_infinity ? GroupRInfinity::Yes : GroupRInfinity::No,
                e.manifold_r_infinity,
                "s2xr_" + s2xr_manifold_name(g.manifold),
                std::nullopt,
                {"sec. 3.1"}};
    }
    Verdict operator()(const Euclidean& g) const {
        const FlatGroupEntry& e = flat_entry(g.index);
        return {e.r_infinity ? GroupRInfinity::Yes : GroupRInfinity::No,
                e.r_infinity,
                "flat_entry_" + std::to_string(g.index),
                std::nullopt,
                {"sec. 2.2 Theorem", "Main Theorem (b)"}};
    }
    Verdict operator()(const Nil& g) const {
        if (g.k < 1)
            throw precondition_error(
                "InvalidDescriptor",
                "Nil requires k >= 1; k <= 0 descriptors are flat or "
                "duplicate a k > 0 row");
        bool yes = true;
        for (const auto& e : nil_table())
            if (e.family == g.family) yes = e.r_infinity;
        return {yes ? GroupRInfinity::Yes : GroupRInfinity::No, yes,
                "nil_" + nil_family_name(g.family), std::nullopt,
                {"sec. 5 table", "Main Theorem (c)"}};
    }
    Verdict operator()(const SLtilde&) const {
        return always_r_infinity("sltilde", {"sec. 4 Theorem"});
    }
    Verdict operator()(const H2xR&) const {
        return always_r_infinity("h2xr", {"sec. 4 Theorem"});
    }
    Verdict operator()(const SolTorusBundle& g) const {
        if (!is_anosov(g.monodromy))
            throw precondition_error("InvalidDescriptor",
                                     "Sol monodromy must be Anosov");
        const SolVerdict sv = decide_sol_torus_bundle(g.monodromy);
        return {sv.r_infinity ? GroupRInfinity::Yes : GroupRInfinity::No,
                sv.r_infinity,
                "sol_" + sol_clause_name(sv.clause),
                sv.certificate,
                {"Main Theorem (d)(1)", "sec. 3.2"}};
    }
    Verdict operator()(const SolSapphire&) const {
        return always_r_infinity("sol_sapphire",
                                 {"Main Theorem (d)(2)", "sec. 3.2"});
    }
    Verdict operator()(const Hyperbolic& g) const {
        return always_r_infinity(
            "hyperbolic",
            {g.compact ? "sec. 2.1 (compact)" : "sec. 2.1 (finite volume)"});
    }
};

}  // namespace

Verdict decide(const GeometryDescriptor& d) {
    return std::visit(Dispatcher{}, d);
}

}  // namespace rinf
