// rinf: command-line front end for the R-infinity decision library.

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rinf/appendix_maps.hpp"
#include "rinf/catalog.hpp"
#include "rinf/glz_conjugacy.hpp"
#include "rinf/modular_group.hpp"
#include "rinf/reidemeister.hpp"

using json = nlohmann::ordered_json;
using namespace rinf;

namespace {

// ---------------------------------------------------------------------- I/O

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw precondition_error("BadInteger", "'" + s + "'");
    }
}

std::vector<std::vector<Int>> parse_rows(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) {
        rows.emplace_back();
        std::istringstream rin(row);
        std::string cell;
        while (std::getline(rin, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t");
            if (b == std::string::npos)
                throw precondition_error("BadMatrix", "empty entry in '" + text + "'");
            const auto e = cell.find_last_not_of(" \t");
            rows.back().push_back(parse_int(cell.substr(b, e - b + 1)));
        }
    }
    return rows;
}

Mat2 parse_mat2(const std::string& text) {
    const auto rows = parse_rows(text);
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw precondition_error("BadMatrix",
                                 "expected \"a,b;c,d\", got '" + text + "'");
    return {rows[0][0], rows[0][1], rows[1][0], rows[1][1]};
}

json mat_json(const Mat2& m) {
    return json::array({json::array({m.a.str(), m.b.str()}),
                        json::array({m.c.str(), m.d.str()})});
}

json mat_json(const Mat3& m) {
    json out = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < 3; ++j) row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

json order_json(const CokernelOrder& r) {
    if (r.infinite) return "infinite";
    if (r.value >= 0 && r.value <= Int(std::numeric_limits<long long>::max()))
        return static_cast<long long>(r.value);
    return r.value.str();
}

json certificate_json(const std::optional<SolVerdict::Certificate>& c) {
    if (!c) return nullptr;
    return json{{"reverser", mat_json(c->reverser)},
                {"eps", c->eps},
                {"reidemeister_number", order_json(CokernelOrder::finite(c->reidemeister_number))}};
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // flat human rendering: key: value lines in document order
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (const auto& [k, v] : node.items())
                    walk(v, prefix.empty() ? k : prefix + "." + k);
            } else {
                std::cout << prefix << ": "
                          << (node.is_string() ? node.get<std::string>()
                                               : node.dump())
                          << "\n";
            }
        };
    walk(report, "");
}

// ------------------------------------------------------------- subcommands

json sol_report(const Mat2& a) {
    const SolVerdict v = decide_sol_torus_bundle(a);
    return json{{"geometry", "sol_torus_bundle"},
                {"matrix", mat_json(a)},
                {"verdict", json{{"group_r_infinity", v.r_infinity},
                                 {"manifold_r_infinity", v.r_infinity}}},
                {"clause", sol_clause_name(v.clause)},
                {"certificate", certificate_json(v.certificate)},
                {"citations", json::array({"Main Theorem (d)(1)", "sec. 3.2"})}};
}

Int json_entry_int(const json& v) {
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw precondition_error("SchemaViolation", "matrix entry must be integer or string");
}

Mat2 json_mat2(const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_array() ||
        v[0].size() != 2 || !v[1].is_array() || v[1].size() != 2)
        throw precondition_error("SchemaViolation", "matrix must be [[a,b],[c,d]]");
    return {json_entry_int(v[0][0]), json_entry_int(v[0][1]),
            json_entry_int(v[1][0]), json_entry_int(v[1][1])};
}

GeometryDescriptor descriptor_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("geometry") ||
        !doc["geometry"].is_string())
        throw precondition_error("SchemaViolation",
                                 "input must be an object with a \"geometry\" string");
    const std::string g = doc["geometry"].get<std::string>();
    if (g == "spherical") return Spherical{};
    if (g == "s2xr") {
        if (!doc.contains("manifold") || !doc["manifold"].is_string())
            throw precondition_error("SchemaViolation", "s2xr needs \"manifold\"");
        const std::string m = doc["manifold"].get<std::string>();
        if (m == "S2xS1") return S2xR{S2xRManifold::S2xS1};
        if (m == "S2~xS1") return S2xR{S2xRManifold::S2twistS1};
        if (m == "RP2xS1") return S2xR{S2xRManifold::RP2xS1};
        if (m == "RP3#RP3") return S2xR{S2xRManifold::RP3connRP3};
        throw precondition_error("SchemaViolation", "unknown manifold '" + m + "'");
    }
    if (g == "euclidean" || g == "flat") {
        if (!doc.contains("index") || !doc["index"].is_number_integer())
            throw precondition_error("SchemaViolation", "flat needs integer \"index\"");
        return Euclidean{doc["index"].get<int>()};
    }
    if (g == "nil") {
        if (!doc.contains("family") || !doc["family"].is_string() ||
            !doc.contains("k") || !doc["k"].is_number_integer())
            throw precondition_error("SchemaViolation",
                                     "nil needs \"family\" and integer \"k\"");
        const std::string f = doc["family"].get<std::string>();
        for (int i = 0; i < 15; ++i)
            if (f == "M" + std::to_string(i + 1))
                return Nil{static_cast<NilFamily>(i), doc["k"].get<long>()};
        throw precondition_error("SchemaViolation", "unknown family '" + f + "'");
    }
    if (g == "sltilde") return SLtilde{};
    if (g == "h2xr") return H2xR{};
    if (g == "sol_torus_bundle" || g == "sol") {
        if (!doc.contains("matrix"))
            throw precondition_error("SchemaViolation", "sol needs \"matrix\"");
        return SolTorusBundle{json_mat2(doc["matrix"])};
    }
    if (g == "sol_sapphire") return SolSapphire{};
    if (g == "hyperbolic")
        return Hyperbolic{doc.value("compact", true)};
    throw precondition_error("SchemaViolation", "unknown geometry '" + g + "'");
}

std::string geometry_name(const GeometryDescriptor& d) {
    struct V {
        std::string operator()(const Spherical&) { return "spherical"; }
        std::string operator()(const S2xR& g) {
            return "s2xr/" + s2xr_manifold_name(g.manifold);
        }
        std::string operator()(const Euclidean& g) {
            return "euclidean/" + std::to_string(g.index);
        }
        std::string operator()(const Nil& g) {
            return "nil/" + nil_family_name(g.family) + "/k=" +
                   std::to_string(g.k);
        }
        std::string operator()(const SLtilde&) { return "sltilde"; }
        std::string operator()(const H2xR&) { return "h2xr"; }
        std::string operator()(const SolTorusBundle&) {
            return "sol_torus_bundle";
        }
        std::string operator()(const SolSapphire&) { return "sol_sapphire"; }
        std::string operator()(const Hyperbolic& g) {
            return g.compact ? "hyperbolic/compact" : "hyperbolic/finite_volume";
        }
    };
    return std::visit(V{}, d);
}

json decide_report(const GeometryDescriptor& d) {
    const Verdict v = decide(d);
    json group;
    switch (v.group_r_infinity) {
        case GroupRInfinity::Yes: group = true; break;
        case GroupRInfinity::No: group = false; break;
        case GroupRInfinity::NotApplicableFiniteGroup: group = "finite_group"; break;
    }
    return json{{"geometry", geometry_name(d)},
                {"verdict", json{{"group_r_infinity", group},
                                 {"manifold_r_infinity", v.manifold_r_infinity}}},
                {"reason_code", v.reason_code},
                {"certificate", certificate_json(v.certificate)},
                {"citations", v.citations}};
}

json conj_report(const Mat2& a, const Mat2& b) {
    const auto c = gl2z_conjugate(a, b);
    json out{{"a", mat_json(a)}, {"b", mat_json(b)},
             {"sl2z_conjugate", c.has_value()}};
    out["witness"] = c ? mat_json(c->p) : json(nullptr);
    return out;
}

json reverser_report(const Mat2& a) {
    const ReverserReport r = find_reverser(a);
    json out{{"matrix", mat_json(a)}, {"exists", r.exists}};
    if (r.exists) {
        out["witness"] = mat_json(r.witness);
        out["witness_det"] = static_cast<long long>(r.witness_det);
    } else {
        out["witness"] = nullptr;
        out["witness_det"] = nullptr;
    }
    out["symmetric_conjugate"] = r.symmetric_conjugate;
    out["symmetric_witness"] =
        r.symmetric_witness ? mat_json(*r.symmetric_witness) : json(nullptr);
    return out;
}

json root_report(const Mat2& a) {
    const UnitGroup u = fundamental_unit(commutant_lattice(a));
    json out{{"matrix", mat_json(a)},
             {"fundamental_unit", mat_json(u.eps)},
             {"unit_det", static_cast<long long>(u.eps_det)},
             {"power", u.m},
             {"delta0", u.delta0}};
    if (a.det() == 1) {
        const DetMinusOneRoot r = has_det_minus_one_root(a);
        out["det_minus_one_root"] = r.exists;
    }
    return out;
}

json reidemeister_report(const std::string& matrix, bool sol,
                         const std::string& base, int eps) {
    if (sol) {
        const Mat2 s = parse_mat2(matrix);
        const Mat2 a = parse_mat2(base);
        const CokernelOrder r = reidemeister_sol({s, eps, a});
        return json{{"s", mat_json(s)},
                    {"base", mat_json(a)},
                    {"eps", eps},
                    {"reidemeister_number", order_json(r)}};
    }
    const auto rows = parse_rows(matrix);
    if (rows.size() == 2) {
        const Mat2 m = parse_mat2(matrix);
        return json{{"matrix", mat_json(m)},
                    {"reidemeister_number", order_json(reidemeister_lattice(m))}};
    }
    if (rows.size() == 3 && rows[0].size() == 3 && rows[1].size() == 3 &&
        rows[2].size() == 3) {
        Mat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = rows[i][j];
        return json{{"matrix", mat_json(m)},
                    {"reidemeister_number", order_json(reidemeister_lattice(m))}};
    }
    throw precondition_error("BadMatrix", "expected a 2x2 or 3x3 matrix");
}

json table_report(const std::string& geometry) {
    json rows = json::array();
    if (geometry == "flat") {
        for (int i = 1; i <= 10; ++i) {
            const FlatGroupEntry& e = flat_entry(i);
            rows.push_back(json{{"index", e.index},
                                {"presentation", e.presentation},
                                {"holonomy", holonomy_name(e.holonomy)},
                                {"center", e.center},
                                {"orientable", e.orientable},
                                {"r_infinity", e.r_infinity}});
        }
    } else if (geometry == "nil") {
        for (const NilEntry& e : nil_table())
            rows.push_back(json{{"family", nil_family_name(e.family)},
                                {"type", e.type},
                                {"invariants", e.invariants},
                                {"holonomy", holonomy_name(e.holonomy)},
                                {"r_infinity", e.r_infinity}});
    } else if (geometry == "s2xr") {
        for (const S2xREntry& e : s2xr_table())
            rows.push_back(json{{"manifold", s2xr_manifold_name(e.manifold)},
                                {"group", e.group_name},
                                {"group_r_infinity", e.group_r_infinity},
                                {"manifold_r_infinity", e.manifold_r_infinity}});
    } else {
        throw precondition_error("BadGeometry",
                                 "expected flat, nil, or s2xr, got '" +
                                     geometry + "'");
    }
    return json{{"geometry", geometry}, {"rows", rows}};
}

json verify_appendix_report(int samples, std::uint64_t seed) {
    const auto sa =
        TorusMapSpec::parse("q1 q2", "q1^2 q2", Mat2{1, 1, 2, 1});
    const auto sa_inv =
        TorusMapSpec::parse("q2 q1^-1", "q1 q2^-1 q1", Mat2{-1, 1, 2, -1});
    const auto sb =
        TorusMapSpec::parse("q1^4 q2", "q1^3 q2", Mat2{4, 1, 3, 1});
    const auto sb_inv = TorusMapSpec::parse(
        "q1 q2^-1", "q2 q1^-1 q2 q1^-1 q2 q1^-1 q2", Mat2{1, -1, -3, 4});
    const double da = verify_inverse_pair(sa, sa_inv, samples, seed);
    const double db = verify_inverse_pair(sb, sb_inv, samples, seed);
    const bool ok = da < 1e-12 && db < 1e-12 &&
                    induced_h3_matrix(sa) * induced_h3_matrix(sa_inv) ==
                        Mat2::identity() &&
                    induced_h3_matrix(sb) * induced_h3_matrix(sb_inv) ==
                        Mat2::identity();
    return json{{"samples", samples},
                {"seed", seed},
                {"pairs",
                 json::array(
                     {json{{"matrix", mat_json(Mat2{1, 1, 2, 1})},
                           {"max_deviation", da}},
                      json{{"matrix", mat_json(Mat2{4, 1, 3, 1})},
                           {"max_deviation", db}}})},
                {"all_identities_verified", ok}};
}

json oracle_report(const Mat2& m, long mod) {
    if (mod < 2) throw precondition_error("BadModulus", "--mod must be >= 2");
    // (Z/mod)^2 with the reduction of m as automorphism
    const auto reduce = [&](const Int& v) {
        Int r = v % mod;
        if (r < 0) r += mod;
        return static_cast<long>(r);
    };
    const long e[2][2] = {{reduce(m.a), reduce(m.b)},
                          {reduce(m.c), reduce(m.d)}};
    const std::size_t n = static_cast<std::size_t>(mod) * mod;
    FiniteGroupSpec g;
    g.n = n;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.aut.assign(n, 0);
    auto idx = [&](long x, long y) {
        return static_cast<std::size_t>(x * mod + y);
    };
    for (long x = 0; x < mod; ++x)
        for (long y = 0; y < mod; ++y) {
            for (long u = 0; u < mod; ++u)
                for (long v = 0; v < mod; ++v)
                    g.table[idx(x, y)][idx(u, v)] =
                        idx((x + u) % mod, (y + v) % mod);
            g.aut[idx(x, y)] =
                idx((e[0][0] * x + e[0][1] * y) % mod,
                    (e[1][0] * x + e[1][1] * y) % mod);
        }
    const std::size_t classes = twisted_classes_finite(g);
    const CokernelOrder lattice = reidemeister_lattice(m);
    json out{{"matrix", mat_json(m)},
             {"mod", mod},
             {"twisted_classes", classes},
             {"lattice_value", order_json(lattice)}};
    // the counts coincide exactly when mod is a multiple of the lattice
    // value; report the comparison only in that conclusive regime
    if (!lattice.infinite && Int(mod) % lattice.value == 0)
        out["agrees"] = lattice.value == Int(classes);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"R-infinity decisions for geometric 3-manifold groups"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_decide = app.add_subcommand("decide", "decide a geometry descriptor");
    std::string input_file;
    bool use_stdin = false;
    cmd_decide->add_option("--input", input_file, "JSON descriptor file");
    cmd_decide->add_flag("--stdin", use_stdin, "read the descriptor from stdin");
    cmd_decide->add_flag("--json", as_json, "emit the report as JSON");

    std::string m_sol, m_a, m_b, m_rev, m_root, m_reid, m_base, m_oracle;
    int eps = -1;
    bool reid_sol = false;
    std::string table_geometry;
    int samples = 100;
    std::uint64_t seed = 1;
    long mod = 0;

    auto* cmd_sol = app.add_subcommand("sol", "decide a Sol torus bundle");
    cmd_sol->add_option("--matrix", m_sol, "monodromy \"a,b;c,d\"")->required();
    cmd_sol->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_conj = app.add_subcommand("conj", "SL(2,Z) conjugacy of two matrices");
    cmd_conj->add_option("--a", m_a)->required();
    cmd_conj->add_option("--b", m_b)->required();
    cmd_conj->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_rev = app.add_subcommand("reverser", "find S with S A S^-1 = A^-1");
    cmd_rev->add_option("--matrix", m_rev)->required();
    cmd_rev->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_root = app.add_subcommand("root", "fundamental unit / primitive root report");
    cmd_root->add_option("--matrix", m_root)->required();
    cmd_root->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_reid = app.add_subcommand("reidemeister", "Reidemeister numbers");
    cmd_reid->add_option("--matrix", m_reid)->required();
    cmd_reid->add_flag("--sol", reid_sol, "use the Sol addition formula");
    cmd_reid->add_option("--base", m_base, "base matrix A for --sol");
    cmd_reid->add_option("--eps", eps, "induced map on Z for --sol (+1/-1)");
    cmd_reid->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_table = app.add_subcommand("table", "print a classification table");
    cmd_table->add_option("--geometry", table_geometry, "flat|nil|s2xr")->required();
    cmd_table->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_app = app.add_subcommand("verify-appendix", "check the quaternion map pairs");
    cmd_app->add_option("--samples", samples);
    cmd_app->add_option("--seed", seed);
    cmd_app->add_flag("--json", as_json, "emit the report as JSON");

    auto* cmd_oracle = app.add_subcommand("oracle", "finite-quotient cross-check");
    cmd_oracle->add_option("--matrix", m_oracle)->required();
    cmd_oracle->add_option("--mod", mod, "modulus")->required();
    cmd_oracle->add_flag("--json", as_json, "emit the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        json report;
        if (cmd_decide->parsed()) {
            if (use_stdin == !input_file.empty())
                throw precondition_error("BadInvocation",
                                         "need exactly one of --input or --stdin");
            json doc;
            try {
                if (use_stdin) {
                    doc = json::parse(std::cin);
                } else {
                    std::ifstream in(input_file);
                    if (!in)
                        throw precondition_error("BadInvocation",
                                                 "cannot open '" + input_file + "'");
                    doc = json::parse(in);
                }
            } catch (const json::parse_error& e) {
                throw precondition_error("SchemaViolation", e.what());
            }
            report = decide_report(descriptor_from_json(doc));
        } else if (cmd_sol->parsed()) {
            report = sol_report(parse_mat2(m_sol));
        } else if (cmd_conj->parsed()) {
            report = conj_report(parse_mat2(m_a), parse_mat2(m_b));
        } else if (cmd_rev->parsed()) {
            report = reverser_report(parse_mat2(m_rev));
        } else if (cmd_root->parsed()) {
            report = root_report(parse_mat2(m_root));
        } else if (cmd_reid->parsed()) {
            report = reidemeister_report(m_reid, reid_sol, m_base, eps);
        } else if (cmd_table->parsed()) {
            report = table_report(table_geometry);
        } else if (cmd_app->parsed()) {
            report = verify_appendix_report(samples, seed);
        } else if (cmd_oracle->parsed()) {
            report = oracle_report(parse_mat2(m_oracle), mod);
        }
        emit(report, as_json);
        return 0;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const verification_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
