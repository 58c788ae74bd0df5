#include "mirrorlat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace mirrorlat;

namespace {

std::string form_or_triv(const FiniteQuadraticForm& q) {
    return q.trivial() ? "triv" : print_form(q);
}

int cmd_disc(const std::string& expr, bool as_json) {
    Lattice l = parse_lattice(expr);
    FiniteQuadraticForm q = discriminant_form(l);
    if (as_json) {
        nlohmann::json j;
        j["lattice"] = expr;
        j["gram"] = nlohmann::json::parse(gram_json(l));
        j["signature"] = {l.t_plus, l.t_minus};
        j["det"] = lattice_det(l).get_str();
        nlohmann::json orders = nlohmann::json::array();
        for (const auto& d : q.orders) orders.push_back(d.get_str());
        j["orders"] = orders;
        j["form"] = form_or_triv(q);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "lattice   " << expr << "\n";
    std::cout << "gram      " << gram_json(l) << "\n";
    std::cout << "signature (" << l.t_plus << "," << l.t_minus << ")  det " << lattice_det(l)
              << "\n";
    std::cout << "group     ";
    if (q.trivial()) {
        std::cout << "trivial\n";
    } else {
        for (size_t i = 0; i < q.orders.size(); ++i)
            std::cout << (i ? " x " : "") << "Z/" << q.orders[i];
        std::cout << "\n";
    }
    std::cout << "form      " << form_or_triv(q);
    if (!q.trivial()) std::cout << "   i.e. " << pretty_form(block_decomposition(q));
    std::cout << "\n";
    return 0;
}

int cmd_overlats(const std::string& expr) {
    Lattice l = parse_lattice(expr);
    FiniteQuadraticForm q = discriminant_form(l);
    auto subs = isotropic_subgroups(q);
    std::cout << subs.size() - 1 << " nontrivial isotropic subgroup(s) of " << form_or_triv(q)
              << "\n";
    for (const auto& h : subs) {
        if (h.trivial()) continue;
        Lattice big = overlattice(l, h);
        FiniteQuadraticForm bq = discriminant_form(big);
        std::cout << "  index " << h.order() << " -> signature (" << big.t_plus << ","
                  << big.t_minus << "), det " << lattice_det(big) << ", form " << form_or_triv(bq);
        auto name = find_lattice_by_invariants(invariants_of(big), default_lattice_catalog());
        if (name) std::cout << "  [" << *name << "]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_mirror(int r, const std::string& form_expr) {
    PolarizationInvariants inv = make_polarization(r, parse_form(form_expr));
    MirrorResult m = mirror_invariants(inv);
    std::cout << "(" << inv.r << ", " << form_expr << ") -> (" << m.inv.r << ", "
              << form_or_triv(m.inv.q) << ")\n";
    if (m.footnote_case)
        std::cout << "note: U+T splitting criterion fails for the complement (2,1,-q); the "
                     "complement is pinned by the exists-and-unique criterion\n";
    return 0;
}

int cmd_identify(int tp, int tm, const std::string& form_expr) {
    LatticeInvariants inv{tp, tm, parse_form(form_expr)};
    auto name = find_lattice_by_invariants(inv, default_lattice_catalog());
    if (!name) {
        std::cout << "no catalog realization found\n";
        return 1;
    }
    std::cout << *name << "\n";
    return 0;
}

WeightSystem parse_ws_option(const std::vector<long>& weights, long degree) {
    std::vector<Int> w(weights.begin(), weights.end());
    return make_weight_system(w, degree);
}

int cmd_transpose(const std::string& poly, const std::vector<long>& weights, long degree) {
    InvertiblePolynomial w = parse_polynomial(poly, parse_ws_option(weights, degree));
    InvertiblePolynomial t = transpose(w);
    auto [sorted, perm] = sort_by_weights(t);
    std::cout << "transpose     " << print_polynomial(t) << "  " << print_weight_system(t.ws)
              << "\n";
    std::cout << "weight-sorted " << print_polynomial(sorted) << "  "
              << print_weight_system(sorted.ws) << "\n";
    return 0;
}

int cmd_dual(const std::string& poly, const std::vector<long>& weights, long degree,
             const std::vector<std::string>& gens) {
    InvertiblePolynomial w = parse_polynomial(poly, parse_ws_option(weights, degree));
    std::vector<SymmetryElement> gen_elems = j_group(w).elements;
    for (const auto& g : gens) {
        SymmetryElement e;
        std::stringstream ss(g);
        std::string c;
        while (std::getline(ss, c, ',')) {
            Rat r(c);
            r.canonicalize();
            e.push_back(r);
        }
        if (int(e.size()) != w.ws.vars()) throw error("generator needs one coordinate per variable");
        gen_elems.push_back(reduce_element(e));
    }
    SymmetryGroup g = group_closure(w.ws.vars(), gen_elems);
    SymmetryGroup gt = dual_group(w, g);
    SymmetryGroup jt = j_group(transpose(w));
    std::cout << "|G| = " << g.order() << "  (|G/J| = " << g.order() / j_group(w).order() << ")\n";
    std::cout << "|G^T| = " << gt.order() << "  (|G^T/J| = " << gt.order() / jt.order() << ")\n";
    std::cout << "generators of G^T:\n";
    for (const auto& e : generating_set(gt)) {
        std::cout << "  (";
        for (size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
        std::cout << ")\n";
    }
    return 0;
}

int cmd_genus(long w1, long w2, long w3, long d) {
    std::cout << curve_genus(w1, w2, w3, d) << "\n";
    return 0;
}

int cmd_orbit_lattice(const std::string& path, bool ignore_action, bool as_json) {
    CurveConfig config = load_curve_config(path);
    if (ignore_action) config = config.with_identity_action();
    OrbitLatticeResult res = orbit_lattice(config);
    FiniteQuadraticForm q = discriminant_form(res.lattice);
    if (as_json) {
        nlohmann::json j;
        j["r"] = res.r;
        j["gram"] = nlohmann::json::parse(gram_json(res.lattice));
        j["signature"] = {res.lattice.t_plus, res.lattice.t_minus};
        j["det"] = lattice_det(res.lattice).get_str();
        j["form"] = form_or_triv(q);
        nlohmann::json orbits = nlohmann::json::array();
        for (const auto& o : res.orbits) orbits.push_back(o);
        j["orbits"] = orbits;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "r = " << res.r << "  signature (" << res.lattice.t_plus << ","
              << res.lattice.t_minus << ")  det " << lattice_det(res.lattice) << "\n";
    std::cout << "gram " << gram_json(res.lattice) << "\n";
    std::cout << "form " << form_or_triv(q) << "\n";
    std::cout << "orbits:";
    for (const auto& o : res.orbits) {
        std::cout << " {";
        for (size_t i = 0; i < o.size(); ++i) std::cout << (i ? "," : "") << o[i];
        std::cout << "}";
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discriminant forms, overlattices and BHK mirror verification for even lattices"};
    app.require_subcommand(1);

    std::string lattice_expr, form_expr, poly, config_path, data_dir_opt, geometry_id;
    std::vector<long> weights;
    std::vector<std::string> gens;
    long degree = 0, table_m = 0;
    long w1 = 0, w2 = 0, w3 = 0, d4 = 0;
    int rank_arg = 0, tp = 0, tm = 0;
    bool as_json = false, table1_only = false, ignore_action = false;

    auto* disc = app.add_subcommand("disc", "discriminant group and form of a lattice expression");
    disc->add_option("lattice", lattice_expr, "lattice expression, e.g. U+A2 or T(3,4,4)")
        ->required();
    disc->add_flag("--json", as_json, "machine-readable output");

    auto* overlats = app.add_subcommand("overlats", "even overlattices via isotropic subgroups");
    overlats->add_option("lattice", lattice_expr)->required();

    auto* mirror = app.add_subcommand("mirror", "mirror invariants (r, q) -> (20-r, -q)");
    mirror->add_option("r", rank_arg, "rank of the polarizing lattice")->required();
    mirror->add_option("form", form_expr, "form expression, e.g. w(3,1,1)")->required();

    auto* identify = app.add_subcommand("identify", "find a catalog lattice with given invariants");
    identify->add_option("t_plus", tp)->required();
    identify->add_option("t_minus", tm)->required();
    identify->add_option("form", form_expr)->required();

    auto* bhk = app.add_subcommand("bhk", "invertible-polynomial operations");
    bhk->require_subcommand(1);
    auto* transpose_cmd = bhk->add_subcommand("transpose", "BHK transpose polynomial and weights");
    transpose_cmd->add_option("polynomial", poly)->required();
    transpose_cmd->add_option("--weights", weights, "four weights")->required()->expected(4);
    transpose_cmd->add_option("--degree", degree)->required();
    auto* dual_cmd = bhk->add_subcommand("dual", "dual group of <J_W, generators>");
    dual_cmd->add_option("polynomial", poly)->required();
    dual_cmd->add_option("--weights", weights, "four weights")->required()->expected(4);
    dual_cmd->add_option("--degree", degree)->required();
    dual_cmd->add_option("--subgroup", gens,
                         "extra generators, comma-separated rationals (e.g. 1/2,0,1/2,0)");

    auto* genus = app.add_subcommand("genus", "genus of a degree-d curve in P(w1,w2,w3)");
    genus->add_option("w1", w1)->required();
    genus->add_option("w2", w2)->required();
    genus->add_option("w3", w3)->required();
    genus->add_option("d", d4)->required();

    auto* orbit = app.add_subcommand("orbit-lattice", "orbit lattice of a curve configuration");
    orbit->add_option("config", config_path, "CurveConfig JSON file")->required();
    orbit->add_flag("--ignore-action", ignore_action, "use the identity action");
    orbit->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "verify the bundled tables and examples");
    verify->add_option("--table", table_m, "restrict to the table for this order m");
    verify->add_flag("--table1", table1_only, "verify the named-lattice table only");
    verify->add_option("--geometry", geometry_id, "verify one worked example by id");
    verify->add_option("--data", data_dir_opt, "dataset directory");
    verify->add_flag("--json", as_json, "emit the JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (disc->parsed()) return cmd_disc(lattice_expr, as_json);
        if (overlats->parsed()) return cmd_overlats(lattice_expr);
        if (mirror->parsed()) return cmd_mirror(rank_arg, form_expr);
        if (identify->parsed()) return cmd_identify(tp, tm, form_expr);
        if (bhk->parsed()) {
            if (transpose_cmd->parsed()) return cmd_transpose(poly, weights, degree);
            if (dual_cmd->parsed()) return cmd_dual(poly, weights, degree, gens);
        }
        if (genus->parsed()) return cmd_genus(w1, w2, w3, d4);
        if (orbit->parsed()) return cmd_orbit_lattice(config_path, ignore_action, as_json);
        if (verify->parsed()) {
            Dataset data = load_dataset(data_dir_opt);
            std::vector<VerificationReport> parts;
            bool filtered = table1_only || table_m != 0 || !geometry_id.empty();
            if (table1_only || !filtered) parts.push_back(verify_table1(data));
            if (table_m != 0)
                parts.push_back(verify_mirrors(data, Int(table_m)));
            else if (!filtered)
                parts.push_back(verify_mirrors(data));
            if (!geometry_id.empty())
                parts.push_back(verify_geometry(data, geometry_id));
            else if (!filtered)
                parts.push_back(verify_geometry(data));
            VerificationReport report = merge(parts);
            if (as_json)
                std::cout << render_json(report);
            else
                std::cout << render_text(report);
            return report.ok() ? 0 : 1;
        }
    } catch (const budget_error& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
