#include "mirrorlat/wps.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mirrorlat {

Int curve_genus(const Int& w1, const Int& w2, const Int& w3, const Int& d) {
    std::vector<Int> w = {w1, w2, w3};
    for (const Int& x : w)
        if (x < 1) throw error("genus formula needs positive weights");
    Rat g = Rat(d * d) / Rat(w1 * w2 * w3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) g -= Rat(d * gcd(w[i], w[j])) / Rat(w[i] * w[j]);
    for (int i = 0; i < 3; ++i) g += Rat(gcd(w[i], d)) / Rat(w[i]);
    g -= 1;
    g /= 2;
    g.canonicalize();
    if (g.get_den() != 1 || g < 0)
        throw error("genus formula did not produce a nonnegative integer (got " + g.get_str() +
                    "); input out of scope");
    return g.get_num();
}

Int self_intersection(const Int& genus) {
    if (genus < 0) throw error("genus must be nonnegative");
    return 2 * genus - 2;
}

Int IsotropyReport::exceptional_curves() const {
    Int n = 0;
    for (const auto& s : strata) n += s.points * s.chain_length();
    return n;
}

namespace {

std::string stratum_description(const std::vector<int>& support, int nvars) {
    static const char names[4] = {'x', 'y', 'z', 'w'};
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        if (std::find(support.begin(), support.end(), i) != support.end()) continue;
        if (!out.empty()) out += "=";
        out += names[i];
    }
    return out + "=0";
}

// restriction of W to the coordinates in `support`: rows of the exponent
// matrix supported there
std::vector<int> restricted_rows(const IntMat& expo, const std::vector<int>& support) {
    std::vector<int> rows;
    for (int r = 0; r < expo.rows(); ++r) {
        bool ok = true;
        for (int c = 0; c < expo.cols(); ++c) {
            if (expo(r, c) == 0) continue;
            if (std::find(support.begin(), support.end(), c) == support.end()) {
                ok = false;
                break;
            }
        }
        if (ok) rows.push_back(r);
    }
    return rows;
}

// nonzero roots (demanding squarefree) of the binary restriction on the
// open stratum {x_i x_j != 0}, counted modulo the residual weighted action
Int open_stratum_points(const InvertiblePolynomial& w, int i, int j, const std::vector<int>& rows) {
    // monomials x_i^a x_j^b; substitute x_j = 1 to get a polynomial in x_i
    std::map<Int, Int> coeff_support;  // exponent a -> marker (coefficients are generic units)
    Int amin, amax;
    bool first = true;
    for (int r : rows) {
        Int a = w.expo(r, i);
        if (coeff_support.count(a))
            throw error("restricted polynomial has repeated exponents; manual configuration required");
        coeff_support[a] = 1;
        if (first || a < amin) amin = a;
        if (first || a > amax) amax = a;
        first = false;
    }
    if (coeff_support.size() < 2) return 0;  // single monomial: no zeros off the axes
    if (coeff_support.size() > 2)
        throw error("restricted polynomial is not binomial; manual configuration required");
    // generic coefficients: t^amin (c1 + c2 t^(amax-amin)) has amax - amin
    // distinct nonzero roots
    Int span = amax - amin;
    Int n = gcd(w.ws.weights[i], w.ws.weights[j]);
    Int total = span * n;
    if (total % w.ws.weights[j] != 0)
        throw error("root count is not invariant under the residual action; manual configuration required");
    return total / w.ws.weights[j];
}

}  // namespace

IsotropyReport isotropy_scan(const InvertiblePolynomial& w) {
    if (w.ws.vars() != 4) throw error("isotropy scan expects a four-variable polynomial");
    IsotropyReport report;
    // coordinate points e_i with local group Z/w_i
    for (int i = 0; i < 4; ++i) {
        if (w.ws.weights[i] == 1) continue;
        std::vector<int> support = {i};
        if (!restricted_rows(w.expo, support).empty()) continue;  // pure power: e_i not on X
        IsotropyStratum s;
        s.support = support;
        s.description = stratum_description(support, 4);
        s.order = w.ws.weights[i];
        s.points = 1;
        report.strata.push_back(s);
    }
    // coordinate curves {i,j} with local group Z/gcd(w_i, w_j)
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Int n = gcd(w.ws.weights[i], w.ws.weights[j]);
            if (n == 1) continue;
            std::vector<int> support = {i, j};
            std::vector<int> rows = restricted_rows(w.expo, support);
            if (rows.empty())
                throw error("coordinate curve " + stratum_description(support, 4) +
                            " lies on X; manual configuration required");
            Int pts = open_stratum_points(w, i, j, rows);
            if (pts == 0) continue;
            IsotropyStratum s;
            s.support = support;
            s.description = stratum_description(support, 4);
            s.order = n;
            s.points = pts;
            report.strata.push_back(s);
        }
    return report;
}

// ---------------------------------------------------------------------------
// Curve configurations.

CurveConfig CurveConfig::with_identity_action() const {
    CurveConfig c = *this;
    c.action.clear();
    c.action_order = 1;
    return c;
}

CurveConfig parse_curve_config(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    CurveConfig c;
    for (const auto& n : j.at("nodes")) {
        CurveNode node;
        node.id = n.at("id").get<std::string>();
        node.genus = Int(n.at("genus").get<long>());
        std::string cls = n.at("class").get<std::string>();
        if (cls == "exceptional")
            node.exceptional = true;
        else if (cls == "coordinate")
            node.exceptional = false;
        else
            throw error("node class must be 'exceptional' or 'coordinate'");
        c.nodes.push_back(node);
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw error("edge must be [a, b, mult?]");
        Int mult = e.size() == 3 ? Int(e[2].get<long>()) : Int(1);
        c.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), mult);
    }
    if (j.contains("action")) {
        const auto& a = j.at("action");
        c.action_order = Int(a.at("order").get<long>());
        if (a.contains("permutation"))
            for (const auto& [k, v] : a.at("permutation").items())
                c.action.emplace_back(k, v.get<std::string>());
    }
    // validation
    std::map<std::string, const CurveNode*> byid;
    for (const auto& n : c.nodes) {
        if (byid.count(n.id)) throw error("duplicate node id " + n.id);
        if (n.exceptional && n.genus != 0) throw error("exceptional curves must have genus 0");
        byid[n.id] = &n;
    }
    std::map<std::pair<std::string, std::string>, Int> mult;
    for (const auto& [a, b, m] : c.edges) {
        if (!byid.count(a) || !byid.count(b)) throw error("edge references unknown node");
        if (a == b) throw error("self-edges are not allowed; use the genus for self-intersections");
        if (m < 1) throw error("edge multiplicity must be >= 1");
        auto key = std::minmax(a, b);
        if (mult.count(key)) throw error("duplicate edge " + a + "-" + b);
        mult[key] = m;
    }
    std::map<std::string, std::string> perm;
    for (const auto& n : c.nodes) perm[n.id] = n.id;
    for (const auto& [k, v] : c.action) {
        if (!byid.count(k) || !byid.count(v)) throw error("action references unknown node");
        perm[k] = v;
    }
    std::set<std::string> images;
    for (const auto& [k, v] : perm) {
        images.insert(v);
        if (byid[k]->exceptional != byid[v]->exceptional || byid[k]->genus != byid[v]->genus)
            throw error("action does not preserve class and genus");
    }
    if (int(images.size()) != int(c.nodes.size())) throw error("action is not a permutation");
    for (const auto& [a, b, m] : c.edges) {
        auto key = std::minmax(perm[a], perm[b]);
        auto it = mult.find(key);
        if (it == mult.end() || it->second != m)
            throw error("action does not preserve edge multiplicities");
    }
    return c;
}

CurveConfig load_curve_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open curve configuration " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_config(ss.str());
}

OrbitLatticeResult orbit_lattice(const CurveConfig& config) {
    int n = int(config.nodes.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[config.nodes[i].id] = i;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (const auto& [a, b] : config.action) perm[index.at(a)] = index.at(b);

    // pairwise intersections of the nodes
    IntMat pair_mat(n, n);
    for (int i = 0; i < n; ++i) pair_mat(i, i) = self_intersection(config.nodes[i].genus);
    for (const auto& [a, b, m] : config.edges) {
        pair_mat(index.at(a), index.at(b)) = m;
        pair_mat(index.at(b), index.at(a)) = m;
    }

    // orbits in order of first node occurrence
    std::vector<int> orbit_of(n, -1);
    OrbitLatticeResult res;
    for (int i = 0; i < n; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<std::string> ids;
        int cur = i;
        while (orbit_of[cur] < 0) {
            orbit_of[cur] = int(res.orbits.size());
            ids.push_back(config.nodes[cur].id);
            cur = perm[cur];
        }
        if (orbit_of[cur] != int(res.orbits.size())) throw error("action orbits are inconsistent");
        res.orbits.push_back(ids);
    }
    int norb = int(res.orbits.size());
    int exceptional_orbits = 0;
    for (const auto& o : res.orbits)
        if (config.nodes[index.at(o[0])].exceptional) ++exceptional_orbits;
    res.r = 1 + exceptional_orbits;

    // Gram of the orbit sums by bilinear extension
    IntMat og(norb, norb);
    for (int a = 0; a < norb; ++a)
        for (int b = 0; b < norb; ++b) {
            Int acc = 0;
            for (const auto& ia : res.orbits[a])
                for (const auto& ib : res.orbits[b]) {
                    if (a == b && ia == ib)
                        acc += pair_mat(index.at(ia), index.at(ia));
                    else if (index.at(ia) != index.at(ib))
                        acc += pair_mat(index.at(ia), index.at(ib));
                }
            og(a, b) = acc;
        }

    if (rank(og) != res.r)
        throw error("orbit count " + std::to_string(res.r) + " does not match Gram rank " +
                    std::to_string(rank(og)) + "; inconsistent configuration");

    // greedy basis in input order
    std::vector<int> kept;
    for (int i = 0; i < norb; ++i) {
        RatMat sub(int(kept.size()) + 1, int(kept.size()) + 1);
        for (size_t a = 0; a <= kept.size(); ++a)
            for (size_t b = 0; b <= kept.size(); ++b) {
                int ia = a < kept.size() ? kept[a] : i;
                int ib = b < kept.size() ? kept[b] : i;
                sub(int(a), int(b)) = Rat(og(ia, ib));
            }
        if (rank(sub) == int(kept.size()) + 1) kept.push_back(i);
    }
    if (int(kept.size()) != res.r) throw error("greedy basis size does not match rank");
    res.kept = kept;

    RatMat basis_gram(res.r, res.r);
    for (int a = 0; a < res.r; ++a)
        for (int b = 0; b < res.r; ++b) basis_gram(a, b) = Rat(og(kept[a], kept[b]));

    // dropped orbit classes may extend the lattice by a finite index:
    // express them rationally over the basis and keep their integral span
    RatMat class_over_kept(norb, res.r);
    for (int a = 0; a < res.r; ++a) class_over_kept(kept[a], a) = 1;
    std::vector<std::vector<Rat>> extra;
    for (int i = 0; i < norb; ++i) {
        if (std::find(kept.begin(), kept.end(), i) != kept.end()) continue;
        RatMat rhs(1, res.r);
        for (int a = 0; a < res.r; ++a) rhs(0, a) = Rat(og(i, kept[a]));
        RatMat x;
        // solve x * basis_gram = rhs
        if (!solve_left(basis_gram, rhs, x)) throw error("dropped generator is not in the span");
        Rat self = 0;
        for (int a = 0; a < res.r; ++a)
            for (int b = 0; b < res.r; ++b) self += x(0, a) * basis_gram(a, b) * x(0, b);
        if (self != Rat(og(i, i)))
            throw error("configuration is inconsistent: dropped generator self-intersection mismatch");
        std::vector<Rat> row(res.r);
        for (int a = 0; a < res.r; ++a) {
            row[a] = x(0, a);
            class_over_kept(i, a) = x(0, a);
        }
        extra.push_back(row);
    }

    RatMat p = RatMat::identity(res.r);
    if (!extra.empty()) {
        Int denom = 1;
        for (const auto& row : extra)
            for (Rat v : row) {
                v.canonicalize();
                denom = lcm(denom, v.get_den());
            }
        IntMat stack(int(extra.size()) + res.r, res.r);
        for (size_t i = 0; i < extra.size(); ++i)
            for (int j = 0; j < res.r; ++j) {
                Rat v = extra[i][j] * denom;
                v.canonicalize();
                stack(int(i), j) = v.get_num();
            }
        for (int i = 0; i < res.r; ++i) stack(int(extra.size()) + i, i) = denom;
        IntMat basis = hermite_row_basis(stack);
        if (basis.rows() != res.r) throw error("orbit lattice basis has wrong rank");
        for (int i = 0; i < res.r; ++i)
            for (int j = 0; j < res.r; ++j) p(i, j) = Rat(basis(i, j)) / Rat(denom);
    }
    RatMat gram = p * basis_gram * p.transpose();
    if (!is_integral(gram)) throw error("orbit lattice Gram is not integral");
    res.lattice = make_lattice(to_int(gram));
    // class coordinates over the final basis: kept classes are rows of
    // p^-1, dropped ones their rational combinations
    res.class_coords = class_over_kept * inverse(p);
    if (!is_integral(res.class_coords))
        throw error("orbit class has non-integral coordinates over the lattice basis");
    return res;
}

}  // namespace mirrorlat
