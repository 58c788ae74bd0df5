#include "mirrorlat/bhk.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mirrorlat {

WeightSystem make_weight_system(const std::vector<Int>& weights, const Int& degree) {
    if (weights.empty()) throw error("weight system needs at least one weight");
    Int g = 0;
    for (const Int& w : weights) {
        if (w < 1) throw error("weights must be positive");
        if (w >= degree) throw error("weights must be smaller than the degree");
        g = gcd(g, w);
    }
    if (g != 1) throw error("weights must have gcd 1");
    return WeightSystem{weights, degree};
}

std::string print_weight_system(const WeightSystem& ws) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < ws.weights.size(); ++i) {
        if (i) os << ",";
        os << ws.weights[i];
    }
    os << ";" << ws.degree << ")";
    return os.str();
}

namespace {

const char kVarNames[4] = {'x', 'y', 'z', 'w'};

int var_index(char c) {
    for (int i = 0; i < 4; ++i)
        if (kVarNames[i] == c) return i;
    return -1;
}

}  // namespace

InvertiblePolynomial parse_polynomial(const std::string& text, const WeightSystem& ws) {
    if (ws.vars() != 4) throw error("polynomial parser expects four variables x,y,z,w");
    std::vector<std::vector<Int>> rows;
    std::vector<Int> cur(4, 0);
    bool in_monomial = false;
    size_t i = 0;
    auto flush = [&]() {
        if (!in_monomial) throw error("empty monomial in polynomial");
        rows.push_back(cur);
        cur.assign(4, 0);
        in_monomial = false;
    };
    while (i < text.size()) {
        char c = text[i];
        if (isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') {
            flush();
            ++i;
            continue;
        }
        int v = var_index(c);
        if (v < 0) throw error(std::string("unexpected character '") + c + "' in polynomial");
        ++i;
        Int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw error("missing exponent after '^'");
            e = Int(text.substr(start, i - start));
        }
        cur[v] += e;
        in_monomial = true;
    }
    flush();

    if (rows.size() != 4)
        throw error("invertible polynomial needs exactly as many monomials as variables");
    InvertiblePolynomial w;
    w.ws = ws;
    w.expo = IntMat(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) w.expo(r, c) = rows[r][c];
    if (det(w.expo) == 0) throw error("exponent matrix is singular");
    for (int r = 0; r < 4; ++r) {
        Int deg = 0;
        for (int c = 0; c < 4; ++c) deg += w.expo(r, c) * ws.weights[c];
        if (deg != ws.degree)
            throw error("monomial " + std::to_string(r) + " is not quasihomogeneous of degree " +
                        ws.degree.get_str());
    }
    return w;
}

std::string print_polynomial(const InvertiblePolynomial& w) {
    std::ostringstream os;
    for (int r = 0; r < w.expo.rows(); ++r) {
        if (r) os << "+";
        bool any = false;
        for (int c = 0; c < w.expo.cols(); ++c) {
            const Int& e = w.expo(r, c);
            if (e == 0) continue;
            any = true;
            os << kVarNames[c];
            if (e != 1) os << "^" << e;
        }
        if (!any) throw error("cannot print constant monomial");
    }
    return os.str();
}

InvertiblePolynomial transpose(const InvertiblePolynomial& w) {
    InvertiblePolynomial t;
    t.expo = w.expo.transpose();
    // Fractional weights solve A^T q = 1; the normalized system clears
    // denominators.
    int n = t.expo.rows();
    RatMat rhs(n, 1);
    for (int i = 0; i < n; ++i) rhs(i, 0) = 1;
    RatMat q = inverse(to_rat(t.expo)) * rhs;
    Int d = 1;
    for (int i = 0; i < n; ++i) {
        Rat v = q(i, 0);
        v.canonicalize();
        if (v <= 0) throw error("transpose weights are not positive");
        d = lcm(d, v.get_den());
    }
    std::vector<Int> weights;
    for (int i = 0; i < n; ++i) {
        Rat v = q(i, 0) * d;
        v.canonicalize();
        weights.push_back(v.get_num());
    }
    Int g = 0;
    for (const Int& x : weights) g = gcd(g, x);
    for (Int& x : weights) x /= g;
    t.ws = make_weight_system(weights, d / g);
    return t;
}

std::pair<InvertiblePolynomial, std::vector<int>> sort_by_weights(const InvertiblePolynomial& w) {
    int n = w.ws.vars();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return w.ws.weights[a] > w.ws.weights[b]; });
    InvertiblePolynomial out;
    std::vector<Int> weights(n);
    out.expo = IntMat(n, n);
    for (int j = 0; j < n; ++j) {
        weights[j] = w.ws.weights[perm[j]];
        for (int i = 0; i < n; ++i) out.expo(i, j) = w.expo(i, perm[j]);
    }
    out.ws = WeightSystem{weights, w.ws.degree};
    // canonical monomial order: leading variable first, higher power first
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    auto row_key = [&](int r) {
        std::vector<Int> key;
        for (int c = 0; c < n; ++c) key.push_back(-out.expo(r, c));
        return key;
    };
    std::sort(rows.begin(), rows.end(), [&](int a, int b) { return row_key(a) < row_key(b); });
    IntMat sorted(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sorted(i, j) = out.expo(rows[i], j);
    out.expo = sorted;
    return {out, perm};
}

bool polynomials_equivalent(const InvertiblePolynomial& a, const InvertiblePolynomial& b) {
    if (a.ws.degree != b.ws.degree || a.ws.vars() != b.ws.vars()) return false;
    int n = a.ws.vars();
    auto row_multiset = [n](const IntMat& m) {
        std::multiset<std::vector<Int>> rows;
        for (int i = 0; i < m.rows(); ++i) {
            std::vector<Int> r;
            for (int j = 0; j < n; ++j) r.push_back(m(i, j));
            rows.insert(r);
        }
        return rows;
    };
    // try every weight-preserving relabeling of the variables of a
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        bool weights_match = true;
        for (int i = 0; i < n; ++i)
            if (a.ws.weights[perm[i]] != b.ws.weights[i]) {
                weights_match = false;
                break;
            }
        if (!weights_match) continue;
        IntMat relabeled(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) relabeled(i, j) = a.expo(i, perm[j]);
        if (row_multiset(relabeled) == row_multiset(b.expo)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Symmetry groups.

SymmetryElement reduce_element(const SymmetryElement& g) {
    SymmetryElement r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = mod_rat(g[i], 1);
    return r;
}

SymmetryElement add_elements(const SymmetryElement& a, const SymmetryElement& b) {
    SymmetryElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_rat(a[i] + b[i], 1);
    return r;
}

bool SymmetryGroup::contains(const SymmetryElement& g) const {
    return std::binary_search(elements.begin(), elements.end(), reduce_element(g));
}

bool SymmetryGroup::subgroup_of(const SymmetryGroup& o) const {
    for (const auto& e : elements)
        if (!o.contains(e)) return false;
    return true;
}

SymmetryGroup group_closure(int vars, const std::vector<SymmetryElement>& gens) {
    std::set<SymmetryElement> seen;
    seen.insert(SymmetryElement(vars, Rat(0)));
    std::vector<SymmetryElement> queue(seen.begin(), seen.end());
    std::vector<SymmetryElement> reduced;
    for (const auto& g : gens) reduced.push_back(reduce_element(g));
    while (!queue.empty()) {
        SymmetryElement cur = queue.back();
        queue.pop_back();
        for (const auto& g : reduced) {
            SymmetryElement nxt = add_elements(cur, g);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    SymmetryGroup out;
    out.vars = vars;
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

SymmetryGroup full_symmetry_group(const InvertiblePolynomial& w) {
    int n = w.ws.vars();
    RatMat inv = inverse(to_rat(w.expo));
    std::vector<SymmetryElement> gens;
    for (int j = 0; j < n; ++j) {
        SymmetryElement g(n);
        for (int i = 0; i < n; ++i) g[i] = inv(i, j);
        gens.push_back(g);
    }
    SymmetryGroup out = group_closure(n, gens);
    if (out.order() != abs(det(w.expo))) throw error("G_W order does not match |det A_W|");
    return out;
}

SymmetryElement j_element(const InvertiblePolynomial& w) {
    SymmetryElement j(w.ws.vars());
    for (int i = 0; i < w.ws.vars(); ++i) j[i] = mod_rat(Rat(w.ws.weights[i], w.ws.degree), 1);
    return j;
}

SymmetryGroup j_group(const InvertiblePolynomial& w) {
    return group_closure(w.ws.vars(), {j_element(w)});
}

bool is_symplectic(const SymmetryElement& g) {
    Rat s = 0;
    for (const Rat& x : g) s += x;
    s.canonicalize();
    return s.get_den() == 1;
}

SymmetryGroup sl_subgroup(const InvertiblePolynomial& w) {
    SymmetryGroup gw = full_symmetry_group(w);
    SymmetryGroup out;
    out.vars = gw.vars;
    for (const auto& g : gw.elements)
        if (is_symplectic(g)) out.elements.push_back(g);
    return out;
}

std::vector<SymmetryElement> generating_set(const SymmetryGroup& g) {
    std::vector<SymmetryElement> gens;
    SymmetryGroup span = group_closure(g.vars, {});
    for (const auto& e : g.elements) {
        if (span.contains(e)) continue;
        gens.push_back(e);
        span = group_closure(g.vars, gens);
        if (span.order() == g.order()) break;
    }
    return gens;
}

SymmetryGroup dual_group(const InvertiblePolynomial& w, const SymmetryGroup& g) {
    return dual_group(w, g, full_symmetry_group(w), full_symmetry_group(transpose(w)));
}

SymmetryGroup dual_group(const InvertiblePolynomial& w, const SymmetryGroup& g,
                         const SymmetryGroup& gw, const SymmetryGroup& gwt) {
    if (!g.subgroup_of(gw)) throw error("dual_group: G is not a subgroup of G_W");
    RatMat a = to_rat(w.expo);
    // the pairing condition is bilinear, so generators of G suffice
    std::vector<SymmetryElement> gens = generating_set(g);
    auto pairs_integrally = [&](const SymmetryElement& x, const SymmetryElement& h) {
        Rat acc = 0;
        for (int i = 0; i < int(x.size()); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < int(h.size()); ++j)
                if (h[j] != 0) acc += x[i] * a(i, j) * h[j];
        }
        acc.canonicalize();
        return acc.get_den() == 1;
    };
    SymmetryGroup out;
    out.vars = gwt.vars;
    for (const auto& x : gwt.elements) {
        bool ok = true;
        for (const auto& h : gens)
            if (!pairs_integrally(x, h)) {
                ok = false;
                break;
            }
        if (ok) out.elements.push_back(x);
    }
    return out;
}

std::vector<SymmetryGroup> subgroups_between(const SymmetryGroup& j, const SymmetryGroup& s) {
    if (!j.subgroup_of(s)) throw error("subgroups_between: J is not contained in S");
    std::map<std::vector<SymmetryElement>, SymmetryGroup> found;
    SymmetryGroup base = group_closure(j.vars, j.elements);
    found[base.elements] = base;
    std::vector<SymmetryGroup> frontier = {base};
    while (!frontier.empty()) {
        std::vector<SymmetryGroup> next;
        for (const auto& h : frontier) {
            for (const auto& x : s.elements) {
                if (h.contains(x)) continue;
                std::vector<SymmetryElement> gens = h.elements;
                gens.push_back(x);
                SymmetryGroup bigger = group_closure(j.vars, gens);
                if (found.count(bigger.elements)) continue;
                found[bigger.elements] = bigger;
                next.push_back(bigger);
            }
        }
        frontier.swap(next);
    }
    std::vector<SymmetryGroup> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const SymmetryGroup& a, const SymmetryGroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<Int> abelian_invariants(const SymmetryGroup& g) {
    // relation matrix of the subgroup of (Q/Z)^n generated by the elements:
    // common denominator D, generators as integer rows plus D*I, quotient
    // (Z^n + rows)/(D Z^n) has the same invariants as the group itself
    // computed through Smith form of the stacked matrix divided out.
    // Simpler and adequate here: invariant factors from element orders via
    // the structure of the subgroup lattice: use Smith form of the matrix
    // of generators over Z with modulus D per coordinate.
    int n = g.vars;
    Int d = 1;
    for (const auto& e : g.elements)
        for (const Rat& x : e) {
            Rat v = x;
            v.canonicalize();
            d = lcm(d, v.get_den());
        }
    IntMat m(int(g.elements.size()) + n, n);
    for (size_t i = 0; i < g.elements.size(); ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = g.elements[i][j] * d;
            v.canonicalize();
            m(int(i), j) = v.get_num();
        }
    for (int j = 0; j < n; ++j) m(int(g.elements.size()) + j, j) = d;
    // group = (lattice spanned by rows) / (D Z^n); invariants = D / d_i
    // for the Smith divisors d_i of the spanning lattice basis... compute
    // directly: Smith of the basis H of the row lattice against modulus D.
    IntMat h = hermite_row_basis(m);
    SmithDecomposition dec = smith_normal_form(h);
    std::vector<Int> inv;
    for (const Int& di : dec.diagonal()) {
        if (di == 0) continue;
        Int factor = d / di;
        if (factor > 1) inv.push_back(factor);
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

}  // namespace mirrorlat
