#include "mirrorlat/overlattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mirrorlat {

std::vector<std::vector<Int>> elements_with_value(const FiniteQuadraticForm& q, const Rat& n,
                                                  const SearchBudget& budget) {
    Rat target = mod_rat(n, 2);
    std::vector<std::vector<Int>> out;
    for (const auto& a : all_elements(q, budget))
        if (q_value(q, a) == target) out.push_back(a);
    return out;
}

namespace {

// canonical Hermite basis of the subgroup generated by `elements` inside
// the ambient group with the given orders
IntMat subgroup_basis(const std::vector<std::vector<Int>>& elements, const std::vector<Int>& orders) {
    int k = int(orders.size());
    IntMat m(int(elements.size()) + k, k);
    for (size_t i = 0; i < elements.size(); ++i)
        for (int j = 0; j < k; ++j) m(int(i), j) = elements[i][j];
    for (int j = 0; j < k; ++j) m(int(elements.size()) + j, j) = orders[j];
    return hermite_row_basis(m);
}

std::vector<Int> add_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                         const std::vector<Int>& orders) {
    std::vector<Int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = mod_floor(a[i] + b[i], orders[i]);
    return c;
}

std::set<std::vector<Int>> close_subgroup(std::set<std::vector<Int>> gens,
                                          const std::vector<Int>& orders) {
    gens.insert(std::vector<Int>(orders.size(), 0));
    for (;;) {
        std::set<std::vector<Int>> next = gens;
        for (const auto& a : gens)
            for (const auto& b : gens) next.insert(add_mod(a, b, orders));
        if (next.size() == gens.size()) return gens;
        gens.swap(next);
    }
}

}  // namespace

std::vector<IsotropicSubgroup> isotropic_subgroups(const FiniteQuadraticForm& q,
                                                   const SearchBudget& budget) {
    std::vector<std::vector<Int>> iso = elements_with_value(q, Rat(0), budget);
    std::set<std::vector<Int>> iso_set(iso.begin(), iso.end());

    std::map<std::string, IsotropicSubgroup> found;
    auto key_of = [](const IntMat& b) { return to_string(b); };

    IsotropicSubgroup trivial;
    trivial.elements = {std::vector<Int>(q.generators(), 0)};
    trivial.basis = subgroup_basis(trivial.elements, q.orders);
    found[key_of(trivial.basis)] = trivial;

    std::vector<std::set<std::vector<Int>>> frontier = {
        std::set<std::vector<Int>>{trivial.elements[0]}};
    while (!frontier.empty()) {
        std::vector<std::set<std::vector<Int>>> next;
        for (const auto& grp : frontier) {
            for (const auto& x : iso) {
                if (grp.count(x)) continue;
                std::set<std::vector<Int>> gens = grp;
                gens.insert(x);
                std::set<std::vector<Int>> closed = close_subgroup(std::move(gens), q.orders);
                bool all_iso = true;
                for (const auto& e : closed)
                    if (!iso_set.count(e)) {
                        all_iso = false;
                        break;
                    }
                if (!all_iso) continue;
                IsotropicSubgroup h;
                h.elements.assign(closed.begin(), closed.end());
                h.basis = subgroup_basis(h.elements, q.orders);
                std::string key = key_of(h.basis);
                if (found.count(key)) continue;
                found[key] = h;
                next.push_back(std::move(closed));
            }
        }
        frontier.swap(next);
    }

    std::vector<IsotropicSubgroup> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const IsotropicSubgroup& a, const IsotropicSubgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

Lattice overlattice(const Lattice& l, const IsotropicSubgroup& h) {
    FiniteQuadraticForm q = discriminant_form(l);
    for (const auto& e : h.elements) {
        if (int(e.size()) != q.generators()) throw error("subgroup lives in the wrong group");
        if (q_value(q, e) != 0) throw error("subgroup is not isotropic");
    }
    if (h.trivial()) return l;

    // Lift generators to L* by the smallest nonnegative residue coordinates.
    SmithDecomposition dec = smith_normal_form(l.gram);
    std::vector<Int> divisors;
    std::vector<int> cols;
    for (int i = 0; i < l.rank(); ++i)
        if (dec.s(i, i) != 1) {
            divisors.push_back(dec.s(i, i));
            cols.push_back(i);
        }
    int n = l.rank();
    RatMat lifted(int(h.elements.size()), n);
    for (size_t r = 0; r < h.elements.size(); ++r) {
        for (size_t j = 0; j < cols.size(); ++j) {
            Int coeff = mod_floor(h.elements[r][j], divisors[j]);
            for (int i = 0; i < n; ++i)
                lifted(int(r), i) += Rat(coeff * dec.b(i, cols[j])) / Rat(divisors[j]);
        }
    }
    // Common denominator, then a Hermite basis of Z^n + lifted rows.
    Int denom = 1;
    for (int r = 0; r < lifted.rows(); ++r)
        for (int j = 0; j < n; ++j) {
            Rat v = lifted(r, j);
            v.canonicalize();
            denom = lcm(denom, v.get_den());
        }
    IntMat stack(lifted.rows() + n, n);
    for (int r = 0; r < lifted.rows(); ++r)
        for (int j = 0; j < n; ++j) {
            Rat v = lifted(r, j) * denom;
            v.canonicalize();
            stack(r, j) = v.get_num();
        }
    for (int i = 0; i < n; ++i) stack(lifted.rows() + i, i) = denom;
    IntMat basis = hermite_row_basis(stack);
    if (basis.rows() != n) throw error("overlattice basis has wrong rank");
    RatMat p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = Rat(basis(i, j)) / Rat(denom);
    RatMat gram = p * to_rat(l.gram) * p.transpose();
    if (!is_integral(gram)) throw error("overlattice Gram is not integral");
    Lattice out = make_lattice(to_int(gram));
    if (lattice_det(out) * h.order() * h.order() != lattice_det(l))
        throw error("overlattice determinant check failed");
    return out;
}

LatticeInvariants invariants_of(const Lattice& l) {
    return LatticeInvariants{l.t_plus, l.t_minus, discriminant_form(l)};
}

namespace {

// Does some block decomposition of the p-part contain u_k, v_k, or a pair
// w_{p,k}^e + w_{p,k}^e' at a common scale k?
bool has_split_pattern(const FiniteQuadraticForm& q, const Int& p, const SearchBudget& budget) {
    for (const auto& blocks : all_block_decompositions(q, p, budget)) {
        std::map<int, int> w_count;
        for (const auto& b : blocks) {
            if (b.kind == 'u' || b.kind == 'v') return true;
            ++w_count[b.k];
        }
        for (const auto& [k, c] : w_count)
            if (c >= 2) return true;
    }
    return false;
}

}  // namespace

Uniqueness uniqueness(const LatticeInvariants& inv, const SearchBudget& budget) {
    if (!(inv.t_plus >= 1 && inv.t_minus >= 1 && inv.rank() >= 3)) return Uniqueness::NotGuaranteed;
    for (const Int& p : primes_of(inv.q)) {
        if (inv.rank() >= 2 + p_length(inv.q, p)) continue;
        if (!has_split_pattern(inv.q, p, budget)) return Uniqueness::NotGuaranteed;
    }
    return Uniqueness::Unique;
}

bool existence_and_uniqueness(const LatticeInvariants& inv, const SearchBudget& budget) {
    if (inv.t_plus < 1 || inv.t_minus < 1) return false;
    if (inv.rank() < 2 + length(inv.q)) return false;
    int sig = milgram_signature(inv.q, budget);
    return ((inv.t_plus - inv.t_minus) % 8 + 8) % 8 == sig;
}

bool splits_off_U(const LatticeInvariants& inv) {
    return inv.t_plus >= 1 && inv.t_minus >= 1 && inv.rank() >= 3 + length(inv.q);
}

bool exists_necessary(const LatticeInvariants& inv, const SearchBudget& budget) {
    if (inv.rank() < length(inv.q)) return false;
    int sig = milgram_signature(inv.q, budget);
    return ((inv.t_plus - inv.t_minus) % 8 + 8) % 8 == sig;
}

EmbeddingObstruction primitive_embedding_obstruction(const LatticeInvariants& sub,
                                                     const LatticeInvariants& ambient,
                                                     const SearchBudget& budget) {
    EmbeddingObstruction res;
    // Value matching: a nontrivial glue subgroup needs an element of A_sub
    // and one of A_ambient with equal order and equal q-value.
    res.forced_trivial = true;
    std::set<std::pair<Int, Rat>> ambient_values;
    for (const auto& a : all_elements(ambient.q, budget))
        ambient_values.insert({element_order(ambient.q, a), q_value(ambient.q, a)});
    for (const auto& a : all_elements(sub.q, budget)) {
        Int ord = element_order(sub.q, a);
        if (ord == 1) continue;
        if (ambient_values.count({ord, q_value(sub.q, a)})) {
            res.forced_trivial = false;
            break;
        }
    }
    // Complement through the trivial pushout: invariants
    // (m+ - t+, m- - t-, -(q_sub + -q_ambient)).
    LatticeInvariants k;
    k.t_plus = ambient.t_plus - sub.t_plus;
    k.t_minus = ambient.t_minus - sub.t_minus;
    if (k.t_plus < 0 || k.t_minus < 0) {
        res.complement_exists = false;
        return res;
    }
    k.q = negate(direct_sum(sub.q, negate(ambient.q)));
    res.complement_exists = exists_necessary(k, budget);
    return res;
}

// ---------------------------------------------------------------------------

std::vector<std::string> default_lattice_catalog() {
    std::vector<std::string> cat = {"U", "U(2)"};
    for (int n = 1; n <= 12; ++n) cat.push_back("A" + std::to_string(n));
    for (int m = 4; m <= 12; ++m) cat.push_back("D" + std::to_string(m));
    cat.push_back("E6");
    cat.push_back("E7");
    cat.push_back("E8");
    cat.push_back("H5");
    cat.push_back("L9");
    cat.push_back("M9");
    cat.push_back("T(4,4,4)");
    cat.push_back("T(3,4,4)");
    cat.push_back("T(2,5,6)");
    cat.push_back("<2>");
    cat.push_back("<4>");
    cat.push_back("<8>");
    cat.push_back("<-8>");
    cat.push_back("A1(2)");
    cat.push_back("A2(-1)");
    return cat;
}

namespace {

struct CatalogEntry {
    std::string name;
    Lattice lattice;
    Int abs_det;
};

bool search_sums(const std::vector<CatalogEntry>& cat, size_t from, int tp, int tm,
                 const Int& det_left, std::vector<size_t>& picked, int max_summands,
                 const FiniteQuadraticForm& target, const SearchBudget& budget) {
    if (tp == 0 && tm == 0) {
        if (det_left != 1 || picked.empty()) return false;
        Lattice sum = cat[picked[0]].lattice;
        for (size_t i = 1; i < picked.size(); ++i) sum = direct_sum(sum, cat[picked[i]].lattice);
        return forms_isomorphic(discriminant_form(sum), target, budget);
    }
    if (int(picked.size()) >= max_summands) return false;
    for (size_t i = from; i < cat.size(); ++i) {
        const CatalogEntry& e = cat[i];
        if (e.lattice.t_plus > tp || e.lattice.t_minus > tm) continue;
        if (det_left % e.abs_det != 0) continue;
        picked.push_back(i);
        if (search_sums(cat, i, tp - e.lattice.t_plus, tm - e.lattice.t_minus, det_left / e.abs_det,
                        picked, max_summands, target, budget))
            return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::string> find_lattice_by_invariants(const LatticeInvariants& inv,
                                                      const std::vector<std::string>& catalog,
                                                      int max_summands, const SearchBudget& budget) {
    std::vector<CatalogEntry> cat;
    for (const auto& name : catalog) {
        Lattice l = parse_lattice(name);
        cat.push_back({name, l, abs(lattice_det(l))});
    }
    std::vector<size_t> picked;
    if (!search_sums(cat, 0, inv.t_plus, inv.t_minus, group_order(inv.q), picked, max_summands,
                     inv.q, budget))
        return std::nullopt;
    std::string expr;
    size_t i = 0;
    while (i < picked.size()) {
        size_t j = i;
        while (j < picked.size() && picked[j] == picked[i]) ++j;
        if (!expr.empty()) expr += "+";
        if (j - i > 1) expr += std::to_string(j - i) + "*";
        expr += cat[picked[i]].name;
        i = j;
    }
    return expr;
}

}  // namespace mirrorlat
