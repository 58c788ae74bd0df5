#include "mirrorlat/qform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mirrorlat {

namespace {

Rat reduce_diag(const Rat& v) { return mod_rat(v, 2); }
Rat reduce_off(const Rat& v) { return mod_rat(v, 1); }

void reduce_gram(RatMat& g) {
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) g(i, j) = (i == j) ? reduce_diag(g(i, j)) : reduce_off(g(i, j));
}

bool is_prime_small(const Int& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

}  // namespace

FiniteQuadraticForm make_form(const std::vector<Int>& orders, const RatMat& gram) {
    int k = int(orders.size());
    if (gram.rows() != k || gram.cols() != k) throw error("form gram has wrong dimension");
    for (const Int& d : orders)
        if (d < 1) throw error("generator orders must be positive");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (reduce_off(gram(i, j) - gram(j, i)) != 0) throw error("form gram is not symmetric");
            Rat v = gram(i, j) * orders[i];
            v.canonicalize();
            if (v.get_den() != 1) throw error("order does not annihilate bilinear value");
            if (i == j) {
                Rat w = gram(i, i) * orders[i] * orders[i];
                w.canonicalize();
                if (w.get_den() != 1 || mod_floor(w.get_num(), 2) != 0)
                    throw error("order does not annihilate quadratic value");
            }
        }

    if (k == 0) return FiniteQuadraticForm{{}, RatMat(0, 0)};

    // Recanonicalize the group Z^k / diag(orders) into invariant factors.
    IntMat d(k, k);
    for (int i = 0; i < k; ++i) d(i, i) = orders[i];
    SmithDecomposition dec = smith_normal_form(d);
    // New generator j has old coordinates column j of P^-1.
    RatMat pinv = inverse(to_rat(dec.a));
    RatMat gnew = pinv.transpose() * gram * pinv;

    std::vector<int> keep;
    for (int i = 0; i < k; ++i)
        if (dec.s(i, i) > 1) keep.push_back(i);

    FiniteQuadraticForm out;
    out.gram = RatMat(int(keep.size()), int(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        out.orders.push_back(dec.s(keep[i], keep[i]));
        for (size_t j = 0; j < keep.size(); ++j)
            out.gram(int(i), int(j)) = i == j ? reduce_diag(gnew(keep[i], keep[j]))
                                              : reduce_off(gnew(keep[i], keep[j]));
    }
    // Dropped generators are trivial in the group; their residues must vanish.
    for (int i = 0; i < k; ++i) {
        if (dec.s(i, i) > 1) continue;
        for (int j = 0; j < k; ++j) {
            Rat v = (i == j) ? reduce_diag(gnew(i, j)) : reduce_off(gnew(i, j));
            if (v != 0) throw error("inconsistent form: trivial generator with nonzero residue");
        }
    }
    return out;
}

Int group_order(const FiniteQuadraticForm& q) {
    Int n = 1;
    for (const Int& d : q.orders) n *= d;
    return n;
}

int length(const FiniteQuadraticForm& q) { return q.generators(); }

int p_length(const FiniteQuadraticForm& q, const Int& p) {
    int n = 0;
    for (const Int& d : q.orders)
        if (d % p == 0) ++n;
    return n;
}

Rat q_value(const FiniteQuadraticForm& q, const std::vector<Int>& a) {
    if (int(a.size()) != q.generators()) throw error("element has wrong coordinate count");
    Rat acc = 0;
    for (int i = 0; i < q.generators(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < q.generators(); ++j) {
            if (a[j] == 0) continue;
            acc += Rat(a[i] * a[j]) * q.gram(i, j);
        }
    }
    return reduce_diag(acc);
}

Rat b_value(const FiniteQuadraticForm& q, const std::vector<Int>& a, const std::vector<Int>& b) {
    if (int(a.size()) != q.generators() || int(b.size()) != q.generators())
        throw error("element has wrong coordinate count");
    Rat acc = 0;
    for (int i = 0; i < q.generators(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < q.generators(); ++j) {
            if (b[j] == 0) continue;
            acc += Rat(a[i] * b[j]) * q.gram(i, j);
        }
    }
    return reduce_off(acc);
}

Int element_order(const FiniteQuadraticForm& q, const std::vector<Int>& a) {
    Int ord = 1;
    for (int i = 0; i < q.generators(); ++i) {
        if (a[i] == 0) continue;
        Int d = q.orders[i];
        Int g = gcd(mod_floor(a[i], d), d);
        ord = lcm(ord, d / g);
    }
    return ord;
}

FiniteQuadraticForm negate(const FiniteQuadraticForm& q) {
    FiniteQuadraticForm out = q;
    for (int i = 0; i < q.generators(); ++i)
        for (int j = 0; j < q.generators(); ++j)
            out.gram(i, j) = (i == j) ? reduce_diag(-q.gram(i, j)) : reduce_off(-q.gram(i, j));
    return out;
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    std::vector<Int> orders = a.orders;
    orders.insert(orders.end(), b.orders.begin(), b.orders.end());
    int ka = a.generators(), kb = b.generators();
    RatMat g(ka + kb, ka + kb);
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < ka; ++j) g(i, j) = a.gram(i, j);
    for (int i = 0; i < kb; ++i)
        for (int j = 0; j < kb; ++j) g(ka + i, ka + j) = b.gram(i, j);
    return make_form(orders, g);
}

FiniteQuadraticForm p_part(const FiniteQuadraticForm& q, const Int& p) {
    // Sylow-p generators are (d_i / p^{v_i}) * g_i.
    std::vector<Int> orders;
    std::vector<Int> mult;
    std::vector<int> idx;
    for (int i = 0; i < q.generators(); ++i) {
        Int d = q.orders[i];
        Int pk = 1;
        while (d % p == 0) {
            pk *= p;
            d /= p;
        }
        if (pk == 1) continue;
        orders.push_back(pk);
        mult.push_back(q.orders[i] / pk);
        idx.push_back(i);
    }
    RatMat g(int(idx.size()), int(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            g(int(i), int(j)) = Rat(mult[i] * mult[j]) * q.gram(idx[i], idx[j]);
    return make_form(orders, g);
}

std::vector<Int> primes_of(const FiniteQuadraticForm& q) {
    std::set<Int> ps;
    for (Int d : q.orders) {
        for (Int p = 2; p * p <= d; ++p)
            while (d % p == 0) {
                ps.insert(p);
                d /= p;
            }
        if (d > 1) ps.insert(d);
    }
    return std::vector<Int>(ps.begin(), ps.end());
}

std::vector<std::vector<Int>> all_elements(const FiniteQuadraticForm& q, const SearchBudget& budget) {
    Int n = group_order(q);
    if (n > budget.group_order)
        throw budget_error("group order " + n.get_str() + " exceeds enumeration budget");
    std::vector<std::vector<Int>> out;
    out.reserve(n.get_ui());
    std::vector<Int> cur(q.generators(), 0);
    for (;;) {
        out.push_back(cur);
        int i = q.generators() - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < q.orders[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

namespace {

std::map<Rat, long long> fingerprint(const FiniteQuadraticForm& q, const SearchBudget& budget) {
    std::map<Rat, long long> fp;
    for (const auto& a : all_elements(q, budget)) ++fp[q_value(q, a)];
    return fp;
}

std::vector<Int> add_elts(const FiniteQuadraticForm& q, const std::vector<Int>& a,
                          const std::vector<Int>& b) {
    std::vector<Int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = mod_floor(a[i] + b[i], q.orders[i]);
    return c;
}

struct IsoSearch {
    const FiniteQuadraticForm& q1;
    const FiniteQuadraticForm& q2;
    const SearchBudget& budget;
    long long nodes = 0;
    std::vector<std::vector<Int>> chosen;
    std::set<std::vector<Int>> span;
    std::vector<std::vector<Int>> elements2;

    bool extend_span(const std::vector<Int>& x, Int needed) {
        // span of <span, x>; prune unless it has exactly `needed` elements
        std::set<std::vector<Int>> bigger;
        Int ordx = element_order(q2, x);
        std::vector<Int> tx(x.size(), 0);
        for (Int t = 0; t < ordx; ++t) {
            for (const auto& s : span) bigger.insert(add_elts(q2, s, tx));
            tx = add_elts(q2, tx, x);
        }
        if (Int(long(bigger.size())) != needed) return false;
        span.swap(bigger);
        return true;
    }

    bool rec(int depth) {
        if (depth == q1.generators()) return true;
        std::vector<Int> e(q1.generators(), 0);
        e[depth] = 1;
        Rat target_q = q_value(q1, e);
        Int target_ord = q1.orders[depth];
        Int needed = 1;
        for (int j = 0; j <= depth; ++j) needed *= q1.orders[j];
        for (const auto& x : elements2) {
            if (++nodes > budget.nodes) throw budget_error("isomorphism search undecided within budget");
            if (element_order(q2, x) != target_ord) continue;
            if (q_value(q2, x) != target_q) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) {
                std::vector<Int> ej(q1.generators(), 0);
                ej[j] = 1;
                if (b_value(q2, x, chosen[j]) != b_value(q1, e, ej)) ok = false;
            }
            if (!ok) continue;
            auto saved_span = span;
            if (!extend_span(x, needed)) {
                span = std::move(saved_span);
                continue;
            }
            chosen.push_back(x);
            if (rec(depth + 1)) return true;
            chosen.pop_back();
            span = std::move(saved_span);
        }
        return false;
    }
};

}  // namespace

bool forms_isomorphic(const FiniteQuadraticForm& q1, const FiniteQuadraticForm& q2,
                      const SearchBudget& budget) {
    if (q1.orders != q2.orders) return false;
    if (q1.trivial()) return true;
    if (q1.gram == q2.gram) return true;
    if (fingerprint(q1, budget) != fingerprint(q2, budget)) return false;
    IsoSearch s{q1, q2, budget};
    s.elements2 = all_elements(q2, budget);
    s.span.insert(std::vector<Int>(q2.generators(), 0));
    return s.rec(0);
}

std::optional<std::vector<std::vector<Int>>> isomorphism_witness(const FiniteQuadraticForm& q1,
                                                                 const FiniteQuadraticForm& q2,
                                                                 const SearchBudget& budget) {
    if (q1.orders != q2.orders) return std::nullopt;
    if (q1.trivial()) return std::vector<std::vector<Int>>{};
    if (fingerprint(q1, budget) != fingerprint(q2, budget)) return std::nullopt;
    IsoSearch s{q1, q2, budget};
    s.elements2 = all_elements(q2, budget);
    s.span.insert(std::vector<Int>(q2.generators(), 0));
    if (!s.rec(0)) return std::nullopt;
    return s.chosen;
}

// ---------------------------------------------------------------------------
// Milgram signature via exact cyclotomic arithmetic.

namespace {

using Poly = std::vector<Int>;  // coefficient vector, index = exponent

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul_mod_xn(const Poly& a, const Poly& b, long n) {
    Poly r(size_t(n), Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[(i + j) % size_t(n)] += a[i] * b[j];
        }
    }
    return r;
}

// remainder of a by monic divisor d
Poly poly_rem_monic(Poly a, const Poly& d) {
    poly_trim(a);
    long dd = long(d.size()) - 1;
    while (long(a.size()) - 1 >= dd) {
        Int c = a.back();
        long shift = long(a.size()) - 1 - dd;
        if (c != 0)
            for (long i = 0; i <= dd; ++i) a[size_t(shift + i)] -= c * d[size_t(i)];
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// exact quotient a / d for monic d dividing a
Poly poly_div_monic(Poly a, const Poly& d) {
    poly_trim(a);
    long dd = long(d.size()) - 1;
    if (a.empty()) return {};
    Poly q(a.size() - size_t(dd), Int(0));
    while (long(a.size()) - 1 >= dd) {
        Int c = a.back();
        long shift = long(a.size()) - 1 - dd;
        q[size_t(shift)] = c;
        if (c != 0)
            for (long i = 0; i <= dd; ++i) a[size_t(shift + i)] -= c * d[size_t(i)];
        a.pop_back();
        poly_trim(a);
    }
    if (!a.empty()) throw error("non-exact polynomial division");
    return q;
}

Poly cyclotomic(long n, std::map<long, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly f(size_t(n) + 1, Int(0));
    f[0] = -1;
    f[size_t(n)] = 1;  // x^n - 1
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        f = poly_div_monic(std::move(f), cyclotomic(d, memo));
    }
    memo[n] = f;
    return f;
}

}  // namespace

int milgram_signature(const FiniteQuadraticForm& q, const SearchBudget& budget) {
    if (q.trivial()) return 0;
    Int lcm_orders = 1;
    for (const Int& d : q.orders) lcm_orders = lcm(lcm_orders, d);
    if (!lcm_orders.fits_slong_p()) throw budget_error("cyclotomic order too large");
    long bigd = lcm_orders.get_si();
    long n = 2 * bigd;

    // Gauss sum as an element of Z[x]/(x^n - 1), x = exp(pi*i/bigd).
    Poly gauss(size_t(n), Int(0));
    for (const auto& a : all_elements(q, budget)) {
        Rat v = q_value(q, a);  // in [0, 2), denominator divides bigd
        v *= bigd;
        v.canonicalize();
        if (v.get_den() != 1) throw error("q-value with denominator not dividing lcm of orders");
        gauss[size_t(v.get_num().get_si())] += 1;
    }

    // |A| = prod over p of p^{e_p}; sqrt factors enter through quadratic
    // Gauss sums g_p (= sqrt(p) for p=1 mod 4, i*sqrt(p) for p=3 mod 4).
    std::map<Int, long> e;
    for (Int d : q.orders) {
        for (Int p = 2; p * p <= d; ++p)
            while (d % p == 0) {
                ++e[p];
                d /= p;
            }
        if (d > 1) ++e[d];
    }
    Int r = 1;
    long c = 0;
    bool eps2 = false;
    Poly base(1, Int(1));
    for (const auto& [p, ep] : e) {
        for (long i = 0; i < ep / 2; ++i) r *= p;
        if (ep % 2 == 0) continue;
        if (p == 2) {
            eps2 = true;
            continue;
        }
        if (mod_floor(p, 4) == 3) ++c;
        Poly gp(size_t(n), Int(0));
        long step = n / p.get_si();
        for (Int t = 1; t < p; ++t)
            gp[size_t(step * t.get_si())] += legendre(t, p);
        base = poly_mul_mod_xn(base, gp, n);
    }
    {
        Poly rp(1, r);
        base = poly_mul_mod_xn(base, rp, n);
    }

    std::map<long, Poly> memo;
    Poly phi = cyclotomic(n, memo);

    int found = -1;
    for (int s = 0; s < 8; ++s) {
        long t = ((s - 2 * c) % 8 + 8) % 8;
        // factor (sqrt 2)^eps2 * zeta_8^t, written in Q(zeta_n) when possible
        // (candidates outside the field cannot be the Gauss sum and are skipped)
        Poly f;
        if (eps2) {
            if (t % 2 == 1) {
                // sqrt(2) zeta_8^t = +-1 +- i
                if (n % 4 != 0) continue;
                long i4 = n / 4;
                f.assign(size_t(i4) + 1, Int(0));
                f[0] = (t == 1 || t == 7) ? 1 : -1;
                f[size_t(i4)] = (t == 1 || t == 3) ? 1 : -1;
            } else {
                // sqrt(2) i^(t/2) with sqrt(2) = zeta_8 + zeta_8^-1
                if (n % 8 != 0) continue;
                long i8 = n / 8;
                Poly sqrt2(size_t(7 * i8) + 1, Int(0));
                sqrt2[size_t(i8)] = 1;
                sqrt2[size_t(7 * i8)] = 1;
                Poly rot(size_t(t / 2 * (n / 4)) + 1, Int(0));
                rot[size_t(t / 2 * (n / 4))] = 1;
                f = poly_mul_mod_xn(sqrt2, rot, n);
            }
        } else {
            if (t == 0) {
                f = {Int(1)};
            } else if (t == 4) {
                f = {Int(-1)};
            } else if (t % 2 == 0) {
                if (n % 4 != 0) continue;
                f.assign(size_t(n / 4) + 1, Int(0));
                f[size_t(n / 4)] = (t == 2) ? 1 : -1;
            } else {
                // bare zeta_8^t
                if (n % 8 != 0) continue;
                f.assign(size_t(t * (n / 8)) + 1, Int(0));
                f[size_t(t * (n / 8))] = 1;
            }
        }
        Poly cand = poly_mul_mod_xn(base, f, n);
        Poly diff(size_t(n), Int(0));
        for (size_t i = 0; i < size_t(n); ++i)
            diff[i] = gauss[i] - (i < cand.size() ? cand[i] : Int(0));
        if (poly_rem_monic(std::move(diff), phi).empty()) {
            if (found >= 0) throw error("Gauss sum matched two signature classes");
            found = s;
        }
    }
    if (found < 0) throw error("Gauss sum matched no signature class");
    return found;
}

// ---------------------------------------------------------------------------
// Generator blocks and decompositions.

FiniteQuadraticForm block_form(const GeneratorBlock& b) {
    if (b.kind == 'w') {
        if (b.k < 1) throw error("block scale must be >= 1");
        Int pk = 1;
        for (int i = 0; i < b.k; ++i) pk *= b.p;
        RatMat g(1, 1);
        if (b.p == 2) {
            if (b.eps != 1 && b.eps != -1 && b.eps != 5 && b.eps != -5)
                throw error("w(2,k,eps) requires eps in {1,-1,5,-5}");
            g(0, 0) = reduce_diag(Rat(b.eps) / Rat(pk));
        } else {
            if (!is_prime_small(b.p) || b.p % 2 == 0) throw error("w block needs an odd prime");
            if (b.eps != 1 && b.eps != -1) throw error("w(p,k,eps) requires eps = +-1 for odd p");
            // smallest even a with Legendre(a, p) = eps
            Int a = 2;
            while (legendre(a, b.p) != b.eps) a += 2;
            g(0, 0) = reduce_diag(Rat(a) / Rat(pk));
        }
        return make_form({pk}, g);
    }
    if (b.kind == 'u' || b.kind == 'v') {
        if (b.k < 1) throw error("block scale must be >= 1");
        Int pk = 1;
        for (int i = 0; i < b.k; ++i) pk *= 2;
        RatMat g(2, 2);
        Rat inv = Rat(1) / Rat(pk);
        if (b.kind == 'u') {
            g(0, 1) = g(1, 0) = inv;
        } else {
            g(0, 0) = g(1, 1) = reduce_diag(2 * inv);
            g(0, 1) = g(1, 0) = inv;
        }
        return make_form({pk, pk}, g);
    }
    throw error("unknown block kind");
}

FiniteQuadraticForm blocks_form(const std::vector<GeneratorBlock>& bs) {
    FiniteQuadraticForm acc{{}, RatMat(0, 0)};
    for (const auto& b : bs) acc = direct_sum(acc, block_form(b));
    return acc;
}

namespace {

bool block_less(const GeneratorBlock& a, const GeneratorBlock& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.k != b.k) return a.k < b.k;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.eps < b.eps;
}

// All block multisets matching a p-group with cyclic factors p^{ks[i]}.
void candidates_rec(const Int& p, const std::vector<int>& ks, size_t i,
                    std::vector<GeneratorBlock>& cur, std::vector<std::vector<GeneratorBlock>>& out,
                    std::vector<bool>& used) {
    while (i < ks.size() && used[i]) ++i;
    if (i == ks.size()) {
        auto sorted = cur;
        std::sort(sorted.begin(), sorted.end(), block_less);
        if (std::find(out.begin(), out.end(), sorted) == out.end()) out.push_back(sorted);
        return;
    }
    used[i] = true;
    if (p == 2) {
        std::vector<int> epss = ks[i] == 1 ? std::vector<int>{1, -1} : std::vector<int>{1, -1, 5, -5};
        for (int eps : epss) {
            cur.push_back({'w', p, ks[i], eps});
            candidates_rec(p, ks, i + 1, cur, out, used);
            cur.pop_back();
        }
        // pair with a later factor of the same scale as u_k or v_k
        for (size_t j = i + 1; j < ks.size(); ++j) {
            if (used[j] || ks[j] != ks[i]) continue;
            used[j] = true;
            for (char kind : {'u', 'v'}) {
                cur.push_back({kind, Int(2), ks[i], 0});
                candidates_rec(p, ks, i + 1, cur, out, used);
                cur.pop_back();
            }
            used[j] = false;
            break;  // same-scale factors are interchangeable
        }
    } else {
        for (int eps : {1, -1}) {
            cur.push_back({'w', p, ks[i], eps});
            candidates_rec(p, ks, i + 1, cur, out, used);
            cur.pop_back();
        }
    }
    used[i] = false;
}

std::vector<std::vector<GeneratorBlock>> p_candidates(const FiniteQuadraticForm& qp, const Int& p) {
    std::vector<int> ks;
    for (const Int& d : qp.orders) {
        Int v = d;
        int k = 0;
        while (v % p == 0) {
            ++k;
            v /= p;
        }
        if (v != 1) throw error("p-part has a factor with mixed order");
        ks.push_back(k);
    }
    std::vector<std::vector<GeneratorBlock>> out;
    std::vector<GeneratorBlock> cur;
    std::vector<bool> used(ks.size(), false);
    candidates_rec(p, ks, 0, cur, out, used);
    return out;
}

}  // namespace

std::vector<std::vector<GeneratorBlock>> all_block_decompositions(const FiniteQuadraticForm& q,
                                                                  const Int& p,
                                                                  const SearchBudget& budget) {
    FiniteQuadraticForm qp = p_part(q, p);
    std::vector<std::vector<GeneratorBlock>> hits;
    for (const auto& cand : p_candidates(qp, p))
        if (forms_isomorphic(qp, blocks_form(cand), budget)) hits.push_back(cand);
    return hits;
}

std::vector<GeneratorBlock> block_decomposition(const FiniteQuadraticForm& q,
                                                const SearchBudget& budget) {
    std::vector<GeneratorBlock> blocks;
    for (const Int& p : primes_of(q)) {
        FiniteQuadraticForm qp = p_part(q, p);
        bool found = false;
        for (const auto& cand : p_candidates(qp, p)) {
            if (forms_isomorphic(qp, blocks_form(cand), budget)) {
                blocks.insert(blocks.end(), cand.begin(), cand.end());
                found = true;
                break;
            }
        }
        if (!found) throw error("no block decomposition found for a p-part");
    }
    std::sort(blocks.begin(), blocks.end(), block_less);
    if (!forms_isomorphic(q, blocks_form(blocks), budget))
        throw error("block decomposition failed round-trip verification");
    return blocks;
}

// ---------------------------------------------------------------------------
// Form-expression grammar.

namespace {

struct FormParser {
    const std::string& s;
    size_t i = 0;

    explicit FormParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && isdigit(s[i])) ++i;
        if (i == start || (i == start + 1 && !isdigit(s[start])))
            throw error("expected integer in form expression at position " + std::to_string(start));
        return std::stol(s.substr(start, i - start));
    }

    // one block plus multiplicity
    void parse_term(std::vector<GeneratorBlock>& out) {
        skip_ws();
        long mult = 1;
        if (i < s.size() && isdigit(s[i])) mult = parse_int();
        skip_ws();
        if (i >= s.size()) throw error("dangling multiplicity in form expression");
        if (s.compare(i, 4, "triv") == 0) {
            i += 4;
            return;
        }
        if (s[i] == '<') {
            ++i;
            long z = parse_int();
            if (z != 0 || !eat('>')) throw error("only <0> denotes the trivial form");
            return;
        }
        char kind = s[i];
        if (kind != 'w' && kind != 'u' && kind != 'v')
            throw error(std::string("unknown block kind '") + kind + "' in form expression");
        ++i;
        GeneratorBlock b{kind, Int(2), 1, 0};
        if (kind == 'w') {
            if (!eat('(')) throw error("w block needs (p,k,eps)");
            b.p = Int(parse_int());
            if (!eat(',')) throw error("w block needs (p,k,eps)");
            b.k = int(parse_int());
            if (!eat(',')) throw error("w block needs (p,k,eps)");
            long eps = parse_int();
            if (!eat(')')) throw error("w block needs (p,k,eps)");
            b.eps = normalize_eps(b.p, b.k, eps);
        } else if (eat('(')) {
            b.k = int(parse_int());
            if (!eat(')')) throw error("u/v block scale needs closing parenthesis");
        }
        for (long m = 0; m < mult; ++m) out.push_back(b);
    }

    static int normalize_eps(const Int& p, int k, long eps) {
        if (eps % 2 == 0 && p == 2) throw error("eps must be odd for w(2,k,eps)");
        if (p != 2) {
            if (eps == 1 || eps == -1) return int(eps);
            throw error("eps must be +-1 for odd p");
        }
        // The form w_{2,k}^eps depends on eps mod 2^{k+1}; normalize into
        // the representatives {1,-1,5,-5} (the (w_{2,2}^3)^2 reading,
        // where 3 = -5 mod 8).
        Int mod = 1;
        for (int t = 0; t < k + 1; ++t) mod *= 2;
        Int target = mod_floor(Int(eps), mod);
        for (int rep : {1, -1, 5, -5})
            if (mod_floor(Int(rep), mod) == target) return rep;
        throw error("eps " + std::to_string(eps) + " is not +-1 or +-5 modulo 2^" +
                    std::to_string(k + 1));
    }

    std::vector<GeneratorBlock> parse() {
        std::vector<GeneratorBlock> out;
        parse_term(out);
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (!eat('+')) throw error("unexpected character in form expression: " + s.substr(i));
            parse_term(out);
        }
        std::sort(out.begin(), out.end(), block_less);
        return out;
    }
};

}  // namespace

FiniteQuadraticForm parse_form(const std::string& text) {
    FormParser p(text);
    return blocks_form(p.parse());
}

std::string print_form(const std::vector<GeneratorBlock>& blocks) {
    if (blocks.empty()) return "triv";
    auto sorted = blocks;
    std::sort(sorted.begin(), sorted.end(), block_less);
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < sorted.size()) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (!first) os << "+";
        first = false;
        if (j - i > 1) os << (j - i);
        const auto& b = sorted[i];
        if (b.kind == 'w')
            os << "w(" << b.p << "," << b.k << "," << b.eps << ")";
        else if (b.k == 1)
            os << b.kind;
        else
            os << b.kind << "(" << b.k << ")";
        i = j;
    }
    return os.str();
}

std::string print_form(const FiniteQuadraticForm& q, const SearchBudget& budget) {
    return print_form(block_decomposition(q, budget));
}

std::string pretty_form(const std::vector<GeneratorBlock>& blocks) {
    if (blocks.empty()) return "<0>";
    auto sorted = blocks;
    std::sort(sorted.begin(), sorted.end(), block_less);
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < sorted.size()) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (!first) os << " + ";
        first = false;
        if (j - i > 1) os << (j - i);
        const auto& b = sorted[i];
        if (b.kind == 'w')
            os << "w_{" << b.p << "," << b.k << "}^{" << b.eps << "}";
        else
            os << b.kind << "_" << b.k;
        i = j;
    }
    return os.str();
}

}  // namespace mirrorlat
