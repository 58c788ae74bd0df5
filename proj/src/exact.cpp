#include "mirrorlat/exact.hpp"

#include <algorithm>
#include <sstream>

namespace mirrorlat {

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j);
            v.canonicalize();
            if (v.get_den() != 1) throw error("matrix entry is not an integer: " + v.get_str());
            r(i, j) = v.get_num();
        }
    return r;
}

bool is_integral(const RatMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j);
            v.canonicalize();
            if (v.get_den() != 1) return false;
        }
    return true;
}

template <class T>
static std::string matrix_string(const Mat<T>& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_string(const IntMat& m) { return matrix_string(m); }
std::string to_string(const RatMat& m) { return matrix_string(m); }

IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

IntMat scale(const IntMat& m, const Int& n) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = n * m(i, j);
    return r;
}

Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
    int n = m.rows();
    RatMat w = m;
    Rat result = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (w(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            w.swap_rows(p, c);
            result = -result;
        }
        result *= w(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (w(r, c) == 0) continue;
            Rat f = w(r, c) / w(c, c);
            for (int j = c; j < n; ++j) w(r, j) -= f * w(c, j);
        }
    }
    return result;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    d.canonicalize();
    if (d.get_den() != 1) throw error("integer determinant came out fractional");
    return d.get_num();
}

int rank(const RatMat& m) {
    RatMat w = m;
    int rows = w.rows(), cols = w.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (w(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) w.swap_rows(p, r);
        for (int i = r + 1; i < rows; ++i) {
            if (w(i, c) == 0) continue;
            Rat f = w(i, c) / w(r, c);
            for (int j = c; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        ++r;
    }
    return r;
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw error("inverse of non-square matrix");
    int n = m.rows();
    RatMat w = m;
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (w(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) throw error("matrix is singular");
        if (p != c) {
            w.swap_rows(p, c);
            inv.swap_rows(p, c);
        }
        Rat piv = w(c, c);
        for (int j = 0; j < n; ++j) {
            w(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || w(r, c) == 0) continue;
            Rat f = w(r, c);
            for (int j = 0; j < n; ++j) {
                w(r, j) -= f * w(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool solve_left(const RatMat& a, const RatMat& b, RatMat& x) {
    // Gaussian elimination on a^T augmented with b^T: solve a^T x^T = b^T.
    int n = a.cols();
    if (b.cols() != n) throw error("solve_left shape mismatch");
    int ra = a.rows(), rb = b.rows();
    RatMat w(n, ra + rb);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < ra; ++j) w(i, j) = a(j, i);
        for (int j = 0; j < rb; ++j) w(i, ra + j) = b(j, i);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ra && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (w(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) w.swap_rows(p, r);
        Rat piv = w(r, c);
        for (int j = 0; j < ra + rb; ++j) w(r, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == r || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (int j = 0; j < ra + rb; ++j) w(i, j) -= f * w(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    // Inconsistent if a zero row of the a-part has a nonzero b-part.
    for (int i = r; i < n; ++i)
        for (int j = 0; j < rb; ++j)
            if (w(i, ra + j) != 0) return false;
    x = RatMat(rb, ra);
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < rb; ++j) x(j, pivot_col[k]) = w(k, ra + j);
    return true;
}

Signature signature(const RatMat& sym) {
    if (sym.rows() != sym.cols()) throw error("signature of non-square matrix");
    int n = sym.rows();
    RatMat w = sym;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w(i, j) != w(j, i)) throw error("signature of non-symmetric matrix");
    std::vector<bool> done(n, false);
    Signature sig;
    for (;;) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && w(i, i) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // all active diagonal entries vanish; look for an off-diagonal pair
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j)
                    if (!done[j] && w(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            }
            if (bi < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            // congruence e_i += e_j makes the diagonal entry 2*w(i,j) != 0
            for (int c = 0; c < n; ++c) w(bi, c) += w(bj, c);
            for (int r = 0; r < n; ++r) w(r, bi) += w(r, bj);
            continue;
        }
        Rat piv = w(p, p);
        if (piv > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == p || w(i, p) == 0) continue;
            Rat f = w(i, p) / piv;
            for (int c = 0; c < n; ++c) w(i, c) -= f * w(p, c);
            for (int r = 0; r < n; ++r) w(r, i) -= f * w(r, p);
        }
        done[p] = true;
    }
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    int k = std::min(s.rows(), s.cols());
    d.reserve(k);
    for (int i = 0; i < k; ++i) d.push_back(s(i, i));
    return d;
}

std::vector<Int> SmithDecomposition::nonunit_divisors() const {
    std::vector<Int> d;
    for (const Int& v : diagonal())
        if (v != 0 && v != 1) d.push_back(v);
    return d;
}

SmithDecomposition smith_normal_form(const IntMat& m) {
    int rows = m.rows(), cols = m.cols();
    SmithDecomposition dec{m, IntMat::identity(rows), IntMat::identity(cols)};
    IntMat& s = dec.s;
    IntMat& a = dec.a;
    IntMat& b = dec.b;

    auto pick_pivot = [&](int t, int& pi, int& pj) -> bool {
        pi = -1;
        Int best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (s(i, j) == 0) continue;
                Int v = abs(s(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return pi >= 0;
    };

    int t = 0;
    int kmax = std::min(rows, cols);
    while (t < kmax) {
        int pi, pj;
        if (!pick_pivot(t, pi, pj)) break;
        if (pi != t) {
            s.swap_rows(pi, t);
            a.swap_rows(pi, t);
        }
        if (pj != t) {
            s.swap_cols(pj, t);
            b.swap_cols(pj, t);
        }
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);  // truncated division keeps remainders small
                if (q != 0) {
                    s.row_sub(i, t, q);
                    a.row_sub(i, t, q);
                }
                if (s(i, t) != 0) {
                    // remainder is smaller than the pivot; promote it
                    s.swap_rows(i, t);
                    a.swap_rows(i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                if (q != 0) {
                    s.col_sub(j, t, q);
                    b.col_sub(j, t, q);
                }
                if (s(t, j) != 0) {
                    s.swap_cols(j, t);
                    b.swap_cols(j, t);
                    clean = false;
                }
            }
        }
        ++t;
    }

    // Fix signs.
    for (int i = 0; i < kmax; ++i)
        if (s(i, i) < 0) {
            s.negate_row(i);
            a.negate_row(i);
        }

    // Enforce the divisibility chain d_i | d_{i+1}: replace each offending
    // diagonal pair (di, dj) by (gcd, lcm) via the unimodular identity
    //   [[x, y], [-dj/g, di/g]] * diag(di, dj) * [[1, -y*dj/g], [1, x*di/g]]
    //     = diag(g, di*dj/g)   where g = x*di + y*dj.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < kmax; ++i) {
            for (int j = i + 1; j < kmax; ++j) {
                const Int di = s(i, i), dj = s(j, j);
                if (di == 0 || dj == 0 || dj % di == 0) continue;
                Int g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), di.get_mpz_t(),
                           dj.get_mpz_t());
                Int u = di / g, v = dj / g;
                // rows i, j of s and a
                for (IntMat* m2 : {&s, &a}) {
                    for (int c = 0; c < m2->cols(); ++c) {
                        Int ri = (*m2)(i, c), rj = (*m2)(j, c);
                        (*m2)(i, c) = x * ri + y * rj;
                        (*m2)(j, c) = -v * ri + u * rj;
                    }
                }
                // columns i, j of s and b
                for (IntMat* m2 : {&s, &b}) {
                    for (int r2 = 0; r2 < m2->rows(); ++r2) {
                        Int ci = (*m2)(r2, i), cj = (*m2)(r2, j);
                        (*m2)(r2, i) = ci + cj;
                        (*m2)(r2, j) = -y * v * ci + x * u * cj;
                    }
                }
                changed = true;
            }
        }
    }
    return dec;
}

IntMat hermite_row_basis(const IntMat& m) {
    IntMat h = m;
    int rows = h.rows(), cols = h.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce the column below row r to a single nonzero entry
        for (;;) {
            int p = -1;
            Int best;
            for (int i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                Int v = abs(h(i, c));
                if (p < 0 || v < best) {
                    best = v;
                    p = i;
                }
            }
            if (p < 0) break;
            if (p != r) h.swap_rows(p, r);
            bool more = false;
            for (int i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                h.row_sub(i, r, q);
                if (h(i, c) != 0) more = true;
            }
            if (!more) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) h.negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0) h.row_sub(i, r, q);
        }
        ++r;
    }
    IntMat out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = h(i, j);
    return out;
}

IntMat saturate(const IntMat& generators, int ambient_rank) {
    if (generators.rows() == 0) return IntMat(0, ambient_rank);
    if (generators.cols() != ambient_rank) throw error("saturate: generators have wrong ambient rank");
    SmithDecomposition dec = smith_normal_form(generators);
    int r = 0;
    for (const Int& d : dec.diagonal())
        if (d != 0) ++r;
    // generators = a^-1 * s * b^-1, so the row lattice is spanned by
    // d_i * (row i of b^-1); dropping the d_i saturates it.
    IntMat binv = to_int(inverse(to_rat(dec.b)));
    IntMat out(r, ambient_rank);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < ambient_rank; ++j) out(i, j) = binv(i, j);
    return out;
}

Rat mod_rat(const Rat& x, const Int& m) {
    Rat r = x;
    r.canonicalize();
    // floor(x / m) with exact arithmetic
    Int num = r.get_num(), den = r.get_den();
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Int(den * m).get_mpz_t());
    r -= Rat(q * m);
    r.canonicalize();
    return r;
}

}  // namespace mirrorlat
