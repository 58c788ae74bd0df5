#include "mirrorlat/lattice.hpp"

#include <cctype>
#include <sstream>

namespace mirrorlat {

Lattice make_lattice(const IntMat& gram) {
    if (gram.rows() != gram.cols()) throw error("lattice Gram must be square");
    int n = gram.rows();
    if (n == 0) throw error("lattice must have positive rank");
    for (int i = 0; i < n; ++i) {
        if (gram(i, i) % 2 != 0) throw error("lattice is not even: odd diagonal entry");
        for (int j = 0; j < n; ++j)
            if (gram(i, j) != gram(j, i)) throw error("lattice Gram is not symmetric");
    }
    Signature sig = signature(to_rat(gram));
    if (sig.zero != 0) throw error("lattice Gram is degenerate");
    return Lattice{gram, sig.plus, sig.minus};
}

Int lattice_det(const Lattice& l) { return det(l.gram); }

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    Lattice r;
    r.gram = block_diag(a.gram, b.gram);
    r.t_plus = a.t_plus + b.t_plus;
    r.t_minus = a.t_minus + b.t_minus;
    return r;
}

Lattice twist(const Lattice& l, const Int& n) {
    if (n == 0) throw error("twist by zero is degenerate");
    Lattice r;
    r.gram = scale(l.gram, n);
    r.t_plus = n > 0 ? l.t_plus : l.t_minus;
    r.t_minus = n > 0 ? l.t_minus : l.t_plus;
    return r;
}

namespace {

// path graph with -2 diagonal and +1 on edges
IntMat chain_gram(int n) {
    IntMat g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = -2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
    }
    return g;
}

}  // namespace

Lattice lattice_U() {
    IntMat g(2, 2);
    g(0, 1) = g(1, 0) = 1;
    return make_lattice(g);
}

Lattice lattice_A(int n) {
    if (n < 1) throw error("A_n needs n >= 1");
    return make_lattice(chain_gram(n));
}

Lattice lattice_T(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw error("T(p,q,r) needs p,q,r >= 2");
    int n = p + q + r - 2;
    IntMat g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    int pos = 1;
    for (int leg : {p - 1, q - 1, r - 1}) {
        int prev = 0;  // center
        for (int i = 0; i < leg; ++i) {
            g(prev, pos) = g(pos, prev) = 1;
            prev = pos++;
        }
    }
    return make_lattice(g);
}

Lattice lattice_D(int m) {
    if (m < 4) throw error("D_m needs m >= 4");
    return lattice_T(2, 2, m - 2);
}

Lattice lattice_E(int n) {
    if (n == 6) return lattice_T(2, 3, 3);
    if (n == 7) return lattice_T(2, 3, 4);
    if (n == 8) return lattice_T(2, 3, 5);
    throw error("E_n needs n in {6,7,8}");
}

Lattice lattice_H(const Int& p) {
    if (p < 5 || mod_floor(p, 4) != 1) throw error("H_p needs p = 1 mod 4");
    IntMat g(2, 2);
    g(0, 0) = (p - 1) / 2;
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = -2;
    return make_lattice(g);
}

Lattice lattice_L9() {
    IntMat g(2, 2);
    g(0, 0) = -4;
    g(0, 1) = g(1, 0) = 5;
    g(1, 1) = -4;
    return make_lattice(g);
}

Lattice lattice_M9() {
    IntMat g(2, 2);
    g(0, 0) = -2;
    g(0, 1) = g(1, 0) = 1;
    g(1, 1) = 4;
    return make_lattice(g);
}

Lattice lattice_scalar(const Int& n) {
    if (n == 0 || n % 2 != 0) throw error("<n> needs a nonzero even n");
    IntMat g(1, 1);
    g(0, 0) = n;
    return make_lattice(g);
}

// ---------------------------------------------------------------------------
// Expression grammar.

namespace {

struct LatticeParser {
    const std::string& s;
    size_t i = 0;

    explicit LatticeParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
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
        size_t digits = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw error("expected integer in lattice expression");
        return std::stol(s.substr(start, i - start));
    }

    Lattice parse_atom() {
        skip_ws();
        if (i >= s.size()) throw error("unexpected end of lattice expression");
        if (s[i] == '<') {
            ++i;
            long n = parse_int();
            if (!eat('>')) throw error("unterminated <n>");
            return lattice_scalar(Int(n));
        }
        char c = s[i++];
        Lattice base;
        switch (c) {
            case 'U':
                base = lattice_U();
                break;
            case 'T': {
                if (!eat('(')) throw error("T needs (p,q,r)");
                long p = parse_int();
                if (!eat(',')) throw error("T needs (p,q,r)");
                long q = parse_int();
                if (!eat(',')) throw error("T needs (p,q,r)");
                long r = parse_int();
                if (!eat(')')) throw error("T needs (p,q,r)");
                base = lattice_T(int(p), int(q), int(r));
                break;
            }
            case 'A':
                base = lattice_A(int(parse_plain_int()));
                break;
            case 'D':
                base = lattice_D(int(parse_plain_int()));
                break;
            case 'E':
                base = lattice_E(int(parse_plain_int()));
                break;
            case 'H':
                base = lattice_H(Int(parse_plain_int()));
                break;
            case 'L':
            case 'M': {
                long n = parse_plain_int();
                if (n != 9) throw error("only L9 and M9 are defined");
                base = (c == 'L') ? lattice_L9() : lattice_M9();
                break;
            }
            default:
                throw error(std::string("unknown lattice name starting with '") + c + "'");
        }
        // optional twist suffix (n)
        size_t save = i;
        if (eat('(')) {
            long n = parse_int();
            if (!eat(')')) throw error("unterminated twist suffix");
            base = twist(base, Int(n));
        } else {
            i = save;
        }
        return base;
    }

    long parse_plain_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw error("expected subscript digits in lattice name");
        return std::stol(s.substr(start, i - start));
    }

    Lattice parse_term() {
        skip_ws();
        long mult = 1;
        size_t save = i;
        if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            long n = parse_int();
            if (eat('*')) {
                mult = n;
                if (mult < 1) throw error("multiplicity must be positive");
            } else {
                i = save;
            }
        }
        Lattice atom = parse_atom();
        Lattice acc = atom;
        for (long t = 1; t < mult; ++t) acc = direct_sum(acc, atom);
        return acc;
    }

    Lattice parse() {
        Lattice acc = parse_term();
        for (;;) {
            skip_ws();
            if (i >= s.size()) return acc;
            if (!eat('+')) throw error("unexpected character in lattice expression: " + s.substr(i));
            acc = direct_sum(acc, parse_term());
        }
    }
};

}  // namespace

Lattice parse_lattice(const std::string& text) {
    LatticeParser p(text);
    return p.parse();
}

std::string gram_json(const Lattice& l) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < l.rank(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < l.rank(); ++j) {
            if (j) os << ",";
            os << l.gram(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

FiniteQuadraticForm discriminant_form(const Lattice& l) {
    SmithDecomposition dec = smith_normal_form(l.gram);
    std::vector<Int> divisors;
    std::vector<int> cols;
    for (int i = 0; i < l.rank(); ++i) {
        Int d = dec.s(i, i);
        if (d == 0) throw error("degenerate Gram has no discriminant form");
        if (d != 1) {
            divisors.push_back(d);
            cols.push_back(i);
        }
    }
    if (divisors.empty()) return FiniteQuadraticForm{{}, RatMat(0, 0)};
    // Generators of L*/L: columns of B scaled by 1/d, values via the Gram.
    RatMat sa(l.rank(), int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < l.rank(); ++i) sa(i, int(j)) = Rat(dec.b(i, cols[j])) / Rat(divisors[j]);
    RatMat qmat = sa.transpose() * to_rat(l.gram) * sa;
    return make_form(divisors, qmat);
}

std::pair<Lattice, std::vector<int>> sublattice_from_generators(const Lattice& ambient,
                                                                const IntMat& generators) {
    if (generators.cols() != ambient.rank())
        throw error("generators do not live in the ambient lattice");
    std::vector<int> kept;
    for (int r = 0; r < generators.rows(); ++r) {
        RatMat trial(int(kept.size()) + 1, ambient.rank());
        for (size_t i = 0; i < kept.size(); ++i)
            for (int j = 0; j < ambient.rank(); ++j) trial(int(i), j) = Rat(generators(kept[i], j));
        for (int j = 0; j < ambient.rank(); ++j) trial(int(kept.size()), j) = Rat(generators(r, j));
        if (rank(trial) == int(kept.size()) + 1) kept.push_back(r);
    }
    if (kept.empty()) throw error("all generators are zero");
    IntMat v(int(kept.size()), ambient.rank());
    for (size_t i = 0; i < kept.size(); ++i)
        for (int j = 0; j < ambient.rank(); ++j) v(int(i), j) = generators(kept[i], j);
    IntMat gram = to_int(to_rat(v) * to_rat(ambient.gram) * to_rat(v).transpose());
    return {make_lattice(gram), kept};
}

bool is_primitive_sublattice(const Lattice& ambient, const IntMat& sub) {
    if (sub.cols() != ambient.rank()) throw error("sublattice vectors not contained in ambient");
    SmithDecomposition dec = smith_normal_form(sub);
    for (const Int& d : dec.diagonal())
        if (d != 0 && d != 1) return false;
    return true;
}

}  // namespace mirrorlat
