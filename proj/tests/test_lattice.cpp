#include <doctest.h>

#include "mirrorlat/lattice.hpp"

#include <random>

using namespace mirrorlat;

namespace {

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    IntMat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("named lattice constructors") {
    SUBCASE("U") {
        Lattice u = lattice_U();
        CHECK(u.gram == from_rows({{0, 1}, {1, 0}}));
        CHECK(u.t_plus == 1);
        CHECK(u.t_minus == 1);
        CHECK(discriminant_form(u).trivial());
    }
    SUBCASE("U(2)") {
        Lattice u2 = parse_lattice("U(2)");
        CHECK(u2.gram == from_rows({{0, 2}, {2, 0}}));
        CHECK(forms_isomorphic(discriminant_form(u2), parse_form("u")));
    }
    SUBCASE("H5") {
        Lattice h5 = parse_lattice("H5");
        CHECK(h5.t_plus == 1);
        CHECK(h5.t_minus == 1);
        CHECK(abs(lattice_det(h5)) == 5);
        CHECK(forms_isomorphic(discriminant_form(h5), parse_form("w(5,1,-1)")));
    }
    SUBCASE("T(4,4,4)") {
        Lattice t = parse_lattice("T(4,4,4)");
        CHECK(t.rank() == 10);
        CHECK(t.t_plus == 1);
        CHECK(t.t_minus == 9);
        CHECK(abs(lattice_det(t)) == 16);
    }
    SUBCASE("T determinant law for 2 <= p,q,r <= 6") {
        for (int p = 2; p <= 6; ++p)
            for (int q = 2; q <= 6; ++q)
                for (int r = 2; r <= 6; ++r) {
                    long expect = labs(long(p * q * r - p * q - q * r - p * r));
                    if (expect == 0) {
                        // affine T graphs are degenerate and rejected
                        CHECK_THROWS_AS(lattice_T(p, q, r), const error&);
                        continue;
                    }
                    CHECK(abs(lattice_det(lattice_T(p, q, r))) == expect);
                }
    }
    SUBCASE("E8 is unimodular negative definite") {
        Lattice e8 = parse_lattice("E8");
        CHECK(e8.rank() == 8);
        CHECK(e8.t_plus == 0);
        CHECK(abs(lattice_det(e8)) == 1);
        CHECK(discriminant_form(e8).trivial());
    }
    SUBCASE("invalid parameters are rejected") {
        CHECK_THROWS_AS(lattice_A(0), const error&);
        CHECK_THROWS_AS(lattice_D(3), const error&);
        CHECK_THROWS_AS(lattice_E(5), const error&);
        CHECK_THROWS_AS(lattice_H(7), const error&);
        CHECK_THROWS_AS(lattice_T(1, 4, 4), const error&);
        CHECK_THROWS_AS(lattice_scalar(3), const error&);
        CHECK_THROWS_AS(lattice_scalar(0), const error&);
    }
}

TEST_CASE("direct sum and twist") {
    Lattice ua2 = parse_lattice("U+A2");
    CHECK(ua2.rank() == 4);
    CHECK(ua2.t_plus == 1);
    CHECK(ua2.t_minus == 3);
    CHECK(abs(lattice_det(ua2)) == 3);

    Lattice a12 = parse_lattice("A1(2)");
    CHECK(a12.gram == from_rows({{-4}}));

    Lattice neg = twist(parse_lattice("U+A2"), -1);
    CHECK(neg.t_plus == 3);
    CHECK(neg.t_minus == 1);

    CHECK(parse_lattice("2*A2").rank() == 4);
    CHECK(parse_lattice("<-8>").gram == from_rows({{-8}}));
}

TEST_CASE("discriminant forms of the reference lattices") {
    CHECK(forms_isomorphic(discriminant_form(parse_lattice("A2")), parse_form("w(3,1,1)")));
    FiniteQuadraticForm a2 = discriminant_form(parse_lattice("A2"));
    CHECK(q_value(a2, {1}) == Rat(4, 3));  // value on the generator
    CHECK(forms_isomorphic(discriminant_form(parse_lattice("E7")), parse_form("w(2,1,1)")));
    CHECK(forms_isomorphic(discriminant_form(parse_lattice("U+D4")), parse_form("v")));
    CHECK(forms_isomorphic(discriminant_form(parse_lattice("T(3,4,4)")), parse_form("w(2,3,5)")));
    CHECK(discriminant_form(parse_lattice("U")).trivial());
}

TEST_CASE("same discriminant group, different forms") {
    // U+D5+D5 and U+A3+D7 both have group (Z/4)^2
    FiniteQuadraticForm q1 = discriminant_form(parse_lattice("U+2*D5"));
    FiniteQuadraticForm q2 = discriminant_form(parse_lattice("U+A3+D7"));
    CHECK(q1.orders == std::vector<Int>{4, 4});
    CHECK(q2.orders == std::vector<Int>{4, 4});
    CHECK_FALSE(forms_isomorphic(q1, q2));
    CHECK(forms_isomorphic(q1, parse_form("2w(2,2,3)")));
    CHECK(forms_isomorphic(q2, parse_form("w(2,2,1)+w(2,2,5)")));
}

TEST_CASE("milgram signature matches t+ - t- for constructors and random sums") {
    std::vector<std::string> names = {"U",  "U(2)", "A1", "A2", "A3",       "A1(2)",    "D4",
                                      "D5", "D6",   "D9", "E6", "E7",       "E8",       "H5",
                                      "L9", "M9",   "<2>", "<4>", "<8>",    "<-8>",
                                      "T(4,4,4)",   "T(3,4,4)", "T(2,5,6)"};
    for (const auto& n : names) {
        Lattice l = parse_lattice(n);
        int expect = ((l.t_plus - l.t_minus) % 8 + 8) % 8;
        CHECK_MESSAGE(milgram_signature(discriminant_form(l)) == expect, n);
    }
    std::mt19937 rng(4242);
    for (int t = 0; t < 25; ++t) {
        std::string expr = names[rng() % names.size()];
        int k = 1 + int(rng() % 3);
        for (int i = 0; i < k; ++i) expr += "+" + names[rng() % names.size()];
        Lattice l = parse_lattice(expr);
        int expect = ((l.t_plus - l.t_minus) % 8 + 8) % 8;
        CHECK_MESSAGE(milgram_signature(discriminant_form(l)) == expect, expr);
    }
}

TEST_CASE("sublattice_from_generators") {
    SUBCASE("single -2 vector") {
        Lattice amb = parse_lattice("U+A2");
        IntMat g = from_rows({{0, 0, 1, 0}});
        auto [sub, kept] = sublattice_from_generators(amb, g);
        CHECK(sub.gram == from_rows({{-2}}));
        CHECK(kept == std::vector<int>{0});
    }
    SUBCASE("duplicates keep the first") {
        Lattice amb = parse_lattice("U+A2");
        IntMat g = from_rows({{0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        auto [sub, kept] = sublattice_from_generators(amb, g);
        CHECK(kept == std::vector<int>{0, 2});
        CHECK(sub.gram == parse_lattice("A2").gram);
    }
    SUBCASE("all zero is an error") {
        Lattice amb = parse_lattice("U");
        CHECK_THROWS_AS(sublattice_from_generators(amb, IntMat(2, 2)), const error&);
    }
}

TEST_CASE("is_primitive_sublattice") {
    Lattice z2 = make_lattice(from_rows({{2, 0}, {0, 2}}));  // even stand-in for Z^2
    CHECK(is_primitive_sublattice(z2, from_rows({{1, 0}})));
    CHECK_FALSE(is_primitive_sublattice(z2, from_rows({{2, 0}})));
    CHECK(is_primitive_sublattice(z2, from_rows({{2, 1}})));
    CHECK_THROWS_AS(is_primitive_sublattice(z2, IntMat(1, 3)), const error&);
}

TEST_CASE("lattice grammar and gram json") {
    CHECK(gram_json(parse_lattice("U")) == "[[0,1],[1,0]]");
    CHECK(gram_json(parse_lattice("<2>")) == "[[2]]");
    // parse errors
    CHECK_THROWS_AS(parse_lattice("Q5"), const error&);
    CHECK_THROWS_AS(parse_lattice("T(3,4)"), const error&);
    CHECK_THROWS_AS(parse_lattice("U+"), const error&);
    CHECK_THROWS_AS(parse_lattice("<3>"), const error&);
}

TEST_CASE("every constructor output is even symmetric nondegenerate") {
    std::mt19937 rng(2024);
    std::vector<std::string> names = {"U", "A5", "D8", "E6", "H13", "L9", "M9", "T(2,3,7)", "<6>"};
    for (const auto& n : names) {
        Lattice l = parse_lattice(n);
        CHECK(l.t_plus + l.t_minus == l.rank());
        for (int i = 0; i < l.rank(); ++i) {
            CHECK(l.gram(i, i) % 2 == 0);
            for (int j = 0; j < l.rank(); ++j) CHECK(l.gram(i, j) == l.gram(j, i));
        }
        CHECK(lattice_det(l) != 0);
    }
}
