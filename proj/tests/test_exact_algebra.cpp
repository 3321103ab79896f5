#include "doctest.h"

#include "heckelab/errors.hpp"
#include "heckelab/jet_laurent_matrix.hpp"
#include "testutil.hpp"

using namespace heckelab;
using testutil::frac;
using testutil::mat;
using testutil::mono;

TEST_CASE("rational strings round-trip in lowest terms") {
  CHECK(rational_to_string(rational_from_string("3/6")) == "1/2");
  CHECK(rational_to_string(rational_from_string("-4/2")) == "-2");
  CHECK(rational_to_string(rational_from_string("0")) == "0");
  CHECK(rational_to_string(rational_from_string("7")) == "7");
  CHECK_THROWS_AS(rational_from_string("2/-4"), SchemaError);
  CHECK_THROWS_AS(rational_from_string("1/0"), SchemaError);
  CHECK_THROWS_AS(rational_from_string("1.5"), SchemaError);
  CHECK_THROWS_AS(rational_from_string(""), SchemaError);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), SchemaError);
}

TEST_CASE("rational floor matches the halving staircase") {
  CHECK(rational_floor(frac(7, 2)) == 3);
  CHECK(rational_floor(frac(-7, 2)) == -4);
  CHECK(rational_floor(frac(6, 2)) == 3);
  CHECK(rational_floor(frac(-6, 2)) == -3);
  CHECK(rational_is_integer(frac(6, 2)));
  CHECK(!rational_is_integer(frac(7, 2)));
}

TEST_CASE("gaussian rational field axioms on a spot check") {
  Scalar a(frac(1, 2), frac(3, 1));
  Scalar b(frac(-2, 3), frac(1, 5));
  CHECK(a * b == b * a);
  CHECK(a * (b + Scalar::one()) == a * b + a);
  CHECK(a * a.inverse() == Scalar::one());
  CHECK(Scalar::unit_i() * Scalar::unit_i() == -Scalar::one());
  CHECK_THROWS_AS(Scalar().inverse(), DomainError);
}

TEST_CASE("scalar rendering") {
  CHECK(scalar_to_string(Scalar(frac(1, 2))) == "1/2");
  CHECK(scalar_to_string(Scalar(frac(0), frac(-2))) == "-2i");
  CHECK(scalar_to_string(Scalar(frac(1), frac(1, 3))) == "1+1/3i");
  CHECK(scalar_to_string(Scalar(frac(1), frac(-1, 3))) == "1-1/3i");
  CHECK(scalar_to_string(Scalar()) == "0");
}

TEST_CASE("jet polynomial arithmetic truncates above the jet order") {
  JetLaurentPoly p = mono(2, 0, 1) + mono(2, -1, 0);  // x + t^-1
  JetLaurentPoly q = p * p;                           // x^2 + 2x/t + t^-2
  CHECK(q.coeff(0, 2) == Scalar::one());
  CHECK(q.coeff(-1, 1) == Scalar(2));
  CHECK(q.coeff(-2, 0) == Scalar::one());
  JetLaurentPoly cube = q * p;  // x^3 dies at jet order 2
  CHECK(cube.coeff(0, 3).is_zero());
  CHECK(cube.coeff(-1, 2) == Scalar(3));
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(mono(1, 0) + mono(2, 0), DomainError);
}

TEST_CASE("x division demands divisibility") {
  JetLaurentPoly p = mono(2, 3, 1) + mono(2, 0, 2);
  JetLaurentPoly q = p.divide_by_x();
  CHECK(q.coeff(3, 0) == Scalar::one());
  CHECK(q.coeff(0, 1) == Scalar::one());
  CHECK_THROWS_AS((p + mono(2, 0, 0)).divide_by_x(), DomainError);
  // Multiplying by x pushes the deepest layer past the jet order, so the
  // round trip keeps only the rest.
  CHECK(p.times_x().divide_by_x() == mono(2, 3, 1));
}

TEST_CASE("restriction to x = 0 is a ring map") {
  JetLaurentPoly p = mono(3, 1, 0) + mono(3, 0, 1);
  JetLaurentPoly q = mono(3, -1, 0) + mono(3, 2, 2);
  CHECK((p * q).substitute_x_zero() ==
        p.substitute_x_zero() * q.substitute_x_zero());
  CHECK(p.substitute_x_zero().jet_order() == 0);
  CHECK(p.substitute_x_zero().x_free());
}

TEST_CASE("polynomiality predicates") {
  CHECK(mono(0, 2).polynomial_in_t());
  CHECK(!mono(0, -1).polynomial_in_t());
  CHECK(mono(0, -2).polynomial_in_t_inverse());
  CHECK(mono(0, 0).is_nonzero_constant());
  CHECK(!(mono(0, 0) + mono(0, 1)).is_nonzero_constant());
  JetLaurentPoly p = mono(0, -2) + mono(0, 5);
  CHECK(p.min_t_exp() == -2);
  CHECK(p.max_t_exp() == 5);
  CHECK_THROWS_AS(JetLaurentPoly(0).min_t_exp(), DomainError);
}

TEST_CASE("determinant agrees with the permutation expansion on 3x3") {
  // det [[t,1,0],[x,1/t,1],[0,2,t]] = t*(1 - 2) - (x*t - 0) = -t - x*t.
  JetLaurentMatrix m = mat(1, {{mono(1, 1), mono(1, 0), JetLaurentPoly(1)},
                               {mono(1, 0, 1), mono(1, -1), mono(1, 0)},
                               {JetLaurentPoly(1), mono(1, 0, 0, 2), mono(1, 1)}});
  JetLaurentPoly d = m.det();
  JetLaurentPoly expect = -(mono(1, 1) + mono(1, 1, 1));
  CHECK(d == expect);
}

TEST_CASE("determinant is multiplicative") {
  JetLaurentMatrix a = mat(2, {{mono(2, 1), mono(2, 0, 1)},
                               {mono(2, 0), mono(2, -1)}});
  JetLaurentMatrix b = mat(2, {{mono(2, 0), mono(2, 2)},
                               {mono(2, -2, 2), mono(2, 0, 0, -1, 3)}});
  CHECK((a * b).det() == a.det() * b.det());
}

TEST_CASE("inverse is two-sided modulo the jet") {
  JetLaurentMatrix m = mat(2, {{mono(2, 1), mono(2, 0, 1)},
                               {JetLaurentPoly(2), mono(2, -1)}});
  JetLaurentMatrix inv = m.invert();
  JetLaurentMatrix id = JetLaurentMatrix::identity(2, 2);
  CHECK(m * inv == id);
  CHECK(inv * m == id);
}

TEST_CASE("inverse rejects transitions that degenerate on the line") {
  // det = t - t = 0 at x = 0.
  JetLaurentMatrix m = mat(1, {{mono(1, 1), mono(1, 0)},
                               {mono(1, 1), mono(1, 0)}});
  m.at(0, 0) += mono(1, 0, 1);
  CHECK_THROWS_AS(m.invert(), InvalidBundleError);
}

TEST_CASE("inverse handles deep x tails exactly") {
  JetLaurentMatrix m = JetLaurentMatrix::identity(3, 3);
  m.at(0, 1) += mono(3, -2, 1, 1, 2);
  m.at(1, 2) += mono(3, 4, 2, -3);
  m.at(2, 0) += mono(3, 0, 1) + mono(3, 1, 3);
  m.at(0, 0) += mono(3, 0, 2, 5);
  JetLaurentMatrix inv = m.invert();
  CHECK(m * inv == JetLaurentMatrix::identity(3, 3));
  CHECK(inv * m == JetLaurentMatrix::identity(3, 3));
}
