#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rgpoly/laurent.hpp"

using namespace rgpoly;
using fixtures::c;
using fixtures::v;
using fixtures::vh;

namespace {

// small random Laurent polynomial over the given variables, exponents on the
// half grid in [-2, 2], at most 4 terms
LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vs) {
    LaurentPoly p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (VarId v : vs) {
            int d = static_cast<int>(rng() % 9) - 4;  // doubled exponent
            m = m * Monomial::of(v, HalfInt::halves(d));
        }
        long coeff = static_cast<long>(rng() % 7) - 3;
        p.add_term(Rat(coeff), m);
    }
    return p;
}

RationalPoint random_point(std::mt19937_64& rng, const std::vector<VarId>& vs) {
    RationalPoint pt;
    for (VarId v : vs) {
        long num = 1 + static_cast<long>(rng() % 5);
        long den = 1 + static_cast<long>(rng() % 3);
        Rat q(num, den);
        q.canonicalize();
        pt.assign_half(v, q);
    }
    return pt;
}

}  // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK((v("x") + c(1)) * (v("x") - c(1)) == v("x", 2) - c(1));
    CHECK((v("x") * v("y")).int_pow(-1) == v("x", -1) * v("y", -1));
    CHECK_THROWS_AS((v("x") + c(1)).int_pow(-1), NonMonomialInverse);
    CHECK(v("x").int_pow(0) == c(1));
    CHECK(c(0).is_zero());
    CHECK((v("x") - v("x")).is_zero());
}

TEST_CASE("substitute_monomial") {
    VarId a = var("alpha"), b = var("beta"), g = var("gamma");
    // gamma -> (alpha beta)^(-1/2) applied to beta^2 gamma^2 gives beta/alpha
    LaurentPoly p = v("beta", 2) * v("gamma", 2);
    Monomial root_inv = Monomial::of(a, HalfInt::halves(-1)) * Monomial::of(b, HalfInt::halves(-1));
    CHECK(p.substitute_monomial(g, Rat(1), root_inv) == v("beta") * v("alpha", -1));

    // identity substitution leaves the polynomial unchanged
    LaurentPoly q = v("x", 2) + c(3) * v("x", -1);
    CHECK(q.substitute_monomial(var("x"), Rat(1), Monomial::of(var("x"), 1)) == q);

    // t -> q^2 turns t^(1/2) into q
    LaurentPoly h = vh("t", 1);
    CHECK(h.substitute_monomial(var("t"), Rat(1), Monomial::of(var("q"), 2)) == v("q"));

    // a half power of a half power would leave the half-integer grid
    CHECK_THROWS_AS(vh("t", 1).substitute_monomial(
                        var("t"), Rat(1), Monomial::of(var("q"), HalfInt::halves(1))),
                    FractionalExponentOverflow);
    // non-unit coefficient cannot be raised to a fractional power
    CHECK_THROWS_AS(vh("t", 1).substitute_monomial(var("t"), Rat(4), Monomial::of(var("q"), 2)),
                    FractionalExponentOverflow);
}

TEST_CASE("evaluate") {
    RationalPoint pt;
    pt.assign_half(var("x"), Rat(2));  // x = 4
    CHECK((v("x", 2) - c(1)).evaluate(pt) == Rat(15));
    CHECK(c(7).evaluate(pt) == Rat(7));
    RationalPoint pa;
    pa.assign_half(var("alpha"), Rat(3));  // alpha = 9
    CHECK((v("alpha") + c(1)).evaluate(pa) == Rat(10));
    CHECK_THROWS_AS((v("x") + v("y")).evaluate(pt), UnassignedVariable);
}

TEST_CASE("evaluate_at plain values") {
    VarValues vals;
    vals.assign(var("x"), Rat(3));
    CHECK((v("x", 2) + v("x", -1)).evaluate_at(vals) == Rat(28, 3));
    CHECK_THROWS_AS(vh("x", 1).evaluate_at(vals), FractionalExponentOverflow);
    VarValues empty;
    CHECK_THROWS_AS(v("x").evaluate_at(empty), UnassignedVariable);
}

TEST_CASE("min_degree") {
    CHECK((c(3) + v("alpha", -1)).min_degree(var("alpha")) == HalfInt::whole(-1));
    CHECK(v("x", 2).min_degree(var("x")) == HalfInt::whole(2));
    CHECK(c(5).min_degree(var("x")) == HalfInt::whole(0));
    CHECK_THROWS_AS(LaurentPoly::zero().min_degree(var("x")), ZeroPolynomial);
    CHECK((vh("t", 3) + vh("t", -1)).min_degree(var("t")) == HalfInt::halves(-1));
}

TEST_CASE("canonical text form") {
    CHECK(LaurentPoly::zero().str() == "0");
    CHECK((c(1) + v("beta")).str() == "1 + 1*beta");
    CHECK((c(1) + c(2) * v("beta") + v("beta", 2) * v("gamma", 2)).str() ==
          "1 + 2*beta + 1*beta^2*gamma^2");
    CHECK((c(3) * vh("t", 3) - v("x", -2)).str() == "-1*x^-2 + 3*t^(3/2)");
    CHECK((LaurentPoly::constant(Rat(1, 2)) * v("x")).str() == "1/2*x");
    CHECK((vh("t", -1)).str() == "1*t^(-1/2)");
    CHECK((c(-2) - v("x")).str() == "-2 - 1*x");
}

TEST_CASE("swap and poly substitution") {
    LaurentPoly p = v("alpha", 2) * v("beta") + v("alpha");
    LaurentPoly s = p.swap_vars(var("alpha"), var("beta"));
    CHECK(s == v("beta", 2) * v("alpha") + v("beta"));
    // alpha -> x_T - 1 on alpha^2 gives x_T^2 - 2 x_T + 1
    LaurentPoly q = v("alpha", 2).substitute_poly(var("alpha"), v("x_T") - c(1));
    CHECK(q == v("x_T", 2) - c(2) * v("x_T") + c(1));
    CHECK_THROWS_AS(v("alpha", -1).substitute_poly(var("alpha"), v("x_T")), PolyError);
}

TEST_CASE("exact division") {
    VarId x = var("x");
    LaurentPoly num = v("x", 2) - c(1);
    CHECK(num.divide_exact(v("x") - c(1), x) == v("x") + c(1));
    LaurentPoly lau = v("x") - v("x", -1);
    CHECK((lau * lau).divide_exact(lau, x) == lau);
    CHECK_THROWS_AS((v("x", 2) + c(1)).divide_exact(v("x") - c(1), x), PolyError);
    // half-grid division
    LaurentPoly d = -vh("t", 1) - vh("t", -1);
    CHECK((d * d * d).divide_exact(d, var("t")) == d * d);
}

TEST_CASE("ring laws on random triples") {
    std::mt19937_64 rng(20260811);
    std::vector<VarId> vs{var("u"), var("v"), var("w")};
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng, vs);
        LaurentPoly b = random_poly(rng, vs);
        LaurentPoly c = random_poly(rng, vs);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::vector<VarId> vs{var("u"), var("v")};
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = random_poly(rng, vs);
        LaurentPoly b = random_poly(rng, vs);
        RationalPoint pt = random_point(rng, vs);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("substitution commutes with evaluation") {
    // p with u -> u^2 evaluated at u^(1/2) = h equals p at u^(1/2) = h^2
    std::mt19937_64 rng(11);
    std::vector<VarId> vs{var("u"), var("v")};
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_poly(rng, vs);
        LaurentPoly q = p.substitute_monomial(var("u"), Rat(1), Monomial::of(var("u"), 2));
        RationalPoint pt = random_point(rng, vs);
        RationalPoint pt2;
        Rat h = pt.half_value(var("u"));
        pt2.assign_half(var("u"), h * h);
        pt2.assign_half(var("v"), pt.half_value(var("v")));
        CHECK(q.evaluate(pt) == p.evaluate(pt2));
    }
}

TEST_CASE("rational power helper") {
    CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(rat_pow(Rat(5), 0) == Rat(1));
    CHECK(rat_pow(Rat(-2), 3) == Rat(-8));
    CHECK_THROWS_AS(rat_pow(Rat(0), -1), PolyError);
}
