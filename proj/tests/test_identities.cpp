#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "rgpoly/enumerate.hpp"
#include "rgpoly/identities.hpp"

using namespace rgpoly;
using fixtures::c;
using fixtures::v;

TEST_CASE("state-sum form and homfly route checks") {
    for (const RibbonGraph& f :
         {fixtures::bridge(), fixtures::loop(), fixtures::double_loop(), fixtures::triangle()}) {
        VerificationReport r1 = check_br_forms(f);
        CHECK(r1.pass);
        CHECK(r1.identity == "eq12");
        CHECK(r1.mode == CheckMode::symbolic);
        VerificationReport r2 = check_homfly_forms(f);
        CHECK(r2.pass);
        CHECK(r2.identity == "thm32");
    }
}

TEST_CASE("duality") {
    // hand expansion for the interleaved double loop (self-dual, genus one):
    // lhs = 1 + 2 beta + beta/alpha equals (beta/alpha)(1 + 2 alpha + alpha/beta)
    LaurentPoly lhs = bollobas_riordan(fixtures::double_loop())
                          .substitute_monomial(vars::gamma(), Rat(1),
                                               Monomial::of(vars::alpha(), HalfInt::halves(-1)) *
                                                   Monomial::of(vars::beta(), HalfInt::halves(-1)));
    CHECK(lhs == c(1) + c(2) * v("beta") + v("beta") * v("alpha", -1));

    CHECK(check_duality(fixtures::double_loop()).pass);
    CHECK(check_duality(fixtures::bridge()).pass);
    CHECK(check_duality(fixtures::loop()).pass);
    CHECK(check_duality(fixtures::triangle()).pass);

    RibbonGraph two = RibbonGraph::from_rotation({{"a"}, {"b"}, {"u", "u'"}},
                                                 {{"a", "b"}, {"u", "u'"}});
    CHECK_THROWS_AS(check_duality(two), DisconnectedGraph);

    // applying the check to the dual composes to the same claim with the
    // exponent's sign flipped; both directions must pass and genus agree
    for (const RibbonGraph& f : connected_maps_up_to(4)) {
        CHECK(check_duality(f).pass);
        RibbonGraph d = f.dual();
        CHECK(check_duality(d).pass);
        CHECK(d.genus() == f.genus());
    }
}

TEST_CASE("determination points and sides") {
    // loop at x = 2, y = 1: alpha = 3, beta = 3/4, both sides 7/4
    DetSides s = determination_sides(fixtures::loop(), {Rat(2), Rat(1)});
    CHECK_FALSE(s.squared);
    CHECK(s.lhs == Rat(7, 4));
    CHECK(s.rhs == Rat(7, 4));

    // bridge: both sides are alpha + 1 = x^2 at any admissible point
    DetSides sb = determination_sides(fixtures::bridge(), {Rat(2), Rat(1)});
    CHECK(sb.lhs == Rat(4));
    CHECK(sb.rhs == Rat(4));
    DetSides sb2 = determination_sides(fixtures::bridge(), {Rat(5, 2), Rat(3)});
    CHECK(sb2.lhs == Rat(25, 4));
    CHECK(sb2.rhs == sb2.lhs);

    CHECK_THROWS_AS(determination_sides(fixtures::loop(), {Rat(1), Rat(1)}), BadPoint);
    CHECK_THROWS_AS(determination_sides(fixtures::loop(), {Rat(2), Rat(0)}), BadPoint);

    auto pts = determination_points(25, 17);
    CHECK(pts.size() == 25);
    CHECK(determination_points(25, 17).size() == 25);  // deterministic
    CHECK(determination_points(25, 17)[0].x == pts[0].x);

    for (const RibbonGraph& f :
         {fixtures::bridge(), fixtures::loop(), fixtures::double_loop(), fixtures::triangle()}) {
        VerificationReport r = check_determination(f, pts, DetReading::alpha_plus_one, 17);
        CHECK(r.pass);
        CHECK(r.points == 25);
        CHECK(r.mode == CheckMode::multipoint);
        CHECK(r.seed == 17);
    }
    std::vector<DetPoint> few{{Rat(2), Rat(1)}};
    CHECK_THROWS_AS(check_determination(fixtures::loop(), few), BadPoint);
}

TEST_CASE("determination negative control") {
    // under the wrong square-root reading the loop fails at x = 2, y = 1:
    // alpha = 5, beta = 5/6, squared sides 121/36 vs 147/32
    DetSides s =
        determination_sides(fixtures::loop(), {Rat(2), Rat(1)}, DetReading::alpha_minus_one);
    CHECK(s.squared);
    CHECK(s.lhs == Rat(121, 36));
    CHECK(s.rhs == Rat(147, 32));
    CHECK(s.lhs != s.rhs);

    auto pts = determination_points(25, 0);
    pts[0] = {Rat(2), Rat(1)};
    VerificationReport r = check_determination(fixtures::loop(), pts,
                                               DetReading::alpha_minus_one, 0);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.find("x=2") != std::string::npos);
    CHECK(!r.witness.empty());
}

TEST_CASE("tensor with a triangle") {
    // hand expansions: loop: alpha + 2 + beta vs (alpha+2)(1 + beta/(alpha+2));
    // bridge: (alpha+1)^2 vs alpha(alpha+2) + 1
    CHECK(bollobas_riordan(fixtures::loop().tensor_cycle(3)) == v("alpha") + c(2) + v("beta"));
    CHECK(bollobas_riordan(fixtures::bridge().tensor_cycle(3)) ==
          (v("alpha") + c(1)) * (v("alpha") + c(1)));

    for (const RibbonGraph& f :
         {fixtures::bridge(), fixtures::loop(), fixtures::double_loop(), fixtures::triangle()}) {
        VerificationReport r = check_tensor_c3(f, 5);
        CHECK(r.pass);
        CHECK(r.mode == CheckMode::multipoint);
        CHECK(r.points > 0);
    }
    for (const RibbonGraph& f : connected_maps_up_to(3)) CHECK(check_tensor_c3(f, 5).pass);
}

TEST_CASE("tensor with odd cycles") {
    for (const RibbonGraph& f :
         {fixtures::bridge(), fixtures::loop(), fixtures::double_loop(), fixtures::triangle()}) {
        CHECK(check_tensor_odd(f, 1, 3).pass);
    }
    // p = 2: the five-cycle, bridge becomes a four-edge path
    CHECK(check_tensor_odd(fixtures::bridge(), 2, 3).pass);
    CHECK(check_tensor_odd(fixtures::loop(), 2, 3).pass);
    CHECK(check_tensor_odd(fixtures::double_loop(), 2, 3).pass);

    CHECK_THROWS_AS(check_tensor_odd(fixtures::double_loop(), 3, 0), TooLarge);
    CHECK_THROWS_AS(check_tensor_odd(fixtures::triangle(), 0, 0), TooLarge);
}

TEST_CASE("jones mirror relation") {
    CHECK(check_jones_mirror(fixtures::bridge()).pass);
    CHECK(check_jones_mirror(fixtures::loop()).pass);
    CHECK(check_jones_mirror(fixtures::double_loop()).pass);
    CHECK(check_jones_mirror(fixtures::triangle()).pass);
}

TEST_CASE("bracket against the specialization") {
    for (const RibbonGraph& f :
         {fixtures::bridge(), fixtures::loop(), fixtures::double_loop(), fixtures::triangle()}) {
        CHECK(check_bracket_vs_cp(f, subdivision_writhe(f)).pass);
        CHECK(check_bracket_vs_cp(f, subdivision_writhe(f) + 2).pass);
    }
}

TEST_CASE("verify_all") {
    auto reports = verify_all(fixtures::double_loop(), 1);
    CHECK(reports.size() == 8);
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.witness.empty());
    }
    // disconnected input skips the duality record
    RibbonGraph two = RibbonGraph::from_rotation({{"a"}, {"b"}, {"u", "u'"}},
                                                 {{"a", "b"}, {"u", "u'"}});
    auto rep2 = verify_all(two, 1);
    for (const auto& r : rep2) {
        CHECK(r.identity != "duality");
        CHECK(r.pass);
    }
}

TEST_CASE("checkers across the small corpus") {
    uint64_t seed = 99;
    auto pts = determination_points(25, seed);
    for (const RibbonGraph& f : connected_maps_up_to(3)) {
        CHECK(check_br_forms(f).pass);
        CHECK(check_homfly_forms(f).pass);
        CHECK(check_duality(f).pass);
        CHECK(check_determination(f, pts, DetReading::alpha_plus_one, seed).pass);
        CHECK(check_tensor_c3(f, seed).pass);
        CHECK(check_tensor_odd(f, 1, seed).pass);
        CHECK(check_jones_mirror(f).pass);
        CHECK(check_bracket_vs_cp(f, subdivision_writhe(f)).pass);
    }
}
