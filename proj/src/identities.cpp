#include "rgpoly/identities.hpp"

#include <algorithm>
#include <random>

#include "rgpoly/enumerate.hpp"

namespace rgpoly {

namespace {

VarId gsq() {
    static VarId v = var("gsq");
    return v;
}

std::string compact(const LaurentPoly& p) {
    std::string s = p.str();
    std::erase(s, ' ');
    return s;
}

VerificationReport symbolic_report(std::string identity, const LaurentPoly& lhs,
                                   const LaurentPoly& rhs) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.mode = CheckMode::symbolic;
    r.pass = lhs == rhs;
    if (!r.pass) r.witness = "lhs=" + compact(lhs) + ";rhs=" + compact(rhs);
    return r;
}

/// Replaces gamma by a formal square root of gsq, so that the even gamma
/// powers become plain integer powers of gsq and the polynomial can be
/// evaluated at arbitrary rational values of gamma^2.
LaurentPoly with_gamma_squared(const LaurentPoly& p) {
    return p.substitute_monomial(vars::gamma(), Rat(1), Monomial::of(gsq(), HalfInt::halves(1)));
}

struct EvalTerm {
    int i, j, m;  // alpha, beta, gsq exponents
    Rat c;
};

std::vector<EvalTerm> eval_terms(const LaurentPoly& p) {
    std::vector<EvalTerm> out;
    out.reserve(p.term_count());
    for (const auto& [mono, c] : p.terms()) {
        EvalTerm t;
        t.i = mono.exponent(vars::alpha()).whole_value();
        t.j = mono.exponent(vars::beta()).whole_value();
        t.m = mono.exponent(gsq()).whole_value();
        t.c = c;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Rat> pow_table(const Rat& base, int max_exp) {
    std::vector<Rat> t(max_exp + 1);
    t[0] = 1;
    for (int i = 1; i <= max_exp; ++i) t[i] = t[i - 1] * base;
    return t;
}

int max_exp_of(const std::vector<EvalTerm>& ts, int EvalTerm::*field) {
    int m = 0;
    for (const auto& t : ts) m = std::max(m, t.*field);
    return m;
}

}  // namespace

VerificationReport check_br_forms(const RibbonGraph& f) {
    return symbolic_report("eq12", bollobas_riordan(f), bollobas_riordan_rearranged(f));
}

VerificationReport check_homfly_forms(const RibbonGraph& f) {
    return symbolic_report("thm32", homfly_formula(f), homfly_resolution(f));
}

VerificationReport check_duality(const RibbonGraph& f) {
    if (!f.is_connected()) throw DisconnectedGraph("duality check requires a connected graph");
    const VarId a = vars::alpha(), b = vars::beta();
    Monomial root_inv = Monomial::of(a, HalfInt::halves(-1)) * Monomial::of(b, HalfInt::halves(-1));
    int g = f.full_metrics().g;
    LaurentPoly lhs = bollobas_riordan(f).substitute_monomial(vars::gamma(), Rat(1), root_inv);
    LaurentPoly rhs = bollobas_riordan(f.dual())
                          .swap_vars(a, b)
                          .substitute_monomial(vars::gamma(), Rat(1), root_inv)
                          .mul_monomial(Rat(1), Monomial::of(b, g) * Monomial::of(a, -g));
    return symbolic_report("duality", lhs, rhs);
}

std::vector<DetPoint> determination_points(int n, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<DetPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        long xn = 2 + static_cast<long>(bounded_draw(rng, 12));   // 2..13
        long xd = 1 + static_cast<long>(bounded_draw(rng, 5));    // 1..5
        long yn = 1 + static_cast<long>(bounded_draw(rng, 9));    // 1..9
        long yd = 1 + static_cast<long>(bounded_draw(rng, 4));    // 1..4
        if (xn == xd) continue;  // x = 1 excluded
        Rat x(xn, xd), y(yn, yd);
        x.canonicalize();
        y.canonicalize();
        bool dup = false;
        for (const auto& p : pts)
            if (p.x == x && p.y == y) dup = true;
        if (!dup) pts.push_back({x, y});
    }
    return pts;
}

namespace {

void require_admissible(const DetPoint& pt) {
    if (pt.x == 0 || pt.x == 1 || pt.x == -1)
        throw BadPoint("x must avoid {0, 1, -1}, got " + pt.x.get_str());
    if (pt.y == 0) throw BadPoint("y must be nonzero");
}

Rat det_alpha(const DetPoint& pt, DetReading reading) {
    Rat a = pt.x * pt.x;
    return reading == DetReading::alpha_plus_one ? Rat(a - 1) : Rat(a + 1);
}

}  // namespace

DetSides determination_sides(const RibbonGraph& f, const DetPoint& pt, DetReading reading) {
    require_admissible(pt);
    const VarId av = vars::alpha(), bv = vars::beta();
    Monomial root_inv =
        Monomial::of(av, HalfInt::halves(-1)) * Monomial::of(bv, HalfInt::halves(-1));
    LaurentPoly l = bollobas_riordan(f).substitute_monomial(vars::gamma(), Rat(1), root_inv);
    LaurentPoly p = homfly_formula(f);

    Rat alpha = det_alpha(pt, reading);
    Rat beta = alpha / (pt.y * pt.y * (alpha + 1));
    VarValues lv;
    lv.assign(av, alpha);
    lv.assign(bv, beta);
    Rat lhs = l.evaluate_at(lv);

    VarValues pv;
    pv.assign(vars::x(), pt.x);
    pv.assign(vars::y(), pt.y);
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();
    Rat base = rat_pow(alpha + 1, e) * rat_pow(alpha, 1 - k) * p.evaluate_at(pv);

    DetSides sides;
    if (reading == DetReading::alpha_plus_one) {
        sides.lhs = lhs;
        sides.rhs = rat_pow(pt.x * pt.y, v - e - 1) * base;
    } else {
        // sqrt(alpha/beta) is irrational here; compare squared sides exactly
        sides.squared = true;
        sides.lhs = lhs * lhs;
        sides.rhs = rat_pow(alpha / beta, v - e - 1) * base * base;
    }
    return sides;
}

VerificationReport check_determination(const RibbonGraph& f, const std::vector<DetPoint>& points,
                                       DetReading reading, uint64_t seed) {
    if (points.size() < 25)
        throw BadPoint("determination requires at least 25 points, got " +
                       std::to_string(points.size()));
    for (const auto& pt : points) require_admissible(pt);

    VerificationReport r;
    r.identity = "determination";
    r.mode = CheckMode::multipoint;
    r.points = static_cast<long>(points.size());
    r.seed = seed;

    const VarId av = vars::alpha(), bv = vars::beta();
    Monomial root_inv =
        Monomial::of(av, HalfInt::halves(-1)) * Monomial::of(bv, HalfInt::halves(-1));
    LaurentPoly l = bollobas_riordan(f).substitute_monomial(vars::gamma(), Rat(1), root_inv);
    LaurentPoly p = homfly_formula(f);
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();

    for (const auto& pt : points) {
        Rat alpha = det_alpha(pt, reading);
        Rat beta = alpha / (pt.y * pt.y * (alpha + 1));
        VarValues lv;
        lv.assign(av, alpha);
        lv.assign(bv, beta);
        Rat lhs = l.evaluate_at(lv);
        VarValues pv;
        pv.assign(vars::x(), pt.x);
        pv.assign(vars::y(), pt.y);
        Rat base = rat_pow(alpha + 1, e) * rat_pow(alpha, 1 - k) * p.evaluate_at(pv);
        bool ok;
        Rat rhs;
        if (reading == DetReading::alpha_plus_one) {
            rhs = rat_pow(pt.x * pt.y, v - e - 1) * base;
            ok = lhs == rhs;
        } else {
            rhs = rat_pow(alpha / beta, v - e - 1) * base * base;
            lhs = lhs * lhs;
            ok = lhs == rhs;
        }
        if (!ok) {
            r.pass = false;
            r.witness = "x=" + pt.x.get_str() + ";y=" + pt.y.get_str() +
                        ";lhs=" + lhs.get_str() + ";rhs=" + rhs.get_str() +
                        (reading == DetReading::alpha_minus_one ? ";squared" : "");
            return r;
        }
    }
    return r;
}

VerificationReport check_tensor_c3(const RibbonGraph& f, uint64_t seed) {
    VerificationReport r;
    r.identity = "tensor-c3";
    r.mode = CheckMode::multipoint;
    r.seed = seed;

    RibbonGraph a3 = f.tensor_cycle(3);
    auto lhs_terms = eval_terms(with_gamma_squared(bollobas_riordan(a3)));
    auto rhs_terms = eval_terms(with_gamma_squared(bollobas_riordan(f)));
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();
    int nf = v == 0 ? 0 : e - (v - k);

    // points per variable exceed the degree of either side after clearing
    // the (alpha + 2) denominators
    int deg_a_lhs = max_exp_of(lhs_terms, &EvalTerm::i) + nf;
    int deg_a_rhs = 0;
    for (const auto& t : rhs_terms)
        deg_a_rhs = std::max(deg_a_rhs, 2 * t.i + (nf - t.j));
    int na = std::max(deg_a_lhs, deg_a_rhs) + 1;
    int nb = std::max(max_exp_of(lhs_terms, &EvalTerm::j), max_exp_of(rhs_terms, &EvalTerm::j)) + 1;
    int ng = std::max(max_exp_of(lhs_terms, &EvalTerm::m), max_exp_of(rhs_terms, &EvalTerm::m)) + 1;
    r.points = static_cast<long>(na) * nb * ng;

    int ia_max = max_exp_of(lhs_terms, &EvalTerm::i);
    int ir_max = max_exp_of(rhs_terms, &EvalTerm::i);
    int jmax = std::max(max_exp_of(lhs_terms, &EvalTerm::j), max_exp_of(rhs_terms, &EvalTerm::j));
    int mmax = std::max(max_exp_of(lhs_terms, &EvalTerm::m), max_exp_of(rhs_terms, &EvalTerm::m));

    // beta and gamma^2 tables are shared across the alpha loop
    std::vector<std::vector<Rat>> tb(nb), tg(ng);
    for (int j = 0; j < nb; ++j) tb[j] = pow_table(Rat(j + 1), jmax);
    for (int g = 0; g < ng; ++g) tg[g] = pow_table(Rat(g + 1), mmax);

    for (int ai = 0; ai < na; ++ai) {
        Rat alpha(ai + 2);  // 2, 3, ... avoids {-2, 0, 1}
        auto ta = pow_table(alpha, ia_max);
        auto tap = pow_table(alpha * (alpha + 2), ir_max);
        Rat pref = rat_pow(alpha + 2, nf);
        std::vector<Rat> div = pow_table(Rat(1) / (alpha + 2), jmax);
        for (int bi = 0; bi < nb; ++bi) {
            for (int gi = 0; gi < ng; ++gi) {
                Rat lhs(0), rhs(0);
                for (const auto& t : lhs_terms) lhs += t.c * ta[t.i] * tb[bi][t.j] * tg[gi][t.m];
                for (const auto& t : rhs_terms)
                    rhs += t.c * tap[t.i] * tb[bi][t.j] * div[t.j] * tg[gi][t.m];
                rhs *= pref;
                if (lhs != rhs) {
                    r.pass = false;
                    r.witness = "alpha=" + alpha.get_str() + ";beta=" + Rat(bi + 1).get_str() +
                                ";gamma2=" + Rat(gi + 1).get_str() + ";lhs=" + lhs.get_str() +
                                ";rhs=" + rhs.get_str();
                    return r;
                }
            }
        }
    }
    return r;
}

VerificationReport check_tensor_odd(const RibbonGraph& f, int p, uint64_t seed) {
    if (p < 1) throw TooLarge("p must be at least 1");
    long scale = 1L << p;
    if (static_cast<long>(f.edge_count()) * scale > 14)
        throw TooLarge("e(F) * 2^p = " + std::to_string(f.edge_count() * scale) +
                       " exceeds the supported bound 14");
    int q = static_cast<int>(scale) + 1;

    VerificationReport r;
    r.identity = "tensor-odd";
    r.mode = CheckMode::multipoint;
    r.seed = seed;

    RibbonGraph aq = f.tensor_cycle(q);
    auto lhs_terms = eval_terms(with_gamma_squared(bollobas_riordan(aq)));
    auto rhs_terms = eval_terms(with_gamma_squared(bollobas_riordan(f)));
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();
    int nf = v == 0 ? 0 : e - (v - k);

    // univariate in alpha once beta = alpha(1 - alpha) and
    // gamma^2 = 1/(alpha beta) are tied; denominators cleared by
    // (alpha^2 (1 - alpha))^mmax and SUM^j
    int mmax = std::max(max_exp_of(lhs_terms, &EvalTerm::m), max_exp_of(rhs_terms, &EvalTerm::m));
    int deg = 0;
    for (const auto& t : lhs_terms) deg = std::max(deg, t.i + 2 * t.j + 3 * (mmax - t.m));
    for (const auto& t : rhs_terms) {
        int d = static_cast<int>(scale) * t.i + 2 * t.j + static_cast<int>(scale) * (nf - t.j) +
                3 * (mmax - t.m);
        deg = std::max(deg, d);
    }
    int npoints = deg + 2;
    r.points = npoints;

    for (int ai = 0; ai < npoints; ++ai) {
        Rat alpha(ai + 2);  // 2, 3, ... avoids {-2, 0, 1}
        Rat beta = alpha * (Rat(1) - alpha);
        Rat g2 = Rat(1) / (alpha * beta);
        Rat lhs(0);
        for (const auto& t : lhs_terms)
            lhs += t.c * rat_pow(alpha, t.i) * rat_pow(beta, t.j) * rat_pow(g2, t.m);
        // geometric sum with 2^p terms: the product of (alpha_s + 2) over the
        // repeated triangle-tensor steps, which telescopes to
        // ((alpha+1)^(2^p) - 1) / alpha
        Rat sum(0);
        for (long i = 0; i < scale; ++i) sum += rat_pow(alpha + 1, i);
        Rat alpha2 = rat_pow(alpha + 1, scale) - 1;
        Rat beta2 = beta / sum;
        Rat rhs(0);
        for (const auto& t : rhs_terms)
            rhs += t.c * rat_pow(alpha2, t.i) * rat_pow(beta2, t.j) * rat_pow(g2, t.m);
        rhs *= rat_pow(sum, nf);
        if (lhs != rhs) {
            r.pass = false;
            r.witness = "alpha=" + alpha.get_str() + ";lhs=" + lhs.get_str() +
                        ";rhs=" + rhs.get_str();
            return r;
        }
    }
    return r;
}

VerificationReport check_jones_mirror(const RibbonGraph& f) {
    LaurentPoly ja = jones_cp(f.tensor_cycle(3), -2L * f.edge_count());
    LaurentPoly mirrored =
        ja.substitute_monomial(vars::t(), Rat(1), Monomial::of(vars::t(), -1));
    VerificationReport r = symbolic_report("jones-mirror", mirrored, jones_from_homfly(f));
    return r;
}

VerificationReport check_bracket_vs_cp(const RibbonGraph& f, long writhe) {
    return symbolic_report("bracket-cp", jones_via_bracket(f, writhe), jones_cp(f, writhe));
}

std::vector<VerificationReport> verify_all(const RibbonGraph& f, uint64_t seed) {
    std::vector<VerificationReport> out;
    out.push_back(check_br_forms(f));
    out.push_back(check_homfly_forms(f));
    if (f.is_connected()) out.push_back(check_duality(f));
    out.push_back(check_determination(f, determination_points(25, seed),
                                      DetReading::alpha_plus_one, seed));
    out.push_back(check_tensor_c3(f, seed));
    if (f.edge_count() * 2 <= 14) out.push_back(check_tensor_odd(f, 1, seed));
    out.push_back(check_jones_mirror(f));
    out.push_back(check_bracket_vs_cp(f, subdivision_writhe(f)));
    return out;
}

}  // namespace rgpoly
