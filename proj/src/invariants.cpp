#include "rgpoly/invariants.hpp"

#include <algorithm>

namespace rgpoly {

namespace vars {
VarId alpha() {
    static VarId v = var("alpha");
    return v;
}
VarId beta() {
    static VarId v = var("beta");
    return v;
}
VarId gamma() {
    static VarId v = var("gamma");
    return v;
}
VarId x() {
    static VarId v = var("x");
    return v;
}
VarId y() {
    static VarId v = var("y");
    return v;
}
VarId t() {
    static VarId v = var("t");
    return v;
}
VarId bracket_a() {
    static VarId v = var("A");
    return v;
}
VarId tutte_x() {
    static VarId v = var("x_T");
    return v;
}
VarId tutte_y() {
    static VarId v = var("y_T");
    return v;
}
VarId weight_a() {
    static VarId v = var("a");
    return v;
}
VarId weight_c() {
    static VarId v = var("c");
    return v;
}
}  // namespace vars

namespace {

constexpr int kMaxStateEdges = 24;

void require_state_space(const RibbonGraph& f) {
    if (f.edge_count() > kMaxStateEdges)
        throw GraphError("state sum over " + std::to_string(f.edge_count()) +
                         " edges exceeds the supported size");
}

LaurentPoly term(Rat c, Monomial m) { return LaurentPoly::monomial(std::move(c), std::move(m)); }

LaurentPoly vp(VarId v, int e) { return LaurentPoly::variable(v, HalfInt::whole(e)); }

LaurentPoly vph(VarId v, int doubled) { return LaurentPoly::variable(v, HalfInt::halves(doubled)); }

/// Lazily grown non-negative powers of a fixed polynomial.
class PowCache {
public:
    explicit PowCache(LaurentPoly base) : base_(std::move(base)) {
        pows_.push_back(LaurentPoly::constant(Rat(1)));
    }
    const LaurentPoly& operator[](int n) {
        while (static_cast<int>(pows_.size()) <= n) pows_.push_back(pows_.back() * base_);
        return pows_.at(n);
    }

private:
    LaurentPoly base_;
    std::vector<LaurentPoly> pows_;
};

struct BrTerm {
    int i, j, l;  // alpha, beta, gamma exponents
    Rat c;
};

std::vector<BrTerm> br_terms(const LaurentPoly& r) {
    std::vector<BrTerm> out;
    out.reserve(r.term_count());
    for (const auto& [mono, c] : r.terms()) {
        BrTerm t;
        t.i = mono.exponent(vars::alpha()).whole_value();
        t.j = mono.exponent(vars::beta()).whole_value();
        t.l = mono.exponent(vars::gamma()).whole_value();
        t.c = c;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

CyclicWord CyclicWord::from_letters(std::vector<Letter> letters) {
    auto inverse = [](const Letter& a, const Letter& b) {
        return a.edge == b.edge && a.forward != b.forward;
    };
    std::vector<Letter> red;
    red.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!red.empty() && inverse(red.back(), l))
            red.pop_back();
        else
            red.push_back(l);
    }
    size_t lo = 0, hi = red.size();
    while (hi - lo >= 2 && inverse(red[lo], red[hi - 1])) {
        ++lo;
        --hi;
    }
    CyclicWord w;
    if (lo == hi) return w;
    std::vector<Letter> cyc(red.begin() + lo, red.begin() + hi);
    size_t n = cyc.size();
    size_t best = 0;
    for (size_t s = 1; s < n; ++s) {
        for (size_t i = 0; i < n; ++i) {
            const Letter& a = cyc[(s + i) % n];
            const Letter& b = cyc[(best + i) % n];
            if (a < b) {
                best = s;
                break;
            }
            if (b < a) break;
        }
    }
    w.letters_.reserve(n);
    for (size_t i = 0; i < n; ++i) w.letters_.push_back(cyc[(best + i) % n]);
    return w;
}

std::string CyclicWord::str(const std::function<std::string(int)>& edge_name) const {
    std::string out = "(";
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first) out += " ";
        first = false;
        out += edge_name(l.edge);
        if (!l.forward) out += "'";
    }
    out += ")";
    return out;
}

void LabeledPoly::add(const LabelMultiset& labels, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto it = parts_.find(labels);
    if (it == parts_.end()) {
        parts_.emplace(labels, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

LaurentPoly LabeledPoly::forget_labels() const {
    LaurentPoly sum;
    for (const auto& [labels, p] : parts_) sum += p;
    return sum;
}

LaurentPoly bollobas_riordan(const RibbonGraph& f) {
    require_state_space(f);
    const VarId a = vars::alpha(), b = vars::beta(), g = vars::gamma();
    int rf = f.vertex_count() - f.component_count();
    LaurentPoly sum;
    uint64_t nstates = uint64_t(1) << f.edge_count();
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        Metrics m = f.metrics(State(static_cast<uint32_t>(mask)));
        sum.add_term(Rat(1), Monomial::of(a, rf - m.r) * Monomial::of(b, m.n) *
                                 Monomial::of(g, m.k - m.p + m.n));
    }
    return sum;
}

LaurentPoly bollobas_riordan_rearranged(const RibbonGraph& f) {
    require_state_space(f);
    const VarId a = vars::alpha(), b = vars::beta(), g = vars::gamma();
    int v = f.vertex_count();
    int k = f.component_count();
    LaurentPoly sum;
    uint64_t nstates = uint64_t(1) << f.edge_count();
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        State h(static_cast<uint32_t>(mask));
        int eh = h.edge_count();
        int kh = 0;
        {
            Metrics m = f.metrics(h);
            kh = m.k;
            sum.add_term(Rat(1), Monomial::of(a, kh) * Monomial::of(b, kh + eh) *
                                     Monomial::of(g, 2 * kh + eh - m.p));
        }
    }
    return sum.mul_monomial(Rat(1),
                            Monomial::of(a, -k) * Monomial::of(b, -v) * Monomial::of(g, -v));
}

LaurentPoly weighted_B(const RibbonGraph& f) {
    require_state_space(f);
    for (int e = 0; e < f.edge_count(); ++e)
        if (!f.weight(e)) throw MissingWeight("edge " + std::to_string(e) + " carries no weight");
    const VarId a = vars::weight_a(), c = vars::weight_c();
    std::vector<VarId> wv;
    wv.reserve(f.edge_count());
    for (int e = 0; e < f.edge_count(); ++e) wv.push_back(var(*f.weight(e)));
    LaurentPoly sum;
    uint64_t nstates = uint64_t(1) << f.edge_count();
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        State h(static_cast<uint32_t>(mask));
        Metrics m = f.metrics(h);
        Monomial mono = Monomial::of(a, m.k) * Monomial::of(c, m.p);
        for (int e = 0; e < f.edge_count(); ++e)
            if (h.contains(e)) mono = mono * Monomial::of(wv[e], 1);
        sum.add_term(Rat(1), mono);
    }
    return sum;
}

LaurentPoly tutte(const RibbonGraph& f) {
    LaurentPoly r = bollobas_riordan(f);
    r = r.substitute_poly(vars::gamma(), LaurentPoly::constant(Rat(1)));
    r = r.substitute_poly(vars::alpha(), vp(vars::tutte_x(), 1) - LaurentPoly::constant(Rat(1)));
    r = r.substitute_poly(vars::beta(), vp(vars::tutte_y(), 1) - LaurentPoly::constant(Rat(1)));
    return r;
}

LaurentPoly homfly_formula(const RibbonGraph& f) {
    if (f.vertex_count() == 0) return LaurentPoly::constant(Rat(1));
    const VarId x = vars::x(), y = vars::y();
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();
    PowCache p1(vp(x, 1) - vp(x, -1));
    LaurentPoly sum;
    for (const BrTerm& t : br_terms(bollobas_riordan(f))) {
        int m = k - 1 + t.i + t.j - t.l;
        if (m < 0) throw std::logic_error("homfly_formula: negative boundary exponent");
        Monomial shift = Monomial::of(x, k - 1 + t.i - t.j) * Monomial::of(y, t.l - 2 * t.j);
        sum.add_scaled(t.c, shift, p1[m]);
    }
    Monomial pre = Monomial::of(x, -(v - 1) - e) * Monomial::of(y, -(v - 1) + e);
    return sum.mul_monomial(Rat(1), pre);
}

LaurentPoly homfly_resolution(const RibbonGraph& f) {
    if (f.vertex_count() == 0) return LaurentPoly::constant(Rat(1));
    require_state_space(f);
    const VarId x = vars::x(), y = vars::y();
    int e = f.edge_count();
    PowCache p1(vp(x, 1) - vp(x, -1));
    LaurentPoly sum;
    uint64_t nstates = uint64_t(1) << e;
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        State h(static_cast<uint32_t>(mask));
        int eh = h.edge_count();
        int p = f.boundary_count(h);
        Monomial mono = Monomial::of(x, -(e - eh) - 2 * eh) * Monomial::of(y, (e - eh) - (p - 1));
        sum.add_scaled(Rat(1), mono, p1[p - 1]);
    }
    return sum;
}

CyclicWord boundary_label(const RibbonGraph& f, State h, const Walk& walk) {
    (void)f;
    (void)h;
    std::vector<CyclicWord::Letter> letters;
    letters.reserve(walk.size());
    for (const WalkStep& s : walk) letters.push_back({s.edge, s.forward});
    return CyclicWord::from_letters(std::move(letters));
}

namespace {

LabeledPoly labeled_state_sum(const RibbonGraph& f,
                              const std::function<LaurentPoly(State, int)>& state_coeff) {
    LabeledPoly result;
    if (f.vertex_count() == 0) {
        result.add({}, LaurentPoly::constant(Rat(1)));
        return result;
    }
    require_state_space(f);
    uint64_t nstates = uint64_t(1) << f.edge_count();
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        State h(static_cast<uint32_t>(mask));
        auto walks = f.boundary_walks(h);
        LabelMultiset labels;
        for (const Walk& w : walks) {
            CyclicWord cw = boundary_label(f, h, w);
            if (!cw.trivial()) labels.push_back(std::move(cw));
        }
        std::sort(labels.begin(), labels.end());
        result.add(labels, state_coeff(h, static_cast<int>(walks.size())));
    }
    return result;
}

}  // namespace

LabeledPoly homfly_full(const RibbonGraph& f) {
    for (int e = 0; e < f.edge_count(); ++e)
        if (!f.weight(e)) throw MissingWeight("edge " + std::to_string(e) + " carries no weight");
    const VarId x = vars::x(), y = vars::y();
    int e = f.edge_count();
    PowCache p1(vp(x, 1) - vp(x, -1));
    return labeled_state_sum(f, [&, e, x, y](State h, int p) {
        int eh = h.edge_count();
        Monomial mono = Monomial::of(x, -(e - eh) - 2 * eh) * Monomial::of(y, (e - eh) - (p - 1));
        return p1[p - 1].mul_monomial(Rat(1), mono);
    });
}

LaurentPoly tangle_weight(TangleType t) {
    const VarId x = vars::x(), y = vars::y();
    switch (t) {
        case TangleType::w1: return term(Rat(1), Monomial::of(x, -1) * Monomial::of(y, -1));
        case TangleType::w2: return term(Rat(-1), Monomial::of(x, 1) * Monomial::of(y, -1));
        case TangleType::w3: return term(Rat(1), Monomial::of(x, 1) * Monomial::of(y, 1));
        case TangleType::w4: return term(Rat(-1), Monomial::of(x, -1) * Monomial::of(y, 1));
    }
    throw std::logic_error("unknown tangle type");
}

LabeledPoly homfly_traldi(const RibbonGraph& f) {
    for (int e = 0; e < f.edge_count(); ++e) {
        if (!f.weight(e)) throw MissingWeight("edge " + std::to_string(e) + " carries no weight");
        if (!f.tangle(e)) throw MissingTangle("edge " + std::to_string(e) + " carries no tangle");
    }
    const VarId x = vars::x(), y = vars::y();
    int counts[4] = {0, 0, 0, 0};
    for (int e = 0; e < f.edge_count(); ++e) counts[static_cast<int>(*f.tangle(e))]++;
    // global prefactor: (y/x)^w1 (-yx)^w2 (1/x^2)^w3 (x^2)^w4
    Rat gpre_c = (counts[1] % 2 == 0) ? Rat(1) : Rat(-1);
    Monomial gpre_m =
        Monomial::of(x, -counts[0] + counts[1] - 2 * counts[2] + 2 * counts[3]) *
        Monomial::of(y, counts[0] + counts[1]);

    // per-edge inclusion weight as (sign, monomial)
    std::vector<std::pair<Rat, Monomial>> incl;
    incl.reserve(f.edge_count());
    for (int e = 0; e < f.edge_count(); ++e) {
        LaurentPoly wt = tangle_weight(*f.tangle(e));
        const auto& [mono, c] = *wt.terms().begin();
        incl.emplace_back(c, mono);
    }

    PowCache p1(vp(x, 1) - vp(x, -1));
    return labeled_state_sum(f, [&](State h, int p) {
        Rat c = gpre_c;
        Monomial m = gpre_m;
        for (int e = 0; e < f.edge_count(); ++e) {
            if (!h.contains(e)) continue;
            c *= incl[e].first;
            m = m * incl[e].second;
        }
        return p1[p - 1].mul_monomial(c, m * Monomial::of(y, -(p - 1)));
    });
}

LaurentPoly jones_cp(const RibbonGraph& f, long writhe) {
    if (f.vertex_count() == 0) return LaurentPoly::constant(Rat(1));
    const VarId tv = vars::t();
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();
    int r = v - k, n = e - r;
    long num = 3 * writhe - r + n;
    if (num % 2 != 0)
        throw GridViolation("writhe " + std::to_string(writhe) +
                            " leaves the half-integer exponent grid");
    Monomial tpre = Monomial::of(tv, HalfInt::halves(static_cast<int>(num / 2)));
    Rat sign = (writhe % 2 == 0) ? Rat(1) : Rat(-1);

    LaurentPoly dpoly = -vph(tv, 1) - vph(tv, -1);
    PowCache pa(-vp(tv, 1) - LaurentPoly::constant(Rat(1)));
    PowCache pb(-vp(tv, -1) - LaurentPoly::constant(Rat(1)));
    PowCache pd(dpoly);

    auto terms = br_terms(bollobas_riordan(f));
    int lmax = 0;
    for (const BrTerm& t : terms) lmax = std::max(lmax, t.l);
    LaurentPoly sum;
    for (const BrTerm& t : terms) {
        LaurentPoly piece = pa[t.i] * pb[t.j] * pd[k - 1 + lmax - t.l];
        sum.add_scaled(t.c, Monomial::one(), piece);
    }
    if (lmax > 0) sum = sum.divide_exact(pd[lmax], tv);
    return sum.mul_monomial(sign, tpre);
}

LaurentPoly jones_from_homfly(const RibbonGraph& f) {
    const VarId tv = vars::t(), yv = vars::y();
    LaurentPoly p = homfly_formula(f);
    p = p.substitute_monomial(vars::x(), Rat(1), Monomial::of(tv, -1));
    // y -> t^(1/2) - t^(-1/2): clear the negative powers of y first
    PowCache ps(vph(tv, 1) - vph(tv, -1));
    int ymin = 0;
    for (const auto& [mono, c] : p.terms())
        ymin = std::min(ymin, mono.exponent(yv).whole_value());
    int shift = -ymin;
    LaurentPoly sum;
    for (const auto& [mono, c] : p.terms()) {
        int b = mono.exponent(yv).whole_value();
        Monomial rest = Monomial::of(tv, mono.exponent(tv));
        sum.add_scaled(c, rest, ps[b + shift]);
    }
    if (shift > 0) sum = sum.divide_exact(ps[shift], tv);
    return sum;
}

LaurentPoly jones_from_homfly_direct(const RibbonGraph& f) {
    if (f.vertex_count() == 0) return LaurentPoly::constant(Rat(1));
    const VarId tv = vars::t();
    int v = f.vertex_count(), e = f.edge_count(), k = f.component_count();
    LaurentPoly spoly = vph(tv, 1) - vph(tv, -1);
    LaurentPoly dpoly = -vph(tv, 1) - vph(tv, -1);
    PowCache pa(vp(tv, -2) - LaurentPoly::constant(Rat(1)));
    PowCache pb(LaurentPoly::constant(Rat(1)) - vp(tv, 2));
    PowCache ps(spoly);
    PowCache pd(dpoly);

    auto terms = br_terms(bollobas_riordan(f));
    int lmax = 0, smin = e - v + 1;
    for (const BrTerm& t : terms) {
        lmax = std::max(lmax, t.l);
        smin = std::min(smin, e - v + 1 - 2 * t.j);
    }
    int ms = std::max(0, -smin);
    LaurentPoly sum;
    for (const BrTerm& t : terms) {
        LaurentPoly piece =
            pa[k - 1 + t.i] * pb[t.j] * ps[e - v + 1 - 2 * t.j + ms] * pd[lmax - t.l];
        sum.add_scaled(t.c, Monomial::one(), piece);
    }
    if (ms > 0) sum = sum.divide_exact(ps[ms], tv);
    if (lmax > 0) sum = sum.divide_exact(pd[lmax], tv);
    return sum.mul_monomial(Rat(1), Monomial::of(tv, e + v - 1));
}

LaurentPoly kauffman_bracket(const RibbonGraph& f) {
    if (f.vertex_count() == 0) return LaurentPoly::constant(Rat(1));
    require_state_space(f);
    const VarId av = vars::bracket_a();
    int e = f.edge_count();
    PowCache pd(-vp(av, 2) - vp(av, -2));
    LaurentPoly sum;
    uint64_t nstates = uint64_t(1) << e;
    for (uint64_t mask = 0; mask < nstates; ++mask) {
        State h(static_cast<uint32_t>(mask));
        int p = f.boundary_count(h);
        sum.add_scaled(Rat(1), Monomial::of(av, 2 * h.edge_count() - e), pd[p - 1]);
    }
    return sum;
}

LaurentPoly jones_via_bracket(const RibbonGraph& f, long writhe) {
    const VarId av = vars::bracket_a(), tv = vars::t();
    LaurentPoly br = kauffman_bracket(f);
    Rat sign = (writhe % 2 == 0) ? Rat(1) : Rat(-1);
    long ashift = -3 * writhe;
    LaurentPoly out;
    for (const auto& [mono, c] : br.terms()) {
        long a = mono.exponent(av).whole_value() + ashift;
        if (a % 2 != 0)
            throw GridViolation("bracket normalization leaves the half-integer grid");
        out.add_term(sign * c, Monomial::of(tv, HalfInt::halves(static_cast<int>(-a / 2))));
    }
    return out;
}

long subdivision_writhe(const RibbonGraph& f) { return -static_cast<long>(f.edge_count()); }

int genus_from_br(const RibbonGraph& f) {
    if (!f.is_connected()) throw DisconnectedGraph("genus recovery requires a connected graph");
    LaurentPoly p = bollobas_riordan(f);
    p = p.substitute_monomial(vars::beta(), Rat(1), Monomial::one());
    p = p.substitute_monomial(vars::gamma(), Rat(1),
                              Monomial::of(vars::alpha(), HalfInt::halves(-1)));
    return -p.min_degree(vars::alpha()).whole_value();
}

}  // namespace rgpoly
