#include "rgpoly/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace rgpoly {

namespace {

struct VarRegistry {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, uint32_t> lookup;
};

VarRegistry& registry() {
    static VarRegistry reg;
    return reg;
}

}  // namespace

VarId var(std::string_view name) {
    auto& reg = registry();
    std::scoped_lock lock(reg.mu);
    std::string key(name);
    auto it = reg.lookup.find(key);
    if (it != reg.lookup.end()) return VarId(it->second);
    uint32_t idx = static_cast<uint32_t>(reg.names.size());
    reg.names.push_back(key);
    reg.lookup.emplace(std::move(key), idx);
    return VarId(idx);
}

const std::string& var_name(VarId v) {
    auto& reg = registry();
    std::scoped_lock lock(reg.mu);
    return reg.names.at(v.index());
}

Rat rat_pow(const Rat& q, long n) {
    if (n == 0) return Rat(1);
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    if (invert && q == 0) throw PolyError("rat_pow: zero base with negative exponent");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
    if (invert) std::swap(num, den);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

int HalfInt::whole_value() const {
    if (v2 % 2 != 0)
        throw FractionalExponentOverflow("exponent " + str() + " is not an integer");
    return v2 / 2;
}

std::string HalfInt::str() const {
    if (v2 % 2 == 0) return std::to_string(v2 / 2);
    return std::to_string(v2) + "/2";
}

Monomial Monomial::of(VarId v, HalfInt e) {
    Monomial m;
    if (!e.is_zero()) m.exps_.emplace_back(v, e);
    return m;
}

HalfInt Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : exps_)
        if (w == v) return e;
    return HalfInt{0};
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            r.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            r.exps_.push_back(*b++);
        } else {
            HalfInt e = a->first == b->first ? a->second + b->second : HalfInt{0};
            if (!e.is_zero()) r.exps_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::pow_whole(int n) const {
    Monomial r;
    if (n == 0) return r;
    for (const auto& [v, e] : exps_) r.exps_.emplace_back(v, e.times(n));
    return r;
}

Monomial Monomial::pow_half(int doubled) const {
    Monomial r;
    if (doubled == 0) return r;
    for (const auto& [v, e] : exps_) {
        long long prod = static_cast<long long>(e.v2) * doubled;  // 4x exponent
        if (prod % 2 != 0)
            throw FractionalExponentOverflow("substitution leaves the half-integer grid for " +
                                             var_name(v));
        r.exps_.emplace_back(v, HalfInt{static_cast<int>(prod / 2)});
    }
    return r;
}

void RationalPoint::assign_half(VarId v, Rat half_value) {
    if (half_value == 0) throw PolyError("RationalPoint: zero value for " + var_name(v));
    half_[v] = std::move(half_value);
}

const Rat& RationalPoint::half_value(VarId v) const {
    auto it = half_.find(v);
    if (it == half_.end()) throw UnassignedVariable("unassigned variable " + var_name(v));
    return it->second;
}

void VarValues::assign(VarId v, Rat value) { vals_[v] = std::move(value); }

const Rat& VarValues::value(VarId v) const {
    auto it = vals_.find(v);
    if (it == vals_.end()) throw UnassignedVariable("unassigned variable " + var_name(v));
    return it->second;
}

LaurentPoly LaurentPoly::constant(Rat c) {
    LaurentPoly p;
    p.add_term(c, Monomial::one());
    return p;
}

LaurentPoly LaurentPoly::monomial(Rat c, Monomial m) {
    LaurentPoly p;
    p.add_term(c, m);
    return p;
}

LaurentPoly LaurentPoly::variable(VarId v, HalfInt e) {
    return monomial(Rat(1), Monomial::of(v, e));
}

void LaurentPoly::add_term(const Rat& c, const Monomial& m) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(c1 * c2, m1 * m2);
    return r;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : p.terms()) r.add_term(c * k, m);
    return r;
}

void LaurentPoly::add_scaled(const Rat& c, const Monomial& m, const LaurentPoly& p) {
    if (c == 0) return;
    for (const auto& [pm, pc] : p.terms_) add_term(c * pc, m * pm);
}

LaurentPoly LaurentPoly::mul_monomial(const Rat& c, const Monomial& m) const {
    LaurentPoly r;
    r.add_scaled(c, m, *this);
    return r;
}

LaurentPoly LaurentPoly::int_pow(int n) const {
    if (n < 0) {
        if (terms_.size() != 1)
            throw NonMonomialInverse("int_pow: negative power of a non-monomial");
        const auto& [m, c] = *terms_.begin();
        return monomial(rat_pow(c, n), m.pow_whole(n));
    }
    LaurentPoly result = constant(Rat(1));
    LaurentPoly base = *this;
    int k = n;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute_monomial(VarId v, const Rat& c, const Monomial& m) const {
    LaurentPoly r;
    for (const auto& [mono, coeff] : terms_) {
        HalfInt ev = mono.exponent(v);
        if (ev.is_zero()) {
            r.add_term(coeff, mono);
            continue;
        }
        Monomial rest;
        for (const auto& [w, e] : mono.exponents())
            if (!(w == v)) rest = rest * Monomial::of(w, e);
        Rat cc = coeff;
        if (c != 1) cc *= rat_pow(c, ev.whole_value());
        r.add_term(cc, rest * m.pow_half(ev.v2));
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_poly(VarId v, const LaurentPoly& q) const {
    std::vector<LaurentPoly> pows{constant(Rat(1))};
    LaurentPoly r;
    for (const auto& [mono, coeff] : terms_) {
        HalfInt ev = mono.exponent(v);
        int k = ev.whole_value();
        if (k < 0) throw PolyError("substitute_poly: negative exponent of " + var_name(v));
        while (static_cast<int>(pows.size()) <= k) pows.push_back(pows.back() * q);
        Monomial rest;
        for (const auto& [w, e] : mono.exponents())
            if (!(w == v)) rest = rest * Monomial::of(w, e);
        r.add_scaled(coeff, rest, pows[k]);
    }
    return r;
}

LaurentPoly LaurentPoly::swap_vars(VarId a, VarId b) const {
    LaurentPoly r;
    for (const auto& [mono, coeff] : terms_) {
        Monomial m;
        for (const auto& [w, e] : mono.exponents()) {
            VarId t = w == a ? b : (w == b ? a : w);
            m = m * Monomial::of(t, e);
        }
        r.add_term(coeff, m);
    }
    return r;
}

Rat LaurentPoly::evaluate(const RationalPoint& pt) const {
    Rat total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rat t = coeff;
        for (const auto& [v, e] : mono.exponents()) t *= rat_pow(pt.half_value(v), e.v2);
        total += t;
    }
    return total;
}

Rat LaurentPoly::evaluate_at(const VarValues& vals) const {
    Rat total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rat t = coeff;
        for (const auto& [v, e] : mono.exponents()) t *= rat_pow(vals.value(v), e.whole_value());
        total += t;
    }
    return total;
}

HalfInt LaurentPoly::min_degree(VarId v) const {
    if (terms_.empty()) throw ZeroPolynomial("min_degree of the zero polynomial");
    HalfInt best{0};
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        HalfInt e = mono.exponent(v);
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

HalfInt LaurentPoly::max_degree(VarId v) const {
    if (terms_.empty()) throw ZeroPolynomial("max_degree of the zero polynomial");
    HalfInt best{0};
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        HalfInt e = mono.exponent(v);
        if (first || best < e) best = e;
        first = false;
    }
    return best;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor, VarId v) const {
    auto univariate = [&](const LaurentPoly& p) {
        std::map<int, Rat> m;  // doubled exponent -> coeff
        for (const auto& [mono, coeff] : p.terms_) {
            for (const auto& [w, e] : mono.exponents())
                if (!(w == v))
                    throw PolyError("divide_exact: polynomial involves " + var_name(w));
            m[mono.exponent(v).v2] = coeff;
        }
        return m;
    };
    if (divisor.is_zero()) throw PolyError("divide_exact: zero divisor");
    std::map<int, Rat> p = univariate(*this);
    std::map<int, Rat> q = univariate(divisor);
    auto qlead = *q.rbegin();
    std::map<int, Rat> quot;
    size_t guard = p.size() * q.size() + p.size() + 1;
    while (!p.empty()) {
        if (guard-- == 0) throw PolyError("divide_exact: nonzero remainder");
        auto plead = *p.rbegin();
        int de = plead.first - qlead.first;
        Rat dc = plead.second / qlead.second;
        quot[de] = dc;
        for (const auto& [e, c] : q) {
            int te = e + de;
            auto it = p.find(te);
            Rat nc = (it == p.end() ? Rat(0) : it->second) - dc * c;
            if (nc == 0) {
                if (it != p.end()) p.erase(it);
            } else {
                p[te] = nc;
            }
        }
    }
    LaurentPoly r;
    for (const auto& [e, c] : quot) r.add_term(c, Monomial::of(v, HalfInt{e}));
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    // variables sorted alphabetically by name
    std::vector<VarId> vars;
    for (const auto& [mono, coeff] : terms_)
        for (const auto& [v, e] : mono.exponents())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end(),
              [](VarId a, VarId b) { return var_name(a) < var_name(b); });

    struct Row {
        std::vector<int> expvec;
        const Monomial* mono;
        const Rat* coeff;
    };
    std::vector<Row> rows;
    rows.reserve(terms_.size());
    for (const auto& [mono, coeff] : terms_) {
        Row r;
        r.expvec.reserve(vars.size());
        for (VarId v : vars) r.expvec.push_back(mono.exponent(v).v2);
        r.mono = &mono;
        r.coeff = &coeff;
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.expvec < b.expvec; });

    std::ostringstream out;
    bool first = true;
    for (const Row& r : rows) {
        Rat c = *r.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        out << c.get_str();
        for (size_t i = 0; i < vars.size(); ++i) {
            int e2 = r.expvec[i];
            if (e2 == 0) continue;
            out << "*" << var_name(vars[i]);
            if (e2 == 2) continue;  // exponent 1 omitted
            if (e2 % 2 == 0)
                out << "^" << (e2 / 2);
            else
                out << "^(" << e2 << "/2)";
        }
    }
    return out.str();
}

}  // namespace rgpoly
