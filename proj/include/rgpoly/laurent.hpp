#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rgpoly {

using Rat = mpq_class;

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonMonomialInverse : PolyError {
    using PolyError::PolyError;
};
struct FractionalExponentOverflow : PolyError {
    using PolyError::PolyError;
};
struct UnassignedVariable : PolyError {
    using PolyError::PolyError;
};
struct ZeroPolynomial : PolyError {
    using PolyError::PolyError;
};

/// q^n for integer n; n < 0 inverts (q must be nonzero).
Rat rat_pow(const Rat& q, long n);

/// Interned variable symbol. Ordering follows registration order; all
/// user-visible output is re-sorted by name, so printed bytes are stable
/// across runs.
class VarId {
public:
    VarId() = default;
    friend auto operator<=>(VarId, VarId) = default;
    uint32_t index() const { return idx_; }

private:
    explicit VarId(uint32_t idx) : idx_(idx) {}
    uint32_t idx_ = 0;
    friend VarId var(std::string_view);
};

VarId var(std::string_view name);
const std::string& var_name(VarId v);

/// Exponent on the half-integer grid, stored doubled.
struct HalfInt {
    int v2 = 0;  // doubled value: v2 = 2 * exponent

    static HalfInt whole(int k) { return HalfInt{2 * k}; }
    static HalfInt halves(int doubled) { return HalfInt{doubled}; }

    bool integral() const { return v2 % 2 == 0; }
    int whole_value() const;  // throws FractionalExponentOverflow if not integral
    bool is_zero() const { return v2 == 0; }

    HalfInt operator+(HalfInt o) const { return HalfInt{v2 + o.v2}; }
    HalfInt operator-() const { return HalfInt{-v2}; }
    HalfInt times(int n) const { return HalfInt{v2 * n}; }
    friend auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const;  // "3", "-2", "3/2", "-1/2"
};

/// Product of variable powers with half-integer exponents; zero exponents
/// are never stored.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial of(VarId v, HalfInt e);
    static Monomial of(VarId v, int whole_exp) { return of(v, HalfInt::whole(whole_exp)); }

    bool is_one() const { return exps_.empty(); }
    HalfInt exponent(VarId v) const;
    const std::vector<std::pair<VarId, HalfInt>>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    Monomial pow_whole(int n) const;  // exponents scaled by integer n
    /// Exponents scaled by doubled/2; throws FractionalExponentOverflow if the
    /// result leaves the half-integer grid.
    Monomial pow_half(int doubled) const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<VarId, HalfInt>> exps_;  // sorted by VarId
};

/// Exact evaluation point: assigns the value of v^{1/2} for each variable.
class RationalPoint {
public:
    void assign_half(VarId v, Rat half_value);  // value of v^{1/2}, must be nonzero
    const Rat& half_value(VarId v) const;       // throws UnassignedVariable

private:
    std::map<VarId, Rat> half_;
};

/// Assigns plain variable values; usable only when all exponents are integers.
class VarValues {
public:
    void assign(VarId v, Rat value);
    const Rat& value(VarId v) const;  // throws UnassignedVariable

private:
    std::map<VarId, Rat> vals_;
};

/// Multivariate Laurent polynomial over Q with half-integer exponents.
/// Canonical form: no zero coefficients stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(Rat c);
    static LaurentPoly monomial(Rat c, Monomial m);
    static LaurentPoly variable(VarId v, HalfInt e = HalfInt::whole(1));

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    /// Adds c * m * p into this polynomial (state-sum accumulation).
    void add_scaled(const Rat& c, const Monomial& m, const LaurentPoly& p);
    void add_term(const Rat& c, const Monomial& m);

    LaurentPoly mul_monomial(const Rat& c, const Monomial& m) const;
    LaurentPoly int_pow(int n) const;  // n < 0 requires a single-term base

    /// Replaces v by c * m. Half-integer exponents of v require c == 1 and
    /// must land on the half-integer grid.
    LaurentPoly substitute_monomial(VarId v, const Rat& c, const Monomial& m) const;
    /// Replaces v by q; every exponent of v must be a non-negative integer.
    LaurentPoly substitute_poly(VarId v, const LaurentPoly& q) const;
    /// Simultaneous exchange of two variables.
    LaurentPoly swap_vars(VarId a, VarId b) const;

    Rat evaluate(const RationalPoint& pt) const;
    /// Evaluation at plain values; throws FractionalExponentOverflow if any
    /// exponent is not an integer.
    Rat evaluate_at(const VarValues& vals) const;

    HalfInt min_degree(VarId v) const;  // 0 when v absent; throws ZeroPolynomial on 0
    HalfInt max_degree(VarId v) const;

    /// Exact division; dividend and divisor may involve only the variable v.
    /// Throws on nonzero remainder.
    LaurentPoly divide_exact(const LaurentPoly& divisor, VarId v) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Canonical text form: terms sorted ascending by exponent vector over
    /// the alphabetically ordered variable set; coefficients always printed.
    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

}  // namespace rgpoly
