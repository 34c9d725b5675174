#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgpoly/invariants.hpp"

namespace rgpoly {

struct BadPoint : PolyError {
    using PolyError::PolyError;
};
struct TooLarge : PolyError {
    using PolyError::PolyError;
};

enum class CheckMode { symbolic, multipoint };

/// Outcome of one identity check. A failing report carries a reproducible
/// witness: the point (or the two symbolic values) where the sides differ.
struct VerificationReport {
    std::string identity;
    CheckMode mode = CheckMode::symbolic;
    long points = 0;
    bool pass = true;
    std::string witness;
    uint64_t seed = 0;

    std::string mode_name() const { return mode == CheckMode::symbolic ? "symbolic" : "multipoint"; }
};

/// The two state-sum forms of the Bollobas-Riordan polynomial agree.
VerificationReport check_br_forms(const RibbonGraph& f);

/// Closed HOMFLY formula equals the resolution state sum.
VerificationReport check_homfly_forms(const RibbonGraph& f);

/// Duality: R(F; a, b, 1/sqrt(ab)) = (b/a)^g(F) R(F*; b, a, 1/sqrt(ab)),
/// checked symbolically after the gamma^2 -> 1/(ab) substitution.
VerificationReport check_duality(const RibbonGraph& f);

struct DetPoint {
    Rat x, y;
};

/// Which square root recovers the first HOMFLY argument from alpha. The
/// alpha_minus_one reading exists as a negative control and is expected to
/// fail; it compares squared sides to stay in exact rationals.
enum class DetReading { alpha_plus_one, alpha_minus_one };

/// Deterministic admissible points (x not in {0, 1, -1}, y != 0), all positive.
std::vector<DetPoint> determination_points(int n, uint64_t seed);

struct DetSides {
    Rat lhs, rhs;
    bool squared = false;  // true when both values are squared (negative control)
};

/// Both sides of the determination identity at one point.
DetSides determination_sides(const RibbonGraph& f, const DetPoint& pt,
                             DetReading reading = DetReading::alpha_plus_one);

/// Determination of the Bollobas-Riordan polynomial by the HOMFLY polynomial
/// along alpha*beta*gamma^2 = 1, verified at >= 25 exact rational points.
VerificationReport check_determination(const RibbonGraph& f, const std::vector<DetPoint>& points,
                                       DetReading reading = DetReading::alpha_plus_one,
                                       uint64_t seed = 0);

/// Tensor-with-triangle identity in full three-variable multipoint mode:
/// the product grid has more values per variable than either side's degree,
/// so agreement on the grid proves the identity.
VerificationReport check_tensor_c3(const RibbonGraph& f, uint64_t seed);

/// Odd-cycle tensor identity for q = 2^p + 1 on the tied surface
/// beta = alpha(1 - alpha), gamma^2 = 1/(alpha beta). Univariate grid in
/// alpha exceeding the cleared degree. Requires e(F) * 2^p <= 14.
VerificationReport check_tensor_odd(const RibbonGraph& f, int p, uint64_t seed);

/// Mirror relation between the Jones polynomial of the subdivided graph's
/// medial link (writhe -2e(F)) and the Jones specialization of HOMFLY.
VerificationReport check_jones_mirror(const RibbonGraph& f);

/// Bracket-normalized Jones equals the writhe-corrected specialization.
VerificationReport check_bracket_vs_cp(const RibbonGraph& f, long writhe);

/// All applicable checks for one graph (duality skipped when disconnected,
/// the odd tensor check when the subdivision would be too large).
std::vector<VerificationReport> verify_all(const RibbonGraph& f, uint64_t seed);

}  // namespace rgpoly
