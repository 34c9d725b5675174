#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rgpoly/laurent.hpp"
#include "rgpoly/ribbon.hpp"

namespace rgpoly {

struct GridViolation : PolyError {
    using PolyError::PolyError;
};

/// Canonical cyclically-reduced word over directed edges: the free-homotopy
/// class of a boundary curve in the ribbon-graph surface. Canonical form is
/// the lexicographically minimal rotation of the reduced word; the empty
/// word is the trivial class.
class CyclicWord {
public:
    struct Letter {
        int edge;
        bool forward;
        friend auto operator<=>(const Letter&, const Letter&) = default;
    };

    CyclicWord() = default;
    static CyclicWord from_letters(std::vector<Letter> letters);

    bool trivial() const { return letters_.empty(); }
    size_t size() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }

    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

    std::string str(const std::function<std::string(int)>& edge_name) const;

private:
    std::vector<Letter> letters_;
};

/// Sorted multiset of nontrivial labels; the empty multiset keys the part of
/// the invariant with only trivial labels.
using LabelMultiset = std::vector<CyclicWord>;

/// HOMFLY values split by the multiset of boundary labels of each state.
class LabeledPoly {
public:
    void add(const LabelMultiset& labels, const LaurentPoly& p);
    const std::map<LabelMultiset, LaurentPoly>& parts() const { return parts_; }
    /// Sets every label to 1: the plain two-variable invariant.
    LaurentPoly forget_labels() const;
    friend bool operator==(const LabeledPoly&, const LabeledPoly&) = default;

private:
    std::map<LabelMultiset, LaurentPoly> parts_;
};

// Variable handles shared by the invariants (interned once).
namespace vars {
VarId alpha();
VarId beta();
VarId gamma();
VarId x();
VarId y();
VarId t();
VarId bracket_a();
VarId tutte_x();
VarId tutte_y();
VarId weight_a();
VarId weight_c();
}  // namespace vars

/// Sum over states of alpha^(r(F)-r(H)) beta^(n(H)) gamma^(k(H)-p(H)+n(H)).
LaurentPoly bollobas_riordan(const RibbonGraph& f);

/// The same polynomial with rank and nullity expanded into per-state
/// component/edge/boundary counts; equality with bollobas_riordan
/// cross-checks the metric bookkeeping.
LaurentPoly bollobas_riordan_rearranged(const RibbonGraph& f);

/// Weighted state sum a^k(H) * prod of edge weights * c^p(H); requires every
/// edge to carry a weight symbol.
LaurentPoly weighted_B(const RibbonGraph& f);

/// Tutte polynomial in x_T, y_T via the rank-nullity specialization.
LaurentPoly tutte(const RibbonGraph& f);

/// HOMFLY polynomial of the associated oriented link, via the closed
/// prefactor-times-specialized-state-sum formula. Exact in Z[x^±1, y^±1].
LaurentPoly homfly_formula(const RibbonGraph& f);

/// HOMFLY polynomial via the direct resolution state sum. Equal to
/// homfly_formula identically; computed independently.
LaurentPoly homfly_resolution(const RibbonGraph& f);

/// Free-homotopy label of one boundary walk of the state: the walk's
/// directed-edge word, cyclically reduced and rotated to canonical form.
CyclicWord boundary_label(const RibbonGraph& f, State h, const Walk& walk);

/// Full labeled HOMFLY invariant: per state, the resolution coefficient is
/// attached to the multiset of nontrivial boundary labels. Requires weights.
LabeledPoly homfly_full(const RibbonGraph& f);

/// Labeled HOMFLY for the four-tangle edge replacements: per-edge inclusion
/// weights and global per-type prefactors. Requires weights and tangles.
LabeledPoly homfly_traldi(const RibbonGraph& f);

/// The inclusion weight of each tangle type, as a signed monomial in x, y.
LaurentPoly tangle_weight(TangleType t);

/// Jones polynomial of the medial link from the writhe-corrected
/// specialization of the state sum. Half-integer powers of t appear.
LaurentPoly jones_cp(const RibbonGraph& f, long writhe);

/// Jones polynomial of the oriented link via the HOMFLY specialization
/// x = 1/t, y = t^(1/2) - t^(-1/2) applied to homfly_formula.
LaurentPoly jones_from_homfly(const RibbonGraph& f);

/// The same Jones polynomial via the direct prefactor-times-state-sum
/// display; must agree with jones_from_homfly identically.
LaurentPoly jones_from_homfly_direct(const RibbonGraph& f);

/// Kauffman bracket of the medial link, as a state sum in A with loop value
/// d = -A^2 - A^-2. Calibration: an included edge is an A-smoothing.
LaurentPoly kauffman_bracket(const RibbonGraph& f);

/// Jones polynomial through the bracket: (-A)^(-3w) <L> with t = A^-4.
LaurentPoly jones_via_bracket(const RibbonGraph& f, long writhe);

/// Writhe of the medial link of a cycle-subdivided graph: -e(F).
long subdivision_writhe(const RibbonGraph& f);

/// Genus of a connected ribbon graph recovered from the state sum: minus the
/// lowest degree of alpha after beta = 1, gamma^2 = 1/alpha.
int genus_from_br(const RibbonGraph& f);

}  // namespace rgpoly
