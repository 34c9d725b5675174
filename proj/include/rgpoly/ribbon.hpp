#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgpoly {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateDart : GraphError {
    using GraphError::GraphError;
};
struct UnpairedDart : GraphError {
    using GraphError::GraphError;
};
struct SelfPairedDart : GraphError {
    using GraphError::GraphError;
};
struct DisconnectedGraph : GraphError {
    using GraphError::GraphError;
};
struct BadCycleLength : GraphError {
    using GraphError::GraphError;
};
struct MissingWeight : GraphError {
    using GraphError::GraphError;
};
struct MissingTangle : GraphError {
    using GraphError::GraphError;
};

/// The four one-edge tangle replacements of the weighted link construction.
enum class TangleType { w1, w2, w3, w4 };

std::string tangle_name(TangleType t);
std::optional<TangleType> tangle_from_name(const std::string& s);

/// Spanning sub-ribbon-graph, identified by its edge subset.
class State {
public:
    State() = default;
    explicit State(uint32_t edge_mask) : mask_(edge_mask) {}
    static State empty() { return State(0); }

    uint32_t mask() const { return mask_; }
    bool contains(int edge) const { return (mask_ >> edge) & 1u; }
    State with(int edge) const { return State(mask_ | (1u << edge)); }
    State without(int edge) const { return State(mask_ & ~(1u << edge)); }
    int edge_count() const { return __builtin_popcount(mask_); }

    friend bool operator==(State, State) = default;

private:
    uint32_t mask_ = 0;
};

/// Metrics of a spanning subgraph: component count k, edge count e,
/// rank r = v - k, nullity n = e - r, boundary components p, genus g.
struct Metrics {
    int k = 0;
    int e = 0;
    int r = 0;
    int n = 0;
    int p = 0;
    int g = 0;
};

/// One boundary-walk step: the walk traverses `edge` along dart `dart`,
/// in the edge's forward direction iff `forward`.
struct WalkStep {
    int edge;
    bool forward;
    int dart;
    friend bool operator==(const WalkStep&, const WalkStep&) = default;
};
using Walk = std::vector<WalkStep>;

/// Ribbon graph as a combinatorial map: a rotation permutation sigma whose
/// orbits are the vertices and a fixed-point-free pairing involution eps
/// whose orbits are the edges. Dartless vertices are kept as a count.
/// Immutable after construction.
class RibbonGraph {
public:
    RibbonGraph() = default;  // empty graph: v = 0, e = 0

    /// Builds from named cyclic vertex rotations and dart pairs. Rejects
    /// repeated darts, unpaired darts and self-paired darts.
    static RibbonGraph from_rotation(const std::vector<std::vector<std::string>>& vertex_rotations,
                                     const std::vector<std::pair<std::string, std::string>>& pairs,
                                     int isolated_vertices = 0);

    /// Low-level constructor from permutation arrays. `sigma[d]` is the next
    /// dart at d's vertex, `eps[d]` the other dart of d's edge. Edge ids are
    /// assigned in order of their smaller dart; vertex ids in order of each
    /// cycle's smallest dart.
    static RibbonGraph from_permutations(std::vector<int> sigma, std::vector<int> eps,
                                         int isolated_vertices = 0);

    int dart_count() const { return static_cast<int>(sigma_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int vertex_count() const { return rotation_vertices_ + isolated_; }
    int isolated_vertices() const { return isolated_; }

    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int eps(int d) const { return eps_[d]; }
    int dart_edge(int d) const { return dart_edge_[d]; }
    int dart_vertex(int d) const { return dart_vertex_[d]; }
    /// The (forward, backward) darts of an edge.
    std::pair<int, int> edge_darts(int edge) const { return edge_darts_[edge]; }

    /// Rotations as dart lists, one per dartful vertex, in vertex order;
    /// each cycle starts at its smallest dart.
    std::vector<std::vector<int>> vertex_rotations() const;

    int component_count() const;
    bool is_connected() const { return component_count() == 1; }

    State full_state() const { return State(edge_count() >= 32 ? ~0u : (1u << edge_count()) - 1u); }

    Metrics metrics(State h) const;
    Metrics full_metrics() const { return metrics(full_state()); }
    int genus() const { return full_metrics().g; }

    /// Boundary walks of the spanning subgraph h, traced with the fixed
    /// convention: from dart d cross to eps(d), then rotate with sigma until
    /// an edge of h is met. One empty walk per dartless vertex of h.
    std::vector<Walk> boundary_walks(State h) const;
    /// Number of boundary components of h (fast path, no walk storage).
    int boundary_count(State h) const;

    /// Geometric dual: one vertex per boundary walk of the full state, same
    /// edge set, rotations read along each walk. Requires a connected graph.
    RibbonGraph dual() const;

    /// Tensor product with the q-cycle: every edge replaced by a path of
    /// q - 1 edges. q = 2 returns the graph unchanged.
    RibbonGraph tensor_cycle(int q) const;

    // Optional per-edge decorations. Builders return modified copies.
    RibbonGraph with_weight(int edge, std::string symbol) const;
    RibbonGraph with_uniform_weights(const std::string& symbol) const;
    RibbonGraph with_tangle(int edge, TangleType t) const;
    RibbonGraph with_uniform_tangles(TangleType t) const;
    const std::optional<std::string>& weight(int edge) const { return weights_[edge]; }
    std::optional<TangleType> tangle(int edge) const { return tangles_[edge]; }
    bool all_weighted() const;
    bool all_tangled() const;

    /// Isomorphism-invariant encoding (relabeling and global orientation
    /// reversal quotiented out). Equal encodings iff isomorphic.
    std::string canonical_form() const;

private:
    std::vector<int> sigma_;
    std::vector<int> sigma_inv_;
    std::vector<int> eps_;
    std::vector<int> dart_edge_;
    std::vector<int> dart_vertex_;
    std::vector<std::pair<int, int>> edge_darts_;
    int rotation_vertices_ = 0;
    int isolated_ = 0;
    std::vector<std::optional<std::string>> weights_;
    std::vector<std::optional<TangleType>> tangles_;

    void finish_construction();
};

bool isomorphic(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace rgpoly
