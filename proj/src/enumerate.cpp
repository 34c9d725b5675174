#include "rgpoly/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace rgpoly {

namespace {

// Inserts the edge {A, B} with A = old dart count, B = A + 1. Positions
// pos_a/pos_b select where each new dart lands: a value in [0, 2e) splices
// the dart into the rotation after that dart, -1 starts a fresh vertex, and
// for B only, pos_b == A splices B after the freshly inserted A.
RibbonGraph insert_edge(const RibbonGraph& g, int pos_a, int pos_b) {
    int n = g.dart_count();
    int A = n, B = n + 1;
    std::vector<int> sigma(n + 2), eps(n + 2);
    for (int d = 0; d < n; ++d) {
        sigma[d] = g.sigma(d);
        eps[d] = g.eps(d);
    }
    eps[A] = B;
    eps[B] = A;
    if (pos_a == -1) {
        sigma[A] = A;
    } else {
        sigma[A] = sigma[pos_a];
        sigma[pos_a] = A;
    }
    if (pos_b == -1) {
        sigma[B] = B;
    } else {
        sigma[B] = sigma[pos_b];
        sigma[pos_b] = B;
    }
    return RibbonGraph::from_permutations(std::move(sigma), std::move(eps),
                                          g.isolated_vertices());
}

}  // namespace

std::vector<RibbonGraph> all_maps(int edges, bool connected_only) {
    std::vector<RibbonGraph> level{RibbonGraph()};
    for (int e = 1; e <= edges; ++e) {
        std::vector<RibbonGraph> next;
        std::unordered_set<std::string> seen;
        for (const RibbonGraph& g : level) {
            int n = g.dart_count();
            for (int pos_a = -1; pos_a < n; ++pos_a) {
                // pos_b == n splices B right after the freshly inserted A
                for (int pos_b = -1; pos_b <= n; ++pos_b) {
                    RibbonGraph h = insert_edge(g, pos_a, pos_b);
                    if (seen.insert(h.canonical_form()).second) next.push_back(std::move(h));
                }
            }
        }
        level = std::move(next);
    }
    if (!connected_only) return level;
    std::vector<RibbonGraph> out;
    for (auto& g : level)
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

std::vector<RibbonGraph> connected_maps_up_to(int max_edges) {
    std::vector<RibbonGraph> out;
    for (int e = 1; e <= max_edges; ++e) {
        auto maps = all_maps(e, true);
        out.insert(out.end(), std::make_move_iterator(maps.begin()),
                   std::make_move_iterator(maps.end()));
    }
    return out;
}

std::vector<RibbonGraph> brute_force_maps(int edges, bool connected_only) {
    int n = 2 * edges;
    std::vector<int> eps(n);
    for (int i = 0; i < edges; ++i) {
        eps[2 * i] = 2 * i + 1;
        eps[2 * i + 1] = 2 * i;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::unordered_set<std::string> seen;
    std::vector<RibbonGraph> out;
    do {
        RibbonGraph g = RibbonGraph::from_permutations(perm, eps, 0);
        if (connected_only && !g.is_connected()) continue;
        if (seen.insert(g.canonical_form()).second) out.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

uint64_t bounded_draw(std::mt19937_64& rng, uint64_t bound) {
    // rejection sampling keeps the draw unbiased and engine-deterministic
    for (;;) {
        uint64_t x = rng();
        uint64_t r = x % bound;
        if (x - r <= std::numeric_limits<uint64_t>::max() - (bound - 1)) return r;
    }
}

RibbonGraph random_connected_map(int edges, std::mt19937_64& rng) {
    int n = 2 * edges;
    std::vector<int> eps(n);
    for (int i = 0; i < edges; ++i) {
        eps[2 * i] = 2 * i + 1;
        eps[2 * i + 1] = 2 * i;
    }
    std::vector<int> perm(n);
    for (;;) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(bounded_draw(rng, static_cast<uint64_t>(i) + 1));
            std::swap(perm[i], perm[j]);
        }
        RibbonGraph g = RibbonGraph::from_permutations(perm, eps, 0);
        if (g.is_connected()) return g;
    }
}

}  // namespace rgpoly
