#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rgpoly/ribbon.hpp"

namespace rgpoly {

/// All ribbon graphs with exactly `edges` edges and no dartless vertices,
/// up to isomorphism, built by inserting one edge at a time into the smaller
/// library. `connected_only` keeps the connected ones.
std::vector<RibbonGraph> all_maps(int edges, bool connected_only);

/// Connected ribbon graphs with 1..max_edges edges, up to isomorphism.
std::vector<RibbonGraph> connected_maps_up_to(int max_edges);

/// Reference enumerator: walks every rotation permutation on 2e darts with
/// the fixed pairing (0 1)(2 3)... and dedups by canonical form. Exponential;
/// only sensible for small e. Used to cross-check all_maps.
std::vector<RibbonGraph> brute_force_maps(int edges, bool connected_only);

/// Deterministic bounded draw from the engine (uniform_int_distribution is
/// not portable across standard libraries).
uint64_t bounded_draw(std::mt19937_64& rng, uint64_t bound);

/// Random connected ribbon graph with the given edge count: a uniformly
/// shuffled rotation permutation over 2e darts, redrawn until connected.
RibbonGraph random_connected_map(int edges, std::mt19937_64& rng);

}  // namespace rgpoly
