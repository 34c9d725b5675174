#pragma once

#include "rgpoly/invariants.hpp"
#include "rgpoly/ribbon.hpp"

namespace rgpoly::fixtures {

/// Two vertices joined by a single edge (a planar bridge; spanning tree disc).
inline RibbonGraph bridge() {
    return RibbonGraph::from_rotation({{"a"}, {"b"}}, {{"a", "b"}});
}

/// One vertex with a single loop (planar annulus).
inline RibbonGraph loop() {
    return RibbonGraph::from_rotation({{"a", "a'"}}, {{"a", "a'"}});
}

/// One vertex with two interleaved loops (torus with one boundary circle).
inline RibbonGraph double_loop() {
    return RibbonGraph::from_rotation({{"a", "b", "a'", "b'"}},
                                      {{"a", "a'"}, {"b", "b'"}});
}

/// Planar triangle: three vertices in a 3-cycle.
inline RibbonGraph triangle() {
    return RibbonGraph::from_rotation({{"y3", "x1"}, {"y1", "x2"}, {"y2", "x3"}},
                                      {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
}

inline LaurentPoly c(long n) { return LaurentPoly::constant(Rat(n)); }

inline LaurentPoly v(const char* name, int exp = 1) {
    return LaurentPoly::variable(var(name), HalfInt::whole(exp));
}

inline LaurentPoly vh(const char* name, int doubled) {
    return LaurentPoly::variable(var(name), HalfInt::halves(doubled));
}

}  // namespace rgpoly::fixtures
