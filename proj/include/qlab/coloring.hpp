#pragma once

#include <vector>

#include "qlab/braid.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// Source colors and sign of one crossing.
struct Crossing {
    int x = 0;
    int y = 0;
    int sign = 1;

    bool operator==(const Crossing& o) const { return x == o.x && y == o.y && sign == o.sign; }
};

struct Coloring {
    std::vector<int> top;
    std::vector<Crossing> trace;
};

struct Propagation {
    std::vector<int> bottom;
    std::vector<Crossing> trace;
};

// Push top colors through the word. Positive letter k sends the position pair
// (a,b) to (b, a*b) with source (a,b); a negative letter inverts that, with
// the source pair read off the outgoing side.
Propagation propagate(const Quandle& X, const BraidWord& w, const std::vector<int>& top);

// Closure colorings: top assignments with bottom = top. Counting fixes the
// first strand color and scales by |X| when X is homogeneous. Throws NotAKnot;
// SizeLimit when the propagation budget would be exceeded (never partial).
long long count_colorings(const Quandle& X, const BraidWord& w);

// Count with the strand-1 top color fixed to x. For homogeneous X this is
// count_colorings / |X| independently of x.
long long count_colorings_fixed(const Quandle& X, int x, const BraidWord& w);

// Cut strand 1's closure arc: do the tangle colorings (bottom = top on
// strands 2..m) all force bottom = top on strand 1 as well?
bool is_end_monochromatic(const Quandle& X, const BraidWord& w);

// All closure colorings with traces, lexicographic in top.
std::vector<Coloring> enumerate_colorings(const Quandle& X, const BraidWord& w);

}  // namespace qlab
