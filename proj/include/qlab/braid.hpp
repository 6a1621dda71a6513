#pragma once

#include <string>
#include <vector>

#include "qlab/permutation.hpp"

namespace qlab {

// Letters k / -k encode sigma_k and its inverse, 1 <= |k| <= strands-1.
// Braids read top to bottom with downward strand orientation.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord& o) const {
        return strands == o.strands && letters == o.letters;
    }
};

// "[1,-2,1,-2]"; strand count defaults to 1 + max |letter|.
BraidWord parse_braid(const std::string& text);
BraidWord parse_braid(const std::string& text, int strands);  // allows stabilized words
std::string format_braid(const BraidWord& w);

// Permutation induced on strand positions, crossing signs ignored.
Perm closure_permutation(const BraidWord& w);
bool is_knot(const BraidWord& w);  // closure is a single cycle

BraidWord unknot();

// [a..., b + sign(b)(m-1)...] on m+n-1 strands. Throws NotAKnot.
BraidWord connect_sum(const BraidWord& w1, const BraidWord& w2);

BraidWord mirror(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord reverse_mirror(const BraidWord& w);

// (sigma_1 ... sigma_{p-1})^q on p strands. Throws NotCoprime.
BraidWord torus_braid(int p, int q);

struct KnotEntry {
    std::string name;
    BraidWord braid;
    std::string note;
};

// One entry per line: `name strands [letters]`, '#' starts a comment; a
// trailing comment becomes the entry's note. Throws ParseError, NotAKnot.
std::vector<KnotEntry> load_catalog(const std::string& path);

}  // namespace qlab
