#pragma once

#include <optional>

#include "qlab/perm_group.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// Backtracking isomorphism search. Assigns images in element-index order,
// candidates ascending, propagating f(a*b) = f(a)*f(b) after every choice,
// so the first solution found is the lexicographically least witness.
// Throws SizeLimit for n > 64.
std::optional<Perm> find_isomorphism(const Quandle& X, const Quandle& Y);

inline std::optional<Perm> are_isomorphic(const Quandle& X, const Quandle& Y) {
    return find_isomorphism(X, Y);
}

// Full automorphism group by exhaustive backtracking. Throws SizeLimit when
// the group exceeds max_order or n > 64.
PermGroup automorphisms(const Quandle& X, long long max_order = 10000000);

// f, restricted check: does the given map realize an isomorphism X -> Y?
bool is_isomorphism(const Quandle& X, const Quandle& Y, const Perm& f);

}  // namespace qlab
