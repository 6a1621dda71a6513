#pragma once

#include <cstdint>
#include <vector>

#include "qlab/braid.hpp"
#include "qlab/cocycle.hpp"
#include "qlab/int_matrix.hpp"
#include "qlab/quandle.hpp"

// Slow reference implementations, written independently of the library code
// paths they check. Everything here enumerates exhaustively and applies the
// definitions directly.
namespace oracle {

// First failed axiom as (axiom, x, y, z) or all -1 when the table is a quandle.
std::vector<int> first_axiom_failure(const std::vector<std::vector<int>>& table);

// Closure colorings by full enumeration of the |X|^strands top labelings.
long long count_colorings(const qlab::Quandle& X, const qlab::BraidWord& w);

// As above restricted to tops whose first strand carries the given color.
long long count_colorings_fixed(const qlab::Quandle& X, int x, const qlab::BraidWord& w);

// U M V == D, U Uinv == I, V Vinv == I, and the diagonal divisibility chain.
bool smith_consistent(const qlab::IntMatrix& M);

// All 2-cocycles with values in Z_d by testing every map on off-diagonal
// pairs. Feasible only for tiny quandles; returns value vectors in the
// lexicographic pair order (x,y), x != y.
std::vector<std::vector<std::int64_t>> all_cocycles_mod(const qlab::Quandle& X, std::int64_t d);

// Number of coboundaries with values in Z_d, counted by enumerating all
// 1-cochains and collecting distinct images.
long long coboundary_count(const qlab::Quandle& X, std::int64_t d);

}  // namespace oracle
