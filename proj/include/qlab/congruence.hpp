#pragma once

#include <vector>

#include "qlab/quandle.hpp"

namespace qlab {

// A congruence as a normalized partition: cls[x] is the block id of x, and
// block ids are numbered by first appearance, so equal partitions compare equal.
using Congruence = std::vector<int>;

Congruence normalize_partition(const std::vector<int>& cls);

bool is_congruence(const Quandle& X, const Congruence& cls);

// Smallest congruence identifying a and b (pair closure under translations).
Congruence principal_congruence(const Quandle& X, int a, int b);

// All congruences: join closure of the principal ones plus the discrete
// partition. Throws SizeLimit for n > 36.
std::vector<Congruence> congruences(const Quandle& X);

// Quotient table on the blocks. Throws InvalidParameter when cls is not a
// congruence of X.
Quandle quotient(const Quandle& X, const Congruence& cls);

// Quotients by congruences other than the discrete and total partitions,
// deduplicated up to isomorphism. Order: by size descending, then by the
// first congruence producing each class.
std::vector<Quandle> proper_quotients(const Quandle& X);

}  // namespace qlab
