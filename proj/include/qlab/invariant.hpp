#pragma once

#include <cstdint>
#include <vector>

#include "qlab/braid.hpp"
#include "qlab/cocycle.hpp"
#include "qlab/coloring.hpp"
#include "qlab/group_ring.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// Product over the trace of phi(x,y)^sign in additive notation.
AbelianGroup::Elem boltzmann_weight(const Cocycle& phi, const Coloring& col);

// State sum over all closure colorings; total mass equals the coloring count.
GroupRingElement cocycle_invariant(const Quandle& X, const Cocycle& phi, const BraidWord& w);

bool is_asymmetric(const GroupRingElement& z);

struct ProductLawReport {
    GroupRingElement lhs;  // |X| * invariant of w1 # w2
    GroupRingElement rhs;  // invariant(w1) * invariant(w2)
    bool equal = false;
};

// Throws PreconditionUnverified unless X is homogeneous and at least one
// factor is end monochromatic with X.
ProductLawReport invariant_product_law_check(const Quandle& X, const Cocycle& phi,
                                             const BraidWord& w1, const BraidWord& w2);

// Coloring count of the abelian extension predicted from the invariant.
std::int64_t colorings_from_invariant(const GroupRingElement& z);

// Is the extension end monochromatic for this knot: invariant concentrated at
// the identity. Throws PreconditionUnverified unless (w, X) end monochromatic.
bool extension_monochromatic_predicate(const Quandle& X, const Cocycle& phi, const BraidWord& w);

// Anchor knot with invariant r_e e + r_v v; colorings of E against anchored
// composites recover the coefficient of v^-1.
struct RecoveryAnchor {
    AbelianGroup::Elem v;
    BraidWord braid;
    std::int64_t r_e = 0;
    std::int64_t r_v = 0;
};

// ( |X| Col_E(R_v # w) - r_e Col_E(w) ) / (r_v |A|), exact division enforced.
std::int64_t recover_coefficient(const Quandle& E, const Quandle& X, const AbelianGroup& A,
                                 const RecoveryAnchor& anchor, const BraidWord& w);

// Identity coefficient via Col_E(w)/|A|, the rest via anchors; anchors must
// cover every non-identity element of A. Throws MissingAnchor, NonIntegralResult.
GroupRingElement recover_invariant(const Quandle& E, const Quandle& X, const AbelianGroup& A,
                                   const std::vector<RecoveryAnchor>& anchors, const BraidWord& w);

// Col_{Xs[i]}(Rs[j] # w).
std::vector<std::vector<long long>> cl_matrix(const std::vector<Quandle>& Xs,
                                              const std::vector<BraidWord>& Rs,
                                              const BraidWord& w);

// Col_E(R # w) != Col_E(R # rm(w)); true certifies chirality of w's closure.
bool distinguish_rm(const Quandle& E, const BraidWord& R, const BraidWord& w);

}  // namespace qlab
