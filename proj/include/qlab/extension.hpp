#pragma once

#include <optional>
#include <vector>

#include "qlab/abelian_group.hpp"
#include "qlab/cocycle.hpp"
#include "qlab/perm_group.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// E(X, A, phi): quandle on X x A with (x,a)*(y,b) = (x*y, a + phi(x,y)).
// Index encoding (x, a) -> x*|A| + rank(a).
struct AbelianExtension {
    Quandle base;
    AbelianGroup coefficients;
    Cocycle cocycle;
    Quandle total;
    std::vector<int> projection;  // total index -> base index
};

AbelianExtension abelian_extension(const Quandle& X, const AbelianGroup& A, const Cocycle& phi);

// X x_beta S with (x,t)*(y,s) = (x*y, beta[x][y](t)), fiber S = {0..k-1}.
struct ConstantCocycle {
    Quandle base;
    int fiber = 0;
    std::vector<Perm> beta;  // n*n entries, row-major

    const Perm& at(int x, int y) const { return beta[static_cast<size_t>(x) * base.size() + y]; }
};

// Validates beta_{x,x} = id and beta_{x*y,z} beta_{x,y} = beta_{x*z,y*z} beta_{x,z};
// throws ConstantCocycleViolation with the witness triple.
Quandle constant_extension(const Quandle& X, const std::vector<Perm>& beta, int fiber_size);

// Group generated by the beta entries.
PermGroup h_beta(const ConstantCocycle& cc);

// phi(x,y) + phi(x*y,y) = 0 for all x,y. Throws BaseNotKei when X is not a kei.
bool kei_extension_check(const Quandle& X, const Cocycle& phi);

// Componentwise cocycle over B x C. Throws BaseMismatch when sizes differ.
Cocycle pair_cocycles(const Cocycle& phiB, const Cocycle& phiC);

// Pull phiC on the base of E back to E.total: phi'((x1,b1),(x2,b2)) = phiC(x1,x2).
Cocycle lift_cocycle(const AbelianExtension& E, const Cocycle& phiC);

// E(E(X, B, phiB), C, lifted phiC); its total equals E(X, BxC, pair_cocycles) entrywise.
AbelianExtension iterate_extension(const Quandle& X, const Cocycle& phiB, const Cocycle& phiC);

struct TowerDecomposition {
    AbelianExtension middle;    // X extended by A/C
    AbelianExtension top;       // middle extended by C
    std::vector<int> witness;   // top.total index -> E(X,A,phi).total index
};

// Split E(X, A, phi) through the subgroup C generated by c_gens, with section
// s(b) the lex-least coset representative and eta(b1,b2) = s(b1+b2)-s(b1)-s(b2).
TowerDecomposition tower_decompose(const Quandle& X, const AbelianGroup& A, const Cocycle& phi,
                                   const std::vector<AbelianGroup::Elem>& c_gens);

struct DetectedAbelian {
    AbelianExtension extension;  // A cyclic of order k
    std::vector<int> witness;    // Y index -> extension.total index
};

struct DetectionResult {
    ConstantCocycle constant;
    std::optional<DetectedAbelian> abelian;
};

// Recover extension structure over the faithful quotient of Y. The abelian
// part is present when the fiber size is 2 or H_beta is cyclic of prime-power
// order equal to the fiber size. Throws NotConnected, IsFaithful, FibersUnequal.
DetectionResult detect_abelian_extension(const Quandle& Y);

}  // namespace qlab
