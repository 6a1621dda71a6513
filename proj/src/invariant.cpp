#include "qlab/invariant.hpp"

#include <string>

#include "qlab/errors.hpp"
#include "qlab/isomorphism.hpp"

namespace qlab {

namespace {

void check_valid_cocycle(const Quandle& X, const Cocycle& phi) {
    if (phi.n != X.size()) throw ShapeError("cocycle size does not match quandle");
    if (!is_cocycle(X, phi)) throw CocycleViolation("not a 2-cocycle on this quandle");
}

bool homogeneous_checked(const Quandle& X) {
    if (is_connected(X)) return true;
    if (X.size() > 64) return false;
    return is_homogeneous(X);
}

}  // namespace

AbelianGroup::Elem boltzmann_weight(const Cocycle& phi, const Coloring& col) {
    AbelianGroup::Elem acc = phi.A.zero();
    for (const Crossing& c : col.trace) {
        if (c.x < 0 || c.x >= phi.n || c.y < 0 || c.y >= phi.n)
            throw BaseMismatch("coloring trace does not fit the cocycle base");
        acc = c.sign > 0 ? phi.A.add(acc, phi.at(c.x, c.y)) : phi.A.sub(acc, phi.at(c.x, c.y));
    }
    return acc;
}

GroupRingElement cocycle_invariant(const Quandle& X, const Cocycle& phi, const BraidWord& w) {
    check_valid_cocycle(X, phi);
    GroupRingElement out(phi.A);
    for (const Coloring& col : enumerate_colorings(X, w))
        out.add_term(boltzmann_weight(phi, col), 1);
    return out;
}

bool is_asymmetric(const GroupRingElement& z) {
    return z != z.conjugate();
}

ProductLawReport invariant_product_law_check(const Quandle& X, const Cocycle& phi,
                                             const BraidWord& w1, const BraidWord& w2) {
    check_valid_cocycle(X, phi);
    if (!homogeneous_checked(X))
        throw PreconditionUnverified("product law needs a homogeneous quandle");
    if (!is_end_monochromatic(X, w1) && !is_end_monochromatic(X, w2))
        throw PreconditionUnverified("product law needs an end-monochromatic factor");
    GroupRingElement lhs =
        cocycle_invariant(X, phi, connect_sum(w1, w2)).scaled(X.size());
    GroupRingElement rhs =
        cocycle_invariant(X, phi, w1).multiply(cocycle_invariant(X, phi, w2));
    bool equal = lhs == rhs;
    return ProductLawReport{std::move(lhs), std::move(rhs), equal};
}

std::int64_t colorings_from_invariant(const GroupRingElement& z) {
    return checked_mul(z.coefficient(z.group().zero()), z.group().order());
}

bool extension_monochromatic_predicate(const Quandle& X, const Cocycle& phi, const BraidWord& w) {
    if (!is_end_monochromatic(X, w))
        throw PreconditionUnverified("base pair is not end monochromatic");
    return cocycle_invariant(X, phi, w).concentrated_at_identity();
}

std::int64_t recover_coefficient(const Quandle& E, const Quandle& X, const AbelianGroup& A,
                                 const RecoveryAnchor& anchor, const BraidWord& w) {
    const long long composite = count_colorings(E, connect_sum(anchor.braid, w));
    const long long plain = count_colorings(E, w);
    const std::int64_t num =
        checked_sub(checked_mul(X.size(), composite), checked_mul(anchor.r_e, plain));
    const std::int64_t den = checked_mul(anchor.r_v, A.order());
    if (den == 0 || num % den != 0)
        throw NonIntegralResult("coefficient recovery is not an exact division");
    return num / den;
}

GroupRingElement recover_invariant(const Quandle& E, const Quandle& X, const AbelianGroup& A,
                                   const std::vector<RecoveryAnchor>& anchors, const BraidWord& w) {
    GroupRingElement out(A);
    const long long plain = count_colorings(E, w);
    if (plain % A.order() != 0)
        throw NonIntegralResult("identity coefficient recovery is not an exact division");
    out.add_term(A.zero(), plain / A.order());

    std::vector<char> covered(static_cast<size_t>(A.order()), 0);
    covered[0] = 1;
    for (const RecoveryAnchor& anchor : anchors) {
        AbelianGroup::Elem target = A.neg(anchor.v);
        out.add_term(target, recover_coefficient(E, X, A, anchor, w));
        covered[static_cast<size_t>(A.rank(target))] = 1;
    }
    for (std::int64_t r = 0; r < A.order(); ++r)
        if (!covered[static_cast<size_t>(r)]) {
            std::string name;
            AbelianGroup::Elem g = A.unrank(r);
            for (size_t i = 0; i < g.size(); ++i)
                name += (i ? "," : "") + std::to_string(g[i]);
            throw MissingAnchor("no anchor recovers the coefficient of (" + name + ")");
        }
    return out;
}

std::vector<std::vector<long long>> cl_matrix(const std::vector<Quandle>& Xs,
                                              const std::vector<BraidWord>& Rs,
                                              const BraidWord& w) {
    std::vector<std::vector<long long>> out;
    out.reserve(Xs.size());
    for (const Quandle& X : Xs) {
        std::vector<long long> row;
        row.reserve(Rs.size());
        for (const BraidWord& R : Rs) row.push_back(count_colorings(X, connect_sum(R, w)));
        out.push_back(std::move(row));
    }
    return out;
}

bool distinguish_rm(const Quandle& E, const BraidWord& R, const BraidWord& w) {
    return count_colorings(E, connect_sum(R, w)) !=
           count_colorings(E, connect_sum(R, reverse_mirror(w)));
}

}  // namespace qlab
