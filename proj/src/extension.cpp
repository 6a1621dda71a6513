#include "qlab/extension.hpp"

#include <stdexcept>
#include <string>

namespace qlab {

namespace {

constexpr int kMaxExtensionSize = 4096;

void check_cocycle_on(const Quandle& X, const Cocycle& phi) {
    if (phi.n != X.size()) throw ShapeError("cocycle size does not match quandle");
    if (!is_cocycle(X, phi)) throw CocycleViolation("not a 2-cocycle on this quandle");
}

}  // namespace

AbelianExtension abelian_extension(const Quandle& X, const AbelianGroup& A, const Cocycle& phi) {
    if (phi.A != A) throw ModulusMismatch("cocycle coefficients do not match A");
    check_cocycle_on(X, phi);
    const int n = X.size();
    const std::int64_t k = A.order();
    if (static_cast<std::int64_t>(n) * k > kMaxExtensionSize)
        throw SizeLimit("extension order exceeds " + std::to_string(kMaxExtensionSize));
    const int N = static_cast<int>(n * k);

    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    for (int x = 0; x < n; ++x)
        for (std::int64_t a = 0; a < k; ++a) {
            const int i = static_cast<int>(x * k + a);
            for (int y = 0; y < n; ++y) {
                AbelianGroup::Elem va = A.add(A.unrank(a), phi.at(x, y));
                const int target = static_cast<int>(X.op(x, y) * k + A.rank(va));
                for (std::int64_t b = 0; b < k; ++b)
                    table[i][static_cast<size_t>(y * k + b)] = target;
            }
        }

    std::vector<int> projection(N);
    for (int i = 0; i < N; ++i) projection[i] = static_cast<int>(i / k);
    return AbelianExtension{X, A, phi, verify_quandle(table), std::move(projection)};
}

Quandle constant_extension(const Quandle& X, const std::vector<Perm>& beta, int fiber_size) {
    const int n = X.size();
    const int k = fiber_size;
    if (k < 1) throw InvalidParameter("fiber size must be positive");
    if (static_cast<std::int64_t>(beta.size()) != static_cast<std::int64_t>(n) * n)
        throw ShapeError("beta table must have n*n entries");
    for (const auto& p : beta)
        if (static_cast<int>(p.size()) != k || !is_permutation(p))
            throw ConstantCocycleViolation("beta entry is not a permutation of the fiber");
    auto at = [&](int x, int y) -> const Perm& { return beta[static_cast<size_t>(x) * n + y]; };

    for (int x = 0; x < n; ++x)
        if (!is_identity(at(x, x)))
            throw ConstantCocycleViolation("beta[" + std::to_string(x) + "][" + std::to_string(x) +
                                           "] is not the identity");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (compose(at(X.op(x, y), z), at(x, y)) != compose(at(X.op(x, z), X.op(y, z)), at(x, z)))
                    throw ConstantCocycleViolation("constant cocycle condition fails at (" +
                                                   std::to_string(x) + "," + std::to_string(y) +
                                                   "," + std::to_string(z) + ")");

    if (static_cast<std::int64_t>(n) * k > kMaxExtensionSize)
        throw SizeLimit("extension order exceeds " + std::to_string(kMaxExtensionSize));
    const int N = n * k;
    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    for (int x = 0; x < n; ++x)
        for (int t = 0; t < k; ++t)
            for (int y = 0; y < n; ++y)
                for (int s = 0; s < k; ++s)
                    table[static_cast<size_t>(x) * k + t][static_cast<size_t>(y) * k + s] =
                        X.op(x, y) * k + at(x, y)[t];
    return verify_quandle(table);
}

PermGroup h_beta(const ConstantCocycle& cc) {
    return generate_group(cc.beta);
}

bool kei_extension_check(const Quandle& X, const Cocycle& phi) {
    if (!is_kei(X)) throw BaseNotKei("kei criterion needs a kei base");
    check_cocycle_on(X, phi);
    for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
            if (!phi.A.is_zero(phi.A.add(phi.at(x, y), phi.at(X.op(x, y), y)))) return false;
    return true;
}

Cocycle pair_cocycles(const Cocycle& phiB, const Cocycle& phiC) {
    if (phiB.n != phiC.n) throw BaseMismatch("cocycles live on different bases");
    std::vector<std::int64_t> moduli = phiB.A.moduli();
    moduli.insert(moduli.end(), phiC.A.moduli().begin(), phiC.A.moduli().end());
    AbelianGroup BC(std::move(moduli));
    Cocycle out = Cocycle::zero(BC, phiB.n);
    for (size_t i = 0; i < out.values.size(); ++i) {
        AbelianGroup::Elem v = phiB.values[i];
        v.insert(v.end(), phiC.values[i].begin(), phiC.values[i].end());
        out.values[i] = std::move(v);
    }
    return out;
}

Cocycle lift_cocycle(const AbelianExtension& E, const Cocycle& phiC) {
    if (phiC.n != E.base.size()) throw BaseMismatch("cocycle does not live on the extension base");
    const int N = E.total.size();
    Cocycle out = Cocycle::zero(phiC.A, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out.at(i, j) = phiC.at(E.projection[i], E.projection[j]);
    return out;
}

AbelianExtension iterate_extension(const Quandle& X, const Cocycle& phiB, const Cocycle& phiC) {
    if (phiB.n != phiC.n) throw BaseMismatch("cocycles live on different bases");
    AbelianExtension EB = abelian_extension(X, phiB.A, phiB);
    return abelian_extension(EB.total, phiC.A, lift_cocycle(EB, phiC));
}

TowerDecomposition tower_decompose(const Quandle& X, const AbelianGroup& A, const Cocycle& phi,
                                   const std::vector<AbelianGroup::Elem>& c_gens) {
    if (phi.A != A) throw ModulusMismatch("cocycle coefficients do not match A");
    check_cocycle_on(X, phi);
    SubgroupContext ctx = analyze_subgroup(A, c_gens);
    const int n = X.size();

    Cocycle phiB = Cocycle::zero(ctx.B, n);
    for (size_t i = 0; i < phi.values.size(); ++i) phiB.values[i] = ctx.project(phi.values[i]);
    AbelianExtension middle = abelian_extension(X, ctx.B, phiB);

    // eta(b1, b2) = iota^-1(s(b1 + b2) - s(b1) - s(b2))
    auto eta = [&](const AbelianGroup::Elem& b1, const AbelianGroup::Elem& b2) {
        AbelianGroup::Elem a =
            ctx.A.sub(ctx.A.sub(ctx.sect(ctx.B.add(b1, b2)), ctx.sect(b1)), ctx.sect(b2));
        return ctx.iota_inv(a);
    };
    // C-component relative to the section: a = s(p_B(a)) + iota(p_C(a)).
    auto pC = [&](const AbelianGroup::Elem& a) {
        return ctx.iota_inv(ctx.A.sub(a, ctx.sect(ctx.project(a))));
    };

    const std::int64_t kb = ctx.B.order();
    const int M = middle.total.size();
    Cocycle phiTop = Cocycle::zero(ctx.C, M);
    for (int i = 0; i < M; ++i) {
        const int x1 = static_cast<int>(i / kb);
        AbelianGroup::Elem b1 = ctx.B.unrank(i % kb);
        for (int j = 0; j < M; ++j) {
            const int x2 = static_cast<int>(j / kb);
            const AbelianGroup::Elem& a = phi.at(x1, x2);
            phiTop.at(i, j) = ctx.C.sub(pC(a), eta(b1, ctx.project(a)));
        }
    }
    AbelianExtension top = abelian_extension(middle.total, ctx.C, phiTop);

    // f((x,b),c) = (x, s(b) + iota(c)), checked against E(X, A, phi) entrywise.
    AbelianExtension original = abelian_extension(X, A, phi);
    const std::int64_t kc = ctx.C.order();
    const std::int64_t ka = A.order();
    std::vector<int> witness(top.total.size());
    for (int i = 0; i < top.total.size(); ++i) {
        const int mid = static_cast<int>(i / kc);
        AbelianGroup::Elem c = ctx.C.unrank(i % kc);
        const int x = static_cast<int>(mid / kb);
        AbelianGroup::Elem b = ctx.B.unrank(mid % kb);
        AbelianGroup::Elem a = A.add(ctx.sect(b), ctx.iota(c));
        witness[i] = static_cast<int>(x * ka + A.rank(a));
    }
    for (int i = 0; i < top.total.size(); ++i)
        for (int j = 0; j < top.total.size(); ++j)
            if (witness[top.total.op(i, j)] != original.total.op(witness[i], witness[j]))
                throw std::logic_error("tower witness is not a homomorphism");

    return TowerDecomposition{std::move(middle), std::move(top), std::move(witness)};
}

}  // namespace qlab
