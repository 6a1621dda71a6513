#include "qlab/cocycle.hpp"

namespace qlab {

Cocycle Cocycle::zero(const AbelianGroup& A, int n) {
    Cocycle c{A, n, {}};
    c.values.assign(static_cast<size_t>(n) * n, A.zero());
    return c;
}

Cocycle Cocycle::add(const Cocycle& o) const {
    if (A != o.A || n != o.n) throw ModulusMismatch("cochain sum over different groups");
    Cocycle r{A, n, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] = A.add(values[i], o.values[i]);
    return r;
}

Cocycle Cocycle::sub(const Cocycle& o) const {
    if (A != o.A || n != o.n) throw ModulusMismatch("cochain difference over different groups");
    Cocycle r{A, n, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] = A.sub(values[i], o.values[i]);
    return r;
}

Cocycle Cocycle::scaled(std::int64_t k) const {
    Cocycle r{A, n, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] = A.scale(k, values[i]);
    return r;
}

Cocycle coboundary(const Quandle& X, const AbelianGroup& A, const Cochain1& gamma) {
    const int n = X.size();
    if (static_cast<int>(gamma.size()) != n) throw ShapeError("1-cochain length");
    Cocycle c = Cocycle::zero(A, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) c.at(x, y) = A.sub(gamma[X.op(x, y)], gamma[x]);
    return c;
}

bool is_cocycle(const Quandle& X, const Cocycle& phi) {
    const int n = X.size();
    if (phi.n != n) return false;
    const AbelianGroup& A = phi.A;
    for (int x = 0; x < n; ++x)
        if (!A.is_zero(phi.at(x, x))) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                AbelianGroup::Elem lhs = A.add(phi.at(x, y), phi.at(X.op(x, y), z));
                AbelianGroup::Elem rhs = A.add(phi.at(x, z), phi.at(X.op(x, z), X.op(y, z)));
                if (lhs != rhs) return false;
            }
    return true;
}

namespace {

// Union-find over elements carrying gamma offsets to the root, used to solve
// the system gamma(x*y) = gamma(x) + phi(x,y).
struct PotentialDSU {
    const AbelianGroup& A;
    std::vector<int> parent;
    std::vector<AbelianGroup::Elem> offset;  // gamma(v) - gamma(parent(v))

    PotentialDSU(const AbelianGroup& a, int n) : A(a), parent(n), offset(n, a.zero()) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    // Returns root; compresses path and accumulates offsets.
    int find(int v) {
        if (parent[v] == v) return v;
        int r = find(parent[v]);
        offset[v] = A.add(offset[v], offset[parent[v]]);
        parent[v] = r;
        return r;
    }

    // Impose gamma(v) = gamma(u) + w. False on contradiction.
    bool constrain(int u, int v, const AbelianGroup::Elem& w) {
        int ru = find(u), rv = find(v);
        AbelianGroup::Elem need = A.sub(A.add(offset[u], w), offset[v]);  // gamma(rv) - gamma(ru)
        if (ru == rv) return A.is_zero(need);
        parent[rv] = ru;
        offset[rv] = need;
        return true;
    }
};

}  // namespace

std::optional<Cochain1> is_coboundary(const Quandle& X, const Cocycle& phi) {
    const int n = X.size();
    if (phi.n != n) throw ShapeError("cocycle size");
    const AbelianGroup& A = phi.A;
    PotentialDSU dsu(A, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!dsu.constrain(x, X.op(x, y), phi.at(x, y))) return std::nullopt;
    // Lex-least witness: zero out the least element of every component.
    std::vector<int> anchor(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (anchor[r] < 0) anchor[r] = v;  // ascending v, so first hit is least
    }
    Cochain1 gamma(n, A.zero());
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        gamma[v] = A.sub(dsu.offset[v], dsu.offset[anchor[r]]);
    }
    return gamma;
}

std::optional<Cochain1> cohomologous(const Quandle& X, const Cocycle& phi1, const Cocycle& phi2) {
    if (phi1.A != phi2.A) throw ModulusMismatch(phi1.A.format() + " vs " + phi2.A.format());
    if (phi1.n != phi2.n) throw ShapeError("cocycle sizes differ");
    return is_coboundary(X, phi2.sub(phi1));
}

}  // namespace qlab
