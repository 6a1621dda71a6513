#pragma once

#include <optional>
#include <vector>

#include "qlab/abelian_group.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

// 2-cochain on a quandle of size n with values in A; phi(x,y) stored at x*n+y.
// Kept cheap to copy and independent of the quandle table so the same values
// can be checked against different bases.
struct Cocycle {
    AbelianGroup A;
    int n = 0;
    std::vector<AbelianGroup::Elem> values;

    static Cocycle zero(const AbelianGroup& A, int n);

    const AbelianGroup::Elem& at(int x, int y) const { return values[static_cast<size_t>(x) * n + y]; }
    AbelianGroup::Elem& at(int x, int y) { return values[static_cast<size_t>(x) * n + y]; }

    Cocycle add(const Cocycle& o) const;
    Cocycle sub(const Cocycle& o) const;
    Cocycle scaled(std::int64_t k) const;

    bool operator==(const Cocycle& o) const { return A == o.A && n == o.n && values == o.values; }
};

// 1-cochain gamma: X -> A.
using Cochain1 = std::vector<AbelianGroup::Elem>;

// delta(gamma)(x,y) = gamma(x*y) - gamma(x).
Cocycle coboundary(const Quandle& X, const AbelianGroup& A, const Cochain1& gamma);

// phi(x,x) = 0 and phi(x,y) - phi(x,z) + phi(x*y,z) - phi(x*z,y*z) = 0 for all x,y,z.
bool is_cocycle(const Quandle& X, const Cocycle& phi);

// Least witness gamma with phi = delta(gamma), or nullopt. The witness is the
// lexicographically least solution: the first element of every constraint
// component gets value zero.
std::optional<Cochain1> is_coboundary(const Quandle& X, const Cocycle& phi);

// gamma with phi2 = phi1 + delta(gamma). Throws ModulusMismatch.
std::optional<Cochain1> cohomologous(const Quandle& X, const Cocycle& phi1, const Cocycle& phi2);

}  // namespace qlab
