#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/abelian_group.hpp"
#include "qlab/int_matrix.hpp"

namespace qlab {

// Element of Z[A] with dense coefficients indexed by element rank.
class GroupRingElement {
public:
    explicit GroupRingElement(const AbelianGroup& A)
        : A_(A), coeffs_(static_cast<size_t>(A.order()), 0) {}

    const AbelianGroup& group() const { return A_; }

    std::int64_t coefficient(const AbelianGroup::Elem& g) const {
        return coeffs_[static_cast<size_t>(A_.rank(g))];
    }
    void add_term(const AbelianGroup::Elem& g, std::int64_t c) {
        coeffs_[static_cast<size_t>(A_.rank(g))] = checked_add(coefficient(g), c);
    }

    GroupRingElement add(const GroupRingElement& o) const;
    GroupRingElement multiply(const GroupRingElement& o) const;  // convolution over A
    GroupRingElement scaled(std::int64_t k) const;
    GroupRingElement conjugate() const;  // coefficient of g moves to -g

    std::int64_t mass() const;
    bool concentrated_at_identity() const;  // zero outside the identity

    bool operator==(const GroupRingElement& o) const {
        return A_ == o.A_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    // "6 + 24u", "30 + 24u^2", zero element prints "0". Generators are named
    // u for a cyclic group and u1, u2, ... otherwise.
    std::string display() const;
    // Every rank spelled out: "6 + 24*u^1 + 0*u^2 + 0*u^3".
    std::string polynomial() const;

private:
    AbelianGroup A_;
    std::vector<std::int64_t> coeffs_;
};

}  // namespace qlab
