#pragma once

#include <vector>

#include "qlab/errors.hpp"
#include "qlab/permutation.hpp"

namespace qlab {

// Finite group as a multiplication table; element 0 is the identity.
class GroupTable {
public:
    // Verifies identity, associativity, and inverses. Throws InvalidParameter.
    explicit GroupTable(std::vector<std::vector<int>> table);

    static GroupTable cyclic(int n);
    // Symmetric group on `points` letters; elements are the lexicographically
    // ordered permutations, multiplication (pq)(x) = p(q(x)).
    static GroupTable symmetric(int points);
    // Direct product of cyclic groups Z_{d1} x ... x Z_{dk}, mixed-radix indexed.
    static GroupTable cyclic_product(const std::vector<int>& moduli);

    int size() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }

    std::vector<int> conjugacy_class(int rep) const;  // sorted ascending
    bool is_automorphism(const std::vector<int>& f) const;

    // For symmetric(): the permutation behind element index i.
    const std::vector<Perm>& point_actions() const { return points_; }

private:
    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<Perm> points_;  // only populated by symmetric()
};

}  // namespace qlab
