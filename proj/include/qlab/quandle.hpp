#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/errors.hpp"
#include "qlab/perm_group.hpp"
#include "qlab/permutation.hpp"

namespace qlab {

// Finite quandle as an operation table, table[a][b] = a*b, elements 0..n-1.
// Construction checks shape and range only; axioms are the business of
// verify_quandle so that search code can hold candidate tables cheaply.
class Quandle {
public:
    explicit Quandle(std::vector<std::vector<int>> table);

    int size() const { return n_; }
    int op(int a, int b) const { return table_[a][b]; }
    // a op_inv b is the unique c with c*b = a (inverse right translation).
    int op_inv(int a, int b) const { return inv_[a][b]; }

    const std::vector<std::vector<int>>& table() const { return table_; }

    // Right translation by b as a permutation (column b).
    Perm right_translation(int b) const;

    bool operator==(const Quandle& o) const { return table_ == o.table_; }

private:
    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inv_;  // inv_[a][b] = R_b^{-1}(a); valid only if columns biject
    friend std::optional<AxiomFailure> check_quandle(const std::vector<std::vector<int>>& table);
};

// First violated axiom with witness, or nullopt when the table is a quandle.
// Checks axioms in order: idempotence, right invertibility, distributivity.
std::optional<AxiomFailure> check_quandle(const std::vector<std::vector<int>>& table);

// Validated constructor. Throws ShapeError or AxiomViolation.
Quandle verify_quandle(const std::vector<std::vector<int>>& table);

bool is_connected(const Quandle& X);
bool is_faithful(const Quandle& X);
bool is_kei(const Quandle& X);
bool is_latin(const Quandle& X);
// Aut(X) transitivity; backtracking per target element. Throws SizeLimit for n > 64.
bool is_homogeneous(const Quandle& X);

// Group generated by all right translations. Throws SizeLimit past max_order.
PermGroup inner_group(const Quandle& X, long long max_order = 10000000);

struct FaithfulQuotient {
    Quandle quotient;
    std::vector<int> surjection;  // element -> class index
    std::vector<int> reps;        // class index -> least element
};

// Image of a -> R_a: elements with equal columns are identified.
FaithfulQuotient faithful_quotient(const Quandle& X);

}  // namespace qlab
