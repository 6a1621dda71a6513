#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qlab/cocycle.hpp"
#include "qlab/int_matrix.hpp"
#include "qlab/quandle.hpp"
#include "qlab/smith.hpp"

namespace qlab {

struct AbelianGroupStructure {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors ascending, each > 1

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string format() const;  // "trivial", "Z4", "Z^2 x Z2 x Z2", ...
    bool operator==(const AbelianGroupStructure& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// Degenerate (adjacent-repeat) tuples are dropped from the bases:
// degree 2 runs over pairs x != y, degree 3 over triples x != y, y != z.
struct BoundaryMatrices {
    IntMatrix d3;  // |C2| x |C3|
    IntMatrix d2;  // |C1| x |C2|
    std::vector<std::pair<int, int>> basis2;
    std::vector<std::array<int, 3>> basis3;
};

BoundaryMatrices boundary_matrices(const Quandle& X);  // SizeLimit for n > 36

AbelianGroupStructure h2_integral(const Quandle& X);

struct CohomologyResult {
    AbelianGroupStructure structure;  // free_rank is always 0 over finite coefficients
    std::vector<Cocycle> basis;       // basis[i] generates the factor of order torsion[i]
};

CohomologyResult h2_cohomology(const Quandle& X, const AbelianGroup& A);

// Representative whose class has order exactly d in H^2(X; Z_n).
Cocycle generating_cocycle(const Quandle& X, std::int64_t n, std::int64_t d);

// Invariant factors of H^2(X; Z_m) predicted from the integral homology:
// each torsion factor n_i contributes gcd(n_i, m), each free factor m.
std::vector<std::int64_t> predicted_mod_structure(const AbelianGroupStructure& integral,
                                                  std::int64_t m);

// Collapse a factor list into an ascending invariant-factor chain (drops 1s).
std::vector<std::int64_t> normalize_invariant_factors(std::vector<std::int64_t> factors);

// Every Z_d-valued 2-cocycle of X in lexicographic value order.
std::vector<Cocycle> all_cocycles_mod(const Quandle& X, std::int64_t d, std::size_t cap = 65536);

}  // namespace qlab
