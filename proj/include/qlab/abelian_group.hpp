#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

// Finite abelian group presented as Z_{d1} x ... x Z_{dk} with fixed cyclic
// generators. Elements are residue tuples; the rank encoding is mixed radix
// with the first coordinate most significant.
class AbelianGroup {
public:
    using Elem = std::vector<std::int64_t>;

    explicit AbelianGroup(std::vector<std::int64_t> moduli);

    // Accepts "4", "2x2", "Z4", "Z2xZ2" (case-insensitive Z prefix per factor).
    static AbelianGroup parse(const std::string& text);
    std::string format() const;  // "4", "2x2"

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    int factors() const { return static_cast<int>(moduli_.size()); }
    std::int64_t order() const { return order_; }

    Elem zero() const { return Elem(moduli_.size(), 0); }
    bool is_zero(const Elem& a) const;
    bool valid(const Elem& a) const;

    std::int64_t rank(const Elem& a) const;
    Elem unrank(std::int64_t r) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(std::int64_t k, const Elem& a) const;
    Elem reduce(const Elem& a) const;  // residues into canonical range

    std::int64_t elem_order(const Elem& a) const;
    std::int64_t exponent() const;
    bool is_cyclic() const { return order_ == exponent(); }

    bool operator==(const AbelianGroup& o) const { return moduli_ == o.moduli_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<std::int64_t> moduli_;
    std::int64_t order_;
};

// Subgroup analysis for extension towers: given generators of C <= A, derive
// an abstract invariant-factor presentation of C and of B = A/C together
// with concrete translation tables.
struct SubgroupContext {
    AbelianGroup A;
    AbelianGroup C;  // invariant factors ascending
    AbelianGroup B;  // quotient structure, invariant factors ascending

    std::vector<AbelianGroup::Elem> c_gens;        // embedding images of C's generators in A
    std::vector<std::int64_t> iota_table;          // C-rank -> A-rank
    std::vector<std::int64_t> iota_inverse;        // A-rank -> C-rank, -1 outside the subgroup
    std::vector<std::int64_t> projection;          // A-rank -> B-rank
    std::vector<AbelianGroup::Elem> section;       // B-rank -> lex-least coset representative in A

    AbelianGroup::Elem iota(const AbelianGroup::Elem& c) const;
    AbelianGroup::Elem iota_inv(const AbelianGroup::Elem& a) const;  // requires membership
    AbelianGroup::Elem project(const AbelianGroup::Elem& a) const;
    AbelianGroup::Elem sect(const AbelianGroup::Elem& b) const;
};

// Throws NotASubgroup on malformed generators; SizeLimit past the enumeration cap.
SubgroupContext analyze_subgroup(const AbelianGroup& A, const std::vector<AbelianGroup::Elem>& gens);

}  // namespace qlab
