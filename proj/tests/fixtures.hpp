#pragma once

#include <cstdlib>
#include <string>

#include "qlab/constructions.hpp"
#include "qlab/extension.hpp"
#include "qlab/group_table.hpp"
#include "qlab/homology.hpp"

// Shared catalog of fixture quandles used across test files.
namespace fixtures {

inline std::string data_path(const std::string& rel) {
    return std::string(QLAB_DATA_DIR) + "/" + rel;
}

inline std::string qlab_bin() { return std::string(QLAB_BIN); }

// Conjugation class of 4-cycles in S4: connected, faithful, not a kei.
inline qlab::Quandle x6() {
    qlab::GroupTable s4 = qlab::GroupTable::symmetric(4);
    const auto& pts = s4.point_actions();
    for (int g = 0; g < s4.size(); ++g) {
        auto ct = qlab::cycle_type(pts[g]);
        if (ct.size() == 1 && ct[0] == 4) return qlab::conjugation_quandle(s4, g);
    }
    std::abort();
}

// Conjugation class of transpositions in S4: a connected faithful kei.
inline qlab::Quandle t6() {
    qlab::GroupTable s4 = qlab::GroupTable::symmetric(4);
    const auto& pts = s4.point_actions();
    for (int g = 0; g < s4.size(); ++g) {
        auto ct = qlab::cycle_type(pts[g]);
        if (ct.size() == 3 && ct[0] == 1 && ct[2] == 2) return qlab::conjugation_quandle(s4, g);
    }
    std::abort();
}

// Alexander quandle on GF(4) via multiplication by a field generator.
inline qlab::Quandle q4() {
    qlab::GroupTable z22 = qlab::GroupTable::cyclic_product({2, 2});
    qlab::Perm f(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) f[a * 2 + b] = b * 2 + ((a + b) % 2);
    return qlab::generalized_alexander_quandle(z22, f);
}

inline qlab::Cocycle phi_q4_z2() { return qlab::generating_cocycle(q4(), 2, 2); }

inline qlab::Cocycle phi_x6_z4() { return qlab::generating_cocycle(x6(), 4, 4); }

inline qlab::Quandle e8() {
    return qlab::abelian_extension(q4(), qlab::AbelianGroup({2}), phi_q4_z2()).total;
}

inline qlab::Quandle e24() {
    return qlab::abelian_extension(x6(), qlab::AbelianGroup({4}), phi_x6_z4()).total;
}

}  // namespace fixtures
