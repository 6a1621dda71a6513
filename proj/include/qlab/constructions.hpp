#pragma once

#include "qlab/group_table.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

Quandle trivial_quandle(int n);              // a*b = a
Quandle dihedral_quandle(int n);             // a*b = 2b - a mod n
Quandle alexander_quandle(int n, int t);     // a*b = t a + (1-t) b mod n, gcd(t,n) = 1
// Conjugation a*b = b^{-1} a b on the full conjugacy class of rep.
Quandle conjugation_quandle(const GroupTable& G, int rep);
// x*y = f(x y^{-1}) y for a group automorphism f.
Quandle generalized_alexander_quandle(const GroupTable& G, const std::vector<int>& f);
Quandle product_quandle(const Quandle& X, const Quandle& Y);  // index (x,y) -> x*|Y| + y
Quandle dual_quandle(const Quandle& X);                       // a op b = R_b^{-1}(a)

}  // namespace qlab
