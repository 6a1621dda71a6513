#include "qlab/constructions.hpp"

#include <numeric>

namespace qlab {

Quandle trivial_quandle(int n) {
    if (n <= 0) throw InvalidParameter("trivial quandle order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = a;
    return verify_quandle(t);
}

Quandle dihedral_quandle(int n) {
    if (n <= 0) throw InvalidParameter("dihedral quandle order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
    return verify_quandle(t);
}

Quandle alexander_quandle(int n, int t) {
    if (n <= 0) throw InvalidParameter("alexander modulus must be positive");
    int tm = ((t % n) + n) % n;
    if (std::gcd(tm, n) != 1) throw InvalidParameter("t is not a unit mod n");
    std::vector<std::vector<int>> tab(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) tab[a][b] = (tm * a + (1 + n - tm) * b) % n;
    return verify_quandle(tab);
}

Quandle conjugation_quandle(const GroupTable& G, int rep) {
    std::vector<int> cls = G.conjugacy_class(rep);
    const int n = static_cast<int>(cls.size());
    std::vector<int> pos(G.size(), -1);
    for (int i = 0; i < n; ++i) pos[cls[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = G.mul(G.mul(G.inv(cls[j]), cls[i]), cls[j]);
            t[i][j] = pos[c];  // class is closed under conjugation
        }
    return verify_quandle(t);
}

Quandle generalized_alexander_quandle(const GroupTable& G, const std::vector<int>& f) {
    if (!G.is_automorphism(f)) throw InvalidParameter("f is not a group automorphism");
    const int n = G.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = G.mul(f[G.mul(x, G.inv(y))], y);
    return verify_quandle(t);
}

Quandle product_quandle(const Quandle& X, const Quandle& Y) {
    const int nx = X.size(), ny = Y.size();
    const int n = nx * ny;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x1 = a / ny, y1 = a % ny, x2 = b / ny, y2 = b % ny;
            t[a][b] = X.op(x1, x2) * ny + Y.op(y1, y2);
        }
    return verify_quandle(t);
}

Quandle dual_quandle(const Quandle& X) {
    const int n = X.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = X.op_inv(a, b);
    return verify_quandle(t);
}

}  // namespace qlab
