#include "qlab/group_table.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlab {

GroupTable::GroupTable(std::vector<std::vector<int>> table) : n_(static_cast<int>(table.size())) {
    if (n_ == 0) throw InvalidParameter("empty group table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n_) throw InvalidParameter("group table not square");
        for (int v : row)
            if (v < 0 || v >= n_) throw InvalidParameter("group table entry out of range");
    }
    table_ = std::move(table);
    for (int a = 0; a < n_; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw InvalidParameter("element 0 is not an identity");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InvalidParameter("group table not associative");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw InvalidParameter("element without inverse");
    }
}

GroupTable GroupTable::cyclic(int n) {
    if (n <= 0) throw InvalidParameter("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return GroupTable(std::move(t));
}

GroupTable GroupTable::cyclic_product(const std::vector<int>& moduli) {
    long long n = 1;
    for (int d : moduli) {
        if (d <= 0) throw InvalidParameter("modulus must be positive");
        n *= d;
        if (n > 100000) throw InvalidParameter("group too large");
    }
    const int N = static_cast<int>(n);
    const int k = static_cast<int>(moduli.size());
    auto unrank = [&](int r) {
        std::vector<int> v(k);
        for (int i = k - 1; i >= 0; --i) {
            v[i] = r % moduli[i];
            r /= moduli[i];
        }
        return v;
    };
    auto rank = [&](const std::vector<int>& v) {
        int r = 0;
        for (int i = 0; i < k; ++i) r = r * moduli[i] + v[i];
        return r;
    };
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a) {
        auto va = unrank(a);
        for (int b = 0; b < N; ++b) {
            auto vb = unrank(b);
            std::vector<int> vc(k);
            for (int i = 0; i < k; ++i) vc[i] = (va[i] + vb[i]) % moduli[i];
            t[a][b] = rank(vc);
        }
    }
    return GroupTable(std::move(t));
}

GroupTable GroupTable::symmetric(int points) {
    if (points <= 0 || points > 7) throw InvalidParameter("symmetric group points out of range");
    Perm base = perm_identity(points);
    std::vector<Perm> elems;
    do {
        elems.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    // Lexicographic order puts the identity first.
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int N = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) t[a][b] = index[compose(elems[a], elems[b])];
    GroupTable g(std::move(t));
    g.points_ = std::move(elems);
    return g;
}

std::vector<int> GroupTable::conjugacy_class(int rep) const {
    if (rep < 0 || rep >= n_) throw InvalidParameter("class representative out of range");
    std::set<int> cls;
    for (int g = 0; g < n_; ++g) cls.insert(mul(mul(inv(g), rep), g));
    return std::vector<int>(cls.begin(), cls.end());
}

bool GroupTable::is_automorphism(const std::vector<int>& f) const {
    if (static_cast<int>(f.size()) != n_ || !is_permutation(f)) return false;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (f[mul(a, b)] != mul(f[a], f[b])) return false;
    return true;
}

}  // namespace qlab
