#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

// A permutation of {0..n-1} stored as its image sequence.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// compose(p, q)(i) = p(q(i))
inline Perm compose(const Perm& p, const Perm& q) {
    Perm r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

inline bool is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

// Multiset of cycle lengths, sorted ascending.
inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> cycles;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

inline long long perm_order(const Perm& p) {
    long long ord = 1;
    for (int len : cycle_type(p)) ord = std::lcm(ord, static_cast<long long>(len));
    return ord;
}

}  // namespace qlab
