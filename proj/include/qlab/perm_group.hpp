#pragma once

#include <set>
#include <vector>

#include "qlab/permutation.hpp"

namespace qlab {

// A concrete permutation group held as its full element list.
struct PermGroup {
    std::vector<Perm> generators;
    std::vector<Perm> elements;  // sorted lexicographically; contains the identity

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const Perm& p) const {
        return std::binary_search(elements.begin(), elements.end(), p);
    }
};

// BFS closure of the generators under composition. Throws SizeLimit past max_order.
inline PermGroup generate_group(const std::vector<Perm>& gens, long long max_order = 10000000) {
    PermGroup g;
    g.generators = gens;
    if (gens.empty()) {
        g.elements.push_back(Perm{});
        return g;
    }
    int n = static_cast<int>(gens[0].size());
    std::set<Perm> seen;
    std::vector<Perm> frontier;
    seen.insert(perm_identity(n));
    frontier.push_back(perm_identity(n));
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier) {
            for (const Perm& s : gens) {
                Perm q = compose(s, p);
                if (seen.insert(q).second) {
                    if (static_cast<long long>(seen.size()) > max_order)
                        throw SizeLimit("permutation group order exceeds " + std::to_string(max_order));
                    next.push_back(std::move(q));
                }
            }
        }
        frontier.swap(next);
    }
    g.elements.assign(seen.begin(), seen.end());
    return g;
}

// True when the group generated by gens has a single orbit on {0..n-1}.
// Orbit BFS only; never enumerates the group.
inline bool orbit_transitive(const std::vector<Perm>& gens, int n) {
    if (n <= 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Perm& g : gens) {
            if (!seen[g[x]]) {
                seen[g[x]] = 1;
                ++count;
                stack.push_back(g[x]);
            }
        }
    }
    return count == n;
}

}  // namespace qlab
