#include "qlab/congruence.hpp"

#include <algorithm>
#include <set>

#include "qlab/isomorphism.hpp"

namespace qlab {

namespace {

constexpr int kMaxCongruenceSize = 36;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

Congruence from_union_find(UnionFind& uf) {
    std::vector<int> cls(uf.parent.size());
    for (size_t i = 0; i < cls.size(); ++i) cls[i] = uf.find(static_cast<int>(i));
    return normalize_partition(cls);
}

}  // namespace

Congruence normalize_partition(const std::vector<int>& cls) {
    std::vector<int> remap(cls.size(), -1);
    Congruence out(cls.size());
    int next = 0;
    for (size_t i = 0; i < cls.size(); ++i) {
        if (remap[cls[i]] < 0) remap[cls[i]] = next++;
        out[i] = remap[cls[i]];
    }
    return out;
}

bool is_congruence(const Quandle& X, const Congruence& cls) {
    const int n = X.size();
    if (static_cast<int>(cls.size()) != n) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (cls[u] != cls[v]) continue;
            for (int x = 0; x < n; ++x) {
                if (cls[X.op(u, x)] != cls[X.op(v, x)]) return false;
                if (cls[X.op(x, u)] != cls[X.op(x, v)]) return false;
            }
        }
    return true;
}

Congruence principal_congruence(const Quandle& X, int a, int b) {
    const int n = X.size();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
        auto [u, v] = queue.back();
        queue.pop_back();
        if (!uf.unite(u, v)) continue;
        // Identifying u and v forces every translate pair to merge too.
        for (int x = 0; x < n; ++x) {
            queue.emplace_back(X.op(u, x), X.op(v, x));
            queue.emplace_back(X.op(x, u), X.op(x, v));
        }
    }
    return from_union_find(uf);
}

std::vector<Congruence> congruences(const Quandle& X) {
    const int n = X.size();
    if (n > kMaxCongruenceSize)
        throw SizeLimit("congruence enumeration bound is " + std::to_string(kMaxCongruenceSize));
    std::set<Congruence> seen;
    std::vector<int> discrete(n);
    for (int i = 0; i < n; ++i) discrete[i] = i;
    seen.insert(discrete);
    std::vector<Congruence> frontier;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Congruence c = principal_congruence(X, a, b);
            if (seen.insert(c).second) frontier.push_back(std::move(c));
        }
    std::vector<Congruence> principals = frontier;
    // Join closure: the join of two partitions is computed by merging both
    // relations in one union-find pass. New joins re-enter the frontier.
    while (!frontier.empty()) {
        Congruence c = frontier.back();
        frontier.pop_back();
        for (const Congruence& p : principals) {
            UnionFind uf(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (c[i] == c[j] || p[i] == p[j]) uf.unite(i, j);
            Congruence joined = from_union_find(uf);
            if (seen.insert(joined).second) frontier.push_back(std::move(joined));
        }
    }
    return std::vector<Congruence>(seen.begin(), seen.end());
}

Quandle quotient(const Quandle& X, const Congruence& cls) {
    if (!is_congruence(X, cls)) throw InvalidParameter("partition is not a congruence");
    const int n = X.size();
    int blocks = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> rep(blocks, -1);
    for (int i = n - 1; i >= 0; --i) rep[cls[i]] = i;
    std::vector<std::vector<int>> t(blocks, std::vector<int>(blocks));
    for (int i = 0; i < blocks; ++i)
        for (int j = 0; j < blocks; ++j) t[i][j] = cls[X.op(rep[i], rep[j])];
    return verify_quandle(t);
}

std::vector<Quandle> proper_quotients(const Quandle& X) {
    const int n = X.size();
    std::vector<Quandle> out;
    for (const Congruence& c : congruences(X)) {
        int blocks = *std::max_element(c.begin(), c.end()) + 1;
        if (blocks == n || blocks == 1) continue;
        Quandle q = quotient(X, c);
        bool dup = false;
        for (const Quandle& have : out)
            if (find_isomorphism(have, q)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(q));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Quandle& a, const Quandle& b) { return a.size() > b.size(); });
    return out;
}

}  // namespace qlab
