#include "qlab/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace qlab {

namespace {

constexpr int kMaxIsoSize = 64;

struct SearchContext {
    const Quandle& X;
    const Quandle& Y;
    std::vector<std::vector<char>> candidate;  // candidate[a][t]: sig(a) == sig(t)
};

// Per-element signature: cycle type of the right translation plus the cycle
// type profile of the left map when it happens to be a bijection marker.
std::vector<std::vector<int>> column_signatures(const Quandle& X) {
    std::vector<std::vector<int>> sig(X.size());
    for (int a = 0; a < X.size(); ++a) sig[a] = cycle_type(X.right_translation(a));
    return sig;
}

// Propagate forced images from all currently known pairs. Returns false on
// contradiction. `used` tracks injectivity; `trail` records assignments made
// here so the caller can undo them.
bool propagate(const SearchContext& ctx, std::vector<int>& f, std::vector<int>& used,
               std::vector<int>& trail) {
    const int n = ctx.X.size();
    size_t scan = 0;
    std::vector<int> known;
    for (int a = 0; a < n; ++a)
        if (f[a] >= 0) known.push_back(a);
    // Grow `known` as propagation fires; every known pair is checked once
    // against each later addition.
    auto assign = [&](int a, int v) -> bool {
        if (f[a] >= 0) return f[a] == v;
        if (v < 0) return false;
        if (used[v] >= 0 || !ctx.candidate[a][v]) return false;
        f[a] = v;
        used[v] = a;
        trail.push_back(a);
        known.push_back(a);
        return true;
    };
    while (scan < known.size()) {
        int a = known[scan++];
        for (size_t i = 0; i < known.size(); ++i) {
            int b = known[i];
            if (!assign(ctx.X.op(a, b), ctx.Y.op(f[a], f[b]))) return false;
            if (!assign(ctx.X.op(b, a), ctx.Y.op(f[b], f[a]))) return false;
        }
    }
    return true;
}

void undo(std::vector<int>& f, std::vector<int>& used, std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
        int a = trail.back();
        trail.pop_back();
        used[f[a]] = -1;
        f[a] = -1;
    }
}

// DFS over the least unassigned index; ascending candidate order. When
// `collect` is null, stops at the first full solution (lex-least witness);
// otherwise gathers every solution subject to the cap.
bool search(const SearchContext& ctx, std::vector<int>& f, std::vector<int>& used,
            std::vector<int>& trail, std::vector<Perm>* collect, long long cap) {
    const int n = ctx.X.size();
    int a = -1;
    for (int i = 0; i < n; ++i)
        if (f[i] < 0) {
            a = i;
            break;
        }
    if (a < 0) {
        if (!collect) return true;
        collect->push_back(f);
        if (static_cast<long long>(collect->size()) > cap)
            throw SizeLimit("automorphism group order exceeds " + std::to_string(cap));
        return false;  // keep enumerating
    }
    for (int t = 0; t < n; ++t) {
        if (used[t] >= 0 || !ctx.candidate[a][t]) continue;
        size_t mark = trail.size();
        f[a] = t;
        used[t] = a;
        trail.push_back(a);
        if (propagate(ctx, f, used, trail)) {
            if (search(ctx, f, used, trail, collect, cap)) return true;
        }
        undo(f, used, trail, mark);
    }
    return false;
}

std::optional<SearchContext> make_context(const Quandle& X, const Quandle& Y) {
    const int n = X.size();
    if (n != Y.size()) return std::nullopt;
    if (n > kMaxIsoSize) throw SizeLimit("isomorphism search bound is 64 elements");
    if (is_connected(X) != is_connected(Y)) return std::nullopt;
    if (is_kei(X) != is_kei(Y)) return std::nullopt;
    auto sx = column_signatures(X), sy = column_signatures(Y);
    {
        auto mx = sx, my = sy;
        std::sort(mx.begin(), mx.end());
        std::sort(my.begin(), my.end());
        if (mx != my) return std::nullopt;
    }
    SearchContext ctx{X, Y, {}};
    ctx.candidate.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int t = 0; t < n; ++t) ctx.candidate[a][t] = (sx[a] == sy[t]);
    return ctx;
}

}  // namespace

std::optional<Perm> find_isomorphism(const Quandle& X, const Quandle& Y) {
    auto ctx = make_context(X, Y);
    if (!ctx) return std::nullopt;
    const int n = X.size();
    std::vector<int> f(n, -1), used(n, -1), trail;
    if (search(*ctx, f, used, trail, nullptr, 0)) return Perm(f.begin(), f.end());
    return std::nullopt;
}

bool is_isomorphism(const Quandle& X, const Quandle& Y, const Perm& f) {
    if (X.size() != Y.size() || static_cast<int>(f.size()) != X.size()) return false;
    if (!is_permutation(f)) return false;
    for (int a = 0; a < X.size(); ++a)
        for (int b = 0; b < X.size(); ++b)
            if (f[X.op(a, b)] != Y.op(f[a], f[b])) return false;
    return true;
}

PermGroup automorphisms(const Quandle& X, long long max_order) {
    auto ctx = make_context(X, X);
    const int n = X.size();
    std::vector<int> f(n, -1), used(n, -1), trail;
    std::vector<Perm> all;
    search(*ctx, f, used, trail, &all, max_order);
    std::sort(all.begin(), all.end());
    PermGroup g;
    g.generators = all;
    g.elements = std::move(all);
    return g;
}

bool is_homogeneous(const Quandle& X) {
    // Inner automorphisms already act transitively on a connected quandle.
    if (is_connected(X)) return true;
    if (X.size() > kMaxIsoSize) throw SizeLimit("homogeneity bound is 64 elements");
    auto ctx = make_context(X, X);
    const int n = X.size();
    for (int t = 1; t < n; ++t) {
        if (!ctx->candidate[0][t]) return false;
        std::vector<int> f(n, -1), used(n, -1), trail;
        f[0] = t;
        used[t] = 0;
        trail.push_back(0);
        if (!propagate(*ctx, f, used, trail)) return false;
        if (!search(*ctx, f, used, trail, nullptr, 0)) return false;
    }
    return true;
}

}  // namespace qlab
