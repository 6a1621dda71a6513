#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "qlab/extension.hpp"
#include "qlab/isomorphism.hpp"

namespace qlab {

namespace {

bool is_prime_power(int k) {
    if (k < 2) return false;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        while (k % p == 0) k /= p;
        return k == 1;
    }
    return true;  // prime
}

}  // namespace

DetectionResult detect_abelian_extension(const Quandle& Y) {
    const int n = Y.size();
    if (!is_connected(Y)) throw NotConnected("detection needs a connected quandle");
    FaithfulQuotient fq = faithful_quotient(Y);
    const int m = fq.quotient.size();
    if (m == n) throw IsFaithful("nothing to detect");
    if (n % m != 0) throw FibersUnequal("order not divisible by inner image size");
    const int k = n / m;

    std::vector<std::vector<int>> fiber(m);
    for (int v = 0; v < n; ++v) fiber[fq.surjection[v]].push_back(v);
    for (const auto& f : fiber)
        if (static_cast<int>(f.size()) != k) throw FibersUnequal("fibers have unequal sizes");

    // Label the base fiber by index order, then transport labels along a
    // spanning tree of quotient moves; u -> u*r acts identically for every r
    // in a fiber, so any representative works.
    std::vector<int> lab(n, -1);
    for (int t = 0; t < k; ++t) lab[fiber[0][t]] = t;
    std::vector<char> done(m, 0);
    done[0] = 1;
    std::deque<int> work{0};
    while (!work.empty()) {
        int c = work.front();
        work.pop_front();
        for (int y = 0; y < m; ++y) {
            int c2 = fq.quotient.op(c, y);
            if (done[c2]) continue;
            done[c2] = 1;
            for (int u : fiber[c]) lab[Y.op(u, fq.reps[y])] = lab[u];
            work.push_back(c2);
        }
    }
    for (int v = 0; v < n; ++v)
        if (lab[v] < 0) throw std::logic_error("fiber labeling did not cover the quandle");

    std::vector<Perm> beta(static_cast<size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            Perm p(k, -1);
            for (int u : fiber[x]) p[lab[u]] = lab[Y.op(u, fq.reps[y])];
            if (!is_permutation(p)) throw std::logic_error("extracted beta is not a permutation");
            beta[static_cast<size_t>(x) * m + y] = std::move(p);
        }
    // Rebuilding through the validating constructor checks the constant
    // cocycle conditions and that the labeling reproduces Y.
    Quandle rebuilt = constant_extension(fq.quotient, beta, k);
    std::vector<int> relabel(n);
    for (int v = 0; v < n; ++v) relabel[v] = fq.surjection[v] * k + lab[v];
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (relabel[Y.op(u, v)] != rebuilt.op(relabel[u], relabel[v]))
                throw std::logic_error("constant cocycle relabeling mismatch");

    DetectionResult out{ConstantCocycle{fq.quotient, k, std::move(beta)}, std::nullopt};

    PermGroup H = h_beta(out.constant);
    const bool cyclic_ok = static_cast<std::int64_t>(H.order()) == k && is_prime_power(k) &&
                           [&] {
                               for (const auto& p : H.elements)
                                   if (perm_order(p) == static_cast<long long>(H.order())) return true;
                               return false;
                           }();
    if (k != 2 && !cyclic_ok) return out;

    // Least full-cycle element; connectivity makes H transitive on the fiber,
    // so a cyclic H of order k is generated by one.
    const Perm* sigma = nullptr;
    for (const auto& p : H.elements) {
        auto ct = cycle_type(p);
        if (ct.size() == 1 && ct[0] == k) {
            sigma = &p;
            break;
        }
    }
    if (sigma == nullptr) return out;

    std::map<Perm, std::int64_t> power_of;
    Perm pw = perm_identity(k);
    for (int e = 0; e < k; ++e) {
        power_of.emplace(pw, e);
        pw = compose(*sigma, pw);
    }
    AbelianGroup Zk({k});
    Cocycle phi = Cocycle::zero(Zk, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            auto it = power_of.find(out.constant.at(x, y));
            if (it == power_of.end()) return out;  // beta value outside <sigma>
            phi.at(x, y) = {it->second};
        }

    // psi relabels the fiber so sigma acts as +1; composing with the earlier
    // relabeling gives the witness onto the rebuilt abelian extension.
    std::vector<int> psi(k);
    int s = 0;
    for (int e = 0; e < k; ++e) {
        psi[s] = e;
        s = (*sigma)[s];
    }
    AbelianExtension E = abelian_extension(fq.quotient, Zk, phi);
    std::vector<int> witness(n);
    for (int v = 0; v < n; ++v) witness[v] = fq.surjection[v] * k + psi[lab[v]];
    if (!is_isomorphism(Y, E.total, witness))
        throw std::logic_error("detected abelian witness is not an isomorphism");
    out.abelian = DetectedAbelian{std::move(E), std::move(witness)};
    return out;
}

}  // namespace qlab
