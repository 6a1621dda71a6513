#include "qlab/coloring.hpp"

#include <string>

#include "qlab/errors.hpp"
#include "qlab/isomorphism.hpp"

namespace qlab {

namespace {

constexpr long long kStepBudget = 100000000;

void require_knot(const BraidWord& w) {
    if (!is_knot(w)) throw NotAKnot("closure is not a knot");
}

// tuples * max(1, letters) propagation steps, refused upfront.
void check_budget(int base, int exponent, size_t letters) {
    long long tuples = 1;
    const long long per = static_cast<long long>(letters ? letters : 1);
    for (int i = 0; i < exponent; ++i) {
        tuples *= base;
        if (tuples > kStepBudget / per)
            throw SizeLimit("coloring enumeration exceeds the step budget");
    }
}

// Does X admit the counting shortcut? Connectivity implies homogeneity and is
// cheap at any size; the full predicate is consulted only for small tables.
bool homogeneous_for_counting(const Quandle& X) {
    if (is_connected(X)) return true;
    if (X.size() > 64) return false;
    return is_homogeneous(X);
}

// Propagate colors only, cheap inner loop.
void run_word(const Quandle& X, const BraidWord& w, std::vector<int>& c) {
    for (int a : w.letters) {
        const int k = (a > 0 ? a : -a) - 1;
        const int left = c[k], right = c[k + 1];
        if (a > 0) {
            c[k] = right;
            c[k + 1] = X.op(left, right);
        } else {
            c[k] = X.op_inv(right, left);
            c[k + 1] = left;
        }
    }
}

// Iterate tops with positions [fixed_from, m) free; returns false to stop.
template <typename Fn>
void for_each_top(int n, int m, int fixed_from, std::vector<int>& top, Fn&& fn) {
    for (;;) {
        if (!fn()) return;
        int i = m - 1;
        while (i >= fixed_from && top[i] == n - 1) top[i--] = 0;
        if (i < fixed_from) return;
        ++top[i];
    }
}

long long count_all(const Quandle& X, const BraidWord& w) {
    check_budget(X.size(), w.strands, w.letters.size());
    const int m = w.strands;
    std::vector<int> top(m, 0), work(m);
    long long count = 0;
    for_each_top(X.size(), m, 0, top, [&] {
        work = top;
        run_word(X, w, work);
        if (work == top) ++count;
        return true;
    });
    return count;
}

}  // namespace

Propagation propagate(const Quandle& X, const BraidWord& w, const std::vector<int>& top) {
    if (static_cast<int>(top.size()) != w.strands)
        throw ShapeError("top coloring must have one color per strand");
    for (int c : top)
        if (c < 0 || c >= X.size()) throw ShapeError("color out of range");
    Propagation out;
    out.bottom = top;
    out.trace.reserve(w.letters.size());
    std::vector<int>& c = out.bottom;
    for (int a : w.letters) {
        const int k = (a > 0 ? a : -a) - 1;
        const int left = c[k], right = c[k + 1];
        if (a > 0) {
            c[k] = right;
            c[k + 1] = X.op(left, right);
            out.trace.push_back(Crossing{left, right, 1});
        } else {
            const int under = X.op_inv(right, left);
            c[k] = under;
            c[k + 1] = left;
            out.trace.push_back(Crossing{under, left, -1});
        }
    }
    return out;
}

long long count_colorings(const Quandle& X, const BraidWord& w) {
    require_knot(w);
    if (homogeneous_for_counting(X))
        return static_cast<long long>(X.size()) * count_colorings_fixed(X, 0, w);
    return count_all(X, w);
}

long long count_colorings_fixed(const Quandle& X, int x, const BraidWord& w) {
    require_knot(w);
    if (x < 0 || x >= X.size()) throw InvalidParameter("fixed color out of range");
    check_budget(X.size(), w.strands - 1, w.letters.size());
    const int m = w.strands;
    std::vector<int> top(m, 0), work(m);
    top[0] = x;
    long long count = 0;
    for_each_top(X.size(), m, 1, top, [&] {
        work = top;
        run_word(X, w, work);
        if (work == top) ++count;
        return true;
    });
    return count;
}

bool is_end_monochromatic(const Quandle& X, const BraidWord& w) {
    require_knot(w);
    check_budget(X.size(), w.strands, w.letters.size());
    const int m = w.strands;
    std::vector<int> top(m, 0), work(m);
    bool mono = true;
    for_each_top(X.size(), m, 0, top, [&] {
        work = top;
        run_word(X, w, work);
        bool tangle = true;
        for (int i = 1; i < m; ++i)
            if (work[i] != top[i]) {
                tangle = false;
                break;
            }
        if (tangle && work[0] != top[0]) {
            mono = false;
            return false;
        }
        return true;
    });
    return mono;
}

std::vector<Coloring> enumerate_colorings(const Quandle& X, const BraidWord& w) {
    require_knot(w);
    check_budget(X.size(), w.strands, w.letters.size());
    const int m = w.strands;
    std::vector<int> top(m, 0);
    std::vector<Coloring> out;
    for_each_top(X.size(), m, 0, top, [&] {
        Propagation p = propagate(X, w, top);
        if (p.bottom == top) out.push_back(Coloring{top, std::move(p.trace)});
        return true;
    });
    return out;
}

}  // namespace qlab
