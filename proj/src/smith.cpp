#include "qlab/smith.hpp"

#include <algorithm>

namespace qlab {

namespace {

// Locate the entry of minimal nonzero absolute value in the submatrix
// starting at (s, s). Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& A, int s, int& pi, int& pj) {
    std::int64_t best = 0;
    bool found = false;
    for (int i = s; i < A.rows(); ++i)
        for (int j = s; j < A.cols(); ++j) {
            std::int64_t v = A(i, j) < 0 ? -A(i, j) : A(i, j);
            if (v != 0 && (!found || v < best)) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& M) {
    SmithResult r;
    r.D = M;
    const int m = M.rows(), n = M.cols();
    r.U = IntMatrix::identity(m);
    r.Uinv = IntMatrix::identity(m);
    r.V = IntMatrix::identity(n);
    r.Vinv = IntMatrix::identity(n);
    IntMatrix& D = r.D;

    // Elementary ops on D mirror onto U or V; the inverse op goes on Uinv or
    // Vinv from the other side, keeping U*Uinv = I and V*Vinv = I throughout.
    auto row_swap = [&](int i, int j) {
        D.swap_rows(i, j);
        r.U.swap_rows(i, j);
        r.Uinv.swap_cols(i, j);
    };
    auto col_swap = [&](int i, int j) {
        D.swap_cols(i, j);
        r.V.swap_cols(i, j);
        r.Vinv.swap_rows(i, j);
    };
    auto row_sub = [&](int i, int j, std::int64_t k) {  // row i -= k row j
        D.add_row_multiple(i, j, k);
        r.U.add_row_multiple(i, j, k);
        r.Uinv.add_col_multiple(j, i, -k);  // col j += k col i
    };
    auto col_sub = [&](int j, int i, std::int64_t k) {  // col j -= k col i
        D.add_col_multiple(j, i, k);
        r.V.add_col_multiple(j, i, k);
        r.Vinv.add_row_multiple(i, j, -k);  // row i += k row j
    };
    auto row_neg = [&](int i) {
        D.negate_row(i);
        r.U.negate_row(i);
        r.Uinv.negate_col(i);
    };

    // Diagonalize the submatrix starting at position `from`; returns the
    // first position whose submatrix came out zero.
    auto reduce_from = [&](int from) {
        int s = from;
        const int steps = std::min(m, n);
        for (; s < steps; ++s) {
            int pi, pj;
            if (!find_pivot(D, s, pi, pj)) break;
            if (pi != s) row_swap(pi, s);
            if (pj != s) col_swap(pj, s);
            // Clear the pivot row and column. Any nonzero remainder is
            // strictly smaller than the pivot and gets promoted, so the
            // pivot magnitude strictly shrinks until both sides are clean.
            for (;;) {
                bool again = false;
                for (int i = s + 1; i < m; ++i) {
                    if (D(i, s) == 0) continue;
                    row_sub(i, s, D(i, s) / D(s, s));
                    if (D(i, s) != 0) {
                        row_swap(i, s);
                        again = true;
                    }
                }
                for (int j = s + 1; j < n; ++j) {
                    if (D(s, j) == 0) continue;
                    col_sub(j, s, D(s, j) / D(s, s));
                    if (D(s, j) != 0) {
                        col_swap(j, s);
                        again = true;
                    }
                }
                if (!again) break;
            }
            if (D(s, s) < 0) row_neg(s);
        }
        return s;
    };

    r.rank = reduce_from(0);

    // Enforce the divisibility chain. Folding column i+1 into column i and
    // re-reducing replaces D(i,i) by gcd(D(i,i), D(i+1,i+1)), which strictly
    // shrinks it whenever the chain was broken, so this terminates.
    for (;;) {
        int bad = -1;
        for (int i = 0; i + 1 < r.rank; ++i)
            if (D(i + 1, i + 1) % D(i, i) != 0) {
                bad = i;
                break;
            }
        if (bad < 0) break;
        col_sub(bad, bad + 1, -1);  // col bad += col bad+1
        reduce_from(bad);
    }

    return r;
}

}  // namespace qlab
