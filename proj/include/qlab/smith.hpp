#pragma once

#include "qlab/int_matrix.hpp"

namespace qlab {

// D = U * M * V with U, V unimodular; D diagonal, entries nonnegative, each
// dividing the next. Uinv and Vinv are maintained alongside so callers can
// change coordinates without inverting anything.
struct SmithResult {
    IntMatrix D;
    IntMatrix U, Uinv;
    IntMatrix V, Vinv;
    int rank = 0;

    std::int64_t diag(int i) const { return D(i, i); }
};

SmithResult smith_normal_form(const IntMatrix& M);

}  // namespace qlab
