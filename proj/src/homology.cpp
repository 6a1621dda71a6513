#include "qlab/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace qlab {

namespace {

constexpr int kMaxHomologySize = 36;

void check_size(const Quandle& X) {
    if (X.size() > kMaxHomologySize)
        throw SizeLimit("homology supports quandles of order <= 36");
}

// Index table for the nondegenerate pair basis of C2: pairs (x, y) with
// x != y in lexicographic order.
struct PairIndex {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> idx;  // n*n entries, -1 on the diagonal

    explicit PairIndex(int size) : n(size), idx(static_cast<size_t>(size) * size, -1) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                idx[static_cast<size_t>(x) * n + y] = static_cast<int>(pairs.size());
                pairs.emplace_back(x, y);
            }
    }

    int at(int x, int y) const { return idx[static_cast<size_t>(x) * n + y]; }
};

using Wide = __int128;

Wide ext_gcd(Wide a, Wide b, Wide& x, Wide& y) {
    Wide x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Wide q = a / b;
        Wide t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

// Quotient rounded to nearest, so the remainder lands in [-b/2, b/2].
Wide nearest_div(Wide a, Wide b) {
    Wide q = a / b, r = a % b;
    if (2 * r > b) ++q;
    if (2 * r < -b) --q;
    return q;
}

// Integer row-echelon accumulator. Inserting rows one by one keeps a basis of
// the growing row lattice in at most `width` rows, so a constraint system with
// n^3 equations never has to be materialized. Rows are combined by unimodular
// 2x2 transforms, preserving the row lattice exactly.
//
// With a positive modulus the accumulator is seeded with m e_i for every
// column; the represented lattice is then L + m Z^width, which is the right
// object for mod-m solution sets, and every entry can be wrapped into [0, m)
// after each operation. Without a modulus, entries are size-controlled by
// reducing rows against pivots in later columns whenever they grow large.
class EchelonBasis {
public:
    explicit EchelonBasis(int width, std::int64_t modulus = 0)
        : width_(width), mod_(modulus), by_lead_(width, -1) {
        if (mod_ > 0) {
            std::vector<Wide> seed(width_, 0);
            for (int c = 0; c < width_; ++c) {
                seed[c] = mod_;
                by_lead_[c] = static_cast<int>(rows_.size());
                rows_.push_back(seed);
                seed[c] = 0;
            }
        }
    }

    void insert(const std::vector<std::int64_t>& r) {
        std::vector<Wide> row(r.begin(), r.end());
        if (mod_ > 0)
            for (auto& v : row) v = wrap(v);
        for (int c = 0; c < width_; ++c) {
            if (row[c] == 0) continue;
            int held = by_lead_[c];
            if (held < 0) {
                if (row[c] < 0)
                    for (auto& v : row) v = -v;
                if (mod_ == 0) reduce_tail(row, c);
                by_lead_[c] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(row));
                return;
            }
            auto& b = rows_[held];
            Wide x, y;
            Wide g = ext_gcd(b[c], row[c], x, y);
            Wide bu = b[c] / g, ru = row[c] / g;
            Wide biggest = 0;
            for (int j = c; j < width_; ++j) {
                Wide nb = x * b[j] + y * row[j];
                Wide nr = bu * row[j] - ru * b[j];
                if (mod_ > 0) {
                    nb = wrap(nb);
                    nr = wrap(nr);
                }
                b[j] = nb;
                row[j] = nr;
                biggest = std::max({biggest, abs_wide(nb), abs_wide(nr)});
            }
            if (mod_ == 0 && biggest > kReduceAt) {
                reduce_tail(b, c);
                reduce_tail(row, c);
            }
        }
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    // Rows ordered by leading column.
    IntMatrix to_matrix() {
        if (mod_ == 0) reduce_all();
        std::vector<int> order;
        for (int c = 0; c < width_; ++c)
            if (by_lead_[c] >= 0) order.push_back(by_lead_[c]);
        IntMatrix m(static_cast<int>(order.size()), width_);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < width_; ++j) {
                Wide v = rows_[order[i]][j];
                if (abs_wide(v) > kNarrowLimit)
                    throw SizeLimit("echelon basis entry exceeds 64-bit range");
                m(i, j) = static_cast<std::int64_t>(v);
            }
        return m;
    }

private:
    static constexpr Wide kReduceAt = Wide(1) << 56;
    static constexpr Wide kNarrowLimit = Wide(std::numeric_limits<std::int64_t>::max());

    Wide wrap(Wide v) const {
        v %= mod_;
        return v < 0 ? v + mod_ : v;
    }

    // Shrink entries of `row` at pivot columns past `from` by subtracting
    // multiples of the corresponding pivot rows.
    void reduce_tail(std::vector<Wide>& row, int from) {
        for (int j = from + 1; j < width_; ++j) {
            if (by_lead_[j] < 0 || row[j] == 0) continue;
            const auto& p = rows_[by_lead_[j]];
            Wide q = nearest_div(row[j], p[j]);
            if (q == 0) continue;
            for (int k = j; k < width_; ++k) row[k] -= q * p[k];
        }
    }

    void reduce_all() {
        for (int c = width_ - 1; c >= 0; --c)
            if (by_lead_[c] >= 0) reduce_tail(rows_[by_lead_[c]], c);
    }

    int width_;
    std::int64_t mod_;
    std::vector<int> by_lead_;
    std::vector<std::vector<Wide>> rows_;
};

// Visit every column of d3 (triples x != y, y != z in lexicographic order)
// as a dense coefficient vector over the pair basis.
template <typename Fn>
void for_each_d3_column(const Quandle& X, const PairIndex& pi, Fn&& fn) {
    const int n = X.size();
    std::vector<std::int64_t> col(pi.pairs.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            for (int z = 0; z < n; ++z) {
                if (z == y) continue;
                std::fill(col.begin(), col.end(), 0);
                auto add = [&](int a, int b, std::int64_t s) {
                    if (a != b) col[pi.at(a, b)] += s;
                };
                add(x, z, 1);
                add(X.op(x, y), z, -1);
                add(x, y, -1);
                add(X.op(x, z), X.op(y, z), 1);
                fn(x, y, z, col);
            }
        }
}

IntMatrix make_d2(const Quandle& X, const PairIndex& pi) {
    const int n = X.size();
    IntMatrix d2(n, static_cast<int>(pi.pairs.size()));
    for (int c = 0; c < static_cast<int>(pi.pairs.size()); ++c) {
        auto [x, y] = pi.pairs[c];
        d2(x, c) += 1;
        d2(X.op(x, y), c) -= 1;
    }
    return d2;
}

// Solution lattice of the mod-d cocycle conditions over the pair variables.
// With L the constraint matrix and D = U L V its Smith form, v is a solution
// iff the i-th coordinate of Vinv v is divisible by alpha_i = d / gcd(D_ii, d),
// so the lattice is K Z^P with K = V diag(alpha).
struct ModLattice {
    PairIndex pi;
    IntMatrix K;
    IntMatrix Vinv;
    std::vector<std::int64_t> alpha;
};

ModLattice mod_solution_lattice(const Quandle& X, std::int64_t d) {
    check_size(X);
    if (d < 1) throw InvalidParameter("modulus must be positive");
    const int n = X.size();
    PairIndex pi(n);
    const int P = static_cast<int>(pi.pairs.size());

    EchelonBasis eb(P, d);
    std::vector<std::int64_t> row(P);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::fill(row.begin(), row.end(), 0);
                auto add = [&](int a, int b, std::int64_t s) {
                    if (a != b) row[pi.at(a, b)] += s;
                };
                add(x, y, 1);
                add(x, z, -1);
                add(X.op(x, y), z, 1);
                add(X.op(x, z), X.op(y, z), -1);
                bool nonzero = false;
                for (auto v : row)
                    if (v != 0) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) eb.insert(row);
            }

    SmithResult SL = smith_normal_form(eb.to_matrix());
    std::vector<std::int64_t> alpha(P, 1);
    for (int i = 0; i < SL.rank; ++i) alpha[i] = d / std::gcd(SL.diag(i), d);

    IntMatrix K = SL.V;
    for (int j = 0; j < P; ++j)
        if (alpha[j] != 1)
            for (int i = 0; i < P; ++i) K(i, j) = checked_mul(K(i, j), alpha[j]);

    return {std::move(pi), std::move(K), std::move(SL.Vinv), std::move(alpha)};
}

struct CyclicMod {
    std::vector<std::int64_t> orders;              // ascending, each > 1
    std::vector<std::vector<std::int64_t>> gens;   // pair-basis value vectors mod d
};

// Invariant factors and generating cocycles of H^2(X; Z_d): the cohomology
// group is the cokernel of Y = diag(alpha)^-1 Vinv [G | dI] expressed in the
// lattice coordinates of K.
CyclicMod h2_mod_cyclic(const Quandle& X, std::int64_t d) {
    CyclicMod out;
    if (d == 1) return out;
    ModLattice ML = mod_solution_lattice(X, d);
    const int n = X.size();
    const int P = ML.K.cols();
    if (P == 0) return out;

    IntMatrix M(P, n + P);
    for (int r = 0; r < P; ++r) {
        auto [x, y] = ML.pi.pairs[r];
        M(r, x) -= 1;
        M(r, X.op(x, y)) += 1;
        M(r, n + r) = d;
    }

    IntMatrix W = ML.Vinv * M;
    IntMatrix Y(P, n + P);
    for (int i = 0; i < P; ++i)
        for (int c = 0; c < n + P; ++c) {
            if (W(i, c) % ML.alpha[i] != 0)
                throw std::logic_error("cocycle lattice does not contain the relation lattice");
            Y(i, c) = W(i, c) / ML.alpha[i];
        }

    SmithResult SY = smith_normal_form(Y);
    if (SY.rank != P) throw std::logic_error("cohomology cokernel is not finite");

    for (int i = 0; i < P; ++i) {
        std::int64_t q = SY.diag(i);
        if (q <= 1) continue;
        std::vector<std::int64_t> v(P, 0);
        for (int rk = 0; rk < P; ++rk) {
            std::int64_t acc = 0;
            for (int l = 0; l < P; ++l)
                acc = checked_add(acc, checked_mul(ML.K(rk, l), SY.Uinv(l, i)));
            acc %= d;
            if (acc < 0) acc += d;
            v[rk] = acc;
        }
        out.orders.push_back(q);
        out.gens.push_back(std::move(v));
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> prime_power_split(std::int64_t o) {
    std::vector<std::pair<std::int64_t, std::int64_t>> parts;  // (prime, p^e)
    std::int64_t rem = o;
    for (std::int64_t p = 2; p * p <= rem; ++p) {
        if (rem % p != 0) continue;
        std::int64_t pe = 1;
        while (rem % p == 0) {
            pe *= p;
            rem /= p;
        }
        parts.emplace_back(p, pe);
    }
    if (rem > 1) parts.emplace_back(rem, rem);
    return parts;
}

}  // namespace

std::string AbelianGroupStructure::format() const {
    if (trivial()) return "trivial";
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " x ";
        out += part;
    };
    if (free_rank == 1) append("Z");
    if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (auto t : torsion) append("Z" + std::to_string(t));
    return out;
}

BoundaryMatrices boundary_matrices(const Quandle& X) {
    check_size(X);
    const int n = X.size();
    PairIndex pi(n);
    const int P = static_cast<int>(pi.pairs.size());
    const int T = n * (n - 1) * (n - 1);

    BoundaryMatrices out;
    out.basis2 = pi.pairs;
    out.d2 = make_d2(X, pi);
    out.d3 = IntMatrix(P, T);
    int col = 0;
    for_each_d3_column(X, pi, [&](int x, int y, int z, const std::vector<std::int64_t>& c) {
        out.basis3.push_back({x, y, z});
        for (int i = 0; i < P; ++i) out.d3(i, col) = c[i];
        ++col;
    });
    return out;
}

AbelianGroupStructure h2_integral(const Quandle& X) {
    check_size(X);
    const int n = X.size();
    PairIndex pi(n);
    const int P = static_cast<int>(pi.pairs.size());
    AbelianGroupStructure out;
    if (P == 0) return out;

    SmithResult Sa = smith_normal_form(make_d2(X, pi));
    const int ra = Sa.rank;

    // Column lattice of d3, reduced to at most P generating columns.
    EchelonBasis eb(P);
    for_each_d3_column(X, pi,
                       [&](int, int, int, const std::vector<std::int64_t>& c) { eb.insert(c); });
    IntMatrix gens = eb.to_matrix();
    const int k = gens.rows();
    IntMatrix d3r(P, k);
    for (int i = 0; i < P; ++i)
        for (int j = 0; j < k; ++j) d3r(i, j) = gens(j, i);

    // In the coordinates of Vinv the kernel of d2 is the last P - ra slots;
    // boundaries must land inside it.
    IntMatrix Bp = Sa.Vinv * d3r;
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < k; ++j)
            if (Bp(i, j) != 0) throw std::logic_error("d2 . d3 != 0");

    IntMatrix lower(P - ra, k);
    for (int i = ra; i < P; ++i)
        for (int j = 0; j < k; ++j) lower(i - ra, j) = Bp(i, j);

    SmithResult Sl = smith_normal_form(lower);
    for (int i = 0; i < Sl.rank; ++i)
        if (Sl.diag(i) > 1) out.torsion.push_back(Sl.diag(i));
    out.free_rank = (P - ra) - Sl.rank;
    return out;
}

CohomologyResult h2_cohomology(const Quandle& X, const AbelianGroup& A) {
    check_size(X);
    const int n = X.size();

    std::vector<std::pair<std::int64_t, Cocycle>> classes;
    for (int fi = 0; fi < A.factors(); ++fi) {
        std::int64_t d = A.moduli()[fi];
        if (d == 1) continue;
        CyclicMod cm = h2_mod_cyclic(X, d);
        PairIndex pi(n);
        for (size_t t = 0; t < cm.orders.size(); ++t) {
            Cocycle c = Cocycle::zero(A, n);
            for (size_t p = 0; p < pi.pairs.size(); ++p) {
                auto [x, y] = pi.pairs[p];
                c.at(x, y)[fi] = cm.gens[t][p];
            }
            classes.emplace_back(cm.orders[t], std::move(c));
        }
    }

    // Recombine the cyclic pieces into invariant factors: split every class
    // by prime, then multiply the j-th largest prime powers across primes.
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, Cocycle>>> buckets;
    for (auto& [o, g] : classes)
        for (auto [p, pe] : prime_power_split(o)) buckets[p].emplace_back(pe, g.scaled(o / pe));
    size_t depth = 0;
    for (auto& [p, vec] : buckets) {
        std::stable_sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) {
            return a.first > b.first;
        });
        depth = std::max(depth, vec.size());
    }

    CohomologyResult out;
    std::vector<std::int64_t> fdesc;
    std::vector<Cocycle> bdesc;
    for (size_t j = 0; j < depth; ++j) {
        std::int64_t q = 1;
        Cocycle acc = Cocycle::zero(A, n);
        for (auto& [p, vec] : buckets) {
            if (j >= vec.size()) continue;
            q = checked_mul(q, vec[j].first);
            acc = acc.add(vec[j].second);
        }
        fdesc.push_back(q);
        bdesc.push_back(std::move(acc));
    }
    out.structure.torsion.assign(fdesc.rbegin(), fdesc.rend());
    out.basis.assign(std::make_move_iterator(bdesc.rbegin()), std::make_move_iterator(bdesc.rend()));
    return out;
}

Cocycle generating_cocycle(const Quandle& X, std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 1) throw InvalidParameter("moduli must be positive");
    AbelianGroup A({n});
    if (d == 1) return Cocycle::zero(A, X.size());
    CohomologyResult res = h2_cohomology(X, A);
    if (res.structure.torsion.empty() || res.structure.torsion.back() % d != 0)
        throw NoSuchClass("no cohomology class of order " + std::to_string(d) + " mod " +
                          std::to_string(n));
    std::int64_t top = res.structure.torsion.back();
    return res.basis.back().scaled(top / d);
}

std::vector<std::int64_t> normalize_invariant_factors(std::vector<std::int64_t> factors) {
    std::map<std::int64_t, std::vector<std::int64_t>> buckets;
    for (auto f : factors) {
        if (f <= 1) continue;
        for (auto [p, pe] : prime_power_split(f)) buckets[p].push_back(pe);
    }
    size_t depth = 0;
    for (auto& [p, vec] : buckets) {
        std::sort(vec.rbegin(), vec.rend());
        depth = std::max(depth, vec.size());
    }
    std::vector<std::int64_t> desc;
    for (size_t j = 0; j < depth; ++j) {
        std::int64_t q = 1;
        for (auto& [p, vec] : buckets)
            if (j < vec.size()) q = checked_mul(q, vec[j]);
        desc.push_back(q);
    }
    return {desc.rbegin(), desc.rend()};
}

std::vector<std::int64_t> predicted_mod_structure(const AbelianGroupStructure& integral,
                                                  std::int64_t m) {
    std::vector<std::int64_t> fs;
    for (auto t : integral.torsion) fs.push_back(std::gcd(t, m));
    for (int i = 0; i < integral.free_rank; ++i) fs.push_back(m);
    return normalize_invariant_factors(std::move(fs));
}

std::vector<Cocycle> all_cocycles_mod(const Quandle& X, std::int64_t d, std::size_t cap) {
    const int n = X.size();
    AbelianGroup A({d});
    ModLattice ML = mod_solution_lattice(X, d);
    const int P = ML.K.cols();

    std::set<std::vector<std::int64_t>> gens;
    for (int j = 0; j < P; ++j) {
        std::vector<std::int64_t> g(P);
        bool nonzero = false;
        for (int i = 0; i < P; ++i) {
            g[i] = ((ML.K(i, j) % d) + d) % d;
            nonzero = nonzero || g[i] != 0;
        }
        if (nonzero) gens.insert(std::move(g));
    }

    std::set<std::vector<std::int64_t>> seen;
    std::queue<std::vector<std::int64_t>> work;
    seen.insert(std::vector<std::int64_t>(P, 0));
    work.push(std::vector<std::int64_t>(P, 0));
    while (!work.empty()) {
        auto v = work.front();
        work.pop();
        for (const auto& g : gens) {
            std::vector<std::int64_t> w(P);
            for (int i = 0; i < P; ++i) w[i] = (v[i] + g[i]) % d;
            if (seen.insert(w).second) {
                if (seen.size() > cap)
                    throw SizeLimit("cocycle enumeration exceeds " + std::to_string(cap));
                work.push(w);
            }
        }
    }

    std::vector<Cocycle> out;
    out.reserve(seen.size());
    for (const auto& v : seen) {
        Cocycle c = Cocycle::zero(A, n);
        for (size_t p = 0; p < ML.pi.pairs.size(); ++p) {
            auto [x, y] = ML.pi.pairs[p];
            c.at(x, y)[0] = v[p];
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace qlab
