#include "qlab/quandle.hpp"

#include <algorithm>
#include <map>

namespace qlab {

Quandle::Quandle(std::vector<std::vector<int>> table) : n_(static_cast<int>(table.size())) {
    if (n_ == 0) throw ShapeError("empty table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n_) throw ShapeError("table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || v >= n_) throw ShapeError("entry out of range");
    table_ = std::move(table);
    // Invert columns where possible; rows of inv_ left as -1 on collision.
    inv_.assign(n_, std::vector<int>(n_, -1));
    for (int b = 0; b < n_; ++b)
        for (int a = 0; a < n_; ++a) inv_[table_[a][b]][b] = a;
}

Perm Quandle::right_translation(int b) const {
    Perm p(n_);
    for (int a = 0; a < n_; ++a) p[a] = table_[a][b];
    return p;
}

std::optional<AxiomFailure> check_quandle(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    for (int a = 0; a < n; ++a)
        if (table[a][a] != a) return AxiomFailure{1, {a, a, -1}};
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a) {
            if (seen[table[a][b]]) return AxiomFailure{2, {a, b, -1}};
            seen[table[a][b]] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
                    return AxiomFailure{3, {a, b, c}};
    return std::nullopt;
}

Quandle verify_quandle(const std::vector<std::vector<int>>& table) {
    Quandle q(table);  // shape and range
    if (auto f = check_quandle(table)) throw AxiomViolation(*f);
    return q;
}

bool is_connected(const Quandle& X) {
    std::vector<Perm> gens;
    gens.reserve(X.size());
    for (int b = 0; b < X.size(); ++b) gens.push_back(X.right_translation(b));
    return orbit_transitive(gens, X.size());
}

bool is_faithful(const Quandle& X) {
    std::vector<Perm> cols;
    cols.reserve(X.size());
    for (int b = 0; b < X.size(); ++b) cols.push_back(X.right_translation(b));
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

bool is_kei(const Quandle& X) {
    for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
            if (X.op(X.op(x, y), y) != x) return false;
    return true;
}

bool is_latin(const Quandle& X) {
    for (int a = 0; a < X.size(); ++a) {
        std::vector<char> seen(X.size(), 0);
        for (int b = 0; b < X.size(); ++b) {
            if (seen[X.op(a, b)]) return false;
            seen[X.op(a, b)] = 1;
        }
    }
    return true;
}

PermGroup inner_group(const Quandle& X, long long max_order) {
    std::vector<Perm> gens;
    gens.reserve(X.size());
    for (int b = 0; b < X.size(); ++b) gens.push_back(X.right_translation(b));
    return generate_group(gens, max_order);
}

FaithfulQuotient faithful_quotient(const Quandle& X) {
    const int n = X.size();
    std::map<Perm, int> class_of_col;
    std::vector<int> cls(n);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        Perm col = X.right_translation(a);
        auto it = class_of_col.find(col);
        if (it == class_of_col.end()) {
            it = class_of_col.emplace(std::move(col), static_cast<int>(reps.size())).first;
            reps.push_back(a);
        }
        cls[a] = it->second;
    }
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> q(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q[i][j] = cls[X.op(reps[i], reps[j])];
    return FaithfulQuotient{verify_quandle(q), std::move(cls), std::move(reps)};
}

}  // namespace qlab
