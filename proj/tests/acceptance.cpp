// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values that are not forced by identities were computed
// with the independent reference implementations in oracle.cpp or fixed
// small-case enumeration.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "qlab/braid.hpp"
#include "qlab/cocycle.hpp"
#include "qlab/coloring.hpp"
#include "qlab/constructions.hpp"
#include "qlab/errors.hpp"
#include "qlab/extension.hpp"
#include "qlab/homology.hpp"
#include "qlab/invariant.hpp"
#include "qlab/io.hpp"
#include "qlab/isomorphism.hpp"
#include "qlab/quandle.hpp"

using namespace qlab;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

GroupRingElement ring(const AbelianGroup& A, const std::vector<std::int64_t>& coeffs) {
    GroupRingElement z(A);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(coeffs.size()); ++i)
        z.add_term(A.unrank(i), coeffs[static_cast<size_t>(i)]);
    return z;
}

// coefficient of g moves to k*g; a bijection on Z4 for odd k
GroupRingElement apply_unit(const GroupRingElement& z, std::int64_t k) {
    const AbelianGroup& A = z.group();
    GroupRingElement out(A);
    for (std::int64_t r = 0; r < A.order(); ++r) {
        AbelianGroup::Elem g = A.unrank(r);
        out.add_term(A.scale(k, g), z.coefficient(g));
    }
    return out;
}

bool iso_by_map(const Quandle& from, const Quandle& to, const std::vector<int>& map) {
    int n = from.size();
    if (to.size() != n || static_cast<int>(map.size()) != n) return false;
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int a = 0; a < n; ++a) {
        if (map[a] < 0 || map[a] >= n || hit[static_cast<size_t>(map[a])]) return false;
        hit[static_cast<size_t>(map[a])] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (map[from.op(a, b)] != to.op(map[a], map[b])) return false;
    return true;
}

std::vector<RecoveryAnchor> x6_anchors() {
    return {
        {{1}, parse_braid("[1,1,1]"), 6, 24},
        {{2}, torus_braid(3, 4), 30, 24},
        {{3}, parse_braid("[1,1,1,1,1,1,1,1,1]"), 6, 24},
    };
}

Outcome criterion1() {
    std::vector<Quandle> suite;
    for (int n = 1; n <= 50; ++n) suite.push_back(dihedral_quandle(n));
    for (int n = 2; n <= 16; ++n)
        for (int t = 1; t < n; ++t)
            if (std::gcd(t, n) == 1) suite.push_back(alexander_quandle(n, t));
    for (int pts : {4, 5}) {
        GroupTable G = GroupTable::symmetric(pts);
        std::set<std::vector<int>> seen;
        for (int g = 0; g < G.size(); ++g)
            if (seen.insert(G.conjugacy_class(g)).second)
                suite.push_back(conjugation_quandle(G, g));
    }
    suite.push_back(product_quandle(dihedral_quandle(3), dihedral_quandle(3)));
    suite.push_back(product_quandle(dihedral_quandle(4), trivial_quandle(2)));
    suite.push_back(product_quandle(fixtures::x6(), fixtures::q4()));

    for (const Quandle& X : suite) {
        std::vector<int> f = oracle::first_axiom_failure(X.table());
        if (f[0] != -1)
            return {false, "axiom " + std::to_string(f[0]) + " fails on an order " +
                               std::to_string(X.size()) + " table"};
    }
    return {true, std::to_string(suite.size()) + " constructed tables verified independently"};
}

Outcome criterion2() {
    Quandle r3 = dihedral_quandle(3);
    Quandle r5 = dihedral_quandle(5);
    Quandle x6 = fixtures::x6();
    BraidWord tre = parse_braid("[1,1,1]");
    BraidWord fig8 = parse_braid("[1,-2,1,-2]");

    struct Case {
        const Quandle& X;
        BraidWord w;
        long long expected;
    };
    std::vector<Case> cases = {
        {r3, tre, 9}, {r3, fig8, 3}, {r5, fig8, 25},
        {r3, unknot(), 3}, {r5, unknot(), 5}, {x6, unknot(), 6},
    };
    for (const Case& c : cases) {
        long long fast = count_colorings(c.X, c.w);
        long long slow = oracle::count_colorings(c.X, c.w);
        if (fast != c.expected || slow != c.expected)
            return {false, "got " + std::to_string(fast) + " vs oracle " + std::to_string(slow) +
                               ", expected " + std::to_string(c.expected)};
    }
    if (count_colorings_fixed(r3, 0, tre) != 3 || oracle::count_colorings_fixed(r3, 0, tre) != 3)
        return {false, "fixed-color count disagrees"};
    return {true, "baseline counts match the brute-force oracle"};
}

Outcome criterion3() {
    Quandle x6 = fixtures::x6();
    Cocycle phi = fixtures::phi_x6_z4();
    const AbelianGroup& A = phi.A;

    struct Anchor {
        BraidWord w;
        std::vector<std::int64_t> coeffs;
    };
    std::vector<Anchor> table = {
        {parse_braid("[1,1,1]"), {6, 24, 0, 0}},
        {parse_braid("[1,1,1,1,1,1,1,1,1]"), {6, 0, 0, 24}},
        {torus_braid(3, 4), {30, 0, 24, 0}},
        {parse_braid("[1,1,1,1,1]"), {6, 0, 0, 0}},
    };
    std::vector<GroupRingElement> computed;
    for (const Anchor& a : table) computed.push_back(cocycle_invariant(x6, phi, a.w));

    for (std::int64_t k : {1, 3}) {
        bool all = true;
        for (size_t i = 0; i < table.size(); ++i) {
            GroupRingElement mapped = apply_unit(computed[i], k);
            GroupRingElement want = ring(A, table[i].coeffs);
            if (mapped != want && mapped.conjugate() != want) {
                all = false;
                break;
            }
        }
        if (all)
            return {true, "all four reference values match with coefficient unit k=" +
                              std::to_string(k)};
    }
    return {false, "no global coefficient unit aligns the computed values"};
}

Outcome criterion4() {
    Quandle x6 = fixtures::x6();
    Quandle e24 = fixtures::e24();
    Cocycle phi = fixtures::phi_x6_z4();
    const AbelianGroup& A = phi.A;
    BraidWord tre = parse_braid("[1,1,1]");
    BraidWord granny = parse_braid("[1,1,1,2,2,2]");
    BraidWord square = parse_braid("[1,1,1,-2,-2,-2]");

    if (e24.size() != 24 || !is_connected(e24) || is_faithful(e24))
        return {false, "extension profile is off"};

    long long cg = count_colorings(e24, granny);
    long long cs = count_colorings(e24, square);
    if (cg != 24 || cs != 408)
        return {false, "direct counts " + std::to_string(cg) + "/" + std::to_string(cs)};

    ProductLawReport pg = invariant_product_law_check(x6, phi, tre, tre);
    ProductLawReport ps = invariant_product_law_check(x6, phi, tre, reverse_mirror(tre));
    if (!pg.equal || pg.lhs != ring(A, {36, 288, 576, 0})) return {false, "granny product law"};
    if (!ps.equal || ps.lhs != ring(A, {612, 144, 0, 144})) return {false, "square product law"};

    GroupRingElement zg = cocycle_invariant(x6, phi, granny);
    GroupRingElement zs = cocycle_invariant(x6, phi, square);
    if (zg.scaled(6) != pg.rhs || zs.scaled(6) != ps.rhs)
        return {false, "state sums disagree with the product-law derivation"};
    if (colorings_from_invariant(zg) != cg || colorings_from_invariant(zs) != cs)
        return {false, "identity coefficient times group order misses the direct count"};
    if (!distinguish_rm(e24, tre, tre)) return {false, "mirror pair not distinguished"};
    return {true, "24 vs 408 cross-derived through the product law and direct counting"};
}

Outcome criterion5() {
    std::vector<Quandle> suite;
    for (int n = 3; n <= 10; ++n) suite.push_back(dihedral_quandle(n));
    suite.push_back(fixtures::q4());
    suite.push_back(fixtures::x6());
    suite.push_back(fixtures::t6());

    int cells = 0;
    for (const Quandle& X : suite) {
        AbelianGroupStructure integral = h2_integral(X);
        for (std::int64_t d = 2; d <= 6; ++d) {
            CohomologyResult mod = h2_cohomology(X, AbelianGroup({d}));
            std::vector<std::int64_t> predicted =
                normalize_invariant_factors(predicted_mod_structure(integral, d));
            if (mod.structure.free_rank != 0 || mod.structure.torsion != predicted)
                return {false, "mismatch at order " + std::to_string(X.size()) + ", modulus " +
                                   std::to_string(d)};
            ++cells;
        }
    }
    return {true, std::to_string(cells) + " (quandle, modulus) cells cross-checked"};
}

Outcome criterion6() {
    std::vector<Quandle> candidates;
    for (int n = 3; n <= 8; ++n) candidates.push_back(dihedral_quandle(n));
    candidates.push_back(fixtures::q4());
    candidates.push_back(fixtures::x6());
    candidates.push_back(fixtures::t6());

    std::vector<BraidWord> words = {
        parse_braid("[1,1,1]"),
        parse_braid("[1,1,1,1,1]"),
        parse_braid("[1,1,1,1,1,1,1]"),
        parse_braid("[1,-2,1,-2]"),
    };

    int quandles = 0, pairs = 0, skipped = 0;
    for (const Quandle& X : candidates) {
        if (!is_connected(X) || !is_faithful(X) || X.size() > 8) continue;
        ++quandles;
        Cocycle phi = Cocycle::zero(AbelianGroup({2}), X.size());
        try {
            phi = generating_cocycle(X, 2, 2);
        } catch (const NoSuchClass&) {
        }
        for (const BraidWord& w1 : words)
            for (const BraidWord& w2 : words) {
                if (!is_end_monochromatic(X, w1) && !is_end_monochromatic(X, w2)) {
                    ++skipped;
                    continue;
                }
                ProductLawReport rep = invariant_product_law_check(X, phi, w1, w2);
                if (!rep.equal)
                    return {false, "law fails on order " + std::to_string(X.size()) +
                                       " at pair " + format_braid(w1) + ", " + format_braid(w2)};
                ++pairs;
            }
    }
    if (pairs == 0) return {false, "no eligible pairs"};
    return {true, std::to_string(pairs) + " pairs over " + std::to_string(quandles) +
                      " faithful connected quandles, " + std::to_string(skipped) +
                      " pairs skipped without an end-monochromatic factor"};
}

Outcome criterion7() {
    Quandle x6 = fixtures::x6();
    Quandle e24 = fixtures::e24();
    Cocycle phi = fixtures::phi_x6_z4();
    AbelianGroup A({4});
    std::vector<RecoveryAnchor> anchors = x6_anchors();

    std::vector<BraidWord> words = {
        parse_braid("[1,1,1]"),
        parse_braid("[1,1,1,1,1]"),
        parse_braid("[1,1,1,1,1,1,1]"),
        parse_braid("[1,1,1,1,1,1,1,1,1]"),
        torus_braid(3, 4),
        parse_braid("[1,1,1,2,2,2]"),
        parse_braid("[1,1,1,-2,-2,-2]"),
    };
    for (const BraidWord& w : words) {
        if (recover_invariant(e24, x6, A, anchors, w) != cocycle_invariant(x6, phi, w))
            return {false, "recovery differs on " + format_braid(w)};
    }
    return {true, std::to_string(words.size()) + " knots recovered from extension counts alone"};
}

Outcome criterion8() {
    // kei criterion against the definition, over every mod 2 cocycle
    int kei_checked = 0;
    AbelianGroup z2({2});
    for (int n : {3, 5, 7}) {
        Quandle X = dihedral_quandle(n);
        for (const Cocycle& phi : all_cocycles_mod(X, 2)) {
            bool predicted = kei_extension_check(X, phi);
            bool actual = is_kei(abelian_extension(X, z2, phi).total);
            if (predicted != actual)
                return {false, "kei criterion disagrees on an order " + std::to_string(n) +
                                   " base"};
            ++kei_checked;
        }
    }

    // two-step tower through 2Z4
    Quandle x6 = fixtures::x6();
    Cocycle phi = fixtures::phi_x6_z4();
    AbelianGroup z4({4});
    AbelianExtension direct = abelian_extension(x6, z4, phi);
    TowerDecomposition tower = tower_decompose(x6, z4, phi, {AbelianGroup::Elem{2}});
    if (tower.middle.total.size() != 12 || !is_connected(tower.middle.total))
        return {false, "tower middle stage is off"};
    if (tower.top.total.size() != 24 ||
        !iso_by_map(tower.top.total, direct.total, tower.witness))
        return {false, "tower witness is not an isomorphism onto the direct extension"};

    // detection round trips
    auto abelian_round_trip = [](const Quandle& E, int base_order, std::int64_t coeff_order) {
        DetectionResult d = detect_abelian_extension(E);
        if (!d.abelian) return false;
        const AbelianExtension& rec = d.abelian->extension;
        if (rec.base.size() != base_order || rec.coefficients.order() != coeff_order) return false;
        return iso_by_map(E, rec.total, d.abelian->witness);
    };
    if (!abelian_round_trip(fixtures::e8(), 4, 2)) return {false, "round trip fails on the order 8 extension"};
    if (!abelian_round_trip(fixtures::e24(), 6, 4)) return {false, "round trip fails on the order 24 extension"};
    Quandle e12 = abelian_extension(x6, z2, generating_cocycle(x6, 2, 2)).total;
    if (!abelian_round_trip(e12, 6, 2)) return {false, "round trip fails on the order 12 extension"};

    Quandle c30 = read_quandle(fixtures::data_path("quandles/c30.qnd"));
    DetectionResult d30 = detect_abelian_extension(c30);
    if (d30.abelian) return {false, "order 30 example wrongly reports an abelian structure"};
    Quandle rebuilt = constant_extension(d30.constant.base, d30.constant.beta, d30.constant.fiber);
    if (!are_isomorphic(rebuilt, c30))
        return {false, "constant cocycle rebuild is not isomorphic to the input"};

    return {true, std::to_string(kei_checked) +
                      " kei cocycles, tower 6 to 12 to 24 witnessed, 4 detection round trips"};
}

Outcome criterion9() {
    struct Pair {
        Quandle X;
        Cocycle phi;
    };
    std::vector<Pair> pairs = {{fixtures::x6(), fixtures::phi_x6_z4()},
                               {fixtures::q4(), fixtures::phi_q4_z2()}};
    std::vector<KnotEntry> catalog = load_catalog(fixtures::data_path("catalog/torus.knt"));

    for (const Pair& p : pairs) {
        for (const KnotEntry& e : catalog) {
            BraidWord rm = reverse_mirror(e.braid);
            if (count_colorings(p.X, e.braid) != count_colorings(p.X, rm))
                return {false, e.name + ": reversed mirror changes the coloring count"};
            if (cocycle_invariant(p.X, p.phi, rm) !=
                cocycle_invariant(p.X, p.phi, e.braid).conjugate())
                return {false, e.name + ": reversed mirror is not the conjugate"};
        }

        std::mt19937 rng(20260814);
        std::uniform_int_distribution<std::int64_t> pick(0, p.phi.A.order() - 1);
        BraidWord tre = parse_braid("[1,1,1]");
        BraidWord t34 = torus_braid(3, 4);
        GroupRingElement z1 = cocycle_invariant(p.X, p.phi, tre);
        GroupRingElement z2 = cocycle_invariant(p.X, p.phi, t34);
        for (int trial = 0; trial < 20; ++trial) {
            Cochain1 gamma(static_cast<size_t>(p.X.size()));
            for (auto& g : gamma) g = p.phi.A.unrank(pick(rng));
            Cocycle shifted = p.phi.add(coboundary(p.X, p.phi.A, gamma));
            if (cocycle_invariant(p.X, shifted, tre) != z1 ||
                cocycle_invariant(p.X, shifted, t34) != z2)
                return {false, "a coboundary shift changed the invariant"};
        }
    }
    return {true, "16 reversed-mirror comparisons and 40 coboundary shifts, all invariant"};
}

Outcome criterion10() {
    std::string csv = "/tmp/qlab_acceptance_batch.csv";
    std::string cmd = fixtures::qlab_bin() + " invariant " +
                      fixtures::data_path("quandles/x6.qnd") + " " +
                      fixtures::data_path("cocycles/x6_z4.coc") + " --batch " +
                      fixtures::data_path("catalog/torus.knt") + " > " + csv + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc) || WEXITSTATUS(rc) != 0) return {false, "batch run failed"};

    std::ifstream f(csv);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        std::vector<std::string> fields;
        std::istringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ';')) fields.push_back(tok);
        rows.push_back(fields);
    }
    if (rows.size() != 9) return {false, "expected a header and 8 rows"};
    if (rows[0] != std::vector<std::string>{"knot", "quandle", "cocycle", "polynomial"})
        return {false, "header layout is off"};

    std::vector<KnotEntry> catalog = load_catalog(fixtures::data_path("catalog/torus.knt"));
    std::regex poly(R"(^-?\d+( \+ -?\d+\*u\^\d+)+$)");
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 4) return {false, "row " + std::to_string(i) + " is not 4 fields"};
        if (rows[i][0] != catalog[i - 1].name || rows[i][1] != "x6" || rows[i][2] != "x6_z4")
            return {false, "row " + std::to_string(i) + " labels are off"};
        if (!std::regex_match(rows[i][3], poly))
            return {false, "row " + std::to_string(i) + " polynomial field is malformed"};
    }
    GroupRingElement z31 =
        cocycle_invariant(fixtures::x6(), fixtures::phi_x6_z4(), parse_braid("[1,1,1]"));
    if (rows[1][3] != z31.polynomial()) return {false, "CSV value differs from the library"};

    return {true, "batch CSV layout verified on the shipped catalog; the full published survey "
                  "tables are not reproduced here, they need external input data"};
}

}  // namespace

int main() {
    struct Row {
        int num;
        const char* label;
        double budget;
        std::function<Outcome()> fn;
    };
    std::vector<Row> rows = {
        {1, "constructor suite passes independent axiom checks", 10, criterion1},
        {2, "coloring baselines match the brute-force oracle", 1, criterion2},
        {3, "reference invariant values match up to a coefficient unit", 60, criterion3},
        {4, "granny and square composites separate through the extension", 30, criterion4},
        {5, "mod d cohomology agrees with the integral prediction", 300, criterion5},
        {6, "product law holds across the faithful connected suite", 120, criterion6},
        {7, "invariant recovery from coloring counts matches the state sum", 120, criterion7},
        {8, "kei criterion, extension tower, and detection round trips", 300, criterion8},
        {9, "symmetry and gauge invariance hold on the catalog", 300, criterion9},
        {10, "batch output layout is reproducible on shipped data", 60, criterion10},
    };

    int failures = 0;
    for (const Row& r : rows) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = r.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > r.budget) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time budget");
        }
        std::printf("%s criterion %d: %s (%s; %.1fs, budget %.0fs)\n", o.ok ? "PASS" : "FAIL",
                    r.num, r.label, o.detail.c_str(), secs, r.budget);
        std::fflush(stdout);
        if (!o.ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failing\n", failures);
    return failures == 0 ? 0 : 1;
}
