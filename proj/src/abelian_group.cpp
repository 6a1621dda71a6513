#include "qlab/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace qlab {

namespace {
constexpr std::int64_t kMaxEnumeration = 1 << 20;
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (std::int64_t d : moduli_) {
        if (d <= 0) throw InvalidParameter("cyclic factor modulus must be positive");
        order_ *= d;
        if (order_ > kMaxEnumeration) throw SizeLimit("abelian group too large");
    }
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
    std::vector<std::int64_t> moduli;
    size_t i = 0;
    auto fail = [&] { throw ParseError("bad abelian group string: " + text); };
    if (text.empty()) fail();
    while (i < text.size()) {
        if (text[i] == 'Z' || text[i] == 'z') ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail();
        moduli.push_back(std::stoll(text.substr(i, j - i)));
        i = j;
        if (i < text.size()) {
            if (text[i] != 'x' && text[i] != 'X') fail();
            ++i;
            if (i == text.size()) fail();
        }
    }
    for (std::int64_t d : moduli)
        if (d <= 0) throw ParseError("bad abelian group string: " + text);
    return AbelianGroup(std::move(moduli));
}

std::string AbelianGroup::format() const {
    if (moduli_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (i) out += "x";
        out += std::to_string(moduli_[i]);
    }
    return out;
}

bool AbelianGroup::is_zero(const Elem& a) const {
    for (std::int64_t v : a)
        if (v != 0) return false;
    return true;
}

bool AbelianGroup::valid(const Elem& a) const {
    if (a.size() != moduli_.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= moduli_[i]) return false;
    return true;
}

std::int64_t AbelianGroup::rank(const Elem& a) const {
    std::int64_t r = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) r = r * moduli_[i] + a[i];
    return r;
}

AbelianGroup::Elem AbelianGroup::unrank(std::int64_t r) const {
    Elem a(moduli_.size());
    for (int i = static_cast<int>(moduli_.size()) - 1; i >= 0; --i) {
        a[i] = r % moduli_[i];
        r /= moduli_[i];
    }
    return a;
}

AbelianGroup::Elem AbelianGroup::reduce(const Elem& a) const {
    if (a.size() != moduli_.size()) throw ModulusMismatch("element arity " + std::to_string(a.size()));
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = ((a[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    return r;
}

AbelianGroup::Elem AbelianGroup::add(const Elem& a, const Elem& b) const {
    Elem r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
    return r;
}

AbelianGroup::Elem AbelianGroup::sub(const Elem& a, const Elem& b) const {
    Elem r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r[i] = ((a[i] - b[i]) % moduli_[i] + moduli_[i]) % moduli_[i];
    return r;
}

AbelianGroup::Elem AbelianGroup::neg(const Elem& a) const { return sub(zero(), a); }

AbelianGroup::Elem AbelianGroup::scale(std::int64_t k, const Elem& a) const {
    Elem r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        std::int64_t m = moduli_[i];
        r[i] = (((k % m) * (a[i] % m)) % m + m) % m;
    }
    return r;
}

std::int64_t AbelianGroup::elem_order(const Elem& a) const {
    std::int64_t ord = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        std::int64_t d = moduli_[i] / std::gcd(moduli_[i], a[i]);
        ord = std::lcm(ord, d);
    }
    return ord;
}

std::int64_t AbelianGroup::exponent() const {
    std::int64_t e = 1;
    for (std::int64_t d : moduli_) e = std::lcm(e, d);
    return e;
}

AbelianGroup::Elem SubgroupContext::iota(const AbelianGroup::Elem& c) const {
    if (!C.valid(c)) throw NotASubgroup("bad subgroup element coordinates");
    return A.unrank(iota_table[C.rank(c)]);
}

AbelianGroup::Elem SubgroupContext::iota_inv(const AbelianGroup::Elem& a) const {
    std::int64_t r = iota_inverse[A.rank(a)];
    if (r < 0) throw NotASubgroup("element not in subgroup");
    return C.unrank(r);
}

AbelianGroup::Elem SubgroupContext::project(const AbelianGroup::Elem& a) const {
    return B.unrank(projection[A.rank(a)]);
}

AbelianGroup::Elem SubgroupContext::sect(const AbelianGroup::Elem& b) const {
    return section[B.rank(b)];
}

namespace {

// Greedy invariant-factor decomposition of a finite abelian group given as an
// element universe with an addition map. Picks, at each stage, the lex-least
// element whose coset order in the running quotient is maximal AND whose own
// order equals that coset order; such a pick extends the direct sum. Returns
// factors in descending order.
struct AbstractDecomposition {
    std::vector<std::int64_t> factors;  // descending
    std::vector<int> generators;        // universe indices
};

AbstractDecomposition decompose_abstract(int count, int zero,
                                         const std::function<int(int, int)>& add) {
    AbstractDecomposition out;
    std::set<int> span{zero};
    while (static_cast<int>(span.size()) < count) {
        // Coset orders relative to current span.
        std::int64_t best = 0;
        int best_elem = -1;
        for (int s = 0; s < count; ++s) {
            if (span.count(s)) continue;
            std::int64_t coset_order = 1;
            int acc = s;
            while (!span.count(acc)) {
                acc = add(acc, s);
                ++coset_order;
            }
            // Own order of s.
            std::int64_t own = 1;
            acc = s;
            while (acc != zero) {
                acc = add(acc, s);
                ++own;
            }
            if (own != coset_order) continue;  // lift does not split; skip
            if (coset_order > best) {
                best = coset_order;
                best_elem = s;
            }
        }
        // A splitting lift always exists, so best_elem is set here.
        out.factors.push_back(best);
        out.generators.push_back(best_elem);
        // Re-span: close under addition of the new generator.
        std::vector<int> base(span.begin(), span.end());
        for (int b : base) {
            int acc = b;
            for (std::int64_t k = 1; k < best; ++k) {
                acc = add(acc, best_elem);
                span.insert(acc);
            }
        }
    }
    return out;
}

}  // namespace

SubgroupContext analyze_subgroup(const AbelianGroup& A, const std::vector<AbelianGroup::Elem>& gens) {
    using Elem = AbelianGroup::Elem;
    for (const Elem& g : gens)
        if (!A.valid(g)) throw NotASubgroup("generator is not an element of the ambient group");
    if (A.order() > kMaxEnumeration) throw SizeLimit("ambient group too large for subgroup analysis");

    // Enumerate the subgroup.
    std::set<std::int64_t> sub{0};
    std::vector<std::int64_t> frontier{0};
    while (!frontier.empty()) {
        std::int64_t r = frontier.back();
        frontier.pop_back();
        Elem e = A.unrank(r);
        for (const Elem& g : gens) {
            std::int64_t nr = A.rank(A.add(e, g));
            if (sub.insert(nr).second) frontier.push_back(nr);
        }
    }
    std::vector<std::int64_t> sub_elems(sub.begin(), sub.end());  // ascending rank
    std::map<std::int64_t, int> sub_index;
    for (size_t i = 0; i < sub_elems.size(); ++i) sub_index[sub_elems[i]] = static_cast<int>(i);

    SubgroupContext ctx{A, AbelianGroup({1}), AbelianGroup({1}), {}, {}, {}, {}, {}};

    // Abstract structure of the subgroup.
    auto sub_add = [&](int i, int j) {
        return sub_index.at(A.rank(A.add(A.unrank(sub_elems[i]), A.unrank(sub_elems[j]))));
    };
    auto dec_c = decompose_abstract(static_cast<int>(sub_elems.size()), sub_index.at(0), sub_add);
    std::vector<std::int64_t> c_moduli(dec_c.factors.rbegin(), dec_c.factors.rend());
    if (c_moduli.empty()) c_moduli = {1};
    ctx.C = AbelianGroup(c_moduli);
    ctx.c_gens.clear();
    for (auto it = dec_c.generators.rbegin(); it != dec_c.generators.rend(); ++it)
        ctx.c_gens.push_back(A.unrank(sub_elems[*it]));
    if (ctx.c_gens.empty()) ctx.c_gens.push_back(A.zero());

    ctx.iota_table.assign(ctx.C.order(), -1);
    ctx.iota_inverse.assign(A.order(), -1);
    for (std::int64_t cr = 0; cr < ctx.C.order(); ++cr) {
        Elem c = ctx.C.unrank(cr);
        Elem image = A.zero();
        for (size_t i = 0; i < ctx.c_gens.size(); ++i)
            image = A.add(image, A.scale(c[i], ctx.c_gens[i]));
        ctx.iota_table[cr] = A.rank(image);
        ctx.iota_inverse[A.rank(image)] = cr;
    }

    // Cosets: canonical representative is the least rank in the coset.
    std::vector<std::int64_t> coset_rep(A.order(), -1);
    std::vector<std::int64_t> reps;
    for (std::int64_t r = 0; r < A.order(); ++r) {
        if (coset_rep[r] >= 0) continue;
        Elem e = A.unrank(r);
        std::vector<std::int64_t> members;
        std::int64_t least = r;
        for (std::int64_t s : sub_elems) {
            std::int64_t m = A.rank(A.add(e, A.unrank(s)));
            members.push_back(m);
            least = std::min(least, m);
        }
        for (std::int64_t m : members) coset_rep[m] = least;
    }
    std::map<std::int64_t, int> rep_index;
    for (std::int64_t r = 0; r < A.order(); ++r)
        if (coset_rep[r] == r) {
            rep_index[r] = static_cast<int>(reps.size());
            reps.push_back(r);
        }

    // Abstract structure of the quotient.
    auto quot_add = [&](int i, int j) {
        std::int64_t s = A.rank(A.add(A.unrank(reps[i]), A.unrank(reps[j])));
        return rep_index.at(coset_rep[s]);
    };
    auto dec_b = decompose_abstract(static_cast<int>(reps.size()), rep_index.at(coset_rep[0]), quot_add);
    std::vector<std::int64_t> b_moduli(dec_b.factors.rbegin(), dec_b.factors.rend());
    if (b_moduli.empty()) b_moduli = {1};
    ctx.B = AbelianGroup(b_moduli);
    std::vector<int> b_gens(dec_b.generators.rbegin(), dec_b.generators.rend());
    if (b_gens.empty()) b_gens.push_back(rep_index.at(coset_rep[0]));

    // Enumerate B coordinates onto cosets, then invert for the projection and
    // read the section off the canonical representatives.
    std::vector<int> b_to_coset(ctx.B.order(), -1);
    for (std::int64_t br = 0; br < ctx.B.order(); ++br) {
        Elem b = ctx.B.unrank(br);
        int acc = rep_index.at(coset_rep[0]);
        for (size_t i = 0; i < b_gens.size(); ++i)
            for (std::int64_t k = 0; k < b[i]; ++k) acc = quot_add(acc, b_gens[i]);
        b_to_coset[br] = acc;
    }
    std::vector<std::int64_t> coset_to_b(reps.size(), -1);
    for (std::int64_t br = 0; br < ctx.B.order(); ++br) coset_to_b[b_to_coset[br]] = br;

    ctx.projection.assign(A.order(), -1);
    for (std::int64_t r = 0; r < A.order(); ++r)
        ctx.projection[r] = coset_to_b[rep_index.at(coset_rep[r])];
    ctx.section.assign(ctx.B.order(), A.zero());
    for (std::int64_t br = 0; br < ctx.B.order(); ++br)
        ctx.section[br] = A.unrank(reps[b_to_coset[br]]);

    return ctx;
}

}  // namespace qlab
