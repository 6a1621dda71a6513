#include "qlab/group_ring.hpp"

namespace qlab {

namespace {

std::string generator_name(const AbelianGroup& A, int factor) {
    if (A.factors() == 1) return "u";
    return "u" + std::to_string(factor + 1);
}

}  // namespace

GroupRingElement GroupRingElement::add(const GroupRingElement& o) const {
    if (A_ != o.A_) throw ModulusMismatch("group ring elements over different groups");
    GroupRingElement r(A_);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return r;
}

GroupRingElement GroupRingElement::multiply(const GroupRingElement& o) const {
    if (A_ != o.A_) throw ModulusMismatch("group ring elements over different groups");
    GroupRingElement r(A_);
    const std::int64_t N = A_.order();
    for (std::int64_t i = 0; i < N; ++i) {
        if (coeffs_[i] == 0) continue;
        AbelianGroup::Elem gi = A_.unrank(i);
        for (std::int64_t j = 0; j < N; ++j) {
            if (o.coeffs_[j] == 0) continue;
            std::int64_t k = A_.rank(A_.add(gi, A_.unrank(j)));
            r.coeffs_[k] = checked_add(r.coeffs_[k], checked_mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return r;
}

GroupRingElement GroupRingElement::scaled(std::int64_t k) const {
    GroupRingElement r(A_);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_mul(coeffs_[i], k);
    return r;
}

GroupRingElement GroupRingElement::conjugate() const {
    GroupRingElement r(A_);
    for (std::int64_t i = 0; i < A_.order(); ++i)
        r.coeffs_[A_.rank(A_.neg(A_.unrank(i)))] = coeffs_[i];
    return r;
}

std::int64_t GroupRingElement::mass() const {
    std::int64_t m = 0;
    for (auto c : coeffs_) m = checked_add(m, c);
    return m;
}

bool GroupRingElement::concentrated_at_identity() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::string GroupRingElement::display() const {
    std::string out;
    for (std::int64_t r = 0; r < A_.order(); ++r) {
        if (coeffs_[r] == 0) continue;
        if (!out.empty()) out += " + ";
        AbelianGroup::Elem g = A_.unrank(r);
        if (r == 0) {
            out += std::to_string(coeffs_[r]);
            continue;
        }
        if (coeffs_[r] != 1) out += std::to_string(coeffs_[r]);
        for (int f = 0; f < A_.factors(); ++f) {
            if (g[f] == 0) continue;
            out += generator_name(A_, f);
            if (g[f] > 1) out += "^" + std::to_string(g[f]);
        }
    }
    return out.empty() ? "0" : out;
}

std::string GroupRingElement::polynomial() const {
    std::string out;
    for (std::int64_t r = 0; r < A_.order(); ++r) {
        if (!out.empty()) out += " + ";
        out += std::to_string(coeffs_[r]);
        if (r == 0) continue;
        AbelianGroup::Elem g = A_.unrank(r);
        for (int f = 0; f < A_.factors(); ++f) {
            if (g[f] == 0) continue;
            out += "*" + generator_name(A_, f) + "^" + std::to_string(g[f]);
        }
    }
    return out;
}

}  // namespace qlab
