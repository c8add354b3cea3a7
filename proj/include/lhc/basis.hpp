#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lhc/cone.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

enum class BasisMethod { closed_form, oracle };

inline const char* basis_method_name(BasisMethod m) {
    return m == BasisMethod::closed_form ? "closed_form" : "oracle";
}

/// The unique minimal generating set of the semigroup of lattice points of
/// the cone. Invariants enforced at construction: every element lies in the
/// cone, is nonzero, has the right dimension, and the list is sorted
/// lexicographically with no duplicates. Irreducibility is the caller's
/// responsibility (see irreducible_subset); make_hilbert_basis trusts it.
struct HilbertBasis {
    Sequence sequence;
    std::vector<LatticePoint> elements;
    BasisMethod method;

    size_t size() const { return elements.size(); }
};

/// True when p = b + q with b an element of candidates distinct from p and
/// q a cone point; that is, p is reducible within the candidate set.
inline bool reduces_within(const Sequence& s, const LatticePoint& p,
                           const std::vector<LatticePoint>& candidates) {
    for (const auto& b : candidates) {
        if (b == p) continue;
        if (cone_contains(s, subtract(p, b))) return true;
    }
    return false;
}

/// Sorts, dedupes, and drops every candidate expressible as another candidate
/// plus a cone point. When the candidates generate the semigroup, the result
/// is exactly the Hilbert basis.
inline std::vector<LatticePoint> irreducible_subset(const Sequence& s,
                                                    std::vector<LatticePoint> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<LatticePoint> out;
    for (const auto& p : candidates)
        if (!reduces_within(s, p, candidates)) out.push_back(p);
    return out;
}

/// Validates and packages a basis element list. Throws invalid_argument on a
/// zero element, a dimension mismatch, or an element outside the cone.
inline HilbertBasis make_hilbert_basis(Sequence s, std::vector<LatticePoint> elements,
                                       BasisMethod method) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& p : elements) {
        if (static_cast<int>(p.size()) != s.n())
            throw std::invalid_argument("make_hilbert_basis: dimension mismatch");
        if (is_zero(p)) throw std::invalid_argument("make_hilbert_basis: zero element");
        if (!cone_contains(s, p))
            throw std::invalid_argument("make_hilbert_basis: element outside the cone");
    }
    return HilbertBasis{std::move(s), std::move(elements), method};
}

}  // namespace lhc
