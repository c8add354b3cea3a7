#pragma once

#include <stdexcept>
#include <string>

#include "lhc/closed_form.hpp"
#include "lhc/enumerate.hpp"
#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

/// Lattice points of the t-th dilate of the polytope cut from the cone by
/// x_n/s_n <= 1, i.e. #{x in cone : x_n <= t*s_n}.
inline Int count_P(const Sequence& s, const Int& t) {
    if (t < 0) throw std::invalid_argument("count_P: negative dilate");
    return count_chain(s, t * s.back());
}

/// Lattice points of the t-th dilate of the rational polytope cut by
/// x_n/s_n <= 1/s_n, i.e. #{x in cone : x_n <= t}.
inline Int count_R(const Sequence& s, const Int& t) {
    if (t < 0) throw std::invalid_argument("count_R: negative dilate");
    return count_chain(s, t);
}

/// Generalized binomial coefficient C(q, j) = q(q-1)...(q-j+1)/j! over exact
/// rationals; C(q, 0) = 1.
inline Rat binomial(const Rat& q, long j) {
    if (j < 0) throw std::invalid_argument("binomial: negative index");
    Rat result = 1;
    for (long i = 0; i < j; ++i) {
        result *= q - i;
        result /= i + 1;
    }
    return result;
}

/// Closed-form dilate count for the polytope of (1, k+1, ..., (n-1)k+1):
///   (-1)^t * sum_{p=0}^{t} C(1/k - 1, t-p) C(-1/k, p) (kp+1)^n.
/// The sum is provably an integer; non-integrality means a transcription bug
/// and throws.
inline Int ehrhart_modk(const Int& k, int n, const Int& t) {
    if (k < 1 || n < 1) throw std::invalid_argument("ehrhart_modk: k, n must be positive");
    if (t < 0) throw std::invalid_argument("ehrhart_modk: negative dilate");
    const Rat inv_k = Rat(1) / Rat(k);
    Rat sum = 0;
    const long tl = t.convert_to<long>();
    for (long p = 0; p <= tl; ++p) {
        Rat term = binomial(inv_k - 1, tl - p) * binomial(-inv_k, p);
        term *= Rat(pow(k * Int(p) + 1, static_cast<unsigned>(n)));
        sum += term;
    }
    if (tl % 2 != 0) sum = -sum;
    if (denominator(sum) != 1)
        throw std::logic_error("ehrhart_modk: sum is not an integer");
    return numerator(sum);
}

enum class CardinalityFlag { authoritative, formula_under_review };

inline const char* flag_name(CardinalityFlag f) {
    return f == CardinalityFlag::authoritative ? "authoritative" : "formula-under-review";
}

struct CardinalityPrediction {
    Int value;
    CardinalityFlag flag;
};

/// Closed-form cardinality prediction for a family's Hilbert basis. The flag
/// is computed, not assumed: authoritative iff the formula value equals the
/// size of the constructed basis for this very instance (the formulas for
/// the four-dimensional cases d and e, and several small-parameter cells of
/// the other families, disagree with the true count).
inline CardinalityPrediction cardinality_formula(const FamilyDescriptor& f) {
    Int value = std::visit(
        detail::overloaded{
            [](const ModK& m) -> Int {
                const unsigned e = static_cast<unsigned>(m.n - 2);
                return (pow(m.k + 1, e) + (m.k - 1)) / m.k + pow(Int(2), e);
            },
            [](const LSeq& l) -> Int {
                Int total = 2;
                if (l.n >= 3) {
                    const Sequence inner = l_sequence(l.ell, l.n - 2);
                    const Sequence s = l_sequence(l.ell, l.n);
                    for (int j = 1; j <= l.n - 2; ++j) total += count_R(inner, s[j - 1]);
                }
                return total;
            },
            [](const Dim2& d) -> Int { return d.s >= 2 ? 3 : 2; },
            [](const Dim3& d) -> Int { return d.s >= 2 ? Int(d.s + 5) : Int(4); },
            [](const Dim4& d) -> Int {
                switch (d.which) {
                    case Dim4Case::a: return 5;
                    case Dim4Case::b: return (d.u1 * d.s1 - 1) + 6;
                    case Dim4Case::c: return 6;
                    case Dim4Case::d: return (d.s1 + 1) * (d.s1 - 2) / 2 + 5;
                    case Dim4Case::e:
                        return d.u1 * d.s1 * (d.s1 + 1) / 2 + d.u1 * d.u1 + 6;
                }
                throw std::logic_error("cardinality_formula: unknown case");
            },
            [](const Custom&) -> Int {
                throw std::invalid_argument("cardinality_formula: custom descriptor");
            }},
        f);
    const Int actual = Int(family_basis(f).size());
    const CardinalityFlag flag = (value == actual) ? CardinalityFlag::authoritative
                                                   : CardinalityFlag::formula_under_review;
    return CardinalityPrediction{std::move(value), flag};
}

}  // namespace lhc
