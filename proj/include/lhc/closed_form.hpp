#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lhc/basis.hpp"
#include "lhc/cone.hpp"
#include "lhc/enumerate.hpp"
#include "lhc/gorenstein.hpp"
#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

// Families with closed-form Hilbert bases. Each descriptor reconstructs its
// sequence exactly via the defining formulas.

struct ModK {
    Int k;
    int n;
};

struct LSeq {
    Int ell;
    int n;
};

/// Sequence (s, ks-1).
struct Dim2 {
    Int s;
    Int k;
};

/// Sequence (s, ks-1, l(ks-1)-s).
struct Dim3 {
    Int s;
    Int k;
    Int ell;
};

enum class Dim4Case { a, b, c, d, e };

/// Sequence generated from s1 by u = (u1,u2,u3); `which` is determined by
/// (s1, u1): a:(1,2), b:(1,>=3), c:(2,1), d:(>=3,1), e:(>=2,>=2).
struct Dim4 {
    Int s1;
    Int u1, u2, u3;
    Dim4Case which;
};

struct Custom {};

using FamilyDescriptor = std::variant<ModK, LSeq, Dim2, Dim3, Dim4, Custom>;

inline std::optional<Dim4Case> dim4_case_for(const Int& s1, const Int& u1) {
    if (s1 == 1 && u1 == 2) return Dim4Case::a;
    if (s1 == 1 && u1 >= 3) return Dim4Case::b;
    if (s1 == 2 && u1 == 1) return Dim4Case::c;
    if (s1 >= 3 && u1 == 1) return Dim4Case::d;
    if (s1 >= 2 && u1 >= 2) return Dim4Case::e;
    return std::nullopt;  // s1 == 1, u1 == 1 would force s2 == 0
}

inline char dim4_case_letter(Dim4Case c) {
    switch (c) {
        case Dim4Case::a: return 'a';
        case Dim4Case::b: return 'b';
        case Dim4Case::c: return 'c';
        case Dim4Case::d: return 'd';
        case Dim4Case::e: return 'e';
    }
    return '?';
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

/// Hilbert basis of the cone of s = (1, k+1, ..., (n-1)k+1): the degree-one
/// elements v_A = (0,...,0, a_1,...,a_r, a_r+1) for A = {a_1<...<a_r}
/// contained in {1,...,n-2} (v of the empty set is the last unit vector),
/// together with every cone point whose top two coordinates equal
/// (s_{n-1}, s_n). The union is pruned to its irreducible subset; for this
/// family the pruning provably removes nothing.
inline HilbertBasis basis_modk(const Int& k, int n) {
    if (k < 1) throw std::invalid_argument("basis_modk: k must be positive");
    if (n < 2) throw std::invalid_argument("basis_modk: n must be at least 2");
    const Sequence s = modk_sequence(k, n);
    std::vector<LatticePoint> cand;
    const int m = n - 2;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::vector<Int> vals;
        for (int bit = 0; bit < m; ++bit)
            if (mask & (1ul << bit)) vals.push_back(Int(bit + 1));
        LatticePoint v(static_cast<size_t>(n), Int(0));
        const size_t r = vals.size();
        for (size_t idx = 0; idx < r; ++idx)
            v[static_cast<size_t>(n) - 1 - r + idx] = vals[idx];
        v.back() = r ? vals.back() + 1 : Int(1);
        cand.push_back(std::move(v));
    }
    for (auto& w : stratum_elements(s, s[n - 2], s[n - 1])) cand.push_back(std::move(w));
    return make_hilbert_basis(s, irreducible_subset(s, std::move(cand)),
                              BasisMethod::closed_form);
}

/// Hilbert basis of the cone of the recurrence sequence s_1 = 1, s_2 = l,
/// s_{i+1} = l s_i - s_{i-1}: the union over i = 0..n of the strata with top
/// pair (s_i, s_{i+1}), convention s_0 = 0. The i = n stratum is empty
/// because the consecutive ratios decrease; the stratum enumerator handles
/// that uniformly. Pruned to the irreducible subset (provably a no-op here).
inline HilbertBasis basis_lseq(const Int& ell, int n) {
    if (ell < 2) throw std::invalid_argument("basis_lseq: l must be >= 2");
    if (n < 2) throw std::invalid_argument("basis_lseq: n must be at least 2");
    const Sequence s = l_sequence(ell, n);
    const Sequence ext = l_sequence(ell, n + 1);
    std::vector<LatticePoint> cand;
    for (int i = 0; i <= n; ++i) {
        const Int a = (i == 0) ? Int(0) : ext[i - 1];
        const Int b = ext[i];
        for (auto& p : stratum_elements(s, a, b)) cand.push_back(std::move(p));
    }
    return make_hilbert_basis(s, irreducible_subset(s, std::move(cand)),
                              BasisMethod::closed_form);
}

/// Hilbert basis for (s, ks-1): irreducible subset of {(0,1),(1,k),(s,ks-1)}.
/// For s >= 2 all three survive; for s = 1 the middle element reduces.
inline HilbertBasis basis_gorenstein_dim2(const Int& s, const Int& k) {
    if (s < 1 || k < 1 || k * s - 1 < 1)
        throw std::invalid_argument("basis_gorenstein_dim2: entries must be positive");
    const Sequence seq({s, k * s - 1});
    std::vector<LatticePoint> cand{{Int(0), Int(1)}, {Int(1), k}, {s, k * s - 1}};
    return make_hilbert_basis(seq, irreducible_subset(seq, std::move(cand)),
                              BasisMethod::closed_form);
}

/// Hilbert basis for (s, ks-1, l(ks-1)-s): irreducible subset of the last
/// unit vector, (0,1,l), for s >= 2 also (0,k,lk-1) and (1,k,lk-1), and the
/// full stratum with top pair (s_2, s_3).
inline HilbertBasis basis_gorenstein_dim3(const Int& s, const Int& k, const Int& ell) {
    const Int s2 = k * s - 1;
    const Int s3 = ell * s2 - s;
    if (s < 1 || s2 < 1 || s3 < 1)
        throw std::invalid_argument("basis_gorenstein_dim3: entries must be positive");
    const Sequence seq({s, s2, s3});
    std::vector<LatticePoint> cand{{Int(0), Int(0), Int(1)}, {Int(0), Int(1), ell}};
    if (s >= 2) {
        cand.push_back({Int(0), k, ell * k - 1});
        cand.push_back({Int(1), k, ell * k - 1});
    }
    for (auto& p : stratum_elements(seq, s2, s3)) cand.push_back(std::move(p));
    return make_hilbert_basis(seq, irreducible_subset(seq, std::move(cand)),
                              BasisMethod::closed_form);
}

/// Hilbert basis for the four-dimensional u-generated Gorenstein cones,
/// dispatched on (s1, u1). Every case starts from the last unit vector,
/// (0,0,1,u3), and the full stratum with top pair (s_3, s_4); the b/d/e
/// cases add elements built from u and from the interior point
/// c = (1, u1, u1 u2 - 1, u3(u1 u2 - 1) - u1). Pruned to the irreducible
/// subset; at small parameters some listed elements reduce.
inline HilbertBasis basis_gorenstein_dim4(const Int& s1, const Int& u1, const Int& u2,
                                          const Int& u3) {
    const auto which = dim4_case_for(s1, u1);
    if (!which) throw std::invalid_argument("basis_gorenstein_dim4: s1 = 1 with u1 = 1");
    const Sequence s = sequence_from_u(s1, {u1, u2, u3});
    const Int c2 = u1;
    const Int c3 = u2 * c2 - 1;
    const Int c4 = u3 * c3 - c2;
    std::vector<LatticePoint> cand{{Int(0), Int(0), Int(0), Int(1)},
                                   {Int(0), Int(0), Int(1), u3}};
    for (auto& p : stratum_elements(s, s[2], s[3])) cand.push_back(std::move(p));
    switch (*which) {
        case Dim4Case::a:
        case Dim4Case::c:
            break;
        case Dim4Case::b:
            cand.push_back({Int(0), Int(0), u2, u2 * u3 - 1});
            cand.push_back({Int(0), Int(1), u2, u2 * u3 - 1});
            break;
        case Dim4Case::d:
            cand.push_back({Int(0), Int(0), c3, c4});
            cand.push_back({Int(0), Int(1), c3, c4});
            cand.push_back({Int(1), Int(1), c3, c4});
            break;
        case Dim4Case::e:
            for (Int j = 0; j <= c2; ++j) cand.push_back({Int(0), j, c3, c4});
            cand.push_back({Int(1), c2, c3, c4});
            cand.push_back({Int(0), Int(0), u2, u2 * u3 - 1});
            cand.push_back({Int(0), Int(1), u2, u2 * u3 - 1});
            break;
    }
    return make_hilbert_basis(s, irreducible_subset(s, std::move(cand)),
                              BasisMethod::closed_form);
}

/// Identifies the first family (fixed priority: modk, lseq, dim2, dim3 and
/// dim4 via u-detection) whose defining formulas reproduce s exactly.
inline std::optional<FamilyDescriptor> recognize_family(const Sequence& s) {
    const int n = s.n();
    if (n < 2) return std::nullopt;
    if (s[0] == 1 && s[1] >= 2) {
        const Int k = s[1] - 1;
        if (s == modk_sequence(k, n)) return ModK{k, n};
        if (s == l_sequence(s[1], n)) return LSeq{s[1], n};
    }
    if (n == 2) {
        if ((s[1] + 1) % s[0] == 0) {
            Int k = (s[1] + 1) / s[0];
            if (k >= 1) return Dim2{s[0], std::move(k)};
        }
        return std::nullopt;
    }
    if (n == 3) {
        if (auto u = detect_u_generated(s))
            return Dim3{s[0], u->entries[0], u->entries[1]};
        return std::nullopt;
    }
    if (n == 4) {
        if (auto u = detect_u_generated(s)) {
            const auto which = dim4_case_for(s[0], u->entries[0]);
            if (which)
                return Dim4{s[0], u->entries[0], u->entries[1], u->entries[2], *which};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

inline Sequence family_sequence(const FamilyDescriptor& f) {
    return std::visit(
        detail::overloaded{
            [](const ModK& m) { return modk_sequence(m.k, m.n); },
            [](const LSeq& l) { return l_sequence(l.ell, l.n); },
            [](const Dim2& d) { return Sequence({d.s, d.k * d.s - 1}); },
            [](const Dim3& d) {
                const Int s2 = d.k * d.s - 1;
                return Sequence({d.s, s2, d.ell * s2 - d.s});
            },
            [](const Dim4& d) { return sequence_from_u(d.s1, {d.u1, d.u2, d.u3}); },
            [](const Custom&) -> Sequence {
                throw std::invalid_argument("family_sequence: custom descriptor");
            }},
        f);
}

inline HilbertBasis family_basis(const FamilyDescriptor& f) {
    return std::visit(
        detail::overloaded{
            [](const ModK& m) { return basis_modk(m.k, m.n); },
            [](const LSeq& l) { return basis_lseq(l.ell, l.n); },
            [](const Dim2& d) { return basis_gorenstein_dim2(d.s, d.k); },
            [](const Dim3& d) { return basis_gorenstein_dim3(d.s, d.k, d.ell); },
            [](const Dim4& d) { return basis_gorenstein_dim4(d.s1, d.u1, d.u2, d.u3); },
            [](const Custom&) -> HilbertBasis {
                throw std::invalid_argument("family_basis: custom descriptor");
            }},
        f);
}

inline std::string family_name(const FamilyDescriptor& f) {
    std::ostringstream os;
    std::visit(detail::overloaded{
                   [&](const ModK& m) { os << "modk(k=" << m.k << ",n=" << m.n << ")"; },
                   [&](const LSeq& l) { os << "lseq(l=" << l.ell << ",n=" << l.n << ")"; },
                   [&](const Dim2& d) { os << "dim2(s=" << d.s << ",k=" << d.k << ")"; },
                   [&](const Dim3& d) {
                       os << "dim3(s=" << d.s << ",k=" << d.k << ",l=" << d.ell << ")";
                   },
                   [&](const Dim4& d) {
                       os << "dim4(s1=" << d.s1 << ",u=(" << d.u1 << "," << d.u2 << ","
                          << d.u3 << "),case=" << dim4_case_letter(d.which) << ")";
                   },
                   [&](const Custom&) { os << "custom"; }},
               f);
    return os.str();
}

/// Family recognition plus its closed-form basis; none when no family matches.
inline std::optional<std::pair<FamilyDescriptor, HilbertBasis>> closed_form_for(
    const Sequence& s) {
    auto f = recognize_family(s);
    if (!f) return std::nullopt;
    return std::make_pair(*f, family_basis(*f));
}

}  // namespace lhc
