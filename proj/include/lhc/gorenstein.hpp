#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lhc/cone.hpp"
#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

/// Recurrence coefficients u with s_2 = u_1 s_1 - 1 and
/// s_{i+1} = u_i s_i - s_{i-1}. Empty for n == 1 (vacuous).
struct UVector {
    std::vector<Int> entries;

    bool operator==(const UVector& o) const { return entries == o.entries; }
};

enum class CertificateMethod { u_recurrence, general_recurrence, geometric };

inline const char* certificate_method_name(CertificateMethod m) {
    switch (m) {
        case CertificateMethod::u_recurrence: return "u-recurrence";
        case CertificateMethod::general_recurrence: return "general-recurrence";
        case CertificateMethod::geometric: return "geometric";
    }
    return "?";
}

/// A claimed Gorenstein point c (the unique minimal strictly interior lattice
/// point, when the cone is Gorenstein) together with how it was obtained.
/// verified_bound > 0 records the height up to which the interior-shift
/// property x interior => x - c in cone has been checked.
struct GorensteinCertificate {
    LatticePoint c;
    std::optional<UVector> u;
    CertificateMethod method;
    Int verified_bound = 0;
};

/// Checks that u reproduces s exactly (same length contract: u has n-1 entries).
inline bool u_reproduces(const Sequence& s, const UVector& u) {
    if (static_cast<int>(u.entries.size()) != s.n() - 1) return false;
    for (int i = 0; i + 1 < s.n(); ++i) {
        const Int expect = (i == 0) ? Int(u.entries[0] * s[0] - 1)
                                    : Int(u.entries[static_cast<size_t>(i)] * s[i] - s[i - 1]);
        if (expect != s[i + 1]) return false;
    }
    return true;
}

/// Recovers the unique u with s_2 = u_1 s_1 - 1, s_{i+1} = u_i s_i - s_{i-1}
/// when every division is exact and every entry is >= 1; nullopt otherwise.
/// n == 1 yields the empty u-vector.
inline std::optional<UVector> detect_u_generated(const Sequence& s) {
    UVector u;
    for (int i = 0; i + 1 < s.n(); ++i) {
        const Int numer = (i == 0) ? Int(s[1] + 1) : Int(s[i + 1] + s[i - 1]);
        if (numer % s[i] != 0) return std::nullopt;
        Int ui = numer / s[i];
        if (ui < 1) return std::nullopt;
        u.entries.push_back(std::move(ui));
    }
    return u;
}

/// Gorenstein point from a u-certificate: c_1 = 1, c_2 = u_1,
/// c_{i+1} = u_i c_i - c_{i-1}. Throws invalid_argument when u does not
/// reproduce s, domain_error when the produced point is not strictly interior.
inline GorensteinCertificate gorenstein_point(const Sequence& s, const UVector& u) {
    if (!u_reproduces(s, u))
        throw std::invalid_argument("gorenstein_point: u does not reproduce the sequence");
    LatticePoint c{Int(1)};
    if (s.n() >= 2) c.push_back(u.entries[0]);
    for (int i = 2; i < s.n(); ++i)
        c.push_back(u.entries[static_cast<size_t>(i - 1)] * c[static_cast<size_t>(i - 1)] -
                    c[static_cast<size_t>(i - 2)]);
    if (!cone_contains(s, c, /*strict=*/true))
        throw std::domain_error("gorenstein_point: candidate point is not strictly interior");
    return GorensteinCertificate{std::move(c), u, CertificateMethod::u_recurrence, 0};
}

/// General recurrence: c_1 = 1 and c_{i+1} = (c_i s_{i+1} + gcd(s_i, s_{i+1})) / s_i,
/// valid only when each step divides exactly and stays positive; the result
/// must also be strictly interior. Succeeds on some cones with no u-certificate.
inline std::optional<GorensteinCertificate> gorenstein_recurrence(const Sequence& s) {
    LatticePoint c{Int(1)};
    for (int i = 0; i + 1 < s.n(); ++i) {
        const Int numer = c[static_cast<size_t>(i)] * s[i + 1] + gcd_int(s[i], s[i + 1]);
        if (numer % s[i] != 0) return std::nullopt;
        Int next = numer / s[i];
        if (next < 1) return std::nullopt;
        c.push_back(std::move(next));
    }
    if (!cone_contains(s, c, /*strict=*/true)) return std::nullopt;
    return GorensteinCertificate{std::move(c), std::nullopt,
                                 CertificateMethod::general_recurrence, 0};
}

/// Preferred classification path: a u-certificate when the sequence is
/// u-generated (richer metadata), otherwise the general recurrence, otherwise
/// none. Agreement of the two recurrences on u-generated input is a tested
/// invariant, not assumed here.
inline std::optional<GorensteinCertificate> gorenstein_classify(const Sequence& s) {
    if (auto u = detect_u_generated(s); u && s.n() >= 2) {
        try {
            return gorenstein_point(s, *u);
        } catch (const std::domain_error&) {
            // u reproduces s but the recurrence point is not interior;
            // fall through to the general recurrence.
        }
    }
    return gorenstein_recurrence(s);
}

}  // namespace lhc
