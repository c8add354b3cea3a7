#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lhc/basis.hpp"
#include "lhc/cone.hpp"
#include "lhc/enumerate.hpp"
#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

/// Outcome of a single verification pass. `witnesses` holds the offending
/// points (empty when passed); `details` are human-readable notes.
struct VerificationReport {
    std::string subject;
    int checks_run = 0;
    bool passed = false;
    std::vector<LatticePoint> witnesses;
    std::vector<std::string> details;
};

/// Thrown when a brute-force enumeration would exceed its volume budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(Int required_volume, Int budget)
        : std::runtime_error(format(required_volume, budget)),
          required_volume_(std::move(required_volume)),
          budget_(std::move(budget)) {}

    const Int& required_volume() const { return required_volume_; }
    const Int& budget() const { return budget_; }

private:
    static std::string format(const Int& req, const Int& budget) {
        std::ostringstream os;
        os << "enumeration volume " << req << " exceeds budget " << budget;
        return os.str();
    }

    Int required_volume_;
    Int budget_;
};

inline Int default_enumeration_budget() { return Int(1000000); }

/// Determinant of the ray matrix: s_1 * ... * s_{n-1}. Proportional to the
/// number of fundamental-box lattice points, hence the enumeration cost.
inline Int enumeration_volume(const Sequence& s) {
    Int v = 1;
    for (int i = 0; i + 1 < s.n(); ++i) v *= s[i];
    return v;
}

namespace detail {

inline void box_points_rec(const Sequence& s, int i, const Int& prev, LatticePoint& partial,
                           std::vector<LatticePoint>& out) {
    const int n = s.n();
    if (i == n) {
        out.push_back(partial);
        return;
    }
    // Coordinate x_i ranges over an interval of width s_i (width 1 for the
    // last coordinate), pinned below by the chain constraint against x_{i-1}.
    const Int lo = div_ceil(prev * s[i], s[i - 1]);
    const Int width = (i == n - 1) ? Int(1) : s[i];
    const Int hi = div_floor(prev * s[i], s[i - 1]) + width;
    for (Int v = lo; v <= hi; ++v) {
        partial[static_cast<size_t>(i)] = v;
        box_points_rec(s, i + 1, v, partial, out);
    }
}

}  // namespace detail

/// Lattice points of the closed fundamental parallelepiped spanned by the ray
/// generators (all coefficients in [0, 1]). Contains every Hilbert basis
/// element; sorted lexicographically.
inline std::vector<LatticePoint> fundamental_box_points(const Sequence& s) {
    const int n = s.n();
    std::vector<LatticePoint> out;
    if (n == 1) {
        out.push_back({Int(0)});
        out.push_back({Int(1)});
        return out;
    }
    LatticePoint partial(static_cast<size_t>(n), Int(0));
    for (Int v = 0; v <= s[0]; ++v) {
        partial[0] = v;
        detail::box_points_rec(s, 1, v, partial, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Exact Hilbert basis by enumeration, independent of any closed form:
/// enumerate the closed fundamental box, then greedily keep each nonzero
/// point (in ascending coordinate-sum, then lex, order) that is not an
/// already-kept point plus a cone point. Throws BudgetError when
/// enumeration_volume(s) exceeds max_volume.
inline HilbertBasis hilbert_basis_oracle(const Sequence& s,
                                         const Int& max_volume = default_enumeration_budget()) {
    const Int volume = enumeration_volume(s);
    if (volume > max_volume) throw BudgetError(volume, max_volume);
    std::vector<LatticePoint> box = fundamental_box_points(s);
    std::stable_sort(box.begin(), box.end(), [](const LatticePoint& a, const LatticePoint& b) {
        const Int sa = coordinate_sum(a), sb = coordinate_sum(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<LatticePoint> kept;
    for (const auto& p : box) {
        if (is_zero(p)) continue;
        if (!reduces_within(s, p, kept)) kept.push_back(p);
    }
    return make_hilbert_basis(s, std::move(kept), BasisMethod::oracle);
}

/// True when some b in basis with b != p has p - b in the cone. Throws
/// domain_error when p is outside the cone, invalid_argument when p is zero.
inline bool is_reducible(const Sequence& s, const LatticePoint& p,
                         const std::vector<LatticePoint>& basis) {
    if (is_zero(p)) throw std::invalid_argument("is_reducible: zero point");
    if (!cone_contains(s, p)) throw std::domain_error("is_reducible: point outside the cone");
    return reduces_within(s, p, basis);
}

/// Checks that every cone point with last coordinate <= bound is a
/// nonnegative integer combination of the claimed basis. Returns witnesses
/// (unreachable points) in ascending (coordinate sum, lex) order.
inline VerificationReport generates_up_to(const Sequence& s,
                                          const std::vector<LatticePoint>& basis,
                                          const Int& bound) {
    VerificationReport report;
    report.subject = "generates-up-to " + bound.str();
    for (const auto& b : basis) {
        if (is_zero(b)) throw std::invalid_argument("generates_up_to: zero basis element");
        if (!cone_contains(s, b))
            throw std::domain_error("generates_up_to: basis element outside the cone");
    }
    std::vector<LatticePoint> points = enumerate_chain(s, s.n(), bound);
    std::stable_sort(points.begin(), points.end(),
                     [](const LatticePoint& a, const LatticePoint& b) {
                         const Int sa = coordinate_sum(a), sb = coordinate_sum(b);
                         if (sa != sb) return sa < sb;
                         return a < b;
                     });
    // Reachability in ascending order: p is reachable iff p == 0 or p - b is a
    // reachable cone point for some basis element b. Every such p - b precedes
    // p in the order, so one pass suffices.
    std::map<LatticePoint, bool> reachable;
    for (const auto& p : points) {
        bool ok = is_zero(p);
        for (const auto& b : basis) {
            if (ok) break;
            LatticePoint q = subtract(p, b);
            if (!cone_contains(s, q)) continue;
            if (q.back() > bound) continue;
            auto it = reachable.find(q);
            ok = (it != reachable.end() && it->second);
        }
        reachable.emplace(p, ok);
        if (!ok) report.witnesses.push_back(p);
        ++report.checks_run;
    }
    report.passed = report.witnesses.empty();
    if (!report.passed) {
        report.details.push_back(std::to_string(report.witnesses.size()) +
                                 " point(s) not generated");
    }
    return report;
}

/// Strictly interior cone points with last coordinate <= bound, lex order.
inline std::vector<LatticePoint> interior_points_up_to(const Sequence& s, const Int& bound) {
    return enumerate_chain(s, s.n(), bound, /*strict=*/true);
}

/// Checks the Gorenstein shift property up to a height bound: every strictly
/// interior point x with x_n <= bound must satisfy x - c in cone. Also spot
/// checks the converse direction on the lowest cone points: c + p must be
/// strictly interior. Throws domain_error when c itself is not interior.
inline VerificationReport verify_gorenstein_shift(const Sequence& s, const LatticePoint& c,
                                                  const Int& bound) {
    if (!cone_contains(s, c, /*strict=*/true))
        throw std::domain_error("verify_gorenstein_shift: c is not strictly interior");
    VerificationReport report;
    report.subject = "gorenstein-shift-up-to " + bound.str();
    for (const auto& x : interior_points_up_to(s, bound)) {
        ++report.checks_run;
        if (!cone_contains(s, subtract(x, c))) report.witnesses.push_back(x);
    }
    int forward = 0;
    for (const auto& p : enumerate_chain(s, s.n(), std::min(bound, Int(8)))) {
        if (forward >= 64) break;
        ++forward;
        ++report.checks_run;
        if (!cone_contains(s, add(c, p), /*strict=*/true)) report.witnesses.push_back(p);
    }
    report.passed = report.witnesses.empty();
    if (!report.passed)
        report.details.push_back("shift property failed at " +
                                 std::to_string(report.witnesses.size()) + " point(s)");
    return report;
}

}  // namespace lhc
