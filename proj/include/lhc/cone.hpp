#pragma once

#include <stdexcept>
#include <vector>

#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

using LatticePoint = std::vector<Int>;

/// Membership test for the cone 0 <= x_1/s_1 <= ... <= x_n/s_n, evaluated by
/// cross multiplication so no rational arithmetic is needed. With
/// strict == true, tests the interior: 0 < x_1/s_1 < ... < x_n/s_n.
inline bool cone_contains(const Sequence& s, const LatticePoint& p, bool strict = false) {
    if (static_cast<int>(p.size()) != s.n())
        throw std::invalid_argument("cone_contains: dimension mismatch");
    if (strict ? !(p[0] > 0) : !(p[0] >= 0)) return false;
    for (int i = 0; i + 1 < s.n(); ++i) {
        const Int lhs = p[static_cast<size_t>(i)] * s[i + 1];
        const Int rhs = p[static_cast<size_t>(i + 1)] * s[i];
        if (strict ? !(lhs < rhs) : !(lhs <= rhs)) return false;
    }
    return true;
}

/// Rows generating the cone: for i = 1..n-1 the row (0,...,0,s_i,...,s_n),
/// plus the last unit vector. The matrix is upper triangular with determinant
/// s_1 * ... * s_{n-1}.
struct RayMatrix {
    std::vector<LatticePoint> rows;
};

inline RayMatrix ray_generators(const Sequence& s) {
    const int n = s.n();
    RayMatrix m;
    m.rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i) {
        LatticePoint row(static_cast<size_t>(n), Int(0));
        for (int j = i; j < n; ++j) row[static_cast<size_t>(j)] = s[j];
        m.rows.push_back(std::move(row));
    }
    LatticePoint last(static_cast<size_t>(n), Int(0));
    last.back() = 1;
    m.rows.push_back(std::move(last));
    return m;
}

enum class Grading { full, last, last_diff };

/// Degree under the "last coordinate" grading.
inline Int degree_last(const LatticePoint& p) {
    if (p.empty()) throw std::invalid_argument("degree_last: empty point");
    return p.back();
}

/// Degree under the "difference of the top two coordinates" grading. Only a
/// proper grading when s is strictly increasing; undefined for n == 1.
inline Int degree_last_diff(const LatticePoint& p) {
    if (p.size() < 2)
        throw std::invalid_argument("degree_last_diff: needs at least two coordinates");
    return p[p.size() - 1] - p[p.size() - 2];
}

/// Multidegree of p under the chosen grading. `full` is the identity grading
/// (the point itself); the other two are scalar and returned as a 1-vector.
inline std::vector<Int> degree(const LatticePoint& p, Grading g) {
    switch (g) {
        case Grading::full: return p;
        case Grading::last: return {degree_last(p)};
        case Grading::last_diff: return {degree_last_diff(p)};
    }
    throw std::logic_error("degree: unknown grading");
}

inline LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    LatticePoint out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline LatticePoint subtract(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("subtract: dimension mismatch");
    LatticePoint out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline bool is_zero(const LatticePoint& p) {
    for (const Int& v : p)
        if (v != 0) return false;
    return true;
}

inline Int coordinate_sum(const LatticePoint& p) {
    Int s = 0;
    for (const Int& v : p) s += v;
    return s;
}

}  // namespace lhc
