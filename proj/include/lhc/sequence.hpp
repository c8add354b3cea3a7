#pragma once

#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lhc/int.hpp"

namespace lhc {

/// A finite sequence of positive integers s_1, ..., s_n defining the cone
///   C(s) = { x in R^n : 0 <= x_1/s_1 <= x_2/s_2 <= ... <= x_n/s_n }.
/// Entries are validated once at construction; the class is immutable.
class Sequence {
public:
    explicit Sequence(std::vector<Int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::invalid_argument("Sequence: must be nonempty");
        for (const Int& v : entries_)
            if (v < 1)
                throw std::invalid_argument("Sequence: entries must be positive");
    }

    Sequence(std::initializer_list<long long> init)
        : Sequence(std::vector<Int>(init.begin(), init.end())) {}

    int n() const { return static_cast<int>(entries_.size()); }

    /// 0-based access: (*this)[i] is s_{i+1} in 1-based notation.
    const Int& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    const Int& back() const { return entries_.back(); }

    const std::vector<Int>& entries() const { return entries_; }

    bool operator==(const Sequence& other) const { return entries_ == other.entries_; }
    bool operator!=(const Sequence& other) const { return !(*this == other); }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) os << ',';
            os << entries_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<Int> entries_;
};

inline Sequence make_sequence(std::vector<Int> entries) {
    return Sequence(std::move(entries));
}

/// Divides all entries by their common gcd. The cone is invariant under this.
inline Sequence normalize_sequence(const Sequence& s) {
    Int g = 0;
    for (const Int& v : s.entries()) g = gcd_int(g, v);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(s.n()));
    for (const Int& v : s.entries()) out.push_back(v / g);
    return Sequence(std::move(out));
}

/// Builds s from a leading value and a recurrence vector u:
///   s_2 = u_1 s_1 - 1,   s_{i+1} = u_i s_i - s_{i-1}  (i >= 2).
/// Throws if any produced entry is nonpositive.
inline Sequence sequence_from_u(const Int& s1, const std::vector<Int>& u) {
    if (s1 < 1) throw std::invalid_argument("sequence_from_u: s1 must be positive");
    std::vector<Int> s{s1};
    for (size_t i = 0; i < u.size(); ++i) {
        Int next = (i == 0) ? Int(u[0] * s[0] - 1) : Int(u[i] * s[i] - s[i - 1]);
        if (next < 1)
            throw std::invalid_argument("sequence_from_u: recurrence left the positive range");
        s.push_back(next);
    }
    return Sequence(std::move(s));
}

/// s_i = (i-1)k + 1, i.e. (1, k+1, 2k+1, ...).
inline Sequence modk_sequence(const Int& k, int n) {
    if (k < 1) throw std::invalid_argument("modk_sequence: k must be positive");
    if (n < 1) throw std::invalid_argument("modk_sequence: n must be positive");
    std::vector<Int> s;
    s.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s.push_back(Int(i) * k + 1);
    return Sequence(std::move(s));
}

/// s_1 = 1, s_2 = l, s_{i+1} = l s_i - s_{i-1}. Requires l >= 2 so the
/// sequence stays positive and nondecreasing.
inline Sequence l_sequence(const Int& ell, int n) {
    if (ell < 2) throw std::invalid_argument("l_sequence: l must be >= 2");
    if (n < 1) throw std::invalid_argument("l_sequence: n must be positive");
    std::vector<Int> s{1};
    if (n >= 2) s.push_back(ell);
    for (int i = 2; i < n; ++i) s.push_back(ell * s[static_cast<size_t>(i - 1)] - s[static_cast<size_t>(i - 2)]);
    return Sequence(std::move(s));
}

}  // namespace lhc
