#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "lhc/cone.hpp"
#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

/// Largest value v_cur may take so that v_cur/s_cur <= v_next/s_next
/// (or strictly < when strict). Cross-multiplied: v_cur <= v_next*s_cur/s_next.
inline Int chain_upper_bound(const Int& v_next, const Int& s_cur, const Int& s_next,
                             bool strict = false) {
    return div_floor(v_next * s_cur - (strict ? 1 : 0), s_next);
}

namespace detail {

inline void enumerate_chain_rec(const Sequence& s, int i, const Int& bound, bool strict,
                                LatticePoint& partial, std::vector<LatticePoint>& out) {
    if (i < 0) {
        out.push_back(partial);
        return;
    }
    const Int lo = strict ? 1 : 0;
    for (Int v = lo; v <= bound; ++v) {
        partial[static_cast<size_t>(i)] = v;
        const Int next_bound =
            (i == 0) ? Int(0) : chain_upper_bound(v, s[i - 1], s[i], strict);
        if (i == 0) {
            out.push_back(partial);
        } else {
            enumerate_chain_rec(s, i - 1, next_bound, strict, partial, out);
        }
    }
}

}  // namespace detail

/// All points of the first m coordinates of the cone chain with the m-th
/// coordinate at most top_bound; strict enumerates interior chains
/// (0 < x_1/s_1 < ... < x_m/s_m). Results are in lexicographic order.
inline std::vector<LatticePoint> enumerate_chain(const Sequence& s, int m, const Int& top_bound,
                                                 bool strict = false) {
    if (m < 0 || m > s.n()) throw std::invalid_argument("enumerate_chain: bad prefix length");
    std::vector<LatticePoint> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    LatticePoint partial(static_cast<size_t>(m), Int(0));
    detail::enumerate_chain_rec(s, m - 1, top_bound, strict, partial, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of cone points with last coordinate at most top_bound, computed by
/// the same descent as enumerate_chain but with per-level memoization, so it
/// stays polynomial even when the point count is huge.
inline Int count_chain(const Sequence& s, const Int& top_bound) {
    if (top_bound < 0) return 0;
    // memo[i] maps "bound for coordinate i+1 (1-based)" -> count of prefixes.
    std::vector<std::map<Int, Int>> memo(static_cast<size_t>(s.n()));
    struct Counter {
        const Sequence& s;
        std::vector<std::map<Int, Int>>& memo;
        Int run(int i, const Int& bound) {
            if (bound < 0) return 0;
            if (i == 0) return bound + 1;
            auto& level = memo[static_cast<size_t>(i)];
            auto it = level.find(bound);
            if (it != level.end()) return it->second;
            Int total = 0;
            for (Int v = 0; v <= bound; ++v)
                total += run(i - 1, chain_upper_bound(v, s[i - 1], s[i]));
            level.emplace(bound, total);
            return total;
        }
    } counter{s, memo};
    return counter.run(s.n() - 1, top_bound);
}

/// Full-dimension cone points whose top two coordinates are pinned to (a, b).
/// Empty when (a, b) itself violates the chain. For n == 1 the pair is
/// interpreted as pinning the single coordinate to b (a is ignored).
inline std::vector<LatticePoint> stratum_elements(const Sequence& s, const Int& a, const Int& b) {
    const int n = s.n();
    std::vector<LatticePoint> out;
    if (n == 1) {
        if (b >= 0) out.push_back({b});
        return out;
    }
    if (a < 0 || a * s[n - 1] > b * s[n - 2]) return out;
    const Int prefix_bound = (n >= 3) ? chain_upper_bound(a, s[n - 3], s[n - 2]) : Int(0);
    for (auto& prefix : enumerate_chain(s, n - 2, prefix_bound)) {
        LatticePoint p = prefix;
        p.push_back(a);
        p.push_back(b);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lhc
