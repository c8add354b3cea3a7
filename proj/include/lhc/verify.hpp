#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lhc/basis.hpp"
#include "lhc/closed_form.hpp"
#include "lhc/ehrhart.hpp"
#include "lhc/oracle.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

/// Combined result of verifying a sequence's Hilbert basis: closed form vs
/// oracle agreement (when a family is recognized), generation up to a bound,
/// minimality under single-element removal, and a cardinality-formula note.
/// `passed` covers the first three; formula disagreement is reported, never
/// fatal, because the flag is computed per instance.
struct VerifySummary {
    Sequence sequence;
    std::optional<FamilyDescriptor> family;
    HilbertBasis basis;
    bool passed = false;
    std::vector<std::string> notes;
    std::vector<LatticePoint> witnesses;
};

namespace detail {

inline std::string point_str(const LatticePoint& p) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

}  // namespace detail

inline VerifySummary run_verification(const Sequence& s, std::optional<Int> bound = std::nullopt,
                                      const Int& max_volume = default_enumeration_budget()) {
    const Int effective_bound = bound ? *bound : Int(2) * s.back();
    const HilbertBasis oracle = hilbert_basis_oracle(s, max_volume);
    auto cf = closed_form_for(s);
    VerifySummary out{s, std::nullopt, oracle, true, {}, {}};
    if (cf) {
        out.family = cf->first;
        out.basis = cf->second;
        if (cf->second.elements == oracle.elements) {
            out.notes.push_back("closed form agrees with oracle (" +
                                std::to_string(oracle.size()) + " elements)");
        } else {
            out.passed = false;
            out.notes.push_back("closed form disagrees with oracle");
            std::vector<LatticePoint> diff;
            std::set_symmetric_difference(cf->second.elements.begin(),
                                          cf->second.elements.end(), oracle.elements.begin(),
                                          oracle.elements.end(), std::back_inserter(diff));
            for (auto& p : diff) out.witnesses.push_back(std::move(p));
        }
    } else {
        out.notes.push_back("no family recognized; oracle basis is authoritative");
    }

    const VerificationReport gen = generates_up_to(s, out.basis.elements, effective_bound);
    if (gen.passed) {
        out.notes.push_back("generates all " + std::to_string(gen.checks_run) +
                            " cone points up to bound " + effective_bound.str());
    } else {
        out.passed = false;
        out.notes.push_back("generation failed at bound " + effective_bound.str());
        for (const auto& w : gen.witnesses) out.witnesses.push_back(w);
    }

    // Minimality: removing any single element must leave some point (at least
    // the removed element itself) unreachable. The bound is widened to cover
    // every element's height.
    Int minimality_bound = effective_bound;
    for (const auto& b : out.basis.elements)
        minimality_bound = std::max(minimality_bound, b.back());
    bool minimal = true;
    for (size_t i = 0; i < out.basis.elements.size(); ++i) {
        std::vector<LatticePoint> reduced;
        reduced.reserve(out.basis.elements.size() - 1);
        for (size_t j = 0; j < out.basis.elements.size(); ++j)
            if (j != i) reduced.push_back(out.basis.elements[j]);
        if (generates_up_to(s, reduced, minimality_bound).passed) {
            minimal = false;
            out.witnesses.push_back(out.basis.elements[i]);
            out.notes.push_back("element " + detail::point_str(out.basis.elements[i]) +
                                " is redundant");
        }
    }
    if (minimal) {
        out.notes.push_back("minimal: removing any element breaks generation");
    } else {
        out.passed = false;
    }

    if (out.family && !std::holds_alternative<Custom>(*out.family)) {
        const CardinalityPrediction pred = cardinality_formula(*out.family);
        std::string line = "cardinality formula " + pred.value.str() + " [" +
                           flag_name(pred.flag) + "] vs actual " +
                           std::to_string(out.basis.size());
        line += (pred.value == Int(out.basis.size())) ? ": match" : ": differs";
        out.notes.push_back(std::move(line));
    }
    return out;
}

}  // namespace lhc
