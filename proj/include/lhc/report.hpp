#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lhc/cone.hpp"
#include "lhc/int.hpp"
#include "lhc/sequence.hpp"

namespace lhc {

// Deterministic report emission: fixed key order, no timestamps, integers in
// full decimal. Every writer is a pure function of its Report, so repeated
// runs with identical inputs are byte-identical.

struct GorensteinSection {
    std::optional<std::vector<Int>> u;
    std::optional<LatticePoint> c;
    Int verified_bound = 0;
    std::string method;  // empty when no certificate
};

struct VerificationSection {
    bool passed = false;
    std::vector<LatticePoint> witnesses;
    std::vector<std::string> notes;
};

struct Report {
    std::vector<Int> sequence;
    std::optional<std::string> family;
    std::string method;  // "closed_form" | "oracle"
    std::vector<LatticePoint> basis;
    std::optional<std::vector<Int>> last_diff_degrees;  // none when n == 1
    std::optional<GorensteinSection> gorenstein;
    std::optional<VerificationSection> verification;
};

namespace detail {

inline void json_int_list(std::ostringstream& os, const std::vector<Int>& xs) {
    os << '[';
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    os << ']';
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace detail

inline std::string to_json(const Report& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"sequence\": ";
    detail::json_int_list(os, r.sequence);
    os << ",\n";
    os << "  \"family\": ";
    if (r.family)
        os << '"' << detail::json_escape(*r.family) << '"';
    else
        os << "null";
    os << ",\n";
    os << "  \"method\": \"" << r.method << "\",\n";
    os << "  \"basis\": [";
    for (size_t i = 0; i < r.basis.size(); ++i) {
        os << (i ? ",\n            " : "\n            ");
        detail::json_int_list(os, r.basis[i]);
    }
    os << (r.basis.empty() ? "]" : "\n           ]") << ",\n";
    os << "  \"cardinality\": " << r.basis.size() << ",\n";
    os << "  \"degrees\": {\"last_diff\": ";
    if (r.last_diff_degrees)
        detail::json_int_list(os, *r.last_diff_degrees);
    else
        os << "null";
    os << "},\n";
    os << "  \"gorenstein\": ";
    if (r.gorenstein) {
        os << "{\"u\": ";
        if (r.gorenstein->u)
            detail::json_int_list(os, *r.gorenstein->u);
        else
            os << "null";
        os << ", \"c\": ";
        if (r.gorenstein->c)
            detail::json_int_list(os, *r.gorenstein->c);
        else
            os << "null";
        os << ", \"verified_bound\": " << r.gorenstein->verified_bound << "}";
    } else {
        os << "null";
    }
    os << ",\n";
    os << "  \"verification\": ";
    if (r.verification) {
        os << "{\"passed\": " << (r.verification->passed ? "true" : "false")
           << ", \"witnesses\": [";
        for (size_t i = 0; i < r.verification->witnesses.size(); ++i) {
            if (i) os << ',';
            detail::json_int_list(os, r.verification->witnesses[i]);
        }
        os << "], \"notes\": [";
        for (size_t i = 0; i < r.verification->notes.size(); ++i) {
            if (i) os << ',';
            os << '"' << detail::json_escape(r.verification->notes[i]) << '"';
        }
        os << "]}";
    } else {
        os << "null";
    }
    os << "\n}\n";
    return os.str();
}

inline std::string to_plain(const Report& r) {
    std::ostringstream os;
    os << "sequence: (";
    for (size_t i = 0; i < r.sequence.size(); ++i) {
        if (i) os << ',';
        os << r.sequence[i];
    }
    os << ")\n";
    os << "family: " << (r.family ? *r.family : "none") << "\n";
    os << "method: " << r.method << "\n";
    os << "cardinality: " << r.basis.size() << "\n";
    if (!r.basis.empty()) {
        os << "basis:\n";
        for (const auto& p : r.basis) {
            os << " ";
            for (const auto& v : p) os << ' ' << v;
            os << "\n";
        }
    }
    if (r.last_diff_degrees) {
        os << "last-diff degrees:";
        for (const auto& d : *r.last_diff_degrees) os << ' ' << d;
        os << "\n";
    }
    if (r.gorenstein) {
        os << "gorenstein: " << (r.gorenstein->c ? "yes" : "no") << "\n";
        os << "u: ";
        if (r.gorenstein->u) {
            os << '(';
            for (size_t i = 0; i < r.gorenstein->u->size(); ++i) {
                if (i) os << ',';
                os << (*r.gorenstein->u)[i];
            }
            os << ')';
        } else {
            os << "none";
        }
        os << "\n";
        os << "c: ";
        if (r.gorenstein->c) {
            os << '(';
            for (size_t i = 0; i < r.gorenstein->c->size(); ++i) {
                if (i) os << ',';
                os << (*r.gorenstein->c)[i];
            }
            os << ')';
        } else {
            os << "none";
        }
        os << "\n";
        if (!r.gorenstein->method.empty())
            os << "certificate method: " << r.gorenstein->method << "\n";
        os << "verified bound: " << r.gorenstein->verified_bound << "\n";
    }
    if (r.verification) {
        os << "passed: " << (r.verification->passed ? "true" : "false") << "\n";
        for (const auto& n : r.verification->notes) os << "note: " << n << "\n";
        if (!r.verification->witnesses.empty()) {
            os << "witnesses:\n";
            for (const auto& p : r.verification->witnesses) {
                os << " ";
                for (const auto& v : p) os << ' ' << v;
                os << "\n";
            }
        }
    }
    return os.str();
}

/// One sweep row: parameter cell, basis cardinality, formula value and flag.
struct SweepRow {
    std::string family;
    std::string params;  // "k=2;n=3" style, no commas
    Int cardinality;
    Int formula;
    std::string flag;
    bool match = false;
};

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "family,params,cardinality,formula,flag,match\n";
    for (const auto& r : rows) {
        os << r.family << ',' << r.params << ',' << r.cardinality << ',' << r.formula << ','
           << r.flag << ',' << (r.match ? "true" : "false") << "\n";
    }
    return os.str();
}

inline std::string sweep_json(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "  {\"family\": \"" << detail::json_escape(r.family) << "\", \"params\": \""
           << detail::json_escape(r.params) << "\", \"cardinality\": " << r.cardinality
           << ", \"formula\": " << r.formula << ", \"flag\": \"" << r.flag
           << "\", \"match\": " << (r.match ? "true" : "false") << "}"
           << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

}  // namespace lhc
