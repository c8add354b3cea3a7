// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit when
// any criterion fails. Every expected value here is either proven by an
// independent hand construction inside this file or cross-checked against
// the enumeration oracle; the known formula-vs-count disagreements are
// pinned exactly so a silent regression in either direction is caught.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lhc/lhc.hpp"
#include "test_util.hpp"

using namespace lhc;

namespace {

int failures = 0;
std::vector<std::string> discrepancy_report;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

bool family_matches_oracle(const FamilyDescriptor& f, std::string& first_bad) {
    const HilbertBasis closed = family_basis(f);
    const HilbertBasis brute = hilbert_basis_oracle(closed.sequence);
    if (closed.elements == brute.elements) return true;
    if (first_bad.empty())
        first_bad = family_name(f) + " closed " + std::to_string(closed.size()) + " vs oracle " +
                    std::to_string(brute.size());
    return false;
}

// ---------------------------------------------------------------- criterion 1
void criterion_oracle_equals_closed_form() {
    std::string first_bad;
    int cells = 0;
    bool ok = true;
    for (Int k = 1; k <= 4; ++k)
        for (int n = 2; n <= 5; ++n) {
            ++cells;
            ok &= family_matches_oracle(ModK{k, n}, first_bad);
        }
    for (Int l = 2; l <= 4; ++l)
        for (int n = 2; n <= 4; ++n) {
            ++cells;
            ok &= family_matches_oracle(LSeq{l, n}, first_bad);
        }
    for (Int s = 1; s <= 6; ++s)
        for (Int k = 1; k <= 4; ++k) {
            if (k * s - 1 < 1) continue;
            ++cells;
            ok &= family_matches_oracle(Dim2{s, k}, first_bad);
        }
    for (Int s = 1; s <= 4; ++s)
        for (Int k = 1; k <= 4; ++k)
            for (Int l = 1; l <= 4; ++l) {
                const Int s2 = k * s - 1;
                if (s2 < 1 || l * s2 - s < 1) continue;
                ++cells;
                ok &= family_matches_oracle(Dim3{s, k, l}, first_bad);
            }
    for (Int s1 = 1; s1 <= 3; ++s1)
        for (Int u1 = 1; u1 <= 3; ++u1)
            for (Int u2 = 1; u2 <= 3; ++u2)
                for (Int u3 = 1; u3 <= 3; ++u3) {
                    const auto which = dim4_case_for(s1, u1);
                    if (!which) continue;
                    try {
                        const Dim4 d{s1, u1, u2, u3, *which};
                        family_sequence(d);
                        ++cells;
                        ok &= family_matches_oracle(d, first_bad);
                    } catch (const std::invalid_argument&) {
                        // cell outside the family's domain
                    }
                }
    report(1, "closed-form bases equal the enumeration oracle on all family grids", ok,
           ok ? std::to_string(cells) + " cells" : first_bad);
}

// ---------------------------------------------------------------- criterion 2
void criterion_degree_one_reduction() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 6; ++n) {
        // Independent construction: for A = {a_1 < ... < a_r} contained in
        // {1,...,n-1}, v_A has zeros, then a_1,...,a_r, then a_r + 1 in the
        // last slot; v of the empty set is the last unit vector. One element
        // per subset: 2^{n-1} in total.
        std::vector<LatticePoint> expected;
        for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
            std::vector<Int> vals;
            for (int bit = 0; bit < n - 1; ++bit)
                if (mask & (1ul << bit)) vals.push_back(Int(bit + 1));
            LatticePoint v(static_cast<size_t>(n), Int(0));
            for (size_t i = 0; i < vals.size(); ++i)
                v[static_cast<size_t>(n) - 1 - vals.size() + i] = vals[i];
            v.back() = vals.empty() ? Int(1) : vals.back() + 1;
            expected.push_back(std::move(v));
        }
        std::sort(expected.begin(), expected.end());
        const auto via_modk = basis_modk(1, n).elements;
        const auto via_lseq = basis_lseq(2, n).elements;
        if (via_modk != expected || via_lseq != expected) {
            ok = false;
            if (detail.empty()) detail = "basis mismatch at n=" + std::to_string(n);
        }
        if (expected.size() != (1ul << (n - 1))) {
            ok = false;
            if (detail.empty()) detail = "duplicate v_A at n=" + std::to_string(n);
        }
        for (const auto& p : via_modk) {
            if (degree_last_diff(p) != 1) {
                ok = false;
                if (detail.empty())
                    detail = "degree != 1 at n=" + std::to_string(n) + " " + testutil::pt(p);
            }
        }
    }
    report(2, "k=1 and l=2 bases coincide with the 2^(n-1) degree-one elements (n=2..6)", ok,
           detail);
}

// ---------------------------------------------------------------- criterion 3
struct MismatchKey {
    std::string cell;
    Int formula, actual;
};

void criterion_cardinality_formulas() {
    bool ok = true;
    std::string detail;
    const auto note_bad = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };

    // modk and lseq formulas: exact on their full grids.
    for (Int k = 1; k <= 4; ++k)
        for (int n = 2; n <= 6; ++n) {
            const auto pred = cardinality_formula(ModK{k, n});
            if (pred.value != Int(basis_modk(k, n).size()) ||
                pred.flag != CardinalityFlag::authoritative)
                note_bad("modk(k=" + k.str() + ",n=" + std::to_string(n) + ") formula off");
        }
    for (Int l = 2; l <= 4; ++l)
        for (int n = 2; n <= 5; ++n) {
            const auto pred = cardinality_formula(LSeq{l, n});
            if (pred.value != Int(basis_lseq(l, n).size()) ||
                pred.flag != CardinalityFlag::authoritative)
                note_bad("lseq(l=" + l.str() + ",n=" + std::to_string(n) + ") formula off");
        }
    for (Int s = 1; s <= 6; ++s)
        for (Int k = 1; k <= 4; ++k) {
            if (k * s - 1 < 1) continue;
            const auto pred = cardinality_formula(Dim2{s, k});
            if (pred.value != Int(basis_gorenstein_dim2(s, k).size()))
                note_bad("dim2(s=" + s.str() + ",k=" + k.str() + ") formula off");
        }

    // dim3 and dim4: the construction count is authoritative (criterion 1
    // ties it to the oracle); the corollary formulas disagree on an exactly
    // known set of cells, which the flags must expose without false alarms.
    std::set<std::string> observed;
    for (Int s = 1; s <= 4; ++s)
        for (Int k = 1; k <= 4; ++k)
            for (Int l = 1; l <= 4; ++l) {
                const Int s2 = k * s - 1;
                if (s2 < 1 || l * s2 - s < 1) continue;
                const auto pred = cardinality_formula(Dim3{s, k, l});
                const Int actual = Int(basis_gorenstein_dim3(s, k, l).size());
                const std::string cell = "dim3(" + s.str() + "," + k.str() + "," + l.str() + ")";
                if (pred.value != actual) {
                    observed.insert(cell);
                    discrepancy_report.push_back(cell + ": formula " + pred.value.str() +
                                                 " vs actual " + actual.str() +
                                                 " [formula-under-review]");
                    if (pred.flag != CardinalityFlag::formula_under_review)
                        note_bad(cell + " mismatch not flagged");
                } else if (pred.flag != CardinalityFlag::authoritative) {
                    note_bad(cell + " flagged despite matching");
                }
            }
    const std::set<std::string> expected_dim3 = {
        "dim3(1,2,2)", "dim3(1,2,3)", "dim3(1,2,4)", "dim3(2,1,3)", "dim3(2,1,4)",
        "dim3(3,1,2)", "dim3(3,1,3)", "dim3(3,1,4)", "dim3(4,1,2)", "dim3(4,1,3)",
        "dim3(4,1,4)"};
    if (observed != expected_dim3) note_bad("dim3 discrepancy set drifted");

    std::set<std::string> observed4;
    std::set<std::string> d_cells, e_cells, d_mismatch, e_mismatch;
    for (Int s1 = 1; s1 <= 3; ++s1)
        for (Int u1 = 1; u1 <= 3; ++u1)
            for (Int u2 = 1; u2 <= 3; ++u2)
                for (Int u3 = 1; u3 <= 3; ++u3) {
                    const auto which = dim4_case_for(s1, u1);
                    if (!which) continue;
                    Dim4 d{s1, u1, u2, u3, *which};
                    Int actual;
                    try {
                        actual = Int(family_basis(d).size());
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    const auto pred = cardinality_formula(d);
                    const std::string cell = std::string("dim4") + dim4_case_letter(*which) +
                                             "(" + s1.str() + "," + u1.str() + "," + u2.str() +
                                             "," + u3.str() + ")";
                    if (*which == Dim4Case::d) d_cells.insert(cell);
                    if (*which == Dim4Case::e) e_cells.insert(cell);
                    if (pred.value != actual) {
                        observed4.insert(cell);
                        if (*which == Dim4Case::d) d_mismatch.insert(cell);
                        if (*which == Dim4Case::e) e_mismatch.insert(cell);
                        discrepancy_report.push_back(cell + ": formula " + pred.value.str() +
                                                     " vs actual " + actual.str() +
                                                     " [formula-under-review]");
                        if (pred.flag != CardinalityFlag::formula_under_review)
                            note_bad(cell + " mismatch not flagged");
                    } else if (pred.flag != CardinalityFlag::authoritative) {
                        note_bad(cell + " flagged despite matching");
                    }
                }
    // Cases a, b, c: the formulas hold except on exactly these small cells.
    std::set<std::string> observed_abc;
    for (const auto& cell : observed4)
        if (cell[4] == 'a' || cell[4] == 'b' || cell[4] == 'c') observed_abc.insert(cell);
    const std::set<std::string> expected_abc = {"dim4a(1,2,2,2)", "dim4a(1,2,2,3)",
                                                "dim4b(1,3,1,3)", "dim4c(2,1,3,2)",
                                                "dim4c(2,1,3,3)"};
    if (observed_abc != expected_abc) note_bad("dim4 a/b/c discrepancy set drifted");
    // Cases d, e: the corollary disagrees on every valid cell of this grid.
    if (d_cells.empty() || d_mismatch != d_cells) note_bad("case d expected to mismatch everywhere");
    if (e_cells.empty() || e_mismatch != e_cells) note_bad("case e expected to mismatch everywhere");

    // The spot value called out for the e case.
    const auto spot = cardinality_formula(Dim4{2, 2, 2, 2, Dim4Case::e});
    if (spot.value != 16 || Int(family_basis(Dim4{2, 2, 2, 2, Dim4Case::e}).size()) != 15)
        note_bad("(2,3,4,5) spot: expected formula 16 vs actual 15");

    report(3, "cardinality formulas exact for modk/lseq/dim2; dim3/dim4 disagreements pinned",
           ok, ok ? std::to_string(discrepancy_report.size()) + " flagged cells" : detail);
    for (const auto& line : discrepancy_report) std::cout << "       " << line << "\n";
}

// ---------------------------------------------------------------- criterion 4
void criterion_ehrhart() {
    bool ok = true;
    std::string detail;
    for (Int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 5; ++n) {
            const Sequence s = modk_sequence(k, n);
            for (Int t = 0; t <= 5; ++t) {
                if (ehrhart_modk(k, n, t) != count_P(s, t)) {
                    ok = false;
                    if (detail.empty())
                        detail = "k=" + k.str() + " n=" + std::to_string(n) + " t=" + t.str();
                }
            }
        }
    if (count_P(Sequence{1, 2}, 1) != 4) { ok = false; detail = "count_P((1,2),1)"; }
    if (count_P(Sequence{1, 2, 3}, 2) != 27) { ok = false; detail = "count_P((1,2,3),2)"; }
    if (count_P(Sequence{2, 3}, 1) != 7) { ok = false; detail = "count_P((2,3),1)"; }
    report(4, "closed-form dilate counts equal direct counts (k<=3, n<=5, t<=5) plus spots",
           ok, detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_gorenstein() {
    bool ok = true;
    std::string detail;
    const auto note_bad = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };
    std::vector<Sequence> u_generated;
    for (Int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 4; ++n) u_generated.push_back(modk_sequence(k, n));
    for (Int l = 2; l <= 3; ++l)
        for (int n = 2; n <= 4; ++n) u_generated.push_back(l_sequence(l, n));
    for (Int s = 1; s <= 4; ++s)
        for (Int k = 1; k <= 3; ++k)
            if (k * s - 1 >= 1) u_generated.push_back(Sequence({s, k * s - 1}));
    u_generated.push_back(Sequence{2, 3, 4, 5});
    u_generated.push_back(Sequence{3, 2, 1});
    u_generated.push_back(Sequence{2, 7, 19});
    u_generated.push_back(Sequence{1, 4, 11, 18});

    for (const Sequence& s : u_generated) {
        const auto u = detect_u_generated(s);
        if (!u) {
            note_bad(s.str() + " not detected as u-generated");
            continue;
        }
        try {
            const auto cert = gorenstein_point(s, *u);
            const auto shift = verify_gorenstein_shift(s, cert.c, 3 * s.back());
            if (!shift.passed || !shift.witnesses.empty())
                note_bad(s.str() + " shift check failed");
        } catch (const std::exception& e) {
            note_bad(s.str() + ": " + e.what());
        }
    }

    // Non-members: (3,4) has no certificate of any kind; (1,2,4) and (1,2,6)
    // have no u-certificate (their interior point comes from the general
    // recurrence only).
    if (detect_u_generated(Sequence{3, 4}) || gorenstein_classify(Sequence{3, 4}))
        note_bad("(3,4) classified as Gorenstein");
    if (detect_u_generated(Sequence{3, 7}) || gorenstein_classify(Sequence{3, 7}))
        note_bad("(3,7) classified as Gorenstein");
    for (const Sequence& s : {Sequence{1, 2, 4}, Sequence{1, 2, 6}}) {
        if (detect_u_generated(s)) note_bad(s.str() + " wrongly u-generated");
        const auto cert = gorenstein_classify(s);
        if (!cert || cert->u.has_value() ||
            cert->method != CertificateMethod::general_recurrence)
            note_bad(s.str() + " expected general-recurrence certificate");
    }

    report(5, "u-generated sequences pass the interior shift check at bound 3*s_n; "
              "non-members yield no u-certificate",
           ok, ok ? std::to_string(u_generated.size()) + " positive instances" : detail);
}

// ---------------------------------------------------------------- criterion 6
void criterion_properties() {
    bool ok = true;
    std::string detail;
    const auto note_bad = [&](const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    };
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> entry(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Int> entries;
        const int n = dim(rng);
        for (int i = 0; i < n; ++i) entries.emplace_back(entry(rng));
        const Sequence s(entries);
        const auto basis = hilbert_basis_oracle(s);

        const auto box = fundamental_box_points(s);
        for (const auto& p : basis.elements)
            if (!std::binary_search(box.begin(), box.end(), p))
                note_bad(s.str() + " basis escapes the fundamental box");

        if (!generates_up_to(s, basis.elements, 2 * s.back()).passed)
            note_bad(s.str() + " does not generate up to 2*s_n");

        for (const auto& removed : basis.elements) {
            std::vector<LatticePoint> rest;
            for (const auto& p : basis.elements)
                if (p != removed) rest.push_back(p);
            if (generates_up_to(s, rest, removed.back()).passed)
                note_bad(s.str() + " still generates without " + testutil::pt(removed));
        }

        for (Int m = 2; m <= 3; ++m) {
            std::vector<Int> scaled;
            for (const Int& v : s.entries()) scaled.push_back(v * m);
            if (hilbert_basis_oracle(Sequence(scaled)).elements != basis.elements)
                note_bad(s.str() + " basis changes under scaling by " + m.str());
        }
    }

    // CLI determinism: byte-identical reports for repeated identical runs.
    if (!std::getenv("LHC_CLI")) {
        note_bad("LHC_CLI not set; cannot check CLI determinism");
    } else {
        const auto a = testutil::run_cli("basis --seq 1,3,5,7 --format json");
        const auto b = testutil::run_cli("basis --seq 1,3,5,7 --format json");
        if (a.status != 0 || a.out.empty() || a.out != b.out)
            note_bad("CLI reports are not byte-identical across runs");
        const auto c = testutil::run_cli("sweep --family modk --k 1..3 --n 2..5 --format csv");
        const auto d = testutil::run_cli("sweep --family modk --k 1..3 --n 2..5 --format csv");
        if (c.status != 0 || c.out.empty() || c.out != d.out)
            note_bad("CLI sweep output is not byte-identical across runs");
    }

    report(6, "minimality, generation, confinement, scaling invariance, CLI determinism", ok,
           detail);
}

}  // namespace

int main() {
    criterion_oracle_equals_closed_form();
    criterion_degree_one_reduction();
    criterion_cardinality_formulas();
    criterion_ehrhart();
    criterion_gorenstein();
    criterion_properties();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
