// Command line front end: closed-form and oracle Hilbert bases, verification,
// lattice-point counts, Gorenstein classification, and parameter sweeps.
// All output is deterministic: fixed key order, canonical element order, no
// timestamps. Exit codes: 0 success / verification pass, 1 verification
// failure, 2 usage or budget error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lhc/lhc.hpp"

namespace {

using lhc::Int;

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
        out.emplace_back(item);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

struct Range {
    Int lo, hi;
};

// "A..B" or a single "A".
Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        Int v(text);
        return {v, v};
    }
    return {Int(text.substr(0, pos)), Int(text.substr(pos + 2))};
}

std::vector<Range> parse_range_list(const std::string& text) {
    std::vector<Range> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_range(item));
    if (out.empty()) throw std::invalid_argument("empty range list");
    return out;
}

struct Options {
    std::string seq_text;
    std::string family;
    std::string k_text, l_text, s_text, s1_text, u_text, n_text;
    std::string format = "plain";
    std::string out_path;
    std::string bound_text;
    std::string max_volume_text = "1000000";
    std::string polytope = "P";
    std::string t_text = "1";
};

lhc::Sequence resolve_sequence(const Options& opt) {
    if (!opt.seq_text.empty()) return lhc::make_sequence(parse_int_list(opt.seq_text));
    if (opt.family.empty())
        throw CLI::ValidationError("either --seq or --family is required");
    const auto need = [](const std::string& v, const char* name) -> Int {
        if (v.empty())
            throw CLI::ValidationError(std::string("missing required option ") + name);
        return Int(v);
    };
    if (opt.family == "modk")
        return lhc::modk_sequence(need(opt.k_text, "--k"),
                                  static_cast<int>(need(opt.n_text, "--n")));
    if (opt.family == "lseq")
        return lhc::l_sequence(need(opt.l_text, "--l"),
                               static_cast<int>(need(opt.n_text, "--n")));
    if (opt.family == "dim2") {
        const Int s = need(opt.s_text, "--s"), k = need(opt.k_text, "--k");
        return lhc::Sequence({s, k * s - 1});
    }
    if (opt.family == "dim3") {
        const Int s = need(opt.s_text, "--s"), k = need(opt.k_text, "--k"),
                  l = need(opt.l_text, "--l");
        const Int s2 = k * s - 1;
        return lhc::Sequence({s, s2, l * s2 - s});
    }
    if (opt.family == "dim4") {
        const Int s1 = need(opt.s1_text, "--s1");
        const auto u = parse_int_list(opt.u_text.empty()
                                          ? throw CLI::ValidationError("missing --u")
                                          : opt.u_text);
        if (u.size() != 3) throw CLI::ValidationError("--u needs exactly three entries");
        return lhc::sequence_from_u(s1, u);
    }
    throw CLI::ValidationError("unknown family: " + opt.family);
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
    f << text;
}

std::optional<std::vector<Int>> last_diff_degrees(const lhc::HilbertBasis& basis) {
    if (basis.sequence.n() < 2) return std::nullopt;
    std::vector<Int> out;
    out.reserve(basis.elements.size());
    for (const auto& p : basis.elements) out.push_back(lhc::degree_last_diff(p));
    return out;
}

lhc::Report basis_report(const lhc::Sequence& s, const lhc::HilbertBasis& basis,
                         std::optional<std::string> family) {
    lhc::Report r;
    r.sequence = s.entries();
    r.family = std::move(family);
    r.method = lhc::basis_method_name(basis.method);
    r.basis = basis.elements;
    r.last_diff_degrees = last_diff_degrees(basis);
    return r;
}

std::string render(const Options& opt, const lhc::Report& r) {
    if (opt.format == "json") return lhc::to_json(r);
    if (opt.format == "plain") return lhc::to_plain(r);
    throw CLI::ValidationError("format '" + opt.format + "' is not valid here");
}

int cmd_basis(const Options& opt, bool oracle_only) {
    const lhc::Sequence s = resolve_sequence(opt);
    const Int max_volume(opt.max_volume_text);
    lhc::Report r;
    if (oracle_only) {
        r = basis_report(s, lhc::hilbert_basis_oracle(s, max_volume), std::nullopt);
    } else if (auto cf = lhc::closed_form_for(s)) {
        r = basis_report(s, cf->second, lhc::family_name(cf->first));
    } else {
        std::cerr << "note: no closed form for " << s.str()
                  << "; falling back to enumeration\n";
        r = basis_report(s, lhc::hilbert_basis_oracle(s, max_volume), std::nullopt);
    }
    write_output(opt, render(opt, r));
    return 0;
}

int cmd_verify(const Options& opt) {
    const lhc::Sequence s = resolve_sequence(opt);
    std::optional<Int> bound;
    if (!opt.bound_text.empty()) bound = Int(opt.bound_text);
    const lhc::VerifySummary vs = lhc::run_verification(s, bound, Int(opt.max_volume_text));
    lhc::Report r = basis_report(s, vs.basis,
                                 vs.family ? std::optional<std::string>(lhc::family_name(
                                                 *vs.family))
                                           : std::nullopt);
    r.verification = lhc::VerificationSection{vs.passed, vs.witnesses, vs.notes};
    write_output(opt, render(opt, r));
    return vs.passed ? 0 : 1;
}

int cmd_ehrhart(const Options& opt) {
    const lhc::Sequence s = resolve_sequence(opt);
    const Int t(opt.t_text);
    Int count;
    if (opt.polytope == "P")
        count = lhc::count_P(s, t);
    else if (opt.polytope == "R")
        count = lhc::count_R(s, t);
    else
        throw CLI::ValidationError("--polytope must be P or R");
    std::string text;
    if (opt.format == "plain") {
        text = count.str() + "\n";
    } else if (opt.format == "json") {
        std::ostringstream os;
        os << "{\"sequence\": [";
        for (int i = 0; i < s.n(); ++i) os << (i ? "," : "") << s[i];
        os << "], \"polytope\": \"" << opt.polytope << "\", \"t\": " << t
           << ", \"count\": " << count << "}\n";
        text = os.str();
    } else {
        throw CLI::ValidationError("format '" + opt.format + "' is not valid here");
    }
    write_output(opt, text);
    return 0;
}

int cmd_gorenstein(const Options& opt) {
    const lhc::Sequence s = resolve_sequence(opt);
    const Int bound = opt.bound_text.empty() ? Int(3) * s.back() : Int(opt.bound_text);
    const auto u = lhc::detect_u_generated(s);
    const auto cert = lhc::gorenstein_classify(s);

    lhc::Report r;
    r.sequence = s.entries();
    r.family = std::nullopt;
    r.method = "oracle";
    lhc::GorensteinSection g;
    if (u) g.u = u->entries;
    bool passed = true;
    std::vector<std::string> notes;
    std::vector<lhc::LatticePoint> witnesses;
    if (cert) {
        g.c = cert->c;
        g.method = lhc::certificate_method_name(cert->method);
        if (bound > 0) {
            const auto shift = lhc::verify_gorenstein_shift(s, cert->c, bound);
            g.verified_bound = bound;
            passed = shift.passed;
            if (shift.passed) {
                notes.push_back("shift property holds for all " +
                                std::to_string(shift.checks_run) +
                                " checks up to bound " + bound.str());
            } else {
                notes.push_back("shift property FAILED");
                witnesses = shift.witnesses;
            }
        } else {
            notes.push_back("shift check skipped (bound 0)");
        }
    } else {
        notes.push_back("no certificate: sequence is not recognized as Gorenstein");
    }
    r.gorenstein = std::move(g);
    r.verification = lhc::VerificationSection{passed, std::move(witnesses), std::move(notes)};
    write_output(opt, render(opt, r));
    return passed ? 0 : 1;
}

void append_row(std::vector<lhc::SweepRow>& rows, const lhc::FamilyDescriptor& f,
                const std::string& family_label, std::string params) {
    const lhc::HilbertBasis basis = lhc::family_basis(f);
    const lhc::CardinalityPrediction pred = lhc::cardinality_formula(f);
    lhc::SweepRow row;
    row.family = family_label;
    row.params = std::move(params);
    row.cardinality = Int(basis.size());
    row.formula = pred.value;
    row.flag = lhc::flag_name(pred.flag);
    row.match = (row.cardinality == row.formula);
    rows.push_back(std::move(row));
}

int cmd_sweep(const Options& opt) {
    if (opt.family.empty()) throw CLI::ValidationError("sweep requires --family");
    std::vector<lhc::SweepRow> rows;
    const auto range_of = [](const std::string& text, const char* name) {
        if (text.empty())
            throw CLI::ValidationError(std::string("sweep requires ") + name);
        return parse_range(text);
    };
    if (opt.family == "modk" || opt.family == "lseq") {
        const Range pr = range_of(opt.family == "modk" ? opt.k_text : opt.l_text,
                                  opt.family == "modk" ? "--k" : "--l");
        const Range nr = range_of(opt.n_text, "--n");
        for (Int p = pr.lo; p <= pr.hi; ++p) {
            for (Int n = nr.lo; n <= nr.hi; ++n) {
                const int ni = static_cast<int>(n);
                std::ostringstream ps;
                try {
                    if (opt.family == "modk") {
                        ps << "k=" << p << ";n=" << ni;
                        append_row(rows, lhc::ModK{p, ni}, opt.family, ps.str());
                    } else {
                        ps << "l=" << p << ";n=" << ni;
                        append_row(rows, lhc::LSeq{p, ni}, opt.family, ps.str());
                    }
                } catch (const std::invalid_argument&) {
                    // invalid cell (parameters outside the family's domain)
                }
            }
        }
    } else if (opt.family == "dim2") {
        const Range sr = range_of(opt.s_text, "--s"), kr = range_of(opt.k_text, "--k");
        for (Int s = sr.lo; s <= sr.hi; ++s)
            for (Int k = kr.lo; k <= kr.hi; ++k) {
                std::ostringstream ps;
                ps << "s=" << s << ";k=" << k;
                try {
                    append_row(rows, lhc::Dim2{s, k}, opt.family, ps.str());
                } catch (const std::invalid_argument&) {
                }
            }
    } else if (opt.family == "dim3") {
        const Range sr = range_of(opt.s_text, "--s"), kr = range_of(opt.k_text, "--k"),
                    lr = range_of(opt.l_text, "--l");
        for (Int s = sr.lo; s <= sr.hi; ++s)
            for (Int k = kr.lo; k <= kr.hi; ++k)
                for (Int l = lr.lo; l <= lr.hi; ++l) {
                    std::ostringstream ps;
                    ps << "s=" << s << ";k=" << k << ";l=" << l;
                    try {
                        append_row(rows, lhc::Dim3{s, k, l}, opt.family, ps.str());
                    } catch (const std::invalid_argument&) {
                    }
                }
    } else if (opt.family == "dim4") {
        const Range sr = range_of(opt.s1_text, "--s1");
        const auto ur = parse_range_list(
            opt.u_text.empty() ? throw CLI::ValidationError("sweep requires --u") : opt.u_text);
        if (ur.size() != 3) throw CLI::ValidationError("--u needs exactly three entries");
        for (Int s1 = sr.lo; s1 <= sr.hi; ++s1)
            for (Int u1 = ur[0].lo; u1 <= ur[0].hi; ++u1)
                for (Int u2 = ur[1].lo; u2 <= ur[1].hi; ++u2)
                    for (Int u3 = ur[2].lo; u3 <= ur[2].hi; ++u3) {
                        const auto which = lhc::dim4_case_for(s1, u1);
                        if (!which) continue;
                        std::ostringstream ps;
                        ps << "s1=" << s1 << ";u1=" << u1 << ";u2=" << u2 << ";u3=" << u3;
                        try {
                            append_row(rows, lhc::Dim4{s1, u1, u2, u3, *which}, opt.family, ps.str());
                        } catch (const std::invalid_argument&) {
                        }
                    }
    } else {
        throw CLI::ValidationError("unknown family: " + opt.family);
    }
    std::string text;
    if (opt.format == "json")
        text = lhc::sweep_json(rows);
    else
        text = lhc::sweep_csv(rows);  // csv and plain coincide for sweep
    write_output(opt, text);
    return 0;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_seq = true) {
    if (with_seq) cmd->add_option("--seq", opt.seq_text, "comma-separated sequence entries");
    cmd->add_option("--family", opt.family, "family name: modk|lseq|dim2|dim3|dim4");
    cmd->add_option("--k", opt.k_text, "family parameter k");
    cmd->add_option("--l", opt.l_text, "family parameter l");
    cmd->add_option("--s", opt.s_text, "family parameter s");
    cmd->add_option("--s1", opt.s1_text, "leading entry for dim4");
    cmd->add_option("--u", opt.u_text, "recurrence vector, comma-separated");
    cmd->add_option("--n", opt.n_text, "sequence length");
    cmd->add_option("--format", opt.format, "output format: json|csv|plain");
    cmd->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--max-volume", opt.max_volume_text, "enumeration budget");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert bases of lecture hall cones"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* basis = app.add_subcommand("basis", "closed-form Hilbert basis (oracle fallback)");
    add_common_options(basis, opt);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force Hilbert basis");
    add_common_options(oracle, opt);

    CLI::App* verify = app.add_subcommand("verify", "closed form vs oracle, generation, minimality");
    add_common_options(verify, opt);
    verify->add_option("--bound", opt.bound_text, "generation check bound (default 2*s_n)");

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "lattice-point count of a dilate");
    add_common_options(ehrhart, opt);
    ehrhart->add_option("--polytope", opt.polytope, "P (integral) or R (rational)");
    ehrhart->add_option("--t", opt.t_text, "dilation factor");

    CLI::App* gorenstein = app.add_subcommand("gorenstein", "Gorenstein classification");
    add_common_options(gorenstein, opt);
    gorenstein->add_option("--bound", opt.bound_text,
                           "shift check bound (default 3*s_n, 0 skips)");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter grid of cardinalities");
    add_common_options(sweep, opt, /*with_seq=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(basis)) return cmd_basis(opt, /*oracle_only=*/false);
        if (app.got_subcommand(oracle)) return cmd_basis(opt, /*oracle_only=*/true);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(ehrhart)) return cmd_ehrhart(opt);
        if (app.got_subcommand(gorenstein)) return cmd_gorenstein(opt);
        if (app.got_subcommand(sweep)) return cmd_sweep(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lhc::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
