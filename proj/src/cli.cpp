#include "qmetro/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmetro/analysis.hpp"
#include "qmetro/classical_rm.hpp"
#include "qmetro/constructors.hpp"
#include "qmetro/metrology.hpp"
#include "qmetro/oracle.hpp"
#include "qmetro/parallel.hpp"
#include "qmetro/stabilizer_code.hpp"

namespace qmetro::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for bad arguments and unreadable inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

Json rational(const Rational& r) { return r.to_string(); }

StabilizerCode load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open code file '" + path + "'");
    }
    return read_code(in);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct FamilyArgs {
    std::string family;
    std::string lx, m, nr;
    std::size_t k = 3;
    std::string inner;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a, bool ranges) {
    const std::string suffix = ranges ? " (a or a..b)" : "";
    cmd->add_option("--family", a.family, "thin-surface, qrm1, shor, generalized-shor or concatenated")->required();
    cmd->add_option("--lx", a.lx, "thin surface width" + suffix);
    cmd->add_option("--m", a.m, "Reed-Muller order m" + suffix);
    cmd->add_option("--nr", a.nr, "repetition length" + suffix);
    cmd->add_option("--k", a.k, "generalized Shor block count")->capture_default_str();
    cmd->add_option("--inner", a.inner, "concatenated: inner code file (default: phase-flip code)");
}

Family family_or_usage(const std::string& name) {
    try {
        return parse_family(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// The size parameter each family is swept over.
const std::string& size_arg(Family f, const FamilyArgs& a, std::string& flag) {
    switch (f) {
        case Family::ThinSurface: flag = "--lx"; return a.lx;
        case Family::QRM1: flag = "--m"; return a.m;
        default: flag = "--nr"; return a.nr;
    }
}

FamilySpec make_spec(Family f, const FamilyArgs& a, std::size_t size) {
    FamilySpec spec;
    spec.family = f;
    spec.lx = spec.m = spec.nr = size;
    spec.k = a.k;
    if (f == Family::Concatenated && !a.inner.empty()) {
        spec.inner = std::make_shared<const StabilizerCode>(load(a.inner));
    }
    return spec;
}

StabilizerCode build(const FamilySpec& spec) {
    try {
        return construct(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::size_t parse_size(const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw UsageError("invalid integer '" + s + "'");
    }
    return v;
}

Json census_json(const StabilizerCode& code, const LogicalCensus& c) {
    Json j;
    j["code"] = code.name();
    j["n"] = c.n;
    j["k"] = c.k;
    j["ell"] = c.ell;
    j["stabilizer"] = c.stabilizer;
    j["negative_stabilizer"] = c.negative_stabilizer;
    j["anticommuting"] = c.anticommuting;
    j["signs_consistent"] = c.signs_consistent();
    j["degrees"] = c.degrees;
    j["samples"] = c.samples;
    return j;
}

Json qfi_json(const StabilizerCode& code, const QfiReport& r) {
    Json j;
    j["code"] = code.name();
    j["n"] = r.n;
    j["k"] = r.k;
    j["ell"] = r.ell;
    j["delta_g_eff"] = big(r.delta_g_eff);
    j["qfi_coeff"] = big(r.qfi_coeff);
    j["noiseless_delta_g"] = big(r.noiseless_delta_g);
    j["noiseless_coeff"] = big(r.noiseless_coeff);
    j["ghz_coeff"] = big(r.ghz_coeff);
    if (r.optimal) {
        j["optimal"] = {{"value", rational(r.optimal->value)},
                        {"beta_star", rational(r.optimal->beta_star)},
                        {"lower", rational(r.optimal->lower)},
                        {"upper", rational(r.optimal->upper)}};
    } else {
        j["optimal"] = nullptr;
    }
    if (r.closed_form) {
        j["closed_form"] = {{"family", family_name(r.closed_form->family)},
                            {"formula", r.closed_form->formula},
                            {"expected", rational(r.closed_form->expected)},
                            {"matches", r.closed_form->matches},
                            {"flags", r.closed_form->flags}};
    } else {
        j["closed_form"] = nullptr;
    }
    return j;
}

Json analyze_json(const StabilizerCode& code, const NoGoReport& r, const IntersectionCheck& ix, std::size_t k0) {
    Json j;
    j["code"] = code.name();
    j["n"] = r.n;
    j["w"] = r.w;
    j["ell"] = r.ell;
    j["bound_ldpc"] = rational(r.ldpc.bound);
    j["ldpc_margin"] = rational(r.ldpc.margin);
    j["ldpc_pass"] = r.ldpc.passed;
    j["has_zz_stabilizer"] = r.zz.witness.has_value();
    if (r.zz.witness) {
        j["zz_witness"] = {r.zz.witness->first, r.zz.witness->second};
    } else {
        j["zz_witness"] = nullptr;
    }
    j["bound_zz"] = rational(r.zz.bound);
    j["zz_pass"] = r.zz.passed;
    j["zz_vacuous"] = r.zz.vacuous;
    j["zz_equality"] = r.zz.equality;
    j["chains"] = r.chains;
    j["chain_max"] = r.chain_max;
    j["chain_fraction"] = r.chain_fraction;
    j["intersection"] = {{"k0", k0},
                         {"status", to_string(ix.status)},
                         {"bound", big(ix.bound)},
                         {"blocking", ix.blocking}};
    return j;
}

std::string csv_rational(const std::optional<Rational>& r) { return r ? r->to_string() : ""; }

int dispatch(CLI::App& app, std::ostream& out, std::ostream& err, const std::vector<std::string>& args) {
    (void)err;
    std::optional<int> threads;
    app.add_option("--threads", threads, "worker cap (fallback: QMETRO_THREADS)")->check(CLI::PositiveNumber);
    app.require_subcommand(1);
    app.fallthrough();

    // construct
    FamilyArgs cons;
    std::string cons_out;
    auto* construct_cmd = app.add_subcommand("construct", "build a family instance and write its code file");
    add_family_options(construct_cmd, cons, false);
    construct_cmd->add_option("-o,--output", cons_out, "output file (default stdout)");

    // count / qfi
    std::string code_path;
    std::size_t order = 3;
    std::size_t samples = 16;
    auto* count_cmd = app.add_subcommand("count", "census of Z-strings of order k");
    count_cmd->add_option("code", code_path, "code file")->required();
    count_cmd->add_option("--k", order, "interaction order")->capture_default_str();
    count_cmd->add_option("--samples", samples, "logical supports to list")->capture_default_str();
    auto* qfi_cmd = app.add_subcommand("qfi", "QFI coefficients and baselines");
    qfi_cmd->add_option("code", code_path, "code file")->required();
    qfi_cmd->add_option("--k", order, "interaction order")->capture_default_str();

    // analyze
    std::size_t k0 = 1;
    auto* analyze_cmd = app.add_subcommand("analyze", "no-go bound checks");
    analyze_cmd->add_option("code", code_path, "code file")->required();
    analyze_cmd->add_option("--k0", k0, "intersection check parameter")->capture_default_str();

    // oracle
    KlOptions kl;
    auto* oracle_cmd = app.add_subcommand("oracle", "statevector cross-check (n <= 15)");
    oracle_cmd->add_option("code", code_path, "code file")->required();
    oracle_cmd->add_option("--k", order, "interaction order")->capture_default_str();
    oracle_cmd->add_option("--max-weight", kl.max_weight, "error weight for the KL scan")->capture_default_str();
    oracle_cmd->add_option("--letters", kl.letters, "error letters")->capture_default_str();

    // sweep
    FamilyArgs sweep;
    std::optional<std::size_t> sweep_order;
    std::string csv_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "census and bounds over a size range, as CSV");
    add_family_options(sweep_cmd, sweep, true);
    sweep_cmd->add_option("--order", sweep_order, "interaction order (default 3, or k for generalized-shor)");
    sweep_cmd->add_option("--csv", csv_path, "output file (default stdout)");

    // optimal-bound
    std::string n_range;
    auto* opt_cmd = app.add_subcommand("optimal-bound", "optimal 2-local-corrected gap for the ZZZ generator");
    opt_cmd->add_option("--n", n_range, "n or a..b")->required();
    std::size_t n_step = 1;
    opt_cmd->add_option("--step", n_step, "stride through the range")->capture_default_str()->check(
        CLI::PositiveNumber);

    // rm-enumerator
    std::size_t rm_r = 1, rm_m = 3;
    bool shortened = false, dual_flag = false;
    std::string format = "csv";
    auto* rm_cmd = app.add_subcommand("rm-enumerator", "Reed-Muller weight enumerators");
    rm_cmd->add_option("--r", rm_r, "order r")->capture_default_str();
    rm_cmd->add_option("--m", rm_m, "m")->capture_default_str();
    rm_cmd->add_flag("--shortened", shortened, "drop the first coordinate");
    rm_cmd->add_flag("--dual", dual_flag, "report the dual enumerator via MacWilliams");
    rm_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (threads) {
        set_thread_count(*threads);
    } else if (auto env = threads_from_environment()) {
        set_thread_count(*env);
    }

    if (construct_cmd->parsed()) {
        const Family f = family_or_usage(cons.family);
        std::string flag;
        const std::string& size = size_arg(f, cons, flag);
        if (size.empty()) throw UsageError("construct --family " + cons.family + " needs " + flag);
        const StabilizerCode code = build(make_spec(f, cons, parse_size(size)));
        if (cons_out.empty()) {
            write_code(out, code);
        } else {
            std::ofstream file(cons_out);
            if (!file) throw UsageError("cannot write '" + cons_out + "'");
            write_code(file, code);
        }
        return kExitOk;
    }
    if (count_cmd->parsed()) {
        const StabilizerCode code = load(code_path);
        if (order < 1 || order > code.num_qubits()) throw UsageError("--k out of range");
        emit(out, census_json(code, census(code, order, {samples})));
        return kExitOk;
    }
    if (qfi_cmd->parsed()) {
        const StabilizerCode code = load(code_path);
        if (order < 1 || order > code.num_qubits()) throw UsageError("--k out of range");
        emit(out, qfi_json(code, qfi_report(code, order)));
        return kExitOk;
    }
    if (analyze_cmd->parsed()) {
        const StabilizerCode code = load(code_path);
        if (code.num_qubits() < 3) throw UsageError("analyze needs at least 3 qubits");
        if (k0 < 1 || k0 >= 3) throw UsageError("--k0 must be 1 or 2");
        const LogicalCensus c = census(code, 3);
        emit(out, analyze_json(code, no_go_report(code, c), intersection_bound_check(code, c, k0), k0));
        return kExitOk;
    }
    if (oracle_cmd->parsed()) {
        const StabilizerCode code = load(code_path);
        if (code.num_qubits() > kMaxOracleQubits) {
            throw UsageError("oracle supports at most " + std::to_string(kMaxOracleQubits) + " qubits");
        }
        if (order < 1 || order > code.num_qubits()) throw UsageError("--k out of range");
        const CodespaceBasis basis = codespace(code);
        const GeffMatrix m = g_eff_matrix(basis, order);
        const LogicalCensus c = census(code, order);
        const KlReport r = knill_laflamme_check(code, basis, kl);
        Json j;
        j["code"] = code.name();
        j["n"] = code.num_qubits();
        j["k"] = order;
        j["delta_g_eff"] = m.gap;
        j["two_ell"] = 2 * c.ell;
        j["gap_matches"] = std::abs(m.gap - 2.0 * static_cast<double>(c.ell)) <= kGapTolerance;
        j["hermiticity_residual"] = m.hermiticity_residual;
        j["kl_pass"] = r.passed;
        j["worst_residual"] = r.worst_residual;
        j["worst_operator"] = r.worst_operator;
        j["operators_checked"] = r.operators_checked;
        emit(out, j);
        return kExitOk;
    }
    if (sweep_cmd->parsed()) {
        const Family f = family_or_usage(sweep.family);
        std::string flag;
        const std::string& range = size_arg(f, sweep, flag);
        if (range.empty()) throw UsageError("sweep --family " + sweep.family + " needs " + flag);
        const auto [lo, hi] = parse_range(range);
        const std::size_t k = sweep_order.value_or(f == Family::GeneralizedShor ? sweep.k : 3);
        std::ostringstream csv;
        csv << "family,n,ell,qfi_coeff,noiseless_coeff,ghz_coeff,opt_lower,opt_upper,w_max,has_zz,chain_max\n";
        for (std::size_t s = lo; s <= hi; ++s) {
            const StabilizerCode code = build(make_spec(f, sweep, s));
            if (k < 1 || k > code.num_qubits()) throw UsageError("--order out of range");
            const LogicalCensus c = census(code, k);
            const QfiReport q = qfi_report(code, c, f);
            std::optional<Rational> lower, upper;
            if (q.optimal) {
                lower = q.optimal->lower * q.optimal->lower;
                upper = q.optimal->upper * q.optimal->upper;
            }
            const auto chains = find_repetition_chains(code);
            csv << code.name() << ',' << q.n << ',' << q.ell << ',' << q.qfi_coeff << ',' << q.noiseless_coeff << ','
                << q.ghz_coeff << ',' << csv_rational(lower) << ',' << csv_rational(upper) << ','
                << code.max_generator_weight() << ',' << (has_z2_stabilizer(code) ? 1 : 0) << ','
                << (chains.empty() ? 0 : chains.front().size()) << '\n';
        }
        if (csv_path.empty()) {
            out << csv.str();
        } else {
            std::ofstream file(csv_path);
            if (!file) throw UsageError("cannot write '" + csv_path + "'");
            file << csv.str();
        }
        return kExitOk;
    }
    if (opt_cmd->parsed()) {
        const auto [lo, hi] = parse_range(n_range);
        if (lo < 3) throw UsageError("--n must be at least 3");
        out << "n,value,beta_star,lower,upper,within\n";
        for (std::size_t n = lo; n <= hi; n += n_step) {
            const OptimalBound b = optimal_delta_g(n);
            out << n << ',' << b.value.to_string() << ',' << b.beta_star.to_string() << ',' << b.lower.to_string()
                << ',' << b.upper.to_string() << ',' << (b.lower <= b.value && b.value <= b.upper ? 1 : 0) << '\n';
        }
        return kExitOk;
    }
    if (rm_cmd->parsed()) {
        ClassicalCode code = [&] {
            try {
                return rm_generator(rm_r, rm_m);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        if (shortened) code = shorten(code);
        WeightEnumerator w;
        try {
            w = weight_enumerator(code);
        } catch (const DimensionTooLarge& e) {
            throw UsageError(e.what());
        }
        if (dual_flag) w = macwilliams(w, w.total());
        const std::size_t length = code.length;
        const std::size_t dimension = dual_flag ? length - code.dimension : code.dimension;
        if (format == "json") {
            Json j;
            j["r"] = rm_r;
            j["m"] = rm_m;
            j["shortened"] = shortened;
            j["dual"] = dual_flag;
            j["length"] = length;
            j["dimension"] = dimension;
            Json coeffs = Json::array();
            for (const auto& c : w.coefficients) coeffs.push_back(big(c));
            j["coefficients"] = coeffs;
            emit(out, j);
        } else {
            out << "weight,count\n";
            for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
                out << i << ',' << w.coefficients[i] << '\n';
            }
        }
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t v = parse_size(text);
        return {v, v};
    }
    const std::size_t lo = parse_size(text.substr(0, dots));
    const std::size_t hi = parse_size(text.substr(dots + 2));
    if (lo > hi) {
        throw UsageError("empty range '" + text + "'");
    }
    return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z-string logical census and metrology bounds for stabilizer codes", "qmetro"};
    try {
        return dispatch(app, out, err, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CodeFileError& e) {
        err << "error: malformed code file: " << e.what() << '\n';
        return kExitValidation;
    } catch (const CodeValidationError& e) {
        err << "error: invalid code: " << e.what() << '\n';
        return kExitValidation;
    } catch (const CodespaceDimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace qmetro::cli
