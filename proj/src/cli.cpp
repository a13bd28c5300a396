#include "hooklens/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hooklens/equidistribution.hpp"
#include "hooklens/hook_arcs.hpp"
#include "hooklens/hook_series.hpp"
#include "hooklens/inequalities.hpp"
#include "hooklens/parallel.hpp"
#include "hooklens/partition_gf.hpp"
#include "hooklens/partition_oracle.hpp"
#include "hooklens/wright.hpp"

namespace hooklens::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kComplexFilterTolerance = 1e-9;
constexpr double kHardyRamanujanConstant = 1.5;  // |estimate/p(n) − 1| ≤ C n^{−1/2}
constexpr int kOracleCeiling = 60;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json complex_json(std::complex<double> z)
{
    return json::array({z.real(), z.imag()});
}

int effective_threads(const RunConfig& cfg)
{
    if (cfg.threads > 0) {
        return cfg.threads;
    }
    return default_threads();
}

// Writes to a file or to `out` for "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& out)
    {
        if (path == "-") {
            stream_ = &out;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw std::runtime_error("cannot open output file " + path);
            }
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

IntegerSequenceWindow sequence_for(const RunConfig& cfg, int top)
{
    IntegerSequenceWindow w;
    w.offset = 0;
    if (cfg.modulus == 1) {
        w.label = "p(n)";
        w.values = partition_numbers(top);
        return w;
    }
    SeriesOptions opts;
    opts.threads = effective_threads(cfg);
    const auto series = han_series(cfg.ell, top, opts);
    w.label = "h_" + std::to_string(cfg.ell) + "(" + std::to_string(cfg.residue) + "," +
              std::to_string(cfg.modulus) + ";n)";
    w.values = residue_filter_exact(series, cfg.modulus, cfg.residue, opts.threads);
    return w;
}

int run_verify_han(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    SeriesOptions opts;
    opts.threads = effective_threads(cfg);
    const auto series = han_series(cfg.ell, std::max(1, cfg.max_n), opts);
    std::vector<int> mismatches;
    for (int n = 0; n <= cfg.max_n; ++n) {
        if (!(series.coeffs[static_cast<std::size_t>(n)] == hook_count_poly_oracle(cfg.ell, n))) {
            mismatches.push_back(n);
        }
    }
    if (cfg.format == Format::json) {
        json j;
        j["command"] = "verify-han";
        j["ell"] = cfg.ell;
        j["max_n"] = cfg.max_n;
        j["mismatches"] = mismatches;
        j["ok"] = mismatches.empty();
        os << j.dump(2) << "\n";
    } else {
        HookSeries trimmed = series;
        trimmed.order = cfg.max_n;
        trimmed.coeffs.resize(static_cast<std::size_t>(cfg.max_n) + 1);
        write_series_table(os, trimmed);
    }
    for (int n : mismatches) {
        err << "verify-han: series differs from enumeration at n=" << n << "\n";
    }
    return mismatches.empty() ? kExitOk : kExitAssertion;
}

int run_equidist(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    SeriesOptions opts;
    opts.threads = effective_threads(cfg);
    const auto series = han_series(cfg.ell, cfg.order, opts);
    const auto table = equidistribution_error_table(series, cfg.modulus, cfg.max_n, opts.threads);

    // Σ_a h(a,b;n) = p(n) and the complex filter agrees with the exact one.
    const auto p = partition_numbers(cfg.max_n);
    bool complete = true;
    for (int n = 0; n <= cfg.max_n; ++n) {
        mpz_class sum = 0;
        for (int a = 0; a < cfg.modulus; ++a) {
            sum += table.rows[static_cast<std::size_t>(n * cfg.modulus + a)].exact;
        }
        complete = complete && sum == p[static_cast<std::size_t>(n)];
    }
    const int complex_top = std::min(cfg.max_n, 200);
    double complex_gap = 0.0;
    for (int a = 0; a < cfg.modulus; ++a) {
        const auto approx = residue_filter_complex(cfg.ell, cfg.modulus, a, complex_top);
        for (int n = 0; n <= complex_top; ++n) {
            const double exact = table.rows[static_cast<std::size_t>(n * cfg.modulus + a)].exact.get_d();
            complex_gap = std::max(complex_gap, std::abs(approx[static_cast<std::size_t>(n)] - exact) /
                                                    std::max(1.0, std::abs(exact)));
        }
    }
    const bool complex_ok = complex_gap <= kComplexFilterTolerance;

    if (cfg.format == Format::json) {
        json j;
        j["command"] = "equidist";
        j["ell"] = cfg.ell;
        j["modulus"] = cfg.modulus;
        j["max_n"] = cfg.max_n;
        j["slope"] = table.slope ? json(*table.slope) : json(nullptr);
        j["slope_range"] = json::array({table.slope_lo, cfg.max_n});
        j["tolerances"] = {{"complex_filter_relative", kComplexFilterTolerance}, {"analytic", cfg.tolerance}};
        j["filter_completeness"] = complete;
        j["complex_filter_max_gap"] = complex_gap;
        json rows = json::array();
        for (const auto& r : table.rows) {
            rows.push_back({{"n", r.n}, {"a", r.a}, {"exact", r.exact.get_str()}, {"main_term", r.main_term},
                            {"rel_error", r.rel_error}});
        }
        j["rows"] = std::move(rows);
        os << j.dump(2) << "\n";
    } else {
        write_equidistribution_csv(os, table);
    }
    if (!complete) {
        err << "equidist: residue classes do not sum to p(n)\n";
    }
    if (!complex_ok) {
        err << "equidist: complex filter deviates by " << complex_gap << "\n";
    }
    return (complete && complex_ok) ? kExitOk : kExitAssertion;
}

int run_asym(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    const auto params = partition_wright_params();
    const auto p = partition_numbers(cfg.max_n);
    const double pi = std::numbers::pi;

    std::vector<int> ns;
    for (int n = 10; n <= cfg.max_n; n += 10) {
        ns.push_back(n);
    }
    if (ns.empty() || ns.back() != cfg.max_n) {
        ns.push_back(cfg.max_n);
    }

    bool ok = true;
    json hr = json::array();
    std::ostringstream csv;
    csv << "n,p_n,estimate,rel_error,bound\n";
    double identity_gap = 0.0;
    for (int n : ns) {
        const double log_est = wright_log_estimate(params, n, 1);
        const double log_closed = -std::log(4.0 * std::sqrt(3.0) * n) + pi * std::sqrt(2.0 * n / 3.0);
        identity_gap = std::max(identity_gap, std::abs(std::expm1(log_est - log_closed)));
        // estimate / p(n) through logs so large n does not overflow.
        const mpz_class& pn = p[static_cast<std::size_t>(n)];
        long exp2 = 0;
        const double mant = mpz_get_d_2exp(&exp2, pn.get_mpz_t());
        const double log_p = std::log(mant) + exp2 * std::numbers::ln2;
        const double rel = std::abs(std::expm1(log_est - log_p));
        const double bound = kHardyRamanujanConstant / std::sqrt(double(n));
        if (n >= 50 && rel > bound) {
            ok = false;
            err << "asym: relative error " << rel << " above " << bound << " at n=" << n << "\n";
        }
        csv << n << ',' << pn.get_str() << ',' << fmt(std::exp(log_est)) << ',' << fmt(rel) << ',' << fmt(bound)
            << '\n';
        hr.push_back({{"n", n}, {"log_estimate", log_est}, {"rel_error", rel}, {"bound", bound}});
    }
    if (identity_gap > 1e-12) {
        ok = false;
        err << "asym: circle-method estimate deviates from the closed main term by " << identity_gap << "\n";
    }

    double major_gap = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double x = 0.05 * i;
        for (int k = -2; k <= 2; ++k) {
            const std::complex<double> z(x, x * k / 2.0);
            major_gap = std::max(major_gap, partition_gf_major_arc(z).relative_difference());
        }
    }
    if (major_gap > cfg.tolerance) {
        ok = false;
        err << "asym: modular transformation mismatch " << major_gap << "\n";
    }

    json em = json::array();
    for (std::complex<double> xi : {root_of_unity(1, 4), root_of_unity(1, 3), root_of_unity(2, 3)}) {
        const auto ex = euler_maclaurin_expansion(f_xi_function(xi, cfg.ell), mpq_class(1), 1);
        const std::complex<double> expected = -double(cfg.ell) * std::log(xi) / 2.0;
        const double gap = std::abs(double(cfg.ell) * ex.corrections[0] - expected);
        if (gap > cfg.tolerance) {
            ok = false;
            err << "asym: Euler-Maclaurin constant term off by " << gap << "\n";
        }
        em.push_back({{"xi", complex_json(xi)}, {"constant_term", complex_json(double(cfg.ell) * ex.corrections[0])},
                      {"gap", gap}});
    }

    json minor = json::array();
    for (double v : {0.05, 0.02, 0.01}) {
        double worst = -INFINITY;
        for (const auto& s : sample_minor_arc(1.0, v, 101)) {
            worst = std::max(worst, s.log_ratio());
        }
        minor.push_back({{"M", 1.0}, {"v", v}, {"max_log_ratio", worst}});
    }

    if (cfg.format == Format::json) {
        json j;
        j["command"] = "asym";
        j["max_n"] = cfg.max_n;
        j["tolerance"] = cfg.tolerance;
        j["hardy_ramanujan"] = std::move(hr);
        j["identity_gap"] = identity_gap;
        j["major_arc_max_relative_difference"] = major_gap;
        j["minor_arc_rate_M1"] = minor_arc_rate(1.0);
        j["minor_arc_samples"] = std::move(minor);
        j["euler_maclaurin_constant_terms"] = std::move(em);
        j["ok"] = ok;
        os << j.dump(2) << "\n";
    } else {
        os << csv.str();
    }
    return ok ? kExitOk : kExitAssertion;
}

int run_arcs(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    const auto rep = minor_arc_domination_report(cfg.modulus, cfg.ell);
    const bool ok = rep.all_negative && rep.max_closed_form_gap <= cfg.tolerance;
    if (cfg.format == Format::json) {
        json j;
        j["command"] = "arcs";
        j["modulus"] = rep.b;
        j["ell"] = rep.ell;
        j["tolerance"] = cfg.tolerance;
        json entries = json::array();
        for (const auto& e : rep.entries) {
            json x;
            x["k"] = e.k;
            x["xi"] = complex_json(e.integral.xi);
            x["integral"] = complex_json(e.integral.value);
            x["method"] = std::string(to_string(e.integral.method));
            x["closed_form"] = e.integral.closed_form ? complex_json(*e.integral.closed_form) : json(nullptr);
            x["closed_form_gap"] = e.integral.closed_form_gap();
            x["margin"] = e.margin;
            entries.push_back(std::move(x));
        }
        j["entries"] = std::move(entries);
        j["all_negative"] = rep.all_negative;
        j["max_closed_form_gap"] = rep.max_closed_form_gap;
        os << j.dump(2) << "\n";
    } else {
        os << "k,xi_re,xi_im,re,im,method,closed_form_gap,margin\n";
        for (const auto& e : rep.entries) {
            os << e.k << ',' << fmt(e.integral.xi.real()) << ',' << fmt(e.integral.xi.imag()) << ','
               << fmt(e.integral.value.real()) << ',' << fmt(e.integral.value.imag()) << ','
               << to_string(e.integral.method) << ',' << fmt(e.integral.closed_form_gap()) << ',' << fmt(e.margin)
               << '\n';
        }
    }
    if (!rep.all_negative) {
        err << "arcs: a root of unity has Re I >= 0\n";
    }
    if (rep.max_closed_form_gap > cfg.tolerance) {
        err << "arcs: quadrature and dilogarithm disagree by " << rep.max_closed_form_gap << "\n";
    }
    return ok ? kExitOk : kExitAssertion;
}

int run_ineq(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    const int threads = effective_threads(cfg);
    const int ceiling = cfg.max_n;
    const auto seq = sequence_for(cfg, ceiling + 2);
    const int lo = 2;

    std::vector<ScanResult> scans;
    scans.push_back(scan_predicate("turan_d2", [&](int n) { return jensen_hyperbolicity_check(seq, 2, n); }, lo,
                                   ceiling, threads));
    scans.push_back(scan_predicate("jensen_d3", [&](int n) { return jensen_hyperbolicity_check(seq, 3, n); }, lo,
                                   ceiling, threads));
    scans.push_back(scan_predicate("laguerre_m1", [&](int n) { return discrete_laguerre_check(seq, 1, n); }, lo,
                                   ceiling, threads));
    scans.push_back(scan_predicate("laguerre_m2", [&](int n) { return discrete_laguerre_check(seq, 2, n); }, lo,
                                   ceiling, threads));
    const int gap_hi = (ceiling + 2) / 2;
    const auto gap = multiplicative_gap_scan(seq, 1, gap_hi, threads);

    bool ok = gap.threshold.has_value();
    json reports = json::array();
    for (const auto& s : scans) {
        ok = ok && s.threshold.has_value();
        std::vector<int> first(s.failures.begin(), s.failures.begin() + std::min<std::size_t>(10, s.failures.size()));
        reports.push_back({{"predicate", s.predicate},
                           {"sequence", seq.label},
                           {"params", {{"ell", cfg.ell}, {"modulus", cfg.modulus}, {"residue", cfg.residue}}},
                           {"range", json::array({s.lo, s.hi})},
                           {"N0", s.threshold ? json(*s.threshold) : json(nullptr)},
                           {"first_failures", first},
                           {"last_failure", s.failures.empty() ? json(nullptr) : json(s.failures.back())},
                           {"scan_ceiling", ceiling}});
        if (!s.threshold) {
            err << "ineq: " << s.predicate << " fails at the scan ceiling " << ceiling << " for " << seq.label << "\n";
        }
    }
    json gap_failures = json::array();
    for (const auto& [a, b] : gap.first_failures) {
        gap_failures.push_back(json::array({a, b}));
    }
    reports.push_back({{"predicate", "multiplicative_gap"},
                       {"sequence", seq.label},
                       {"params", {{"ell", cfg.ell}, {"modulus", cfg.modulus}, {"residue", cfg.residue}}},
                       {"range", json::array({gap.lo, gap.hi})},
                       {"N0", gap.threshold ? json(*gap.threshold) : json(nullptr)},
                       {"first_failures", gap_failures},
                       {"scan_ceiling", gap.hi}});
    if (!gap.threshold) {
        err << "ineq: multiplicative gap has no threshold below " << gap.hi << "\n";
    }

    if (cfg.format == Format::json) {
        json j;
        j["command"] = "ineq";
        j["reports"] = std::move(reports);
        j["ok"] = ok;
        os << j.dump(2) << "\n";
    } else {
        os << "predicate,sequence,lo,hi,N0,failures\n";
        for (const auto& s : scans) {
            os << s.predicate << ",\"" << seq.label << "\"," << s.lo << ',' << s.hi << ','
               << (s.threshold ? std::to_string(*s.threshold) : "none") << ',' << s.failures.size() << '\n';
        }
        os << "multiplicative_gap,\"" << seq.label << "\"," << gap.lo << ',' << gap.hi << ','
           << (gap.threshold ? std::to_string(*gap.threshold) : "none") << ',' << gap.first_failures.size() << '\n';
    }
    return ok ? kExitOk : kExitAssertion;
}

int run_oracle(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    bool ok = true;
    const auto p = partition_numbers(cfg.max_n);
    std::vector<ZetaPoly> polys;
    for (int n = 0; n <= cfg.max_n; ++n) {
        polys.push_back(hook_count_poly_oracle(cfg.ell, n));
        if (polys.back().at_one() != p[static_cast<std::size_t>(n)]) {
            ok = false;
            err << "oracle: enumeration count differs from p(" << n << ")\n";
        }
    }

    // Filter statistic next to the exploratory hook-length-residue total.
    struct ResidueRow {
        int n;
        int a;
        mpz_class filter_count;
        mpz_class hook_total;
    };
    std::vector<ResidueRow> residues;
    if (cfg.modulus_given) {
        for (int n = 0; n <= cfg.max_n; ++n) {
            mpz_class sum = 0;
            for (int a = 0; a < cfg.modulus; ++a) {
                mpz_class count = 0;
                const auto& c = polys[static_cast<std::size_t>(n)].coeffs();
                for (std::size_t m = static_cast<std::size_t>(a); m < c.size(); m += static_cast<std::size_t>(cfg.modulus)) {
                    count += c[m];
                }
                sum += count;
                residues.push_back({n, a, count, hook_length_residue_total(cfg.modulus, a, n)});
            }
            if (sum != p[static_cast<std::size_t>(n)]) {
                ok = false;
                err << "oracle: residue classes do not sum to p(" << n << ")\n";
            }
        }
    }

    if (cfg.format == Format::json) {
        json j;
        j["command"] = "oracle";
        j["ell"] = cfg.ell;
        j["max_n"] = cfg.max_n;
        json rows = json::array();
        for (int n = 0; n <= cfg.max_n; ++n) {
            std::vector<std::string> coeffs;
            for (const auto& c : polys[static_cast<std::size_t>(n)].coeffs()) {
                coeffs.push_back(c.get_str());
            }
            rows.push_back({{"n", n}, {"p_n", p[static_cast<std::size_t>(n)].get_str()}, {"coeffs", coeffs}});
        }
        j["hook_count_polys"] = std::move(rows);
        if (cfg.modulus_given) {
            json res = json::array();
            for (const auto& r : residues) {
                res.push_back({{"n", r.n}, {"a", r.a}, {"filter_count", r.filter_count.get_str()},
                               {"hook_length_total", r.hook_total.get_str()}});
            }
            j["modulus"] = cfg.modulus;
            j["residues"] = std::move(res);
        }
        j["ok"] = ok;
        os << j.dump(2) << "\n";
    } else if (cfg.modulus_given) {
        os << "n,a,filter_count,hook_length_total\n";
        for (const auto& r : residues) {
            os << r.n << ',' << r.a << ',' << r.filter_count.get_str() << ',' << r.hook_total.get_str() << '\n';
        }
    } else {
        HookSeries table{cfg.ell, cfg.max_n, polys};
        write_series_table(os, table);
    }
    return ok ? kExitOk : kExitAssertion;
}

}  // namespace

void validate(const RunConfig& cfg)
{
    if (cfg.ell < 1) {
        throw std::invalid_argument("--ell must be at least 1");
    }
    if (cfg.modulus < 1) {
        throw std::invalid_argument("--mod must be at least 1");
    }
    if (cfg.modulus >= 2 && (cfg.residue < 0 || cfg.residue >= cfg.modulus)) {
        throw std::invalid_argument("--residue must lie in [0, mod)");
    }
    if (cfg.modulus == 1 && cfg.residue != 0) {
        throw std::invalid_argument("--residue must be 0 when --mod is 1");
    }
    if (cfg.max_n < 1) {
        throw std::invalid_argument("--max-n must be positive");
    }
    if (cfg.order < 1) {
        throw std::invalid_argument("--order must be positive");
    }
    if (!(cfg.tolerance > 0.0)) {
        throw std::invalid_argument("--tol must be positive");
    }
    if (cfg.threads < 0) {
        throw std::invalid_argument("--threads must be positive");
    }
    switch (cfg.command) {
    case Command::equidist:
        if (cfg.max_n > cfg.order) {
            throw std::invalid_argument("--max-n must not exceed --order");
        }
        break;
    case Command::arcs:
        if (cfg.modulus < 2) {
            throw std::invalid_argument("arcs needs --mod of at least 2");
        }
        break;
    case Command::oracle:
        if (cfg.max_n > kOracleCeiling) {
            throw std::invalid_argument("oracle enumeration is capped at --max-n " + std::to_string(kOracleCeiling));
        }
        break;
    case Command::asym:
        if (cfg.max_n < 10) {
            throw std::invalid_argument("asym needs --max-n of at least 10");
        }
        break;
    default:
        break;
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    Sink sink(cfg.output, out);
    std::ostream& os = sink.get();
    ThreadScope scope(effective_threads(cfg));
    switch (cfg.command) {
    case Command::verify_han:
        return run_verify_han(cfg, os, err);
    case Command::equidist:
        return run_equidist(cfg, os, err);
    case Command::asym:
        return run_asym(cfg, os, err);
    case Command::arcs:
        return run_arcs(cfg, os, err);
    case Command::ineq:
        return run_ineq(cfg, os, err);
    case Command::oracle:
        return run_oracle(cfg, os, err);
    }
    return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"hooklens: distribution of l-hook counts of partitions in residue classes"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "csv";

    struct Entry {
        const char* name;
        Command command;
        const char* help;
    };
    const Entry entries[] = {
        {"verify-han", Command::verify_han, "check the product formula against enumeration for n <= max-n"},
        {"equidist", Command::equidist, "exact residue-class counts and their deviation from p(n)/b"},
        {"asym", Command::asym, "circle-method estimate, modular transformation and Euler-Maclaurin checks"},
        {"arcs", Command::arcs, "real parts of the arc integrals for every nontrivial b-th root of unity"},
        {"ineq", Command::ineq, "Turan, Laguerre and multiplicative-gap threshold scans"},
        {"oracle", Command::oracle, "brute-force hook statistics by enumeration"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("--ell", cfg.ell, "hook length l")->capture_default_str();
        sub->add_option("--mod", cfg.modulus, "modulus b")->capture_default_str();
        sub->add_option("--residue", cfg.residue, "residue a in [0, b)")->capture_default_str();
        sub->add_option("--max-n", cfg.max_n, "largest n reported")->capture_default_str();
        sub->add_option("--order", cfg.order, "series truncation order N")->capture_default_str();
        sub->add_option("--tol", cfg.tolerance, "tolerance for analytic identities")->capture_default_str();
        sub->add_option("--threads", cfg.threads, "worker threads (default: HOOKLENS_THREADS or all cores)");
        sub->add_option("--output,-o", cfg.output, "report path, - for stdout")->capture_default_str();
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kExitUsage;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            cfg.command = entries[i].command;
            cfg.modulus_given = subs[i]->count("--mod") > 0;
        }
    }
    cfg.format = (format == "json") ? Format::json : Format::csv;

    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (cfg.threads > 0) {
        set_default_threads(cfg.threads);
    }
    try {
        return run(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitAssertion;
    }
}

}  // namespace hooklens::cli
