#include "pim/cli.hpp"

#include <omp.h>

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pim/asymptotics.hpp"
#include "pim/cache.hpp"
#include "pim/familysearch.hpp"
#include "pim/linforms.hpp"
#include "pim/recurrence.hpp"

namespace pim {

namespace {

std::string rat_str(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str()
                            : q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json rat_json(const Rat& q) {
    return {q.get_num().get_str(), q.get_den().get_str()};
}

LinearForm cached_form(long n, TermCache& cache) {
    IntegrandParams params = IntegrandParams::classic(n);
    std::string hash = param_hash(params);
    if (auto rec = cache.lookup("classic", n, hash)) {
        LinearForm f;
        f.n = n;
        f.a = rec->a;
        f.b = rec->b;
        f.route_tag = "cache";
        return f;
    }
    LinearForm f = assemble_form(params);
    cache.store({"classic", n, f.a, f.b, hash});
    return f;
}

int cmd_form(long n, const RunConfig& cfg, std::ostream& out) {
    TermCache cache(cfg.cache_dir);
    LinearForm f = cached_form(n, cache);
    if (cfg.format == "json") {
        nlohmann::json j{{"n", f.n}, {"a", rat_json(f.a)}, {"b", rat_json(f.b)},
                         {"route", f.route_tag}};
        out << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << "n,a,b\n" << f.n << "," << rat_str(f.a) << "," << rat_str(f.b) << "\n";
    } else {
        out << "n = " << f.n << "\na = " << rat_str(f.a) << "\nb = " << rat_str(f.b)
            << "\nroute = " << f.route_tag << "\n";
    }
    return 0;
}

int cmd_certify(const std::string& kind, long n_max, const RunConfig& cfg, std::ostream& out) {
    int lemma_id = 0;
    if (kind == "lemma1") lemma_id = 1;
    else if (kind == "lemma2") lemma_id = 2;
    else if (kind == "lemma3") lemma_id = 3;
    else if (kind == "lemma4") lemma_id = 4;
    else if (kind != "prop1") return 2;

    bool all_pass = true;
    nlohmann::json arr = nlohmann::json::array();
    for (long n = 1; n <= n_max; ++n) {
        Certificate c = lemma_id ? verify_lemma(lemma_id, n) : verify_prop1(n);
        all_pass = all_pass && c.pass;
        if (cfg.format == "json") {
            arr.push_back({{"lemma", c.lemma},
                           {"n", c.n},
                           {"checked", c.checked},
                           {"pass", c.pass},
                           {"counterexample", c.first_counterexample}});
        } else {
            out << c.lemma << " n=" << c.n << " " << (c.pass ? "pass" : "FAIL")
                << " (checked " << c.checked << ")";
            if (!c.pass) out << " counterexample: " << c.first_counterexample;
            out << "\n";
        }
    }
    if (cfg.format == "json") out << arr.dump() << "\n";
    return all_pass ? 0 : 1;
}

int cmd_bound(bool crude, const RunConfig& cfg, std::ostream& out) {
    auto [ri, rb] = rates(cfg.precision);
    auto [mu, mu_crude] = measure_bounds(cfg.precision);
    const Real& value = crude ? mu_crude : mu;
    if (cfg.format == "json") {
        nlohmann::json j{{"precision_digits", cfg.precision},
                         {"rate_I", ri.str(cfg.precision)},
                         {"rate_b", rb.str(cfg.precision)},
                         {crude ? "mu_crude" : "mu_bound", value.str(cfg.precision)}};
        out << j.dump() << "\n";
    } else {
        out << (crude ? "mu_crude" : "mu_bound") << " = " << value.str(cfg.precision) << "\n"
            << "rate_I = " << ri.str(cfg.precision) << "\n"
            << "rate_b = " << rb.str(cfg.precision) << "\n"
            << "precision = " << cfg.precision << " digits\n";
    }
    return 0;
}

std::string complex_str(const Complex& z, long digits) {
    if (z.im.is_zero()) return z.re.str(digits);
    return z.re.str(digits) + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).str(digits) + "i";
}

int cmd_asymptotics(const RunConfig& cfg, std::ostream& out) {
    AsymptoticData d = asymptotic_data(cfg.precision);
    if (cfg.format == "json") {
        nlohmann::json j;
        auto carr = [&](const std::vector<Complex>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& z : v)
                a.push_back({z.re.str(cfg.precision), z.im.str(cfg.precision)});
            return a;
        };
        j["N_roots"] = carr(d.N_roots);
        j["y_roots"] = carr(d.y_roots);
        j["g_values"] = carr(d.g_values);
        j["phi_limit"] = d.phi_limit.str(cfg.precision);
        j["rate_I"] = d.rate_I.str(cfg.precision);
        j["rate_b"] = d.rate_b.str(cfg.precision);
        j["mu_bound"] = d.mu_bound.str(cfg.precision);
        j["mu_crude"] = d.mu_crude.str(cfg.precision);
        j["precision_digits"] = cfg.precision;
        out << j.dump() << "\n";
    } else {
        for (size_t i = 0; i < d.N_roots.size(); ++i)
            out << "N_" << i + 1 << " = " << complex_str(d.N_roots[i], cfg.precision) << "\n";
        for (size_t i = 0; i < d.y_roots.size(); ++i)
            out << "y_" << i + 1 << " = " << complex_str(d.y_roots[i], cfg.precision)
                << "   g(y_" << i + 1 << ") = " << complex_str(d.g_values[i], cfg.precision)
                << "\n";
        out << "phi_limit = " << d.phi_limit.str(cfg.precision) << "\n"
            << "rate_I = " << d.rate_I.str(cfg.precision) << "\n"
            << "rate_b = " << d.rate_b.str(cfg.precision) << "\n"
            << "mu_bound = " << d.mu_bound.str(cfg.precision) << "\n"
            << "mu_crude = " << d.mu_crude.str(cfg.precision) << "\n"
            << "precision = " << cfg.precision << " digits\n";
    }
    return 0;
}

int cmd_guess_rec(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    TermCache cache(cfg.cache_dir);
    std::vector<Rat> bs;
    for (long n = 0; n < 60; ++n) bs.push_back(cached_form(n, cache).b);
    auto rec = guess(bs);
    if (!rec) {
        err << "no recurrence found within the search bounds\n";
        return 1;
    }
    nlohmann::json j = rec->to_json();
    nlohmann::json ind = nlohmann::json::array();
    for (const auto& c : indicial_polynomial(*rec)) ind.push_back(c.get_str());
    j["indicial"] = ind;
    if (cfg.format == "json") {
        out << j.dump() << "\n";
    } else {
        out << "order = " << rec->order << "\ncoefficient degree = " << rec->coeff_degree()
            << "\nindicial polynomial (ascending) =";
        for (const auto& c : indicial_polynomial(*rec)) out << " " << c.get_str();
        out << "\nrecurrence = " << j.dump() << "\n";
    }
    return 0;
}

int cmd_search(long a_max, long b_max, long n_lo, long n_hi, const RunConfig& cfg,
               std::ostream& out) {
    omp_set_num_threads(cfg.jobs);
    ScanReport rep = best_ab(a_max, b_max, n_lo, n_hi);
    if (cfg.format == "csv") {
        out << rep.to_csv();
    } else if (cfg.format == "json") {
        out << rep.summary().dump() << "\n";
    } else {
        out << "rank (A,B) min_delta\n";
        long rank = 1;
        for (const auto& k : rep.ranking) {
            for (const auto& f : rep.families)
                if (f.key == k) {
                    std::ostringstream v;
                    v.precision(10);
                    v << f.min_delta;
                    out << rank << " (" << k.A << "," << k.B << ") " << v.str() << "\n";
                }
            ++rank;
        }
    }
    return 0;
}

int cmd_quad_check(long n, const RunConfig& cfg, std::ostream& out) {
    LinearForm f = linear_form(n);
    Complex q = contour_integral(IntegrandParams::classic(n), cfg.precision);
    mpfr_prec_t prec = bits_for_digits(cfg.precision + 16);
    Real exact = Real(f.a, prec) + Real(f.b, prec) * Real::pi(prec);
    Real diff = abs(q.re - exact) + abs(q.im);
    Real tol = exp(Real(-(cfg.precision - 24), prec) * log(Real(10L, prec)));
    bool pass = diff < tol;
    if (cfg.format == "json") {
        nlohmann::json j{{"n", n},
                         {"difference", diff.str(6)},
                         {"tolerance", tol.str(6)},
                         {"pass", pass}};
        out << j.dump() << "\n";
    } else {
        out << "n = " << n << "\n|quadrature - exact| = " << diff.str(6)
            << "\ntolerance = " << tol.str(6) << "\n" << (pass ? "pass" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact linear forms in 1 and pi, divisibility certificates, and the "
                 "irrationality-measure bound"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--precision", cfg.precision, "working precision in decimal digits")
        ->check(CLI::Range(32L, 100000L))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 1024))
        ->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir, "directory for the exact-term cache");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.set_config("--config", "", "configuration file in key=value form");

    long n = 0;
    std::string kind;
    long a_max = 0, b_max = 0, n_lo = 0, n_hi = 0;

    auto* c_form = app.add_subcommand("form", "exact a_n, b_n with I_n = a_n + b_n pi");
    c_form->add_option("N", n, "index")->required()->check(CLI::NonNegativeNumber);
    auto* c_cert = app.add_subcommand("certify", "divisibility certificates for n = 1..N");
    c_cert->add_option("kind", kind, "lemma1|lemma2|lemma3|lemma4|prop1")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "lemma4", "prop1"}));
    c_cert->add_option("N", n, "check n = 1..N")->required()->check(CLI::PositiveNumber);
    auto* c_bound = app.add_subcommand("bound", "irrationality measure bound for pi");
    auto* c_crude = app.add_subcommand("crude-bound", "bound without the prime saving");
    auto* c_asym = app.add_subcommand("asymptotics", "roots, saddle data, rates, bounds");
    auto* c_guess = app.add_subcommand("guess-rec", "recurrence guessed from exact terms");
    auto* c_search = app.add_subcommand("search", "BestAB family scan");
    c_search->add_option("A_MAX", a_max, "")->required()->check(CLI::PositiveNumber);
    c_search->add_option("B_MAX", b_max, "")->required()->check(CLI::PositiveNumber);
    c_search->add_option("N_LO", n_lo, "")->required()->check(CLI::PositiveNumber);
    c_search->add_option("N_HI", n_hi, "")->required()->check(CLI::PositiveNumber);
    auto* c_quad = app.add_subcommand("quad-check", "quadrature vs exact form at index N");
    c_quad->add_option("N", n, "index")->required()->check(CLI::NonNegativeNumber);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (c_form->parsed()) return cmd_form(n, cfg, out);
        if (c_cert->parsed()) return cmd_certify(kind, n, cfg, out);
        if (c_bound->parsed()) return cmd_bound(false, cfg, out);
        if (c_crude->parsed()) return cmd_bound(true, cfg, out);
        if (c_asym->parsed()) return cmd_asymptotics(cfg, out);
        if (c_guess->parsed()) return cmd_guess_rec(cfg, out, err);
        if (c_search->parsed()) return cmd_search(a_max, b_max, n_lo, n_hi, cfg, out);
        if (c_quad->parsed()) return cmd_quad_check(n, cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace pim
