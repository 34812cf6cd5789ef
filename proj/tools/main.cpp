#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mzp/cache.hpp"
#include "mzp/certify.hpp"
#include "mzp/config.hpp"
#include "mzp/verify.hpp"

using namespace mzp;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_inconclusive = 3;

struct CliOptions {
    RunConfig cfg;
    std::string mode = "both";
    std::string format = "text";
    std::string out;
    std::string cache_dir;
    long budget = 1L << 20;
    unsigned long precision = 0;
    unsigned threads = 0;

    void finish() {
        cfg.mode = RunConfig::parse_mode(mode);
        cfg.format = RunConfig::parse_format(format);
        cfg.budget.max_degree = budget;
        cfg.threads = threads;
        if (precision) cfg.precision = precision;
        if (cache_dir.empty())
            if (const char* env = std::getenv("MZP_CACHE_DIR")) cache_dir = env;
        cfg.cache_dir = cache_dir;
    }

    std::optional<PolyCache> cache() const {
        if (cfg.cache_dir.empty()) return std::nullopt;
        return PolyCache(cfg.cache_dir);
    }
};

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw error("cannot write " + out);
    f << text;
}

std::string render_vtable(const std::vector<VTableCell>& cells, RunConfig::Format format) {
    std::string s;
    if (format == RunConfig::Format::Csv) {
        s += "m,p,v2,m_plus_p,exceeds\n";
        for (const auto& c : cells)
            s += std::to_string(c.m) + "," + std::to_string(c.p) + "," + c.v2_text + "," +
                 std::to_string(c.m + c.p) + "," + (c.decided ? (c.exceeds ? "yes" : "no") : "") + "\n";
        return s;
    }
    if (format == RunConfig::Format::Json) {
        Json j = Json::array();
        for (const auto& c : cells) {
            Json row = {{"m", c.m}, {"p", c.p}, {"v2", c.v2_text}, {"m_plus_p", c.m + c.p}};
            if (c.decided) row["exceeds"] = c.exceeds;
            row["route"] = c.route;
            j.push_back(row);
        }
        return j.dump(2) + "\n";
    }
    s += "   m     p   v2(tr)   m+p\n";
    for (const auto& c : cells) {
        char line[96];
        std::snprintf(line, sizeof line, "%4u %5lu %8s %5lu%s\n", c.m, c.p, c.v2_text.c_str(),
                      c.m + c.p, c.decided && c.exceeds ? "  *" : "");
        s += line;
    }
    s += "(* marks cells with v2 > m+p)\n";
    return s;
}

std::string render_battery(const std::vector<CheckResult>& results, RunConfig::Format format) {
    if (format == RunConfig::Format::Json) {
        Json j = Json::array();
        for (const auto& r : results)
            j.push_back({{"scope", r.scope},
                         {"name", r.name},
                         {"status", to_string(r.status)},
                         {"detail", r.detail},
                         {"ms", r.ms}});
        return j.dump(2) + "\n";
    }
    std::string s;
    for (const auto& r : results) {
        char line[512];
        std::snprintf(line, sizeof line, "[%12s] %-12s %-42s %s (%.0f ms)\n", to_string(r.status),
                      r.scope.c_str(), r.name.c_str(), r.detail.c_str(), r.ms);
        s += line;
    }
    return s;
}

int battery_exit(const std::vector<CheckResult>& results) {
    bool inconclusive = false;
    for (const auto& r : results) {
        if (r.status == CheckResult::Status::Fail) return exit_verification_failure;
        inconclusive = inconclusive || r.status == CheckResult::Status::Inconclusive;
    }
    return inconclusive ? exit_inconclusive : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and truncated 2-adic toolkit for Misiurewicz and multiplier polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opt;
    app.add_option("--mode", opt.mode, "exact | truncated | both")->capture_default_str();
    app.add_option("--precision", opt.precision, "starting truncation precision K in bits");
    app.add_option("--budget", opt.budget, "degree budget")->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads (0: MZP_THREADS or hardware)");
    app.add_option("--format", opt.format, "text | csv | json")->capture_default_str();
    app.add_option("--out", opt.out, "write the result to a file instead of stdout");
    app.add_option("--cache-dir", opt.cache_dir, "polynomial cache directory (MZP_CACHE_DIR)");

    // gen
    std::string gen_kind;
    unsigned gen_m = 0, gen_n = 0;
    auto* gen = app.add_subcommand("gen", "construct G_{m,n} or P_{m,n}");
    gen->add_option("kind", gen_kind, "G or P")->required()->check(CLI::IsMember({"G", "P"}));
    gen->add_option("m", gen_m, "preperiod (>= 2)")->required();
    gen->add_option("n", gen_n, "period (>= 1)")->required();

    // vtable
    unsigned vt_mmin = 0, vt_mmax = 0;
    unsigned long vt_pmin = 0, vt_pmax = 0;
    auto* vtable = app.add_subcommand("vtable", "table of v2(tr(P_{m,p})) over primes p");
    vtable->add_option("m_min", vt_mmin)->required();
    vtable->add_option("m_max", vt_mmax)->required();
    vtable->add_option("p_min", vt_pmin)->required();
    vtable->add_option("p_max", vt_pmax)->required();

    // trace
    unsigned tr_m = 0, tr_n = 0;
    std::string tr_route = "auto";
    auto* trace = app.add_subcommand("trace", "tr(P_{m,n}) and its 2-adic valuation");
    trace->add_option("m", tr_m)->required();
    trace->add_option("n", tr_n)->required();
    trace->add_option("--route", tr_route, "auto | closed | mobius | full")->capture_default_str();

    // check-special
    unsigned cs_m = 0, cs_n = 0;
    unsigned long cs_p = 2;
    auto* chk = app.add_subcommand("check-special", "test P_{m,n} for p-specialness");
    chk->add_option("m", cs_m)->required();
    chk->add_option("n", cs_n)->required();
    chk->add_option("--p", cs_p, "prime p")->capture_default_str();

    // res-check
    unsigned rc_m = 0, rc_n = 0;
    unsigned long rc_lmax = 20;
    auto* res = app.add_subcommand("res-check", "|Res(P_{m,n}, Phi_l)| for l = 1..lmax");
    res->add_option("m", rc_m)->required();
    res->add_option("n", rc_n)->required();
    res->add_option("--lmax", rc_lmax)->capture_default_str();

    // verify-paper
    std::vector<std::string> scopes;
    auto* verify = app.add_subcommand("verify-paper", "run the built-in verification battery");
    verify->add_option("--scope", scopes,
                       "scopes to run (default all): lemmas contour square prespecial base27 "
                       "table1 special-res remark-m2 certify");

    // certify
    unsigned ce_m = 0, ce_n = 0, ce_p = 0;
    auto* certify = app.add_subcommand("certify", "emit a non-unit certificate for (m, n, p)");
    certify->add_option("m", ce_m)->required();
    certify->add_option("n", ce_n)->required();
    certify->add_option("p", ce_p)->required();

    // cache
    std::string cache_op;
    auto* cachecmd = app.add_subcommand("cache", "inspect or clean the polynomial cache");
    cachecmd->add_option("op", cache_op, "list or gc")->required()->check(CLI::IsMember({"list", "gc"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        opt.finish();
        const auto cache = opt.cache();
        const PolyCache* cache_ptr = cache ? &*cache : nullptr;

        if (*gen) {
            const MisiurewiczType t(gen_m, gen_n);
            IntPoly poly;
            std::string var;
            if (gen_kind == "G") {
                poly = misiurewicz_poly(t, opt.cfg.budget, cache_ptr);
                var = "c";
            } else {
                poly = multiplier_poly(t, opt.cfg.budget, cache_ptr).poly;
                var = "x";
            }
            if (!opt.out.empty()) {
                write_output(poly.to_canonical_text(), opt.out);
            } else if (opt.cfg.format == RunConfig::Format::Json) {
                Json j = {{"kind", gen_kind}, {"m", t.m}, {"n", t.n},
                          {"degree", poly.degree()}, {"poly", poly.to_string(var)}};
                write_output(j.dump(2) + "\n", "");
            } else {
                write_output(poly.to_string(var) + "\n", "");
            }
            return exit_ok;
        }

        if (*vtable) {
            const auto cells = compute_vtable(vt_mmin, vt_mmax, vt_pmin, vt_pmax, opt.cfg);
            write_output(render_vtable(cells, opt.cfg.format), opt.out);
            for (const auto& c : cells)
                if (!c.decided) return exit_inconclusive;
            return exit_ok;
        }

        if (*trace) {
            const MisiurewiczType t(tr_m, tr_n);
            std::string route = tr_route;
            if (route == "auto")
                route = (tr_n % 2 == 1 && tr_n > 1 && is_prime(tr_n)) ? "closed" : "mobius";
            if (opt.cfg.mode == RunConfig::Mode::Truncated && route == "closed" && tr_m >= 3) {
                unsigned long K = opt.cfg.precision.value_or(default_precision(tr_m, tr_n));
                const auto tv = trunc_trace_closed_form(tr_m, tr_n, K, opt.cfg.budget);
                write_output("v2(tr(P_{" + std::to_string(tr_m) + "," + std::to_string(tr_n) +
                                 "})) = " + valuation_of(tv).to_string() + "\n",
                             opt.out);
                return valuation_of(tv).is_exact() ? exit_ok : exit_inconclusive;
            }
            Int value;
            if (route == "closed") {
                if (tr_n % 2 == 0 || !is_prime(tr_n)) throw not_prime("closed route needs an odd prime period");
                value = tr_m == 2 ? int_pow2(2 * tr_n) - int_pow2(tr_n + 1)
                                  : trace_closed_form(tr_m, tr_n, opt.cfg.budget, cache_ptr);
            }
            else if (route == "mobius")
                value = trace_mobius(t, opt.cfg.budget);
            else if (route == "full")
                value = multiplier_poly(t, opt.cfg.budget, cache_ptr).trace();
            else
                throw precondition_violated("unknown route: " + route);
            write_output("tr(P_{" + std::to_string(tr_m) + "," + std::to_string(tr_n) + "}) = " +
                             value.get_str() + "\nv2 = " + v2_of(value).to_string() + "\n",
                         opt.out);
            return exit_ok;
        }

        if (*chk) {
            if (!is_prime(cs_p)) throw not_prime("p = " + std::to_string(cs_p) + " is not prime");
            const auto P = multiplier_poly(MisiurewiczType(cs_m, cs_n), opt.cfg.budget, cache_ptr);
            SpecialWitness w;
            const bool special = is_p_special(P.poly, Int(cs_p), &w);
            std::string s = "P_{" + std::to_string(cs_m) + "," + std::to_string(cs_n) + "} is " +
                            (special ? "" : "not ") + std::to_string(cs_p) + "-special\n";
            s += "v_p(second coefficient) = " + w.second_coeff_valuation.to_string() + "\n";
            if (!special) s += "reason: " + w.reason + "\n";
            write_output(s, opt.out);
            return special ? exit_ok : exit_verification_failure;
        }

        if (*res) {
            const auto P = multiplier_poly(MisiurewiczType(rc_m, rc_n), opt.cfg.budget, cache_ptr);
            std::vector<unsigned long> flagged;
            const auto values = res_cyclotomic_check(P.poly, rc_lmax, &flagged);
            std::string s;
            for (unsigned long l = 1; l <= values.size(); l++) {
                s += "|Res(P, Phi_" + std::to_string(l) + ")| = " + values[l - 1].get_str();
                for (unsigned long f : flagged)
                    if (f == l) s += "   <= 1";
                s += "\n";
            }
            write_output(s, opt.out);
            return flagged.empty() ? exit_ok : exit_verification_failure;
        }

        if (*verify) {
            const auto results = run_battery(opt.cfg, scopes);
            write_output(render_battery(results, opt.cfg.format), opt.out);
            return battery_exit(results);
        }

        if (*certify) {
            const auto outc = certify_nonunit(ce_m, ce_n, ce_p, opt.cfg);
            if (!outc.certificate) {
                std::fprintf(stderr, "no certificate: %s (%s)\n", to_string(outc.report.verdict),
                             outc.report.note.c_str());
                return exit_inconclusive;
            }
            write_output(outc.certificate->to_json().dump(2) + "\n", opt.out);
            return exit_ok;
        }

        if (*cachecmd) {
            std::string dir = opt.cfg.cache_dir.empty() ? "mzp-cache" : opt.cfg.cache_dir;
            PolyCache pc(dir);
            if (cache_op == "list") {
                std::string s;
                for (const auto& e : pc.list())
                    s += std::string(e.current_version ? "  " : "stale ") + e.rel_path + " (" +
                         std::to_string(e.bytes) + " bytes)\n";
                write_output(s.empty() ? "cache is empty\n" : s, opt.out);
            } else {
                const auto removed = pc.gc();
                write_output("removed " + std::to_string(removed) + " stale entries\n", opt.out);
            }
            return exit_ok;
        }
    } catch (const precondition_violated& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const hypothesis_violated& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const not_prime& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const budget_exceeded& e) {
        std::fprintf(stderr, "budget: %s\n", e.what());
        return exit_inconclusive;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_verification_failure;
    }
    return exit_usage;
}
