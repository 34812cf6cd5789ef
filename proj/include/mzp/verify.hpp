#ifndef MZP_VERIFY_HPP
#define MZP_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "mzp/certify.hpp"
#include "mzp/config.hpp"

namespace mzp {

/* Reference table of v2(tr(P_{m,p})) for the covered (m, p) grid, used as
 * gold data by the verification battery. The entries with v2 > m + p are the
 * three marked exceedances.
 */
struct TraceValuationRow {
    unsigned m;
    unsigned long p;
    unsigned long v2;
    bool exceeds_m_plus_p() const { return v2 > m + p; }
};

inline const std::vector<TraceValuationRow>& trace_valuation_rows() {
    static const std::vector<TraceValuationRow> rows = {
        {10, 509, 512}, {10, 503, 511}, {10, 499, 509}, {10, 491, 496}, {10, 487, 500},
        {10, 479, 486}, {10, 467, 473}, {10, 463, 470}, {10, 461, 470}, {10, 457, 465},
        {9, 251, 256},  {9, 241, 249},  {9, 239, 245},  {9, 233, 240},  {9, 229, 237},
        {9, 227, 236},  {9, 223, 230},  {9, 211, 219},  {9, 199, 206},  {9, 197, 202},
        {8, 113, 120},  {8, 109, 112},  {8, 107, 112},  {8, 103, 109},  {8, 101, 105},
        {8, 97, 102},   {8, 89, 96},    {8, 83, 91},    {8, 79, 86},    {8, 73, 78},
        {7, 61, 64},    {7, 59, 65},    {7, 53, 56},    {7, 47, 54},    {7, 43, 50},
        {7, 41, 45},    {7, 37, 43},    {7, 31, 32},    {7, 29, 33},    {7, 23, 31},
        {6, 29, 32},    {6, 23, 30},    {6, 19, 24},    {6, 17, 21},    {6, 13, 19},
        {6, 11, 16},    {6, 7, 9},      {6, 5, 9},      {6, 3, 6},
        {5, 13, 18},    {5, 11, 15},    {5, 7, 8},      {5, 5, 8},      {5, 3, 5},
        {4, 5, 7},      {4, 3, 4},
    };
    return rows;
}

// the period-2 companions of the table, computed by the Moebius route
inline const std::vector<TraceValuationRow>& trace_valuation_rows_p2() {
    static const std::vector<TraceValuationRow> rows = {
        {6, 2, 6}, {5, 2, 5}, {4, 2, 4}, {3, 2, 3}};
    return rows;
}

struct CheckResult {
    enum class Status { Pass, Fail, Inconclusive };
    std::string scope;
    std::string name;
    Status status = Status::Fail;
    std::string detail;
    double ms = 0;
};

inline const char* to_string(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "pass";
        case CheckResult::Status::Fail: return "FAIL";
        case CheckResult::Status::Inconclusive: return "inconclusive";
    }
    return "";
}

inline const std::vector<std::string>& battery_scopes() {
    static const std::vector<std::string> s = {"lemmas",  "contour",     "square",
                                               "prespecial", "base27",  "table1",
                                               "special-res", "remark-m2", "certify"};
    return s;
}

namespace detail {

inline bool scope_on(const std::vector<std::string>& req, const std::string& scope) {
    if (req.empty()) return true;
    for (const auto& s : req)
        if (s == "all" || s == scope) return true;
    return false;
}

template <class F>
CheckResult timed_check(const std::string& scope, const std::string& name, F&& fn) {
    CheckResult r;
    r.scope = scope;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(r);
    } catch (const budget_exceeded& e) {
        r.status = CheckResult::Status::Inconclusive;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = CheckResult::Status::Fail;
        r.detail = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// one table row: truncated route, plus the exact route on small preperiods
inline CheckResult check_table_row(const TraceValuationRow& row, const RunConfig& cfg) {
    return timed_check("table1", "(" + std::to_string(row.m) + "," + std::to_string(row.p) + ")",
                       [&](CheckResult& r) {
        Valuation got = Valuation::infinite();
        std::string route;
        const bool want_exact = cfg.mode == RunConfig::Mode::Exact ||
                                (cfg.mode == RunConfig::Mode::Both && row.m <= cfg.exact_max_m);
        const bool want_trunc = !want_exact || cfg.mode == RunConfig::Mode::Both;
        if (want_exact) {
            got = v2_of(trace_closed_form(row.m, row.p, cfg.budget));
            route = "exact";
        }
        if (want_trunc) {
            unsigned long K = cfg.precision.value_or(default_precision(row.m, row.p));
            Valuation tv = Valuation::at_least(0);
            for (unsigned attempt = 0; attempt <= cfg.max_precision_retries; attempt++, K *= 2) {
                tv = valuation_of(trunc_trace_closed_form(row.m, row.p, K, cfg.budget));
                if (tv.is_exact()) break;
            }
            if (!tv.is_exact()) {
                r.status = CheckResult::Status::Inconclusive;
                r.detail = "truncated valuation undecided";
                return;
            }
            if (want_exact && tv != got) {
                r.status = CheckResult::Status::Fail;
                r.detail = "exact and truncated modes disagree";
                return;
            }
            got = tv;
            route += route.empty() ? "truncated" : "+truncated";
        }
        const bool ok = got == Valuation::exact(row.v2);
        r.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
        r.detail = "v2 = " + got.to_string() + ", reference " + std::to_string(row.v2) + " (" + route + ")";
        if (ok && row.exceeds_m_plus_p()) r.detail += ", exceeds m+p";
    });
}

} // namespace detail

/* One cell of the trace-valuation table: v2(tr(P_{m,p})) with the route and
 * decidability recorded. Period-2 cells go through the Moebius route (the
 * closed form needs an odd prime); odd primes use the closed form, exact
 * and/or truncated per the configuration.
 */
struct VTableCell {
    unsigned m = 0;
    unsigned long p = 0;
    bool decided = false;
    unsigned long v2 = 0;
    std::string v2_text = "inconclusive";
    bool exceeds = false;
    std::string route;
};

namespace detail {

inline VTableCell compute_vtable_cell(unsigned m, unsigned long p, const RunConfig& cfg) {
    VTableCell cell;
    cell.m = m;
    cell.p = p;
    try {
        Valuation v = Valuation::infinite();
        if (p == 2) {
            v = v2_of(trace_mobius(MisiurewiczType(m, 2), cfg.budget));
            cell.route = "moebius-exact";
        } else if (m == 2) {
            v = Valuation::exact(p + 1); // v2(2^(2p) - 2^(p+1))
            cell.route = "closed-form";
        } else {
            const bool want_exact = cfg.mode == RunConfig::Mode::Exact ||
                                    (cfg.mode == RunConfig::Mode::Both && m <= cfg.exact_max_m);
            const bool want_trunc = !want_exact || cfg.mode == RunConfig::Mode::Both;
            bool have = false;
            if (want_exact) {
                v = v2_of(trace_closed_form(m, p, cfg.budget));
                have = true;
                cell.route = "exact";
            }
            if (want_trunc) {
                unsigned long K = cfg.precision.value_or(default_precision(m, p));
                Valuation tv = Valuation::at_least(0);
                for (unsigned a = 0; a <= cfg.max_precision_retries; a++, K *= 2) {
                    tv = valuation_of(trunc_trace_closed_form(m, p, K, cfg.budget));
                    if (tv.is_exact()) break;
                }
                if (!tv.is_exact()) {
                    cell.v2_text = tv.to_string();
                    cell.route += cell.route.empty() ? "truncated" : "+truncated";
                    return cell;
                }
                if (have && tv != v) throw error("exact and truncated modes disagree");
                v = tv;
                cell.route += cell.route.empty() ? "truncated" : "+truncated";
            }
        }
        if (v.is_exact()) {
            cell.decided = true;
            cell.v2 = v.value();
            cell.v2_text = v.to_string();
            cell.exceeds = cell.v2 > m + p;
        } else {
            cell.v2_text = v.to_string();
        }
    } catch (const budget_exceeded& e) {
        cell.route = "budget";
        cell.v2_text = "inconclusive";
    }
    return cell;
}

} // namespace detail

// all prime p in [p_min, p_max] crossed with m in [m_min, m_max]; cells are
// independent and run on a shared worker pool
inline std::vector<VTableCell> compute_vtable(unsigned m_min, unsigned m_max, unsigned long p_min,
                                              unsigned long p_max, const RunConfig& cfg) {
    std::vector<std::pair<unsigned, unsigned long>> jobs;
    for (unsigned m = std::max(2u, m_min); m <= m_max; m++)
        for (unsigned long p : primes_in(std::max(2ul, p_min), p_max)) jobs.emplace_back(m, p);
    std::vector<VTableCell> cells(jobs.size());
    parallel_for(jobs.size(), effective_threads(cfg), [&](std::size_t i) {
        cells[i] = detail::compute_vtable_cell(jobs[i].first, jobs[i].second, cfg);
    });
    return cells;
}

/* The full verification battery behind `verify-paper` and the acceptance
 * suite. Scope names select subsets; results come back in a deterministic
 * order with one entry per item.
 */
inline std::vector<CheckResult> run_battery(const RunConfig& cfg,
                                            const std::vector<std::string>& scopes = {}) {
    using detail::scope_on;
    using detail::timed_check;
    std::vector<CheckResult> out;

    if (scope_on(scopes, "lemmas")) {
        const auto rep = verify_lemma_suite(cfg.budget);
        for (const auto& c : rep.checks) {
            CheckResult r;
            r.scope = "lemmas";
            r.name = c.name;
            r.status = c.pass ? CheckResult::Status::Pass : CheckResult::Status::Fail;
            r.detail = c.detail;
            out.push_back(r);
        }
    }

    if (scope_on(scopes, "contour")) {
        out.push_back(timed_check("contour", "worked instance f=c^2, g=c^2+2c", [&](CheckResult& r) {
            const Int t = T_residue(IntPoly{0, 0, 1}, IntPoly{0, 2, 1});
            r.status = t == 4 ? CheckResult::Status::Pass : CheckResult::Status::Fail;
            r.detail = "T = " + t.get_str();
        }));
        out.push_back(timed_check("contour", "200 randomized instances", [&](CheckResult& r) {
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<long> coeff(-9, 9);
            std::uniform_int_distribution<long> root(-6, 6);
            int done = 0, bad = 0;
            while (done < 200) {
                std::vector<long> roots{0};
                for (int i = 0; i < 9 && roots.size() < 10; i++) {
                    const long x = root(rng);
                    if (x == 0) continue;
                    bool dup = false;
                    for (long y : roots) dup = dup || y == x;
                    if (!dup) roots.push_back(x);
                }
                if (roots.size() < 2) continue;
                IntPoly g{1};
                for (long x : roots) g *= IntPoly{-x, 1};
                std::vector<Int> fc(2 + rng() % 8);
                for (auto& v : fc) v = coeff(rng);
                fc[0] = 0;
                const IntPoly f(std::move(fc));
                if (f.is_zero()) continue;
                if (T_residue(f, g) != T_sum(f, g)) bad++;
                done++;
            }
            r.status = bad == 0 ? CheckResult::Status::Pass : CheckResult::Status::Fail;
            r.detail = std::to_string(done - bad) + "/" + std::to_string(done) + " agree";
        }));
    }

    if (scope_on(scopes, "square")) {
        const std::vector<std::pair<unsigned, unsigned>> set = {{4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}};
        for (auto [m, n] : set) {
            out.push_back(timed_check(
                "square", "coefficient match (" + std::to_string(m) + "," + std::to_string(n) + ")",
                [&, m = m, n = n](CheckResult& r) {
                    const auto rep = verify_thm_square(m, n, cfg.budget);
                    r.status = rep.all_match() && !rep.qualifying.empty() ? CheckResult::Status::Pass
                                                                          : CheckResult::Status::Fail;
                    r.detail = std::to_string(rep.qualifying.size() - rep.mismatched.size()) + "/" +
                               std::to_string(rep.qualifying.size()) + " indices match";
                }));
            out.push_back(timed_check(
                "square", "trace doubles (" + std::to_string(m) + "," + std::to_string(n) + ")",
                [&, m = m, n = n](CheckResult& r) {
                    const Int a = multiplier_poly(MisiurewiczType(m, n), cfg.budget).trace();
                    const Int b = multiplier_poly(MisiurewiczType(m + 1, n), cfg.budget).trace();
                    r.status = b == 2 * a ? CheckResult::Status::Pass : CheckResult::Status::Fail;
                    r.detail = "tr = " + a.get_str() + " -> " + b.get_str();
                }));
        }
    }

    if (scope_on(scopes, "prespecial")) {
        for (unsigned m = 2; m <= 8; m++)
            for (unsigned n = 1; n <= 8; n++) {
                const MisiurewiczType t(m, n);
                if (misiurewicz_degree(t) > 150) continue;
                out.push_back(timed_check("prespecial", "floors for P_" + t.to_string(),
                                          [&, t](CheckResult& r) {
                    const auto rep = prespecial_bounds(multiplier_poly(t, cfg.budget));
                    r.status = CheckResult::Status::Pass;
                    r.detail = std::to_string(rep.entries.size()) + " coefficients within the floor";
                }));
            }
    }

    if (scope_on(scopes, "base27")) {
        // the small rows are computed directly (exactly, unless the whole run
        // is truncated); the preperiod-6 row always runs truncated
        RunConfig exact_cfg = cfg;
        if (cfg.mode != RunConfig::Mode::Truncated) exact_cfg.mode = RunConfig::Mode::Exact;
        RunConfig trunc_cfg = cfg;
        trunc_cfg.mode = RunConfig::Mode::Truncated;
        std::vector<std::pair<MisiurewiczType, bool>> cases; // (target, truncated?)
        for (unsigned n = 1; n <= 5; n++) cases.push_back({MisiurewiczType(3, n), false});
        for (unsigned n = 1; n <= 7; n++) cases.push_back({MisiurewiczType(4, n), false});
        for (unsigned n = 1; n <= 9; n++) cases.push_back({MisiurewiczType(5, n), false});
        for (unsigned n = 6; n <= 11; n++) cases.push_back({MisiurewiczType(6, n), true});
        for (const auto& [t, truncated] : cases) {
            out.push_back(timed_check(
                "base27",
                std::string(truncated ? "truncated" : "direct") + " 2-special P_" + t.to_string(),
                [&, t = t, truncated = truncated](CheckResult& r) {
                    const auto rep = direct_two_special(t, truncated ? trunc_cfg : exact_cfg);
                    switch (rep.verdict) {
                        case TwoSpecialReport::Verdict::Proven:
                            r.status = CheckResult::Status::Pass;
                            break;
                        case TwoSpecialReport::Verdict::Inconclusive:
                            // never acceptable on the directly-computed rows
                            r.status = truncated ? CheckResult::Status::Inconclusive
                                                 : CheckResult::Status::Fail;
                            break;
                        case TwoSpecialReport::Verdict::Refuted:
                            r.status = CheckResult::Status::Fail;
                            break;
                    }
                    r.detail = std::string(to_string(rep.verdict)) +
                               ", v2(tr) = " + rep.trace_valuation.to_string();
                    if (!rep.note.empty()) r.detail += " (" + rep.note + ")";
                }));
        }
    }

    if (scope_on(scopes, "table1")) {
        const auto& rows = trace_valuation_rows();
        std::vector<CheckResult> cells(rows.size());
        parallel_for(rows.size(), effective_threads(cfg),
                     [&](std::size_t i) { cells[i] = detail::check_table_row(rows[i], cfg); });
        for (auto& c : cells) out.push_back(std::move(c));
    }

    if (scope_on(scopes, "special-res")) {
        std::vector<MisiurewiczType> proven = {{2, 3}, {2, 5}};
        for (unsigned n = 1; n <= 5; n++) proven.push_back(MisiurewiczType(3, n));
        for (unsigned n = 1; n <= 7; n++) proven.push_back(MisiurewiczType(4, n));
        for (unsigned n = 1; n <= 9; n++) proven.push_back(MisiurewiczType(5, n));
        for (const auto& t : proven) {
            if (misiurewicz_degree(t) > 64) continue;
            out.push_back(timed_check("special-res", "cyclotomic resultants of P_" + t.to_string(),
                                      [&, t](CheckResult& r) {
                RunConfig c2 = cfg;
                c2.mode = RunConfig::Mode::Exact;
                const auto rep = direct_two_special(t, c2);
                if (!rep.proven()) {
                    r.status = CheckResult::Status::Fail;
                    r.detail = "not proven 2-special";
                    return;
                }
                const auto P = multiplier_poly(t, cfg.budget);
                std::vector<unsigned long> flagged;
                res_cyclotomic_check(P.poly, 20, &flagged);
                r.status = flagged.empty() ? CheckResult::Status::Pass : CheckResult::Status::Fail;
                r.detail = flagged.empty() ? "|Res(P, Phi_l)| > 1 for l = 1..20"
                                           : "flagged l = " + std::to_string(flagged.front());
            }));
        }
    }

    if (scope_on(scopes, "remark-m2")) {
        for (unsigned long p : {3ul, 5ul, 7ul}) {
            out.push_back(timed_check("remark-m2", "tr(P_{2," + std::to_string(p) + "}) three ways",
                                      [&, p](CheckResult& r) {
                const Int closed = int_pow2(2 * p) - int_pow2(p + 1);
                const Int formula = trace_closed_form(2, p, cfg.budget);
                const Int mobius = trace_mobius(MisiurewiczType(2, static_cast<unsigned>(p)), cfg.budget);
                const Int full = multiplier_poly(MisiurewiczType(2, static_cast<unsigned>(p)), cfg.budget).trace();
                const bool ok = closed == formula && closed == mobius && closed == full;
                r.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
                r.detail = "tr = " + closed.get_str();
            }));
        }
    }

    if (scope_on(scopes, "certify")) {
        out.push_back(timed_check("certify", "non-unit certificate (2,6,3)", [&](CheckResult& r) {
            const auto outc = certify_nonunit(2, 6, 3, cfg);
            if (!outc.certificate) {
                r.status = CheckResult::Status::Inconclusive;
                r.detail = outc.report.note;
                return;
            }
            const auto& cert = *outc.certificate;
            const bool replayed = replay_certificate(cert, cfg);
            bool assumptions = cert.assumed_hypotheses.size() == 2;
            for (const auto& h : cert.assumed_hypotheses)
                assumptions = assumptions && h.find("irreducible over Q") != std::string::npos;
            r.status = replayed && assumptions ? CheckResult::Status::Pass : CheckResult::Status::Fail;
            r.detail = replayed ? "replay reproduces identical facts" : "replay diverged";
        }));
    }

    return out;
}

} // namespace mzp

#endif
