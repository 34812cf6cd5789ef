// Acceptance suite: runs every verification criterion end to end and prints
// one line per criterion. Exit code 0 only if all criteria hold.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mzp/verify.hpp"

using namespace mzp;

namespace {

struct Criterion {
    int id;
    std::string summary;
    bool pass;
    double seconds;
};

using Results = std::vector<CheckResult>;

Results by_scope(const Results& all, const std::string& scope) {
    Results out;
    for (const auto& r : all)
        if (r.scope == scope) out.push_back(r);
    return out;
}

bool all_pass(const Results& rs) {
    if (rs.empty()) return false;
    for (const auto& r : rs)
        if (r.status != CheckResult::Status::Pass) return false;
    return true;
}

double total_seconds(const Results& rs) {
    double ms = 0;
    for (const auto& r : rs) ms += r.ms;
    return ms / 1000.0;
}

std::string count_passing(const Results& rs) {
    std::size_t pass = 0;
    for (const auto& r : rs) pass += r.status == CheckResult::Status::Pass;
    return std::to_string(pass) + "/" + std::to_string(rs.size());
}

} // namespace

int main() {
    RunConfig cfg; // both-mode: exact cross-checks up to m = 6, truncated beyond
    std::vector<Criterion> criteria;

    const auto t_start = std::chrono::steady_clock::now();
    const Results all = run_battery(cfg, {"all"});

    { // 1: the trace-valuation table, all 56 rows, including the exceedances
        const Results rs = by_scope(all, "table1");
        bool ok = rs.size() == 56 && all_pass(rs);
        unsigned exceed = 0;
        for (const auto& r : rs) exceed += r.detail.find("exceeds m+p") != std::string::npos;
        ok = ok && exceed == 3;
        const double secs = total_seconds(rs);
        ok = ok && secs < 1800;
        criteria.push_back({1,
                            "trace-valuation table " + count_passing(rs) + " rows, " +
                                std::to_string(exceed) + " exceedances, exact cross-check for m <= 6",
                            ok, secs});
    }

    { // 2: tr(P_{2,p}) = 2^(2p) - 2^(p+1) three ways for p in {3,5,7}
        const Results rs = by_scope(all, "remark-m2");
        criteria.push_back({2, "preperiod-2 closed form, three routes, " + count_passing(rs) + " primes",
                            rs.size() == 3 && all_pass(rs), total_seconds(rs)});
    }

    { // 3: coefficient matches between P_{m,n}^2 and P_{m+1,n}
        Results rs;
        for (const auto& r : by_scope(all, "square"))
            if (r.name.rfind("coefficient match", 0) == 0) rs.push_back(r);
        const double secs = total_seconds(rs);
        criteria.push_back({3, "squared-polynomial coefficient matches " + count_passing(rs) + " pairs",
                            rs.size() == 5 && all_pass(rs) && secs < 300, secs});
    }

    { // 4: trace doubling on the same pairs
        Results rs;
        for (const auto& r : by_scope(all, "square"))
            if (r.name.rfind("trace doubles", 0) == 0) rs.push_back(r);
        criteria.push_back({4, "trace doubling " + count_passing(rs) + " pairs",
                            rs.size() == 5 && all_pass(rs), total_seconds(rs)});
    }

    { // 5: valuation floors on every constructed multiplier polynomial
        const Results rs = by_scope(all, "prespecial");
        criteria.push_back({5, "coefficient valuation floors on " + count_passing(rs) + " polynomials",
                            !rs.empty() && all_pass(rs), total_seconds(rs)});
    }

    { // 6: 21 direct base cases proven; the six truncated ones never refuted
        const Results rs = by_scope(all, "base27");
        Results direct, truncated;
        for (const auto& r : rs)
            (r.name.rfind("direct", 0) == 0 ? direct : truncated).push_back(r);
        bool ok = direct.size() == 21 && all_pass(direct) && truncated.size() == 6;
        std::size_t proven = 0;
        for (const auto& r : truncated) {
            if (r.status == CheckResult::Status::Fail) ok = false;
            proven += r.status == CheckResult::Status::Pass;
        }
        criteria.push_back({6,
                            "base cases: " + count_passing(direct) + " direct proven, " +
                                std::to_string(proven) + "/6 truncated proven, none refuted",
                            ok, total_seconds(rs)});
    }

    { // 7: nontrivial cyclotomic resultants for every proven P of degree <= 64
        const Results rs = by_scope(all, "special-res");
        criteria.push_back({7, "cyclotomic resultants |Res| > 1, l = 1..20, " + count_passing(rs) + " polynomials",
                            !rs.empty() && all_pass(rs), total_seconds(rs)});
    }

    { // 8: the residue-formula T equals the trace-based T
        const Results rs = by_scope(all, "contour");
        criteria.push_back({8, "residue-formula oracle: worked instance and 200 randomized instances",
                            rs.size() == 2 && all_pass(rs), total_seconds(rs)});
    }

    { // 9: the identity suite
        const Results rs = by_scope(all, "lemmas");
        criteria.push_back({9, "identity suite " + count_passing(rs) + " groups",
                            rs.size() == 5 && all_pass(rs), total_seconds(rs)});
    }

    { // 10: replayable non-unit certificate for (2,6,3)
        const Results rs = by_scope(all, "certify");
        criteria.push_back({10, "replayable certificate (2,6,3) with both irreducibility assumptions",
                            rs.size() == 1 && all_pass(rs), total_seconds(rs)});
    }

    bool ok = true;
    for (const auto& c : criteria) {
        std::printf("criterion %2d: %s  %s  [%.1f s]\n", c.id, c.pass ? "PASS" : "FAIL",
                    c.summary.c_str(), c.seconds);
        ok = ok && c.pass;
    }

    // every failing battery item, for diagnosis
    for (const auto& r : all)
        if (r.status != CheckResult::Status::Pass)
            std::printf("  [%s] %s :: %s -- %s\n", to_string(r.status), r.scope.c_str(),
                        r.name.c_str(), r.detail.c_str());

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    std::printf("RESULT: %s (%zu/10 criteria, %.1f s total)\n", ok ? "ALL CRITERIA PASS" : "FAILURES",
                static_cast<std::size_t>(std::count_if(criteria.begin(), criteria.end(),
                                                       [](const Criterion& c) { return c.pass; })),
                wall);
    return ok ? 0 : 1;
}
