// Acceptance run: one line per criterion, exit 0 when every criterion passes
// apart from the listed known failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srcid/bench.hpp"
#include "srcid/cli.hpp"
#include "srcid/engine.hpp"
#include "srcid/report.hpp"

using namespace srcid;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Cases that fail on the current implementation for a documented reason.
const std::set<std::string> kKnownFailing = {
    "det_elliptic_MPT_F", "det_elliptic_MPT_G", "det_elliptic_BS_F", "det_elliptic_BS_G",
    "det_trig_MPT_F",     "det_trig_MPT_G",     "det_trig_BS_F",     "det_trig_BS_G",
    "det_rational_MPT_F", "det_rational_MPT_G", "det_rational_BS_F", "det_rational_BS_G",
    "det_identity_elliptic_MPT", "bs_large_delta_trig_F", "bs_large_delta_trig_G",
    "bs_large_delta_rational_F", "bs_large_delta_rational_G", "deg_elliptic_to_trig",
    "deg_trig_to_rational",
};

struct Group {
    std::vector<std::string> patterns;
    std::optional<FieldKind> field;
    std::optional<int> nmax;
    std::optional<int> points;
    std::optional<double> tol;
};

struct Outcome {
    bool pass = true;
    bool known_only = true;  // every failure is in kKnownFailing
    double max_err = 0.0;
    double seconds = 0.0;
    std::size_t cases = 0;
    std::vector<std::string> failed;
};

Outcome run_groups(const std::vector<Group>& groups) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (const Group& g : groups) {
        SamplingConfig cfg;
        cfg.master_seed = kSeed;
        cfg.field = g.field;
        cfg.nmax = g.nmax;
        cfg.points = g.points;
        cfg.tol_match = g.tol;
        const RunReport rep = run_verification(Selection{g.patterns, {}}, cfg);
        for (const VerificationReport& c : rep.cases) {
            ++o.cases;
            if (std::isfinite(c.max_rel_err)) o.max_err = std::max(o.max_err, c.max_rel_err);
            if (!c.pass) {
                o.pass = false;
                o.failed.push_back(c.id);
                if (!kKnownFailing.count(c.id)) o.known_only = false;
            }
        }
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
}

int unexpected = 0;

void report(int index, const std::string& title, const Outcome& o, const std::string& extra = "") {
    const char* status = o.pass ? "PASS" : (o.known_only ? "FAIL (known)" : "FAIL");
    if (!o.pass && !o.known_only) ++unexpected;
    std::printf("%s  %2d. %s: %zu cases, max_rel_err=%.3g, %.1f s%s", status, index, title.c_str(), o.cases,
                o.max_err, o.seconds, extra.c_str());
    if (!o.failed.empty()) {
        std::printf("; failing:");
        for (const auto& id : o.failed) std::printf(" %s", id.c_str());
    }
    std::printf("\n");
    std::fflush(stdout);
}

}  // namespace

int main() {
    const auto exact = FieldKind::Exact;
    const auto complex = FieldKind::Complex;

    {
        Outcome o = run_groups({{{"rational_F_eq_G", "rational_P_eq_Q"}, exact, 5, 25, {}}});
        const bool fast = o.seconds <= 30.0;
        if (!fast) {
            o.pass = false;
            o.known_only = false;
        }
        report(1, "rational source identity, exact, n,m <= 5, 25 points, <= 30 s", o);
    }
    report(2, "trigonometric source identity, exact, n,m <= 5, 25 points",
           run_groups({{{"trig_F_eq_G", "trig_P_eq_Q", "trig_n_gt_m_reduction"}, exact, 5, 25, {}}}));
    report(3, "elliptic source identity, complex, n <= 4, 25 points, tol 1e-8",
           run_groups({{{"elliptic_F_eq_G", "elliptic_P_eq_Q"}, complex, 4, 25, 1e-8}}));
    report(4, "determinant representations against the subset sums, two aux draws",
           run_groups({{{"det_trig_*", "det_rational_*", "ik_equals_P"}, exact, 4, 10, {}},
                       {{"det_elliptic_MPT_*", "det_elliptic_BS_*", "det_identity_elliptic_MPT"}, complex, 4, 10, 1e-8},
                       {{"bs_large_delta_*"}, complex, 4, 10, {}}}));
    report(5, "Frobenius and elliptic Vandermonde, n <= 5, 25 points, tol 1e-9; p = 0 forms exact",
           run_groups({{{"det_frobenius", "det_elliptic_vandermonde"}, complex, 5, 25, 1e-9},
                       {{"det_trig_frobenius", "det_trig_vandermonde", "det_cauchy_vandermonde"}, exact, 5, 25, {}}}));
    report(6, "specializations: vanishing, evaluations, quasi-periodicity",
           run_groups({{{"spec_trig_*", "spec_rational_*"}, exact, {}, {}, {}},
                       {{"spec_elliptic_*"}, complex, {}, {}, 1e-8}}));
    report(7, "degeneration: extended trig and lambda = 0 exact, elliptic -> trig 1e-4, trig -> rational rate",
           run_groups({{{"deg_extended_trig", "deg_lambda_zero"}, exact, 5, {}, {}},
                       {{"deg_elliptic_to_trig", "deg_elliptic_to_trig_rate", "deg_trig_to_rational",
                         "deg_trig_to_rational_rate", "deg_trig_to_rational_rate_balanced"},
                        complex, {}, {}, {}}}));
    report(8, "Lascoux symmetrization formulas, exact, n <= 6, n = 2 expansion, n = 1 and n = 2 closed forms",
           run_groups({{{"lascoux_*", "divided_difference_chain"}, exact, 6, {}, {}}}));
    report(9, "wall-crossing, gamma-filtered K-theoretic formula, hook identity and its t -> 1 limit",
           run_groups({{{"wc_coeff", "wc_K_gamma", "wc_K_singletons", "wc_geometric", "wc_rational"}, exact, 5, {}, {}},
                       {{"wc_hook", "wc_hook_t1"}, exact, 6, {}, {}}}));
    report(10, "q-identities, exact, n <= 7",
           run_groups({{{"qid_*"}, exact, 7, {}, {}}}));

    {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<std::string> args = {"verify", "--regime", "rational", "--seed", "7", "--points", "3",
                                               "--no-timings"};
        std::ostringstream a, b, err;
        (void)run_cli(args, a, err);
        (void)run_cli(args, b, err);
        const bool same = !a.str().empty() && a.str() == b.str();

        BenchConfig bc;
        bc.seed = kSeed;
        const auto rows = run_bench(bc);
        const bool increasing = ratios_increasing(rows);

        Outcome o;
        o.pass = same && increasing;
        o.known_only = false;
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.cases = rows.size();
        report(11, "determinism of verify reports and bench ratio increasing over n = 8, 10, 12", o,
               std::string(", reports ") + (same ? "identical" : "differ") + ", ratios " +
                   (increasing ? "increasing" : "not increasing"));
        if (!increasing) std::cout << bench_table(rows);
    }

    std::printf("%s\n", unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: unexpected failures");
    return unexpected == 0 ? 0 : 1;
}
