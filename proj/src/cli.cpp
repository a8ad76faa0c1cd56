#include "srcid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "srcid/bench.hpp"
#include "srcid/report.hpp"

namespace srcid {

namespace {

struct CliOptions {
    std::uint64_t seed = 0;
    std::optional<int> points;
    std::optional<double> tol;
    double tol_singular = 1e-3;
    std::optional<int> nmax;
    std::string regime = "all";
    std::optional<std::string> field;
    std::vector<std::string> cases;
    std::string out_path;
    std::string format = "text";
    bool no_timings = false;
    int threads = 0;
};

void add_sampling(CLI::App* app, CliOptions& o) {
    app->add_option("--seed", o.seed, "master seed");
    app->add_option("--points", o.points, "points per shape")->check(CLI::PositiveNumber);
    app->add_option("--tol-singular", o.tol_singular, "rejection distance of protected denominators")
        ->check(CLI::PositiveNumber);
    app->add_option("--nmax", o.nmax, "size bound (clamped per case)")->check(CLI::NonNegativeNumber);
    app->add_option("--regime", o.regime, "elliptic | trig | rational | all")
        ->check(CLI::IsMember({"elliptic", "trig", "rational", "all"}));
    app->add_option("--field", o.field, "complex | exact")->check(CLI::IsMember({"complex", "exact"}));
    app->add_option("--threads", o.threads, "worker threads (0: SRCID_THREADS or hardware)")
        ->check(CLI::NonNegativeNumber);
}

void add_output(CLI::App* app, CliOptions& o) {
    app->add_option("--out", o.out_path, "output path (default: stdout)");
    app->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
}

SamplingConfig to_config(const CliOptions& o) {
    SamplingConfig c;
    c.master_seed = o.seed;
    c.points = o.points;
    c.tol_singular = o.tol_singular;
    c.tol_match = o.tol;
    c.nmax = o.nmax;
    if (o.field) c.field = parse_field(*o.field);
    c.threads = o.threads;
    return c;
}

Selection to_selection(const CliOptions& o) {
    Selection sel;
    sel.patterns = o.cases;
    if (o.regime != "all") sel.regime = o.regime;
    return sel;
}

void emit(const std::string& text, const CliOptions& o, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + o.out_path);
    f << text;
}

int cmd_list(const CliOptions& o, std::ostream& out) {
    SamplingConfig config = to_config(o);
    for (const CaseDef* def : select_cases(to_selection(o), config)) {
        const CaseInfo& i = def->info;
        std::string fields = i.exact_field ? "exact" : "";
        if (i.complex_field) fields += fields.empty() ? "complex" : ",complex";
        out << i.id << "\t" << i.anchor << "\t" << i.regime << "\t" << fields << "\t" << i.description << "\n";
    }
    return 0;
}

int cmd_verify(const CliOptions& o, std::ostream& out) {
    const RunReport rep = run_verification(to_selection(o), to_config(o));
    emit(render(rep, parse_report_format(o.format), !o.no_timings), o, out);
    if (!o.out_path.empty()) {
        const auto passed = std::count_if(rep.cases.begin(), rep.cases.end(), [](const auto& c) { return c.pass; });
        out << passed << "/" << rep.cases.size() << " cases passed\n";
    }
    return rep.all_pass() ? 0 : 1;
}

template <Scalar T>
nlohmann::ordered_json values(const std::vector<T>& xs) {
    auto j = nlohmann::ordered_json::array();
    for (const T& x : xs) j.push_back(to_string(x));
    return j;
}

template <Scalar T>
void sample_into(nlohmann::ordered_json& list, const std::string& regime, const CliOptions& o, int points,
                 int nmax) {
    const SamplingConfig config = to_config(o);
    for (int idx = 0; idx < points; ++idx) {
        for (int n = 0; n <= nmax; ++n) {
            for (int m = 0; m <= nmax; ++m) {
                if (regime == "elliptic" && n != m) continue;
                const std::string key = "sample:" + regime;
                const std::uint64_t seed = point_seed(config.master_seed, key, idx, n, m, 0);
                nlohmann::ordered_json e;
                e["regime"] = regime;
                e["field"] = FieldTraits<T>::name;
                e["index"] = idx;
                e["n"] = n;
                e["m"] = m;
                e["seed"] = seed;
                for (int attempt = 0; attempt < kResampleCap; ++attempt) {
                    Sampler<T> s(attempt == 0 ? seed : splitmix64(seed + static_cast<std::uint64_t>(attempt)),
                                 config.tol_singular);
                    try {
                        nlohmann::ordered_json p;
                        if (regime == "trig") {
                            const auto t = sample_trig(s, n, m);
                            p = {{"q", to_string(t.q)}, {"z", to_string(t.z)}, {"u", values(t.u)}, {"v", values(t.v)}};
                        } else if (regime == "rational") {
                            const auto r = sample_rational(s, n, m);
                            p = {{"c", to_string(r.c)}, {"z", to_string(r.z)}, {"u", values(r.u)}, {"v", values(r.v)}};
                        } else if constexpr (!is_exact_v<T>) {
                            const auto el = sample_elliptic(s, n);
                            p = {{"p", to_string(el.p)}, {"q", to_string(el.q)}, {"lambda", to_string(el.lambda)},
                                 {"z", to_string(el.z)},  {"u", values(el.u)},     {"v", values(el.v)}};
                        }
                        e["attempts"] = attempt + 1;
                        e["params"] = p;
                        break;
                    } catch (const SingularError&) {
                    }
                }
                list.push_back(std::move(e));
            }
        }
    }
}

int cmd_sample(const CliOptions& o, std::ostream& out) {
    to_config(o).validate();
    const int points = o.points.value_or(3);
    const int nmax = std::min(o.nmax.value_or(2), 6);
    auto list = nlohmann::ordered_json::array();
    for (const std::string regime : {"elliptic", "trig", "rational"}) {
        if (o.regime != "all" && o.regime != regime) continue;
        const bool exact = o.field ? *o.field == "exact" : regime != "elliptic";
        if (exact && regime == "elliptic") {
            if (o.regime == "elliptic") throw DomainError("elliptic parameters are complex only");
            continue;
        }
        if (exact) {
            sample_into<Rational>(list, regime, o, points, nmax);
        } else {
            sample_into<Complex>(list, regime, o, points, nmax);
        }
    }
    if (o.format == "csv") throw DomainError("sample supports json and text output");
    if (o.format == "json") {
        emit(list.dump(2) + "\n", o, out);
    } else {
        std::ostringstream os;
        for (const auto& e : list)
            os << e["regime"].get<std::string>() << " n=" << e["n"] << " m=" << e["m"] << " index=" << e["index"]
               << " seed=" << e["seed"] << " " << e["params"].dump() << "\n";
        emit(os.str(), o, out);
    }
    return 0;
}

int cmd_bench(const CliOptions& o, const std::vector<int>& sizes, double batch_ms, std::ostream& out) {
    BenchConfig cfg;
    cfg.seed = o.seed;
    cfg.sizes = sizes;
    cfg.min_batch_ms = batch_ms;
    if (o.regime != "all") cfg.regime = o.regime;
    const auto rows = run_bench(cfg);
    if (o.format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const BenchRow& r : rows)
            j.push_back({{"regime", r.regime}, {"family", r.family}, {"n", r.n}, {"subset_us", r.subset_us},
                         {"det_us", r.det_us}, {"ratio", r.ratio}});
        emit(nlohmann::ordered_json{{"rows", j}, {"ratio_increasing", ratios_increasing(rows)}}.dump(2) + "\n", o,
             out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "regime,family,n,subset_us,det_us,ratio\n";
        for (const BenchRow& r : rows)
            os << r.regime << ',' << r.family << ',' << r.n << ',' << r.subset_us << ',' << r.det_us << ',' << r.ratio
               << "\n";
        emit(os.str(), o, out);
    } else {
        emit(bench_table(rows), o, out);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Source-function identity verification"};
    app.require_subcommand(1, 1);
    CliOptions o;

    auto* list = app.add_subcommand("list", "print the case registry with anchors");
    list->add_option("--case", o.cases, "case id or glob (repeatable)");
    list->add_option("--regime", o.regime, "elliptic | trig | rational | all")
        ->check(CLI::IsMember({"elliptic", "trig", "rational", "all"}));
    list->add_option("--field", o.field, "complex | exact")->check(CLI::IsMember({"complex", "exact"}));

    auto* verify = app.add_subcommand("verify", "run cases and write a report");
    add_sampling(verify, o);
    add_output(verify, o);
    verify->add_option("--tol", o.tol, "match tolerance in the complex field")->check(CLI::PositiveNumber);
    verify->add_option("--case", o.cases, "case id or glob (repeatable)");
    verify->add_flag("--no-timings", o.no_timings, "omit timings from the report");

    auto* sample = app.add_subcommand("sample", "dump sampled parameter sets");
    add_sampling(sample, o);
    add_output(sample, o);

    std::vector<int> sizes = {8, 10, 12};
    double batch_ms = 20.0;
    auto* bench = app.add_subcommand("bench", "time subset sums against determinant families");
    bench->add_option("--seed", o.seed, "master seed");
    bench->add_option("--regime", o.regime, "elliptic | trig | rational | all")
        ->check(CLI::IsMember({"elliptic", "trig", "rational", "all"}));
    bench->add_option("--sizes", sizes, "values of n = m")->check(CLI::Range(1, 12));
    bench->add_option("--batch-ms", batch_ms, "minimum duration of one timing batch")->check(CLI::PositiveNumber);
    add_output(bench, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list) return cmd_list(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*sample) return cmd_sample(o, out);
        if (*bench) return cmd_bench(o, sizes, batch_ms, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace srcid
