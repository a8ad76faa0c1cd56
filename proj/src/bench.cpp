#include "srcid/bench.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "srcid/det_rep.hpp"
#include "srcid/engine.hpp"
#include "srcid/source.hpp"

namespace srcid {

namespace {

double time_call(const std::function<Complex()>& fn, const BenchConfig& cfg) {
    using clock = std::chrono::steady_clock;
    volatile double sink = 0.0;
    double best = 0.0;
    for (int b = 0; b < cfg.batches; ++b) {
        long calls = 0;
        const auto start = clock::now();
        double elapsed = 0.0;
        do {
            sink = sink + fn().real();
            ++calls;
            elapsed = std::chrono::duration<double, std::micro>(clock::now() - start).count();
        } while (elapsed < cfg.min_batch_ms * 1000.0);
        const double per = elapsed / static_cast<double>(calls);
        if (b == 0 || per < best) best = per;
    }
    return best;
}

const std::vector<DetFamily> kBenchFamilies = {DetFamily::MPT, DetFamily::ScalarProduct, DetFamily::DWBC,
                                               DetFamily::BS, DetFamily::BSLimit};

template <class Params, class Source, class Det>
void bench_regime(const std::string& name, Regime regime, const BenchConfig& cfg, Params (*draw)(Sampler<Complex>&, int),
                  Source source, Det det, std::vector<BenchRow>& rows) {
    for (int n : cfg.sizes) {
        Sampler<Complex> s(point_seed(cfg.seed, "bench:" + name, 0, n, n, 0), 1e-3);
        const Params params = draw(s, n);
        const AuxParams<Complex> aux = sample_aux(s, n, n);
        const double subset = time_call([&] { return source(params); }, cfg);
        for (DetFamily fam : kBenchFamilies) {
            if (!family_available(regime, fam)) continue;
            const double d = time_call([&] { return det(params, fam, aux); }, cfg);
            rows.push_back({name, to_string(fam), n, subset, d, subset / d});
        }
    }
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    auto want = [&](const char* r) { return !cfg.regime || *cfg.regime == "all" || *cfg.regime == r; };
    if (want("elliptic")) {
        bench_regime<EllipticParams<Complex>>(
            "elliptic", Regime::Elliptic, cfg,
            +[](Sampler<Complex>& s, int n) { return sample_elliptic(s, n); },
            [](const auto& p) { return elliptic_source(p, Side::F); },
            [](const auto& p, DetFamily f, const auto& aux) { return det_rep(p, f, Side::F, aux); }, rows);
    }
    if (want("trig")) {
        bench_regime<TrigParams<Complex>>(
            "trig", Regime::Trig, cfg,
            +[](Sampler<Complex>& s, int n) { return sample_trig(s, n, n); },
            [](const auto& p) { return trig_source(p, Side::F); },
            [](const auto& p, DetFamily f, const auto& aux) { return det_rep(p, f, Side::F, aux); }, rows);
    }
    if (want("rational")) {
        bench_regime<RationalParams<Complex>>(
            "rational", Regime::Rational, cfg,
            +[](Sampler<Complex>& s, int n) { return sample_rational(s, n, n); },
            [](const auto& p) { return rational_source(p, Side::F); },
            [](const auto& p, DetFamily f, const auto& aux) { return det_rep(p, f, Side::F, aux); }, rows);
    }
    return rows;
}

bool ratios_increasing(const std::vector<BenchRow>& rows) {
    std::map<std::pair<std::string, std::string>, std::vector<const BenchRow*>> series;
    for (const BenchRow& r : rows) series[{r.regime, r.family}].push_back(&r);
    for (const auto& [key, list] : series)
        for (std::size_t i = 1; i < list.size(); ++i)
            if (!(list[i]->ratio > list[i - 1]->ratio)) return false;
    return true;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-9s %-14s %4s %14s %12s %12s\n", "regime", "family", "n", "subset_us", "det_us",
                  "ratio");
    os << buf;
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%-9s %-14s %4d %14.1f %12.2f %12.1f\n", r.regime.c_str(), r.family.c_str(),
                      r.n, r.subset_us, r.det_us, r.ratio);
        os << buf;
    }
    os << (ratios_increasing(rows) ? "ratio strictly increasing in n for every family\n"
                                   : "ratio NOT strictly increasing for some family\n");
    return os.str();
}

}  // namespace srcid
