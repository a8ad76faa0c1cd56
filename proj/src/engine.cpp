#include "srcid/engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace srcid {

void SamplingConfig::validate() const {
    if (!(tol_singular > 0.0)) throw DomainError("tol_singular must be positive");
    if (points && *points < 1) throw DomainError("points must be at least 1");
    if (tol_match && !(*tol_match > 0.0)) throw DomainError("tol_match must be positive");
    if (nmax && *nmax < 0) throw DomainError("nmax must be non-negative");
    if (threads < 0) throw DomainError("threads must be non-negative");
}

const std::vector<CaseDef>& case_registry() {
    static const std::vector<CaseDef> registry = [] {
        std::vector<CaseDef> out;
        register_source_cases(out);
        register_det_cases(out);
        register_special_cases(out);
        register_symmetrization_cases(out);
        register_wall_crossing_cases(out);
        return out;
    }();
    return registry;
}

const CaseDef* find_case(const std::string& id) {
    for (const CaseDef& def : case_registry())
        if (def.info.id == id) return &def;
    return nullptr;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

bool field_supported(const CaseInfo& info, FieldKind field) {
    return field == FieldKind::Complex ? info.complex_field : info.exact_field;
}

FieldKind effective_field(const CaseInfo& info, const SamplingConfig& config) {
    return config.field ? *config.field : info.preferred;
}

double effective_tol(const CaseInfo& info, FieldKind field, const SamplingConfig& config) {
    if (field == FieldKind::Exact) return 0.0;
    if (config.tol_match && !info.fixed_tol) return *config.tol_match;
    return info.complex_tol;
}

int effective_nmax(const CaseInfo& info, const SamplingConfig& config) {
    return config.nmax ? std::min(*config.nmax, info.hard_nmax) : info.default_nmax;
}

int effective_points(const CaseInfo& info, const SamplingConfig& config) {
    return config.points ? *config.points : info.default_points;
}

std::vector<const CaseDef*> select_cases(const Selection& sel, const SamplingConfig& config) {
    if (sel.regime && *sel.regime != "all" && *sel.regime != "elliptic" && *sel.regime != "trig" &&
        *sel.regime != "rational") {
        throw DomainError("unknown regime: " + *sel.regime);
    }
    auto regime_ok = [&](const CaseInfo& info) {
        return !sel.regime || *sel.regime == "all" || info.regime == *sel.regime;
    };
    auto field_ok = [&](const CaseInfo& info) { return !config.field || field_supported(info, *config.field); };

    for (const std::string& pat : sel.patterns) {
        const bool wildcard = pat.find_first_of("*?") != std::string::npos;
        if (!wildcard) {
            const CaseDef* def = find_case(pat);
            if (!def) throw DomainError("unknown case: " + pat);
            if (!field_ok(def->info))
                throw DomainError("case " + pat + " does not run in the " +
                                  (*config.field == FieldKind::Complex ? "complex" : "exact") + " field");
        } else {
            bool any = false;
            for (const CaseDef& def : case_registry()) any = any || glob_match(pat, def.info.id);
            if (!any) throw DomainError("no case matches: " + pat);
        }
    }

    std::vector<const CaseDef*> out;
    for (const CaseDef& def : case_registry()) {
        bool matched = sel.patterns.empty();
        for (const std::string& pat : sel.patterns) matched = matched || glob_match(pat, def.info.id);
        if (matched && regime_ok(def.info) && field_ok(def.info)) out.push_back(&def);
    }
    return out;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SRCID_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

template <Scalar T>
void evaluate_point(const Evaluator<T>& eval, const std::string& id, const SamplingConfig& config, PointRecord& rec) {
    rec.seed = point_seed(config.master_seed, id, rec.index, rec.shape.n, rec.shape.m, rec.shape.k);
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        rec.attempts = attempt + 1;
        Sampler<T> sampler(attempt == 0 ? rec.seed : splitmix64(rec.seed + static_cast<std::uint64_t>(attempt)),
                           config.tol_singular);
        try {
            Evaluation<T> ev = eval(sampler, rec.shape);
            rec.residual = ev.residual;
            rec.lhs = to_string(ev.lhs);
            rec.rhs = to_string(ev.rhs);
            return;
        } catch (const SingularError&) {
            continue;
        } catch (const std::exception& e) {
            rec.error = e.what();
            rec.residual = std::numeric_limits<double>::infinity();
            return;
        }
    }
    rec.error = "resampling cap exceeded";
    rec.residual = std::numeric_limits<double>::infinity();
}

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

VerificationReport verify_case(const CaseDef& def, const SamplingConfig& config) {
    config.validate();
    const CaseInfo& info = def.info;
    VerificationReport rep;
    rep.id = info.id;
    rep.anchor = info.anchor;
    rep.field = effective_field(info, config);
    if (!field_supported(info, rep.field)) throw DomainError("case " + info.id + " does not run in this field");
    rep.tol = effective_tol(info, rep.field, config);

    const auto start = std::chrono::steady_clock::now();
    const std::vector<Shape> shapes = def.shapes(effective_nmax(info, config));
    const int points = effective_points(info, config);
    for (int index = 0; index < points; ++index) {
        for (const Shape& sh : shapes) {
            PointRecord rec;
            rec.index = index;
            rec.shape = sh;
            rep.points.push_back(rec);
        }
    }
    parallel_for(rep.points.size(), resolve_threads(config.threads), [&](std::size_t i) {
        if (rep.field == FieldKind::Complex) {
            evaluate_point(def.complex_eval, info.id, config, rep.points[i]);
        } else {
            evaluate_point(def.exact_eval, info.id, config, rep.points[i]);
        }
    });

    rep.pass = true;
    for (const PointRecord& rec : rep.points) {
        if (!rec.error.empty()) {
            rep.pass = false;
            continue;
        }
        rep.max_rel_err = std::max(rep.max_rel_err, rec.residual);
        const bool ok = rep.field == FieldKind::Exact ? rec.residual == 0.0 : rec.residual <= rep.tol;
        if (!ok) rep.pass = false;
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_case(const std::string& id, const SamplingConfig& config) {
    const CaseDef* def = find_case(id);
    if (!def) throw DomainError("unknown case: " + id);
    return verify_case(*def, config);
}

}  // namespace srcid
