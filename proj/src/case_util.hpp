#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "srcid/engine.hpp"

namespace srcid::cases {

template <class S>
using field_of = typename std::decay_t<S>::value_type;

inline std::vector<Shape> pairs(int lo, int hi) {
    std::vector<Shape> out;
    for (int n = lo; n <= hi; ++n)
        for (int m = lo; m <= hi; ++m) out.push_back({n, m, 0});
    return out;
}

inline std::vector<Shape> square(int lo, int hi) {
    std::vector<Shape> out;
    for (int n = lo; n <= hi; ++n) out.push_back({n, n, 0});
    return out;
}

// m <= n (or n <= m with swapped = true).
inline std::vector<Shape> ordered(int lo, int hi, bool n_le_m) {
    std::vector<Shape> out;
    for (int n = lo; n <= hi; ++n)
        for (int m = lo; m <= hi; ++m)
            if (n_le_m ? n <= m : m <= n) out.push_back({n, m, 0});
    return out;
}

inline std::vector<Shape> with_subsets(int lo, int hi) {
    std::vector<Shape> out;
    for (int n = lo; n <= hi; ++n)
        for (int k = 0; k <= n; ++k) out.push_back({n, 0, k});
    return out;
}

struct CaseBuilder {
    CaseDef def;

    CaseBuilder(std::string id, std::string anchor, std::string regime, std::string group, std::string description) {
        def.info.id = std::move(id);
        def.info.anchor = std::move(anchor);
        def.info.regime = std::move(regime);
        def.info.group = std::move(group);
        def.info.description = std::move(description);
        if (def.info.regime == "elliptic") def.info.complex_tol = 1e-8;
    }
    CaseBuilder& sizes(int default_nmax, int hard_nmax) {
        def.info.default_nmax = default_nmax;
        def.info.hard_nmax = hard_nmax;
        return *this;
    }
    CaseBuilder& points(int p) {
        def.info.default_points = p;
        return *this;
    }
    CaseBuilder& tol(double t, bool fixed = false) {
        def.info.complex_tol = t;
        def.info.fixed_tol = fixed;
        return *this;
    }
    template <class F>
    CaseBuilder& shapes(F f) {
        def.shapes = std::move(f);
        return *this;
    }
    // Generic evaluator usable in both fields.
    template <class F>
    CaseBuilder& both(F f) {
        def.complex_eval = f;
        def.exact_eval = f;
        def.info.complex_field = def.info.exact_field = true;
        def.info.preferred = FieldKind::Exact;
        return *this;
    }
    template <class F>
    CaseBuilder& complex_only(F f) {
        def.complex_eval = f;
        def.info.complex_field = true;
        def.info.exact_field = false;
        def.info.preferred = FieldKind::Complex;
        return *this;
    }
    template <class F>
    CaseBuilder& exact_only(F f) {
        def.exact_eval = f;
        def.info.exact_field = true;
        def.info.complex_field = false;
        def.info.preferred = FieldKind::Exact;
        return *this;
    }
    CaseBuilder& prefer(FieldKind f) {
        def.info.preferred = f;
        return *this;
    }
    void into(std::vector<CaseDef>& out) { out.push_back(std::move(def)); }
};

// The evaluation with the larger residual (NaN counts as larger).
template <Scalar T>
Evaluation<T> worse(Evaluation<T> a, Evaluation<T> b) {
    return (b.residual > a.residual || b.residual != b.residual) ? std::move(b) : std::move(a);
}

}  // namespace srcid::cases
