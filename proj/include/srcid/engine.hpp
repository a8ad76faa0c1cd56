#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "srcid/det_rep.hpp"
#include "srcid/field.hpp"
#include "srcid/params.hpp"

namespace srcid {

inline constexpr int kResampleCap = 1000;

struct SamplingConfig {
    std::uint64_t master_seed = 0;
    std::optional<int> points;         // per-case default when unset
    double tol_singular = 1e-3;
    std::optional<double> tol_match;   // per-case default when unset
    std::optional<FieldKind> field;    // per-case preferred field when unset
    std::optional<int> nmax;           // per-case default size bound when unset
    int threads = 0;                   // 0: SRCID_THREADS or hardware concurrency

    void validate() const;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(const std::string& s);
std::uint64_t point_seed(std::uint64_t master, const std::string& case_id, int index, int n, int m, int k);

// Seeded draws for one sampling attempt. protect() rejects the attempt when a
// value is within tol_singular of zero (complex) or exactly zero (exact).
template <Scalar T>
class Sampler {
public:
    using value_type = T;

    Sampler(std::uint64_t seed, double tol_singular);

    T generic();                  // complex: modulus [0.2, 3], uniform argument
    T nonzero() { return generic(); }
    T base();                     // |q| in [0.2, 0.8] or [1.25, 5]
    T nome();                     // 0 < |p| <= 0.5, complex only
    T small_rational(int bound);  // nonzero num/den with |num|, den <= bound
    T rational_in(int lo, int hi);  // rational in [lo, hi]
    long integer(long lo, long hi);
    double real(double lo, double hi);
    std::vector<T> generic_vector(std::size_t k);

    void protect(const T& x) const;
    double tol_singular() const { return tol_; }
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    double tol_;
};

// General-position draws for each regime. Protected denominators are the
// elementary factors of the source functions.
template <Scalar T>
TrigParams<T> sample_trig(Sampler<T>& s, std::size_t n, std::size_t m, bool with_lambda = false);
template <Scalar T>
RationalParams<T> sample_rational(Sampler<T>& s, std::size_t n, std::size_t m);
EllipticParams<Complex> sample_elliptic(Sampler<Complex>& s, std::size_t n);
template <Scalar T>
AuxParams<T> sample_aux(Sampler<T>& s, std::size_t n, std::size_t m);

template <Scalar T>
void protect_trig(Sampler<T>& s, const TrigParams<T>& p);
template <Scalar T>
void protect_rational(Sampler<T>& s, const RationalParams<T>& p);
void protect_elliptic(Sampler<Complex>& s, const EllipticParams<Complex>& p);

struct Shape {
    int n = 0;
    int m = 0;
    int k = 0;
};

template <Scalar T>
struct Evaluation {
    T lhs;
    T rhs;
    double residual;
};

// lhs against rhs with the relative residual.
template <Scalar T>
Evaluation<T> compare(const T& lhs, const T& rhs) {
    return {lhs, rhs, relative_residual(lhs, rhs)};
}

// value against 0; complex residual is |value| / max(1, scale).
template <Scalar T>
Evaluation<T> vanishing(const T& value, double scale) {
    if constexpr (is_exact_v<T>) {
        return {value, from_int<T>(0), relative_residual(value, from_int<T>(0))};
    } else {
        return {value, from_int<T>(0), magnitude(value) / std::max(1.0, scale)};
    }
}

template <Scalar T>
using Evaluator = std::function<Evaluation<T>(Sampler<T>&, const Shape&)>;

struct CaseInfo {
    std::string id;
    std::string anchor;  // equation / statement labels
    std::string regime;  // elliptic | trig | rational | none
    std::string group;
    std::string description;
    bool complex_field = false;
    bool exact_field = false;
    FieldKind preferred = FieldKind::Exact;
    int default_points = 25;
    int default_nmax = 4;
    int hard_nmax = 6;
    double complex_tol = 1e-10;
    bool fixed_tol = false;  // limit checks keep their own tolerance under --tol
};

struct CaseDef {
    CaseInfo info;
    std::function<std::vector<Shape>(int nmax)> shapes;
    Evaluator<Complex> complex_eval;
    Evaluator<Rational> exact_eval;
};

struct PointRecord {
    int index = 0;
    Shape shape;
    std::uint64_t seed = 0;
    int attempts = 0;
    double residual = 0.0;
    std::string lhs;
    std::string rhs;
    std::string error;  // non-empty when sampling or evaluation failed
};

struct VerificationReport {
    std::string id;
    std::string anchor;
    FieldKind field = FieldKind::Exact;
    double tol = 0.0;
    std::vector<PointRecord> points;
    double max_rel_err = 0.0;
    bool pass = false;
    double millis = 0.0;
};

const std::vector<CaseDef>& case_registry();
const CaseDef* find_case(const std::string& id);

// Shell-style glob with * and ?.
bool glob_match(const std::string& pattern, const std::string& text);

struct Selection {
    std::vector<std::string> patterns;  // empty: every case
    std::optional<std::string> regime;  // elliptic | trig | rational
};

// Matching cases in registry order. Unknown literal ids (no wildcard) throw
// DomainError; a pattern matching nothing also throws.
std::vector<const CaseDef*> select_cases(const Selection& sel, const SamplingConfig& config);

FieldKind effective_field(const CaseInfo& info, const SamplingConfig& config);
bool field_supported(const CaseInfo& info, FieldKind field);
double effective_tol(const CaseInfo& info, FieldKind field, const SamplingConfig& config);
int effective_nmax(const CaseInfo& info, const SamplingConfig& config);
int effective_points(const CaseInfo& info, const SamplingConfig& config);

VerificationReport verify_case(const CaseDef& def, const SamplingConfig& config);
VerificationReport verify_case(const std::string& id, const SamplingConfig& config);

int resolve_threads(int requested);

// Case groups, populated in the case translation units.
void register_source_cases(std::vector<CaseDef>& out);
void register_det_cases(std::vector<CaseDef>& out);
void register_special_cases(std::vector<CaseDef>& out);
void register_symmetrization_cases(std::vector<CaseDef>& out);
void register_wall_crossing_cases(std::vector<CaseDef>& out);

}  // namespace srcid
