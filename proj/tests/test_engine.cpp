#include <set>

#include "helpers.hpp"
#include "srcid/engine.hpp"
#include "srcid/report.hpp"

using namespace srcid;

TEST_SUITE("engine") {

TEST_CASE("seeds are deterministic and distinct") {
    CHECK(point_seed(1, "a", 0, 1, 2, 0) == point_seed(1, "a", 0, 1, 2, 0));
    CHECK(point_seed(1, "a", 0, 1, 2, 0) != point_seed(1, "a", 1, 1, 2, 0));
    CHECK(point_seed(1, "a", 0, 1, 2, 0) != point_seed(1, "b", 0, 1, 2, 0));
    CHECK(point_seed(1, "a", 0, 1, 2, 0) != point_seed(2, "a", 0, 1, 2, 0));
}

TEST_CASE("same seed, same parameters") {
    Sampler<Rational> a(42, 1e-3), b(42, 1e-3);
    const auto pa = sample_rational(a, 3, 2);
    const auto pb = sample_rational(b, 3, 2);
    CHECK(pa.c == pb.c);
    CHECK(pa.z == pb.z);
    CHECK(pa.u == pb.u);
    CHECK(pa.v == pb.v);

    Sampler<Complex> ca(7, 1e-3), cb(7, 1e-3);
    const auto ea = sample_elliptic(ca, 3);
    const auto eb = sample_elliptic(cb, 3);
    CHECK(ea.p == eb.p);
    CHECK(ea.u == eb.u);
}

TEST_CASE("empty shapes") {
    Sampler<Rational> s(1, 1e-3);
    const auto tp = sample_trig(s, 0, 0);
    CHECK(tp.u.empty());
    CHECK(tp.v.empty());
    Sampler<Complex> c(1, 1e-3);
    const auto e = sample_elliptic(c, 0);
    CHECK(e.u.empty());
    CHECK(std::abs(e.p) > 0.0);
    CHECK(std::abs(e.p) <= 0.5);
}

TEST_CASE("sampler ranges") {
    Sampler<Complex> s(3, 1e-3);
    for (int i = 0; i < 200; ++i) {
        const double g = std::abs(s.generic());
        CHECK(g >= 0.2 - 1e-12);
        CHECK(g <= 3.0 + 1e-12);
        const double q = std::abs(s.base());
        CHECK(((q >= 0.2 - 1e-12 && q <= 0.8 + 1e-12) || (q >= 1.25 - 1e-12 && q <= 5.0 + 1e-12)));
    }
    CHECK_THROWS_AS(s.protect(Complex(1e-4, 0.0)), SingularError);
    Sampler<Rational> r(3, 1e-3);
    CHECK_THROWS_AS(r.protect(Rational(0)), SingularError);
    r.protect(Rational(1, 1000000));
}

TEST_CASE("1000 draws without hitting the resampling cap") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        bool done = false;
        for (int attempt = 0; attempt < kResampleCap && !done; ++attempt) {
            Sampler<Complex> s(splitmix64(i * 1000 + static_cast<std::uint64_t>(attempt)), 1e-3);
            try {
                (void)sample_trig(s, 4, 4);
                (void)sample_rational(s, 4, 4);
                (void)sample_elliptic(s, 4);
                done = true;
            } catch (const SingularError&) {
            }
        }
        REQUIRE(done);
    }
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything"));
    CHECK(glob_match("det_*_F", "det_trig_MPT_F"));
    CHECK_FALSE(glob_match("det_*_F", "det_trig_MPT_G"));
    CHECK(glob_match("trig_?_eq_G", "trig_F_eq_G"));
    CHECK_FALSE(glob_match("trig", "trig_F_eq_G"));
}

TEST_CASE("case selection") {
    SamplingConfig cfg;
    CHECK(select_cases({}, cfg).size() == case_registry().size());
    CHECK_THROWS_AS(select_cases({{"no_such_case"}, {}}, cfg), DomainError);
    CHECK_THROWS_AS(select_cases({{"zzz*"}, {}}, cfg), DomainError);
    CHECK_THROWS_AS(select_cases({{}, std::string("hyperbolic")}, cfg), DomainError);
    for (const CaseDef* def : select_cases({{}, std::string("rational")}, cfg)) CHECK(def->info.regime == "rational");
    cfg.field = FieldKind::Exact;
    CHECK_THROWS_AS(select_cases({{"elliptic_F_eq_G"}, {}}, cfg), DomainError);
    for (const CaseDef* def : select_cases({}, cfg)) CHECK(def->info.exact_field);
}

TEST_CASE("registry is well formed") {
    std::set<std::string> ids;
    for (const CaseDef& def : case_registry()) {
        CAPTURE(def.info.id);
        CHECK(ids.insert(def.info.id).second);
        CHECK_FALSE(def.info.anchor.empty());
        CHECK((def.info.complex_field || def.info.exact_field));
        CHECK(field_supported(def.info, def.info.preferred));
        CHECK(static_cast<bool>(def.shapes));
    }
    CHECK(ids.size() >= 90);
}

TEST_CASE("config validation") {
    SamplingConfig cfg;
    cfg.tol_singular = 0.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.tol_singular = 1e-3;
    cfg.points = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("reference cases pass") {
    SamplingConfig cfg;
    cfg.master_seed = 42;
    cfg.threads = 1;

    cfg.field = FieldKind::Exact;
    cfg.nmax = 5;
    cfg.points = 25;
    const auto rat = verify_case("rational_F_eq_G", cfg);
    CHECK(rat.pass);
    CHECK(rat.max_rel_err == 0.0);

    cfg.points = 5;
    const auto trig = verify_case("trig_F_eq_G", cfg);
    CHECK(trig.pass);
    CHECK(trig.max_rel_err == 0.0);

    cfg.field = FieldKind::Complex;
    cfg.nmax = 4;
    cfg.tol_match = 1e-8;
    const auto ell = verify_case("elliptic_F_eq_G", cfg);
    CHECK(ell.pass);
    CHECK(ell.max_rel_err <= 1e-8);
}

TEST_CASE("runs are reproducible and thread-count independent") {
    SamplingConfig cfg;
    cfg.master_seed = 9;
    cfg.points = 3;
    cfg.threads = 1;
    const Selection sel{{"trig_*"}, {}};
    const auto a = run_verification(sel, cfg);
    cfg.threads = 3;
    const auto b = run_verification(sel, cfg);
    CHECK(to_json(a, false) == to_json(b, false));
}

}
