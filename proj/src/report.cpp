#include "srcid/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace srcid {

using nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw DomainError("unknown format: " + name);
}

std::string field_name(FieldKind f) { return f == FieldKind::Complex ? "complex" : "exact"; }

FieldKind parse_field(const std::string& name) {
    if (name == "complex") return FieldKind::Complex;
    if (name == "exact") return FieldKind::Exact;
    throw DomainError("unknown field: " + name);
}

bool RunReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

RunReport run_verification(const Selection& sel, const SamplingConfig& config) {
    config.validate();
    RunReport out{config, sel, {}};
    for (const CaseDef* def : select_cases(sel, config)) out.cases.push_back(verify_case(*def, config));
    return out;
}

namespace {

ordered_json residual_json(double r) {
    if (std::isfinite(r)) return r;
    return nullptr;
}

ordered_json config_json(const RunReport& rep) {
    const SamplingConfig& c = rep.config;
    ordered_json j;
    j["points"] = c.points ? ordered_json(*c.points) : ordered_json(nullptr);
    j["nmax"] = c.nmax ? ordered_json(*c.nmax) : ordered_json(nullptr);
    j["tol"] = c.tol_match ? ordered_json(*c.tol_match) : ordered_json(nullptr);
    j["tol_singular"] = c.tol_singular;
    j["field"] = c.field ? ordered_json(field_name(*c.field)) : ordered_json(nullptr);
    j["regime"] = rep.selection.regime ? ordered_json(*rep.selection.regime) : ordered_json("all");
    j["cases"] = rep.selection.patterns;
    return j;
}

std::string fmt(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

std::string to_json(const RunReport& rep, bool timings) {
    ordered_json root;
    root["run"]["seed"] = rep.config.master_seed;
    root["run"]["config"] = config_json(rep);
    root["cases"] = ordered_json::array();
    std::size_t passed = 0;
    for (const VerificationReport& c : rep.cases) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["paper_anchor"] = c.anchor;
        jc["field"] = field_name(c.field);
        jc["tol"] = c.tol;
        jc["points"] = ordered_json::array();
        for (const PointRecord& p : c.points) {
            ordered_json jp;
            jp["index"] = p.index;
            jp["n"] = p.shape.n;
            jp["m"] = p.shape.m;
            jp["k"] = p.shape.k;
            jp["seed"] = p.seed;
            jp["attempts"] = p.attempts;
            jp["residual"] = residual_json(p.residual);
            jp["lhs"] = p.lhs;
            jp["rhs"] = p.rhs;
            if (!p.error.empty()) jp["error"] = p.error;
            jc["points"].push_back(std::move(jp));
        }
        jc["max_rel_err"] = residual_json(c.max_rel_err);
        jc["pass"] = c.pass;
        if (timings) jc["millis"] = c.millis;
        passed += c.pass ? 1 : 0;
        root["cases"].push_back(std::move(jc));
    }
    root["summary"] = {{"cases", rep.cases.size()}, {"passed", passed}, {"failed", rep.cases.size() - passed}};
    return root.dump(2) + "\n";
}

std::string to_csv(const RunReport& rep, bool timings) {
    std::ostringstream os;
    os << "case_id,paper_anchor,field,index,n,m,k,seed,attempts,residual,case_pass,error";
    if (timings) os << ",case_millis";
    os << "\n";
    for (const VerificationReport& c : rep.cases) {
        for (const PointRecord& p : c.points) {
            char res[40];
            std::snprintf(res, sizeof res, "%.17g", p.residual);
            os << csv_cell(c.id) << ',' << csv_cell(c.anchor) << ',' << field_name(c.field) << ',' << p.index << ','
               << p.shape.n << ',' << p.shape.m << ',' << p.shape.k << ',' << p.seed << ',' << p.attempts << ','
               << res << ',' << (c.pass ? "true" : "false") << ',' << csv_cell(p.error);
            if (timings) os << ',' << c.millis;
            os << "\n";
        }
    }
    return os.str();
}

std::string to_text(const RunReport& rep, bool timings) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const VerificationReport& c : rep.cases) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]  field=" << field_name(c.field)
           << " points=" << c.points.size() << " max_rel_err=" << fmt(c.max_rel_err);
        if (c.field == FieldKind::Complex) os << " tol=" << fmt(c.tol);
        if (timings) os << " ms=" << fmt(c.millis);
        os << "\n";
        for (const PointRecord& p : c.points) {
            if (!p.error.empty()) {
                os << "    point " << p.index << " (n=" << p.shape.n << ", m=" << p.shape.m << ", k=" << p.shape.k
                   << "): " << p.error << "\n";
                break;
            }
        }
        passed += c.pass ? 1 : 0;
    }
    os << passed << "/" << rep.cases.size() << " cases passed\n";
    return os.str();
}

std::string render(const RunReport& rep, ReportFormat format, bool timings) {
    switch (format) {
        case ReportFormat::Json: return to_json(rep, timings);
        case ReportFormat::Csv: return to_csv(rep, timings);
        case ReportFormat::Text: return to_text(rep, timings);
    }
    return {};
}

}  // namespace srcid
