#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sxl/verify.hpp"

namespace sxl {

using ordered_json = nlohmann::ordered_json;

namespace detail {

// 10 significant digits, round-half-even (the CLI's printing contract)
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace detail

inline ordered_json to_json(const ScanRow& row) {
    ordered_json j;
    j["m"] = row.m;
    j["free_count"] = row.free_count;
    if (row.has_max) {
        j["max_lambda"] = row.max_lambda;
        j["bound"] = row.bound;
        j["margin"] = row.margin;
    } else {
        j["max_lambda"] = nullptr;
        j["bound"] = row.bound;
        j["margin"] = nullptr;
    }
    j["argmax"] = row.argmax;
    j["violation"] = row.violation;
    j["equality_achieved"] = row.equality_achieved;
    j["extremal_matches_prediction"] = row.extremal_matches_prediction;
    j["uniqueness"] = row.uniqueness;
    j["prediction_integral"] = row.prediction_integral;
    if (row.prediction_integral) {
        j["prediction_free"] = row.prediction_free;
        j["prediction_bound_gap"] = row.prediction_bound_gap;
    }
    return j;
}

inline ordered_json to_json(const ScanReport& report) {
    ordered_json j;
    j["spec"]["forbid"] = report.forbid;
    j["spec"]["bound"] = report.bound;
    j["spec"]["m_min"] = report.m_min;
    j["spec"]["m_max"] = report.m_max;
    if (report.predict_k)
        j["spec"]["predict_k"] = *report.predict_k;
    else
        j["spec"]["predict_k"] = nullptr;
    j["spec"]["mode"] = report.report_only ? "report_only" : "assert";
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) j["rows"].push_back(to_json(row));
    return j;
}

inline std::string to_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "m,free_count,max_lambda,bound,margin,equality_achieved,"
           "extremal_matches_prediction,uniqueness,argmax\n";
    for (const auto& row : report.rows) {
        out << row.m << ',' << row.free_count << ',';
        if (row.has_max)
            out << detail::format_double(row.max_lambda) << ','
                << detail::format_double(row.bound) << ',' << detail::format_double(row.margin);
        else
            out << "," << detail::format_double(row.bound) << ',';
        out << ',' << (row.equality_achieved ? 1 : 0) << ','
            << (row.extremal_matches_prediction ? 1 : 0) << ',' << (row.uniqueness ? 1 : 0) << ',';
        for (size_t i = 0; i < row.argmax.size(); ++i) {
            if (i) out << ';';
            out << row.argmax[i];
        }
        out << '\n';
    }
    return out.str();
}

inline ordered_json to_json(const RstReport& report) {
    ordered_json j;
    j["lemma"] = "rst";
    j["asserted_count"] = report.asserted_count;
    j["min_gap"] = report.min_gap;
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["s"] = row.s;
        r["t"] = row.t;
        r["m"] = row.m;
        r["n"] = row.n;
        r["lambda"] = row.lambda;
        r["bound"] = row.bound;
        r["gap"] = row.gap;
        r["asserted"] = row.asserted;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline ordered_json to_json(const BnReport& report) {
    ordered_json j;
    j["lemma"] = "bn";
    j["r"] = report.r;
    j["mode"] = report.asserted ? "assert" : "report_only";
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["m"] = row.m;
        r["checked"] = row.checked;
        if (row.checked > 0)
            r["max_excess"] = row.max_excess;
        else
            r["max_excess"] = nullptr;
        r["equalities"] = row.equalities;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline ordered_json to_json(const RotationReport& report) {
    ordered_json j;
    j["lemma"] = "rotation";
    j["trials"] = report.trials;
    j["min_gain"] = report.min_gain;
    return j;
}

inline ordered_json to_json(const EgReport& report) {
    ordered_json j;
    j["lemma"] = "eg";
    j["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        r["max_edges"] = row.max_edges;
        r["bound"] = row.bound;
        r["equality_classes"] = row.equality_classes;
        r["equality_family_ok"] = row.equality_family_ok;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline ordered_json to_json(const EtaReport& report) {
    ordered_json j;
    j["center"] = report.center;
    j["components"] = ordered_json::array();
    for (const auto& c : report.components) {
        ordered_json e;
        std::vector<int> verts;
        c.vertices.for_each([&](int v) { verts.push_back(v); });
        e["vertices"] = verts;
        e["eta1"] = c.eta1;
        e["eta2"] = c.eta2;
        e["kind"] = c.kind == EtaComponent::Kind::triangle ? "triangle"
                    : c.kind == EtaComponent::Kind::star   ? "star"
                                                           : "other";
        j["components"].push_back(std::move(e));
    }
    return j;
}

} // namespace sxl
