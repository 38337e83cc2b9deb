#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "chebknot/exact_engine.hpp"
#include "chebknot/knot_names.hpp"
#include "chebknot/oracle.hpp"
#include "chebknot/sampler.hpp"
#include "chebknot/sign_word.hpp"

namespace chebknot {

using Json = nlohmann::ordered_json;

inline Json to_json(const ReductionTrace& trace) {
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        steps.push_back(Json{{"kind", to_string(step.move.kind)},
                             {"position", step.move.position},
                             {"result", step.result.str()}});
    }
    return Json{{"initial", trace.initial.str()}, {"steps", steps}, {"final", trace.final.str()}};
}

inline Json to_json(const KnotClass& k, const NameTable& names = NameTable::builtin()) {
    auto name = names.find(k);
    return Json{{"alpha", k.alpha.get_str()},
                {"beta", k.beta.get_str()},
                {"name", name ? Json(*name) : Json(nullptr)}};
}

inline Json to_json(const ExactProbability& p, const std::string& knot_label) {
    return Json{{"knot", knot_label},
                {"n", p.n},
                {"numerator", p.numerator.get_str()},
                {"log2_denominator", p.n},
                {"value", p.value}};
}

namespace detail {

inline std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace detail

inline constexpr const char* kDistributionCsvHeader = "alpha,beta,name,count,n";
inline constexpr const char* kSampleCsvHeader = "alpha,beta,name,count,n,trials,seed,phat,z";
inline constexpr const char* kProbabilityCsvHeader = "knot,n,numerator,log2_denominator,value";

inline std::string to_csv(const Distribution& d, const NameTable& names = NameTable::builtin()) {
    std::string out = kDistributionCsvHeader;
    out += '\n';
    for (const auto& [cls, count] : d.counts) {
        out += cls.alpha.get_str() + "," + cls.beta.get_str() + "," + names.find(cls).value_or("") + "," +
               count.get_str() + "," + std::to_string(d.n) + "\n";
    }
    return out;
}

inline std::string to_csv(const EmpiricalDistribution& e, const ComparisonReport& report,
                          const NameTable& names = NameTable::builtin()) {
    std::string out = kSampleCsvHeader;
    out += '\n';
    for (const auto& row : report.rows) {
        out += row.knot.alpha.get_str() + "," + row.knot.beta.get_str() + "," +
               names.find(row.knot).value_or("") + "," + std::to_string(row.count) + "," +
               std::to_string(e.n) + "," + std::to_string(e.trials) + "," + std::to_string(e.seed) + "," +
               detail::format_double("%.10g", row.phat) + "," + detail::format_double("%.4f", row.z) + "\n";
    }
    return out;
}

inline std::string csv_row(const ExactProbability& p, const std::string& knot_label) {
    return knot_label + "," + std::to_string(p.n) + "," + p.numerator.get_str() + "," +
           std::to_string(p.n) + "," + detail::format_double("%.12g", p.value) + "\n";
}

} // namespace chebknot
