#pragma once

#include <json.hpp>

#include "branchkit/spectrum.hpp"
#include "branchkit/verify.hpp"

namespace branchkit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// ParamSet <-> JSON
//
// kinds: "empty" | "finite" | "progression" | "imaginary-halfline" | "interval"
// Rationals are reduced strings, "n" or "n/d". Progressions carry an
// informational interval [first,"inf"] or ["-inf",first] derived from the
// step direction; parsing reads base/step only.

inline json to_json(const ParamSet& p) {
    json j;
    switch (p.kind) {
        case ParamSet::Kind::Empty:
            j["kind"] = "empty";
            break;
        case ParamSet::Kind::Finite: {
            j["kind"] = "finite";
            json vals = json::array();
            for (const auto& v : p.values) vals.push_back(to_string(v));
            j["values"] = vals;
            break;
        }
        case ParamSet::Kind::Progression:
            j["kind"] = "progression";
            j["base"] = to_string(p.base);
            j["step"] = to_string(p.step);
            if (p.step > Rat(0))
                j["interval"] = {to_string(p.base), "inf"};
            else
                j["interval"] = {"-inf", to_string(p.base)};
            break;
        case ParamSet::Kind::ImaginaryHalfLine:
            j["kind"] = "imaginary-halfline";
            break;
        case ParamSet::Kind::Interval:
            j["kind"] = "interval";
            j["interval"] = {p.lo ? to_string(*p.lo) : "-inf", p.hi ? to_string(*p.hi) : "inf"};
            break;
    }
    return j;
}

inline ParamSet param_set_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return ParamSet::empty();
    if (kind == "finite") {
        std::vector<Rat> vals;
        for (const auto& v : j.at("values")) vals.push_back(parse_rational(v.get<std::string>()));
        return ParamSet::finite(std::move(vals));
    }
    if (kind == "progression")
        return ParamSet::arithmetic(parse_rational(j.at("base").get<std::string>()),
                                    parse_rational(j.at("step").get<std::string>()));
    if (kind == "imaginary-halfline") return ParamSet::imaginary_half_line();
    if (kind == "interval") {
        auto iv = j.at("interval");
        std::optional<Rat> lo, hi;
        const std::string lo_s = iv.at(0).get<std::string>(), hi_s = iv.at(1).get<std::string>();
        if (lo_s != "-inf") lo = parse_rational(lo_s);
        if (hi_s != "inf") hi = parse_rational(hi_s);
        return ParamSet::interval(lo, hi);
    }
    throw DomainError("unknown params kind: " + kind);
}

// ---------------------------------------------------------------------------
// Spectrum <-> JSON

inline json to_json(const Spectrum& s) {
    json comps = json::array();
    for (const auto& c : s.components) {
        json jc;
        jc["group"] = c.group;
        jc["series"] = c.series.str();
        jc["params"] = to_json(c.params);
        jc["multiplicity"] = c.multiplicity;
        jc["measure"] =
            c.measure == SpectrumComponent::Measure::Counting ? "counting" : "lebesgue";
        comps.push_back(std::move(jc));
    }
    return json{{"provenance", s.provenance}, {"components", comps}};
}

inline Spectrum spectrum_from_json(const json& j) {
    Spectrum s;
    s.provenance = j.at("provenance").get<std::string>();
    for (const auto& jc : j.at("components")) {
        SpectrumComponent c;
        c.group = jc.at("group").get<std::string>();
        c.series = SeriesTag::parse(jc.at("series").get<std::string>());
        c.params = param_set_from_json(jc.at("params"));
        c.multiplicity = jc.at("multiplicity").get<int>();
        const std::string m = jc.at("measure").get<std::string>();
        if (m != "counting" && m != "lebesgue") throw DomainError("bad measure: " + m);
        c.measure = m == "counting" ? SpectrumComponent::Measure::Counting
                                    : SpectrumComponent::Measure::Lebesgue;
        c.validate();
        s.components.push_back(std::move(c));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Reports
//
// JSON reports are part of the deterministic output contract (identical runs
// must be byte-identical), so millis is fixed to 0 there; wall-clock timing
// is shown in the text renderer instead.

inline json to_json(const Report& r, bool deterministic = true) {
    json jp = json::object();
    for (const auto& [k, v] : r.params) {
        try {
            std::size_t pos = 0;
            long val = std::stol(v, &pos);
            if (pos == v.size()) {
                jp[k] = val;
                continue;
            }
        } catch (...) {
        }
        jp[k] = v;
    }
    json j{{"claim", r.claim},
           {"params", jp},
           {"status", to_string(r.status)},
           {"millis", deterministic ? 0 : r.millis}};
    if (!r.witness.empty()) {
        json w = json::object();
        for (const auto& [k, v] : r.witness) w[k] = v;
        j["witness"] = w;
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

inline json to_json(const std::vector<Report>& rs, bool deterministic = true) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(to_json(r, deterministic));
    return arr;
}

}  // namespace branchkit
