#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverweyl/analysis.hpp"

namespace qw {

using nlohmann::json;

// Input document: {"vertices": [...], "arrows": [{"from":..,"to":..}...],
// "dimension": {...}, "stability": {...}?}. Vertex names are strings (or
// numbers, which are accepted and stringified).
inline QuiverSetting parse_setting(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    auto name_of = [](const json& j) -> std::string {
        if (j.is_string()) return j.get<std::string>();
        if (j.is_number_integer()) return std::to_string(j.get<long long>());
        throw ParseError("vertex names must be strings or integers");
    };
    if (!doc.is_object()) throw ParseError("input must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ValidationError("missing or malformed field 'vertices'");
    if (!doc.contains("dimension") || !doc["dimension"].is_object())
        throw ValidationError("missing or malformed field 'dimension'");

    Quiver q;
    for (const auto& v : doc["vertices"]) q.vertices.push_back(name_of(v));
    if (doc.contains("arrows")) {
        if (!doc["arrows"].is_array()) throw ValidationError("malformed field 'arrows'");
        for (const auto& a : doc["arrows"]) {
            if (!a.is_object() || !a.contains("from") || !a.contains("to"))
                throw ValidationError("arrows must be objects with 'from' and 'to'");
            q.arrows.push_back(Arrow{q.index_of(name_of(a["from"])), q.index_of(name_of(a["to"]))});
        }
    }
    auto read_vector = [&](const json& obj, const std::string& field) {
        DimVec vec(q.vertices.size(), 0);
        for (const auto& [key, value] : obj.items()) {
            if (!value.is_number_integer())
                throw ValidationError("field '" + field + "' entry '" + key +
                                      "' must be an integer");
            vec[q.index_of(key)] = value.get<int>();
        }
        return vec;
    };
    DimVec alpha = read_vector(doc["dimension"], "dimension");
    std::optional<DimVec> theta;
    if (doc.contains("stability")) {
        if (!doc["stability"].is_object()) throw ValidationError("malformed field 'stability'");
        theta = read_vector(doc["stability"], "stability");
    }
    return QuiverSetting::make(std::move(q), std::move(alpha), std::move(theta));
}

namespace detail {

inline std::string vec_to_string(const DimVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline json vec_to_json(const DimVec& v, const std::vector<std::string>& names) {
    json o = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) o[names[i]] = v[i];
    return o;
}

inline std::string kind_name(RootKind k) {
    switch (k) {
        case RootKind::Real: return "real";
        case RootKind::Imaginary: return "imaginary";
        case RootKind::NotARoot: return "not-a-root";
    }
    return "?";
}

inline std::string resolution_name(ResolutionVerdict v) {
    switch (v) {
        case ResolutionVerdict::Indivisible: return "indivisible";
        case ResolutionVerdict::TwoTwo: return "divisible-(2,2)";
        case ResolutionVerdict::NoResolution: return "no-resolution";
    }
    return "?";
}

inline std::string stability_name(StabilityClass c) {
    switch (c) {
        case StabilityClass::Generic: return "generic";
        case StabilityClass::PseudoGeneric: return "pseudo-generic";
        case StabilityClass::Degenerate: return "degenerate";
    }
    return "?";
}

} // namespace detail

inline json report_to_json(const AnalysisReport& report, const QuiverSetting& setting) {
    const auto& names = setting.quiver.vertices;
    json out;
    out["input"]["vertices"] = names;
    out["input"]["arrows"] = json::array();
    for (const auto& a : setting.quiver.arrows)
        out["input"]["arrows"].push_back({{"from", names[a.from]}, {"to", names[a.to]}});
    out["input"]["dimension"] = detail::vec_to_json(setting.alpha, names);
    if (setting.theta) out["input"]["stability"] = detail::vec_to_json(*setting.theta, names);

    out["canonical"] = json::array();
    for (const auto& t : report.canonical.terms)
        out["canonical"].push_back({{"root", detail::vec_to_json(t.root.vec, names)},
                                    {"kind", detail::kind_name(t.root.kind)},
                                    {"p", t.root.p},
                                    {"multiplicity", t.multiplicity}});

    out["components"] = json::array();
    for (const auto& c : report.components) {
        json jc;
        jc["alpha"] = detail::vec_to_json(c.alpha, names);
        jc["multiplicity"] = c.multiplicity;
        jc["resolution"] = detail::resolution_name(c.resolution);
        jc["leaves"] = json::array();
        for (const auto& leaf : c.leaves) {
            json jl;
            jl["terms"] = json::array();
            for (const auto& t : leaf.iso.terms)
                jl["terms"].push_back({{"root", detail::vec_to_json(t.root.vec, names)},
                                       {"multiplicity", t.multiplicity}});
            jl["affine"] = leaf.iso.affine.name();
            jl["case"] = fold_case_name(leaf.pattern.fold_case);
            jl["type"] = leaf.type.name();
            jl["order"] = leaf.order.str();
            if (leaf.local_theta) jl["local_stability"] = *leaf.local_theta;
            jc["leaves"].push_back(std::move(jl));
        }
        out["components"].push_back(std::move(jc));
    }

    json factors = json::array();
    for (const auto& f : report.total.factors) factors.push_back(f.name());
    out["weyl"]["factors"] = std::move(factors);
    out["weyl"]["name"] = report.total.name();
    out["weyl"]["order"] = report.total.order().str();
    if (report.stability) out["stability_class"] = detail::stability_name(*report.stability);
    if (report.oracle_checked) out["oracle"] = "passed";
    return out;
}

inline std::string render_report_text(const AnalysisReport& report, const QuiverSetting& setting) {
    std::ostringstream os;
    const auto& names = setting.quiver.vertices;
    os << "dimension vector: " << detail::vec_to_string(setting.alpha) << "\n";
    os << "canonical decomposition:";
    for (const auto& t : report.canonical.terms)
        os << " " << t.multiplicity << "*" << detail::vec_to_string(t.root.vec);
    os << "\n";
    for (const auto& c : report.components) {
        os << "component " << detail::vec_to_string(c.alpha) << " (multiplicity "
           << c.multiplicity << "): resolution " << detail::resolution_name(c.resolution) << "\n";
        if (c.leaves.empty()) os << "  no codimension-2 leaves\n";
        for (std::size_t i = 0; i < c.leaves.size(); ++i) {
            const auto& leaf = c.leaves[i];
            os << "  leaf " << (i + 1) << ":";
            for (const auto& t : leaf.iso.terms)
                os << " " << t.multiplicity << "*" << detail::vec_to_string(t.root.vec);
            os << " -> " << leaf.iso.affine.name() << ", case "
               << fold_case_name(leaf.pattern.fold_case) << ", W_L = " << leaf.type.name()
               << ", order " << leaf.order << "\n";
            if (leaf.local_theta) {
                os << "    local stability: (";
                for (std::size_t j = 0; j < leaf.local_theta->size(); ++j)
                    os << (j ? "," : "") << (*leaf.local_theta)[j];
                os << ")\n";
            }
        }
    }
    if (report.stability)
        os << "stability: " << detail::stability_name(*report.stability) << "\n";
    if (report.oracle_checked) os << "oracle: passed\n";
    os << "W = " << report.total.name() << ", order " << report.total.order() << "\n";
    (void)names;
    return os.str();
}

// DOT export of a local quiver; every parallel edge and loop is drawn
// explicitly, vertices carry the label "beta (n)".
inline std::string export_dot(const LocalQuiver& lq) {
    std::ostringstream os;
    os << "digraph local_quiver {\n";
    for (int i = 0; i < lq.k; ++i)
        os << "  v" << i << " [label=\"" << detail::vec_to_string(lq.labels[i].vec) << " ("
           << lq.multiplicities[i] << ")\"];\n";
    for (int i = 0; i < lq.k; ++i)
        for (int l = 0; l < lq.loops[i]; ++l) os << "  v" << i << " -> v" << i << ";\n";
    for (int i = 0; i < lq.k; ++i)
        for (int j = 0; j < lq.k; ++j) {
            if (i == j) continue;
            for (int e = 0; e < lq.adjacency[i][j]; ++e)
                os << "  v" << i << " -> v" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

// Report serialization that is independent of vertex naming and declaration
// order: vertex names are passed through `rename` and all content-ordered
// lists are re-sorted by their serialized form. Two settings differing only
// by a vertex relabeling produce identical output when `rename` maps one
// naming onto the other.
inline json normalized_report_json(const AnalysisReport& report, const QuiverSetting& setting,
                                   const std::map<std::string, std::string>& rename = {}) {
    auto mapped = [&](const std::string& name) {
        auto it = rename.find(name);
        return it == rename.end() ? name : it->second;
    };
    const auto& names = setting.quiver.vertices;
    auto vec_json = [&](const DimVec& v) {
        json o = json::object();
        for (std::size_t i = 0; i < v.size(); ++i) o[mapped(names[i])] = v[i];
        return o;
    };
    auto sort_by_dump = [](json arr) {
        std::vector<json> items(arr.begin(), arr.end());
        std::sort(items.begin(), items.end(),
                  [](const json& a, const json& b) { return a.dump() < b.dump(); });
        return json(items);
    };

    json out;
    {
        std::vector<std::string> vs;
        for (const auto& n : names) vs.push_back(mapped(n));
        std::sort(vs.begin(), vs.end());
        out["vertices"] = vs;
        json arrows = json::array();
        for (const auto& a : setting.quiver.arrows)
            arrows.push_back({{"from", mapped(names[a.from])}, {"to", mapped(names[a.to])}});
        out["arrows"] = sort_by_dump(arrows);
        out["dimension"] = vec_json(setting.alpha);
        if (setting.theta) out["stability"] = vec_json(*setting.theta);
    }
    {
        json canonical = json::array();
        for (const auto& t : report.canonical.terms)
            canonical.push_back({{"root", vec_json(t.root.vec)}, {"multiplicity", t.multiplicity}});
        out["canonical"] = sort_by_dump(canonical);
    }
    {
        json components = json::array();
        for (const auto& c : report.components) {
            json jc;
            jc["alpha"] = vec_json(c.alpha);
            jc["multiplicity"] = c.multiplicity;
            jc["resolution"] = detail::resolution_name(c.resolution);
            json leaves = json::array();
            for (const auto& leaf : c.leaves) {
                json jl;
                json terms = json::array();
                for (const auto& t : leaf.iso.terms)
                    terms.push_back({{"root", vec_json(t.root.vec)},
                                     {"multiplicity", t.multiplicity}});
                jl["terms"] = sort_by_dump(terms);
                jl["affine"] = leaf.iso.affine.name();
                jl["case"] = fold_case_name(leaf.pattern.fold_case);
                jl["type"] = leaf.type.name();
                jl["order"] = leaf.order.str();
                leaves.push_back(std::move(jl));
            }
            jc["leaves"] = sort_by_dump(leaves);
            components.push_back(std::move(jc));
        }
        out["components"] = sort_by_dump(components);
    }
    {
        json factors = json::array();
        for (const auto& f : report.total.factors) factors.push_back(f.name());
        out["weyl"]["factors"] = sort_by_dump(factors);
        out["weyl"]["order"] = report.total.order().str();
    }
    if (report.stability) out["stability_class"] = detail::stability_name(*report.stability);
    return out;
}

} // namespace qw
