#pragma once

// JSON poset format: {"elements": [...], "covers": [[lower, upper], ...], "height": {label: n}}.

#include "poset.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qzeta {

struct PosetDocument {
    Poset poset;
    std::optional<HeightFunction> height;
    std::vector<std::string> warnings;
};

inline nlohmann::ordered_json poset_to_json(const Poset& p, const HeightFunction* h = nullptr) {
    nlohmann::ordered_json j;
    j["elements"] = p.labels();
    auto covers = nlohmann::ordered_json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
    j["covers"] = covers;
    if (h) {
        nlohmann::ordered_json hj = nlohmann::ordered_json::object();
        for (int x = 0; x < p.size(); ++x) hj[p.label(x)] = (*h)(x);
        j["height"] = hj;
    }
    return j;
}

/// Reads a height map label -> natural and validates it against the covers.
inline HeightFunction height_from_json(const Poset& p, const nlohmann::json& hj) {
    if (!hj.is_object()) throw PreconditionError("height must be a JSON object");
    HeightFunction h;
    h.values.assign(static_cast<std::size_t>(p.size()), 0);
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    for (auto it = hj.begin(); it != hj.end(); ++it) {
        auto x = p.index_of(it.key());
        if (!x) throw PreconditionError("height names unknown element '" + it.key() + "'");
        if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
            throw InvalidHeight("height of '" + it.key() + "' must be a natural number");
        h.values[static_cast<std::size_t>(*x)] = it.value().get<int>();
        seen[static_cast<std::size_t>(*x)] = true;
    }
    for (int x = 0; x < p.size(); ++x)
        if (!seen[static_cast<std::size_t>(x)]) throw InvalidHeight("height is missing element '" + p.label(x) + "'");
    validate_height(p, h);
    return h;
}

inline PosetDocument poset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw PreconditionError("poset JSON needs an \"elements\" array");
    std::vector<std::string> labels;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw PreconditionError("element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) throw PreconditionError("\"covers\" must be an array");
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw PreconditionError("each cover must be a pair of labels");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }
    PosetDocument doc;
    doc.poset = Poset::from_covers(std::move(labels), covers, &doc.warnings);
    if (j.contains("height") && !j["height"].is_null()) doc.height = height_from_json(doc.poset, j["height"]);
    return doc;
}

inline PosetDocument parse_poset(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError(std::string("malformed poset JSON: ") + e.what());
    }
    return poset_from_json(j);
}

inline PosetDocument read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_poset(ss.str());
}

} // namespace qzeta
