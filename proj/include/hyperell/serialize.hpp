#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "hyperell/rewriter.hpp"

namespace hyperell {

/// Text form:
///   genus 2
///   [lambda]
///   la4 = ...
///   [w]
///   w_3_3 = ...
inline std::string table_text(const RelationTable& t) {
    std::ostringstream os;
    os << "genus " << t.genus << "\n[lambda]\n";
    for (const auto& [s, p] : t.lambda) os << "la" << s << " = " << p << "\n";
    os << "[w]\n";
    for (const auto& [kl, p] : t.w) os << Symbol::w(kl.first, kl.second).name() << " = " << p << "\n";
    return os.str();
}

/// Tree form with keys in fixed order: genus, lambda {"4": ...}, w {"3,3": ...},
/// provenance {"la4": "L1[xi^1]", "w_3_3": "BEL1[3]", ...}.
inline nlohmann::ordered_json table_tree(const RelationTable& t) {
    nlohmann::ordered_json doc;
    doc["genus"] = t.genus;
    doc["lambda"] = nlohmann::ordered_json::object();
    for (const auto& [s, p] : t.lambda) doc["lambda"][std::to_string(s)] = p.str();
    doc["w"] = nlohmann::ordered_json::object();
    for (const auto& [kl, p] : t.w) doc["w"][std::to_string(kl.first) + "," + std::to_string(kl.second)] = p.str();
    doc["provenance"] = nlohmann::ordered_json::object();
    for (const auto& [s, p] : t.lambda) {
        const std::string key = "la" + std::to_string(s);
        doc["provenance"][key] = t.provenance.at(key);
    }
    for (const auto& [kl, p] : t.w) {
        const std::string key = Symbol::w(kl.first, kl.second).name();
        doc["provenance"][key] = t.provenance.at(key);
    }
    return doc;
}

inline std::string table_tree_text(const RelationTable& t) { return table_tree(t).dump(2) + "\n"; }

} // namespace hyperell
