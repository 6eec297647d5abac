#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "snkron/character.hpp"
#include "snkron/kronecker.hpp"
#include "snkron/neighborhood.hpp"
#include "snkron/partition.hpp"

namespace snkron {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::json;

inline json to_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

inline Partition partition_from_json(const json& arr) {
    std::vector<int> parts;
    for (const auto& v : arr) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

// Partition cells carry commas, so every CSV field is quoted.
inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

inline void write_table_csv(const CharacterTable& t, std::ostream& out) {
    out << csv_quote("class");
    for (const Partition& p : t.order) out << ',' << csv_quote(p.to_string());
    out << '\n';
    for (std::size_t i = 0; i < t.order.size(); ++i) {
        out << csv_quote(t.order[i].to_string());
        for (std::size_t j = 0; j < t.order.size(); ++j)
            out << ',' << t.values[i][j];
        out << '\n';
    }
}

inline json table_to_json(const CharacterTable& t) {
    json order = json::array();
    for (const Partition& p : t.order) order.push_back(p.to_string());
    json matrix = json::array();
    for (const auto& row : t.values) matrix.push_back(row);
    return json{{"schema_version", kSchemaVersion},
                {"n", t.n},
                {"order", order},
                {"matrix", matrix}};
}

// ---------------------------------------------------------------------------
// Verifier reports
// ---------------------------------------------------------------------------

inline json report_to_json(const VerifierReport& r) {
    return json{{"schema_version", kSchemaVersion},
                {"name", r.name},
                {"n", r.n},
                {"checked", r.checked},
                {"violations", r.violations}};
}

inline json saxl_to_json(const SaxlReport& r) {
    json misses = json::array();
    for (const Partition& p : r.misses) misses.push_back(p.to_string());
    return json{{"schema_version", kSchemaVersion},
                {"k", r.k},
                {"n", r.n},
                {"total", r.total},
                {"support_size", r.support_size},
                {"pak_certified", r.pak_certified},
                {"misses", misses}};
}

inline void write_support_csv(const std::vector<Partition>& order,
                              const std::map<Partition, Int>& support,
                              const Partition& hat, CharacterCache& cache,
                              std::ostream& out) {
    out << "partition,multiplicity,pak_certified\n";
    for (const Partition& p : order) {
        auto it = support.find(p);
        Int mult = (it == support.end()) ? 0 : it->second;
        bool pak = character_value(p, hat, cache) != 0;
        out << csv_quote(p.to_string()) << ',' << mult << ',' << (pak ? 1 : 0)
            << '\n';
    }
}

inline void write_neighborhood_csv(const Neighborhood& nb, std::ostream& out) {
    out << "partition,leg\n";
    for (const auto& [p, leg] : nb.members)
        out << csv_quote(p.to_string()) << ',' << leg << '\n';
}

inline json neighborhood_to_json(const Neighborhood& nb) {
    json members = json::array();
    for (const auto& [p, leg] : nb.members)
        members.push_back(json{{"partition", p.to_string()}, {"leg", leg}});
    return json{{"schema_version", kSchemaVersion},
                {"center", nb.center.to_string()},
                {"hook", json{{"row", nb.hook.row},
                              {"col", nb.hook.col},
                              {"length", nb.hook.length}}},
                {"base", nb.base.to_string()},
                {"members", members}};
}

}  // namespace snkron
