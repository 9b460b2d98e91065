#pragma once

// JSON serialization. Output is canonical: object keys are sorted (nlohmann's
// default std::map storage), blocks keep their library order, and integers that
// do not fit in 64 bits are emitted as decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "homring/codes.hpp"
#include "homring/cyclotomic.hpp"
#include "homring/homweight.hpp"
#include "homring/partition.hpp"
#include "homring/profile.hpp"
#include "homring/ring.hpp"

namespace homring::io {

using nlohmann::json;

inline json integer(const BigInt& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(n));
    }
    return json(n.str());
}

/// Rationals as "p/q" strings ("p" when integral).
inline json rational(const Rational& r) { return json(r.str()); }

inline json cyc(const CycInt& x) {
    if (auto n = x.as_integer()) return {{"is_integer", true}, {"value", integer(*n)}};
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(integer(c));
    return {{"is_integer", false}, {"order", x.order()}, {"coefficients", coeffs}};
}

inline json carrier(const Carrier& c) { return {{"ring", c.ring}, {"n", c.n}, {"size", c.size}}; }

inline json multi_index(const MultiIndex& m) {
    if (m.is_diamond()) return json("diamond");
    return json(m.values());
}

inline json partition(const Partition& p, const FreeModule* pretty = nullptr) {
    json out{{"carrier", carrier(p.carrier())}, {"block_count", p.size()}, {"blocks", json::array()}};
    for (const auto& blk : p.blocks()) out["blocks"].push_back(blk);
    if (pretty) {
        json named = json::array();
        for (const auto& blk : p.blocks()) {
            json b = json::array();
            for (Point v : blk) b.push_back(pretty->format(v, true));
            named.push_back(b);
        }
        out["blocks_pretty"] = named;
    }
    return out;
}

inline json krawtchouk(const KrawtchoukMatrix& k) {
    json rows = json::array();
    for (const auto& row : k.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(cyc(e));
        rows.push_back(r);
    }
    return {{"rows", k.rows()}, {"cols", k.cols()}, {"is_integer", k.is_integral()}, {"entries", rows}};
}

inline json integer_matrix(const std::vector<std::vector<BigInt>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(integer(e));
        rows.push_back(r);
    }
    return rows;
}

inline json weights(const WeightTable& t, const Ring& ring, bool pretty) {
    json values = json::array();
    for (Ring::Elem x = 0; x < t.values.size(); ++x) {
        json entry{{"element", x}, {"weight", rational(t.values[x])}};
        if (pretty) entry["pretty"] = ring.format(x, true);
        values.push_back(entry);
    }
    return {{"ring", t.ring}, {"values", values}};
}

inline json classification(const Classification& c) {
    return {{"separating", c.separating}, {"semisimple", c.semisimple}, {"reflexive", c.reflexive},
            {"self_dual", c.self_dual}};
}

inline json separating(const QProfile& profile, const SeparatingResult& r) {
    json out{{"profile", profile.to_string()}, {"separating", r.separating}, {"witness", nullptr}};
    if (r.witness) out["witness"] = json::array({multi_index(r.witness->first), multi_index(r.witness->second)});
    return out;
}

inline json identity_rows(const std::vector<IdentityRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"block", r.block}, {"lhs", integer(r.lhs)}, {"rhs", cyc(r.rhs)}, {"holds", r.holds}});
    }
    return out;
}

inline json macwilliams(const MacWilliamsReport& r) {
    return {{"carrier", carrier(r.carrier)},
            {"code_size", r.code_size},
            {"dual_code_size", r.dual_size},
            {"partition", partition(r.partition)},
            {"dual_partition", partition(r.dual)},
            {"code_enumerator", r.code_on_partition},
            {"code_dual_enumerator", r.code_on_dual},
            {"dual_code_enumerator", r.dual_on_partition},
            {"dual_code_dual_enumerator", r.dual_on_dual},
            {"dual_block_identities", identity_rows(r.dual_blocks)},
            {"primal_block_identities", identity_rows(r.primal_blocks)},
            {"size_product_holds", r.size_product_holds},
            {"bidual_holds", r.bidual_holds},
            {"holds", r.holds}};
}

}  // namespace homring::io
