#pragma once

// Normalized homogeneous weight: closed form, unit character-sum oracle, and
// the partition of R (or R^n) it induces.

#include <map>
#include <string>
#include <vector>

#include "homring/cyclotomic.hpp"
#include "homring/errors.hpp"
#include "homring/partition.hpp"
#include "homring/profile.hpp"
#include "homring/ring.hpp"

namespace homring {

/// omega(x): 1 off the socle, 1 - prod (-1/(q_i-1))^{m_i} on it.
inline Rational hom_weight(const Ring& ring, Ring::Elem x) {
    if (!ring.in_socle(x)) return Rational(1);
    return hom_weight_of_index(ring.profile(), ring.socle_weight_profile(x));
}

/// The unit character sum sum_{w in R*} chi_u(x w), which must be an integer.
inline BigInt unit_character_sum(const Ring& ring, Ring::Elem x, Ring::Elem u, const std::vector<Ring::Elem>& units) {
    if (!ring.is_unit(u)) throw DomainError("character shift " + ring.format(u) + " is not a unit");
    RootSum acc(ring.character_order());
    const Ring::Elem ux = ring.mul(u, x);
    for (auto w : units) acc.add(ring.char_exponent(ring.mul(ux, w)));
    auto sum = acc.take();
    auto value = sum.as_integer();
    if (!value) {
        throw VerificationError("unit character sum at " + ring.format(x) + " is not an integer: " + sum.to_string());
    }
    return *value;
}

/// omega(x) = 1 - (1/|R*|) sum_{w in R*} chi_u(x w), evaluated exactly.
inline Rational hom_weight_oracle(const Ring& ring, Ring::Elem x, Ring::Elem u, const std::vector<Ring::Elem>& units) {
    return Rational(1) - Rational(unit_character_sum(ring, x, u, units), BigInt(units.size()));
}

inline Rational hom_weight_oracle(const Ring& ring, Ring::Elem x, Ring::Elem u) {
    check_cap(ring.size(), "hom_weight_oracle");
    return hom_weight_oracle(ring, x, u, ring.units());
}

/// Closed-form weights of every element, indexed by encoding.
struct WeightTable {
    std::string ring;
    std::vector<Rational> values;
};

inline WeightTable weight_table(const Ring& ring) {
    check_cap(ring.size(), "weight_table");
    WeightTable t{ring.name(), {}};
    t.values.reserve(ring.size());
    for (Ring::Elem x = 0; x < ring.size(); ++x) t.values.push_back(hom_weight(ring, x));
    return t;
}

/// Oracle weights under shift u; VerificationError on any disagreement with the closed form.
inline WeightTable verified_weight_table(const Ring& ring, Ring::Elem u) {
    auto table = weight_table(ring);
    const auto units = ring.units();
    for (Ring::Elem x = 0; x < ring.size(); ++x) {
        const auto oracle = hom_weight_oracle(ring, x, u, units);
        if (oracle != table.values[x]) {
            throw VerificationError("weight of " + ring.format(x) + ": closed form " + table.values[x].str() +
                                    ", character sum " + oracle.str());
        }
    }
    return table;
}

/// P_hom on R: fibers of omega, ordered by increasing weight.
inline Partition hom_partition(const FreeModule& module) {
    if (module.rank() != 1) throw DomainError("hom_partition: defined on R; use hom_product_partition for R^n");
    const auto table = weight_table(module.ring());
    return Partition::from_labels(module.carrier(), table.values);
}

/// P_hom x ... x P_hom on R^n (n factors). Reflexive whenever P_hom is.
inline Partition hom_product_partition(const FreeModule& module) {
    const auto base = hom_partition(FreeModule(module.ring_ptr(), 1));
    return product_partition(std::vector<Partition>(module.rank(), base), module.carrier());
}

/// Blocks of R^n by the summed weight sum_i omega(v_i), ascending. No reflexivity guarantee.
inline Partition hom_sum_partition(const FreeModule& module) {
    check_cap(module.size(), "hom_sum_partition");
    const auto table = weight_table(module.ring());
    std::vector<Rational> label(module.size());
    for (Point v = 0; v < module.size(); ++v) {
        Rational s(0);
        for (auto c : module.coordinates(v)) s += table.values[c];
        label[v] = s;
    }
    return Partition::from_labels(module.carrier(), label);
}

}  // namespace homring
