#pragma once

// The socle-level Hamming partition H' (with the extra block R \ soc(R)), its
// predicted dual, the closed-form Krawtchouk matrix of the pair, and the
// ring-level classification of P_hom.

#include <algorithm>
#include <vector>

#include "homring/errors.hpp"
#include "homring/partition.hpp"
#include "homring/profile.hpp"
#include "homring/ring.hpp"

namespace homring {

/// Index of x in H': diamond off the socle, else its socle weight profile.
inline MultiIndex hprime_label(const Ring& ring, Ring::Elem x) {
    return ring.in_socle(x) ? ring.socle_weight_profile(x) : MultiIndex::diamond();
}

/// Index of x in the predicted dual: diamond on rad(R) \ {0}, else the residue weight profile.
inline MultiIndex hprime_dual_label(const Ring& ring, Ring::Elem x) {
    if (x != ring.zero() && ring.in_radical(x)) return MultiIndex::diamond();
    return ring.residue_weight_profile(x);
}

namespace detail {

template <class LabelFn>
std::vector<MultiIndex> labels_of(const Ring& ring, LabelFn fn) {
    check_cap(ring.size(), "hprime");
    std::vector<MultiIndex> out;
    out.reserve(ring.size());
    for (Ring::Elem x = 0; x < ring.size(); ++x) out.push_back(fn(ring, x));
    return out;
}

/// Distinct labels in block order (diamond first, then lexicographic).
inline std::vector<MultiIndex> distinct(std::vector<MultiIndex> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

inline void require_rank_one(const FreeModule& module, std::string_view what) {
    if (module.rank() != 1) throw DomainError(std::string(what) + ": defined on R only");
}

}  // namespace detail

/// H' blocks: R \ soc(R) (absent when semisimple), then P_m for m in M.
inline Partition hprime_partition(const FreeModule& module) {
    detail::require_rank_one(module, "hprime_partition");
    return Partition::from_labels(module.carrier(), detail::labels_of(module.ring(), hprime_label));
}

/// Predicted dual blocks: rad(R) \ {0} (absent when semisimple), {0}, then Q_m for m != 0.
inline Partition hprime_predicted_dual(const FreeModule& module) {
    detail::require_rank_one(module, "hprime_predicted_dual");
    return Partition::from_labels(module.carrier(), detail::labels_of(module.ring(), hprime_dual_label));
}

/// Column labels of hprime_partition, in block order.
inline std::vector<MultiIndex> hprime_labels(const Ring& ring) {
    return detail::distinct(detail::labels_of(ring, hprime_label));
}

/// Row labels of hprime_predicted_dual, in block order.
inline std::vector<MultiIndex> hprime_dual_labels(const Ring& ring) {
    return detail::distinct(detail::labels_of(ring, hprime_dual_label));
}

/// Closed-form Krawtchouk matrix of (H', predicted dual), rows and columns in
/// the block order of hprime_predicted_dual and hprime_partition.
inline std::vector<std::vector<BigInt>> hprime_krawtchouk_closed(const Ring& ring) {
    const auto rows = hprime_dual_labels(ring);
    const auto cols = hprime_labels(ring);
    std::vector<std::vector<BigInt>> k;
    for (const auto& l : rows) {
        auto& row = k.emplace_back();
        for (const auto& m : cols) row.push_back(krawtchouk_closed(ring.profile(), l, m, BigInt(ring.size())));
    }
    return k;
}

inline Classification classify(const RingSpec& spec) {
    const bool socle_is_radical =
        spec.components.size() == 1 && !spec.components[0].is_field() && spec.components[0].exponent() == 2;
    return classify(spec.profile(), spec.semisimple(), socle_is_radical);
}
inline Classification classify(const Ring& ring) { return classify(ring.spec()); }

}  // namespace homring
