#pragma once

// Partitions of R^n, their character-theoretic duals and Krawtchouk matrices,
// plus the standard constructions: unit orbits, Hamming weight, products and
// trivial extensions from a subgroup.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "homring/cyclotomic.hpp"
#include "homring/errors.hpp"
#include "homring/ring.hpp"

namespace homring {

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::string_view spec) { return std::make_shared<const Ring>(Ring::parse(spec)); }
inline RingPtr make_ring(RingSpec spec) { return std::make_shared<const Ring>(std::move(spec)); }

using Point = std::uint32_t;

/// Identity of the set a partition covers: R^n for a named ring.
struct Carrier {
    std::string ring;
    unsigned n = 1;
    std::uint64_t size = 0;

    std::string to_string() const { return n == 1 ? ring : ring + "^" + std::to_string(n); }
    friend bool operator==(const Carrier&, const Carrier&) = default;
};

/// The free module R^n. Points are indexed in [0, |R|^n) lexicographically,
/// first coordinate most significant.
class FreeModule {
public:
    FreeModule(RingPtr ring, unsigned n = 1) : ring_(std::move(ring)), n_(n) {
        if (!ring_) throw DomainError("FreeModule: null ring");
        if (n_ == 0) throw DomainError("FreeModule: n must be positive");
        std::uint64_t size = 1;
        for (unsigned i = 0; i < n_; ++i) {
            size *= ring_->size();
            if (size > std::numeric_limits<Point>::max()) {
                throw CapExceeded("FreeModule: " + ring_->name() + "^" + std::to_string(n_) + " is too large");
            }
        }
        size_ = static_cast<Point>(size);
    }

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    unsigned rank() const { return n_; }
    Point size() const { return size_; }
    Carrier carrier() const { return {ring_->name(), n_, size_}; }

    Ring::Elem coordinate(Point v, unsigned i) const {
        for (unsigned k = n_ - 1; k > i; --k) v /= ring_->size();
        return v % ring_->size();
    }

    std::vector<Ring::Elem> coordinates(Point v) const {
        std::vector<Ring::Elem> out(n_);
        for (unsigned k = n_; k-- > 0;) {
            out[k] = v % ring_->size();
            v /= ring_->size();
        }
        return out;
    }

    Point point(std::span<const Ring::Elem> coords) const {
        if (coords.size() != n_) throw DomainError("FreeModule: wrong vector length");
        Point v = 0;
        for (auto c : coords) {
            if (c >= ring_->size()) throw DomainError("FreeModule: coordinate out of range");
            v = v * ring_->size() + c;
        }
        return v;
    }

    Point add(Point v, Point w) const {
        return combine(v, w, [this](Ring::Elem a, Ring::Elem b) { return ring_->add(a, b); });
    }

    Point scale(Ring::Elem r, Point v) const {
        auto c = coordinates(v);
        for (auto& x : c) x = ring_->mul(r, x);
        return point(c);
    }

    /// <v, w> = sum_i v_i w_i.
    Ring::Elem inner(Point v, Point w) const {
        Ring::Elem s = 0;
        for (unsigned k = 0; k < n_; ++k) {
            s = ring_->add(s, ring_->mul(v % ring_->size(), w % ring_->size()));
            v /= ring_->size();
            w /= ring_->size();
        }
        return s;
    }

    /// Hamming weight: number of nonzero coordinates.
    unsigned weight(Point v) const {
        unsigned w = 0;
        for (unsigned k = 0; k < n_; ++k) {
            w += (v % ring_->size()) != 0;
            v /= ring_->size();
        }
        return w;
    }

    std::string format(Point v, bool pretty = false) const {
        if (n_ == 1) return ring_->format(v, pretty);
        std::string out = "[";
        auto c = coordinates(v);
        for (unsigned k = 0; k < n_; ++k) out += (k ? " " : "") + ring_->format(c[k], pretty);
        return out + "]";
    }

    friend bool operator==(const FreeModule& a, const FreeModule& b) {
        return a.n_ == b.n_ && a.ring_->spec() == b.ring_->spec();
    }

private:
    template <class Op>
    Point combine(Point v, Point w, Op op) const {
        Point out = 0, place = 1;
        for (unsigned k = 0; k < n_; ++k) {
            out += op(v % ring_->size(), w % ring_->size()) * place;
            v /= ring_->size();
            w /= ring_->size();
            place *= ring_->size();
        }
        return out;
    }

    RingPtr ring_;
    unsigned n_ = 1;
    Point size_ = 0;
};

// ---------------------------------------------------------------------------
// Partition

/// An ordered list of disjoint nonempty blocks covering a carrier. Block order
/// is kept as given (it fixes Krawtchouk row/column order); equality compares
/// canonical forms, where blocks are sorted by their smallest point.
class Partition {
public:
    using Block = std::vector<Point>;

    Partition() = default;

    Partition(Carrier carrier, std::vector<Block> blocks)
        : carrier_(std::move(carrier)), blocks_(std::move(blocks)) {
        constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
        block_of_.assign(carrier_.size, unset);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            auto& blk = blocks_[b];
            if (blk.empty()) throw DomainError("Partition: empty block");
            std::sort(blk.begin(), blk.end());
            for (Point v : blk) {
                if (v >= carrier_.size) throw DomainError("Partition: point outside carrier");
                if (block_of_[v] != unset) throw DomainError("Partition: blocks overlap");
                block_of_[v] = static_cast<std::uint32_t>(b);
            }
        }
        if (std::find(block_of_.begin(), block_of_.end(), unset) != block_of_.end()) {
            throw DomainError("Partition: blocks do not cover " + carrier_.to_string());
        }
    }

    /// Groups points by label; blocks ordered by label.
    template <class Label>
    static Partition from_labels(Carrier carrier, const std::vector<Label>& labels) {
        if (labels.size() != carrier.size) throw DomainError("Partition: label count mismatch");
        std::map<Label, Block> groups;
        for (Point v = 0; v < labels.size(); ++v) groups[labels[v]].push_back(v);
        std::vector<Block> blocks;
        blocks.reserve(groups.size());
        for (auto& [label, blk] : groups) blocks.push_back(std::move(blk));
        return Partition(std::move(carrier), std::move(blocks));
    }

    const Carrier& carrier() const { return carrier_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(std::size_t i) const { return blocks_[i]; }
    std::uint32_t block_of(Point v) const { return block_of_[v]; }

    /// Same blocks sorted by smallest point.
    Partition canonical() const {
        auto blocks = blocks_;
        std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
        return Partition(carrier_, std::move(blocks));
    }

    /// True if every block of *this lies inside a block of `coarser`.
    bool refines(const Partition& coarser) const {
        if (carrier_ != coarser.carrier_) throw CarrierMismatch("refines: different carriers");
        for (const auto& blk : blocks_) {
            const auto target = coarser.block_of(blk.front());
            for (Point v : blk) {
                if (coarser.block_of(v) != target) return false;
            }
        }
        return true;
    }

    /// Index of the block equal to `blk` (as a set), or size() if none.
    std::size_t find_block(Block blk) const {
        std::sort(blk.begin(), blk.end());
        if (blk.empty()) return blocks_.size();
        const auto b = block_of(blk.front());
        return blocks_[b] == blk ? b : blocks_.size();
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        if (a.carrier_ != b.carrier_ || a.blocks_.size() != b.blocks_.size()) return false;
        for (const auto& blk : a.blocks_) {
            if (b.blocks_[b.block_of(blk.front())] != blk) return false;
        }
        return true;
    }

private:
    Carrier carrier_;
    std::vector<Block> blocks_;
    std::vector<std::uint32_t> block_of_;
};

// ---------------------------------------------------------------------------
// Characters on R^n

/// Evaluates chi_u(<v, w>) as an exponent of zeta_L, optionally composed with
/// the Galois automorphism zeta_L -> zeta_L^k (k = `root_power`).
class CharacterPairing {
public:
    CharacterPairing(const FreeModule& module, Ring::Elem unit, unsigned root_power = 1)
        : module_(&module), order_(module.ring().character_order()), unit_(unit) {
        const Ring& ring = module.ring();
        if (!ring.is_unit(unit)) throw DomainError("character shift " + ring.format(unit) + " is not a unit");
        if (std::gcd(root_power % order_, order_) != 1 && order_ > 1) {
            throw DomainError("root power " + std::to_string(root_power) + " is not coprime to " +
                              std::to_string(order_));
        }
        power_ = root_power % order_;
        if (order_ == 1) power_ = 0;
        const Ring::Elem r = ring.size();
        if (r <= kTableLimit) {
            table_.resize(std::size_t(r) * r);
            for (Ring::Elem a = 0; a < r; ++a) {
                const Ring::Elem ua = ring.mul(unit, a);
                for (Ring::Elem b = 0; b < r; ++b) table_[std::size_t(a) * r + b] = raw(ring.mul(ua, b));
            }
        }
    }

    unsigned order() const { return order_; }
    Ring::Elem unit() const { return unit_; }

    /// Exponent e of chi_u(a b) for ring elements a, b.
    unsigned ring_exponent(Ring::Elem a, Ring::Elem b) const {
        const Ring& ring = module_->ring();
        if (!table_.empty()) return table_[std::size_t(a) * ring.size() + b];
        return raw(ring.mul(ring.mul(unit_, a), b));
    }

    /// Exponent e of chi_u(<v, w>).
    unsigned exponent(Point v, Point w) const {
        const Ring::Elem r = module_->ring().size();
        std::uint64_t e = 0;
        for (unsigned k = 0; k < module_->rank(); ++k) {
            e += ring_exponent(v % r, w % r);
            v /= r;
            w /= r;
        }
        return static_cast<unsigned>(e % order_);
    }

private:
    static constexpr Ring::Elem kTableLimit = 1024;

    unsigned raw(Ring::Elem x) const {
        return static_cast<unsigned>((std::uint64_t(module_->ring().char_exponent(x)) * power_) % order_);
    }

    const FreeModule* module_;
    unsigned order_;
    Ring::Elem unit_;
    unsigned power_ = 1;
    std::vector<unsigned> table_;
};

using Signature = std::vector<CycInt>;

/// (sum_{w in P_m} chi_u(<v, w>))_m for one point v.
inline Signature signature(const CharacterPairing& pairing, const Partition& partition, Point v,
                           RootSum& acc) {
    Signature sig;
    sig.reserve(partition.size());
    for (const auto& blk : partition.blocks()) {
        for (Point w : blk) acc.add(pairing.exponent(v, w));
        sig.push_back(acc.take());
    }
    return sig;
}

namespace detail {

inline void check_carrier(const FreeModule& module, const Partition& p, std::string_view what) {
    if (p.carrier() != module.carrier()) {
        throw CarrierMismatch(std::string(what) + ": partition lives on " + p.carrier().to_string() + ", not " +
                              module.carrier().to_string());
    }
}

}  // namespace detail

/// The chi_u-dual partition: points grouped by their block-sum signature.
/// Blocks come out in canonical order ({0} first).
inline Partition dual_partition(const FreeModule& module, const Partition& partition, Ring::Elem unit,
                                unsigned root_power = 1) {
    detail::check_carrier(module, partition, "dual_partition");
    check_cap(module.size(), "dual_partition");
    CharacterPairing pairing(module, unit, root_power);
    RootSum acc(pairing.order());
    std::map<Signature, std::uint32_t> ids;
    std::vector<Partition::Block> blocks;
    for (Point v = 0; v < module.size(); ++v) {
        auto [it, inserted] = ids.try_emplace(signature(pairing, partition, v, acc),
                                              static_cast<std::uint32_t>(blocks.size()));
        if (inserted) blocks.emplace_back();
        blocks[it->second].push_back(v);
    }
    return Partition(module.carrier(), std::move(blocks));
}

inline Partition dual_partition(const FreeModule& module, const Partition& partition) {
    return dual_partition(module, partition, module.ring().one());
}

inline Partition bidual(const FreeModule& module, const Partition& partition, Ring::Elem unit) {
    return dual_partition(module, dual_partition(module, partition, unit), unit);
}

/// |P| == |dual(P)|. With `verify`, also checks that the bidual equals P and
/// throws VerificationError if the two criteria disagree.
inline bool is_reflexive(const FreeModule& module, const Partition& partition, Ring::Elem unit,
                         bool verify = false) {
    const auto dual = dual_partition(module, partition, unit);
    const bool by_count = dual.size() == partition.size();
    if (verify) {
        const bool by_bidual = dual_partition(module, dual, unit) == partition;
        if (by_bidual != by_count) throw VerificationError("reflexivity: count and bidual criteria disagree");
    }
    return by_count;
}

inline bool is_self_dual(const FreeModule& module, const Partition& partition, Ring::Elem unit) {
    return dual_partition(module, partition, unit) == partition;
}

// ---------------------------------------------------------------------------
// Krawtchouk matrices

struct KrawtchoukMatrix {
    std::vector<std::vector<CycInt>> entries;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
    const CycInt& at(std::size_t row, std::size_t col) const { return entries[row][col]; }

    bool is_integral() const {
        for (const auto& row : entries) {
            for (const auto& e : row) {
                if (!e.as_integer()) return false;
            }
        }
        return true;
    }

    /// Integer view; throws VerificationError if some entry is irrational.
    std::vector<std::vector<BigInt>> integers() const {
        std::vector<std::vector<BigInt>> out;
        for (const auto& row : entries) {
            auto& r = out.emplace_back();
            for (const auto& e : row) {
                auto n = e.as_integer();
                if (!n) throw VerificationError("Krawtchouk entry " + e.to_string() + " is not an integer");
                r.push_back(*n);
            }
        }
        return out;
    }

    friend bool operator==(const KrawtchoukMatrix&, const KrawtchoukMatrix&) = default;
};

/// K[l][m] = sum_{w in P_m} chi_u(<v, w>) for v in dual block l. Every member
/// of every dual block is evaluated; a disagreement raises VerificationError.
inline KrawtchoukMatrix krawtchouk_matrix(const FreeModule& module, const Partition& partition,
                                          const Partition& dual, Ring::Elem unit, unsigned root_power = 1) {
    detail::check_carrier(module, partition, "krawtchouk_matrix");
    detail::check_carrier(module, dual, "krawtchouk_matrix");
    CharacterPairing pairing(module, unit, root_power);
    RootSum acc(pairing.order());
    KrawtchoukMatrix k;
    for (const auto& blk : dual.blocks()) {
        auto row = signature(pairing, partition, blk.front(), acc);
        for (std::size_t i = 1; i < blk.size(); ++i) {
            if (signature(pairing, partition, blk[i], acc) != row) {
                throw VerificationError("krawtchouk_matrix: points " + module.format(blk.front()) + " and " +
                                        module.format(blk[i]) + " of one dual block have different block sums");
            }
        }
        k.entries.push_back(std::move(row));
    }
    return k;
}

// ---------------------------------------------------------------------------
// Standard partitions

/// Orbits {u v : u in R*}, blocks in canonical order.
inline Partition unit_orbit_partition(const FreeModule& module) {
    check_cap(module.size(), "unit_orbit_partition");
    const auto units = module.ring().units();
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> label(module.size(), unset);
    std::uint32_t next = 0;
    for (Point v = 0; v < module.size(); ++v) {
        if (label[v] != unset) continue;
        for (auto u : units) label[module.scale(u, v)] = next;
        ++next;
    }
    return Partition::from_labels(module.carrier(), label);
}

/// Blocks {v : wt(v) = m}, m = 0..n.
inline Partition hamming_partition(const FreeModule& module) {
    check_cap(module.size(), "hamming_partition");
    std::vector<unsigned> label(module.size());
    for (Point v = 0; v < module.size(); ++v) label[v] = module.weight(v);
    return Partition::from_labels(module.carrier(), label);
}

/// P_1 x ... x P_k on the product of the factor carriers. The target is either
/// a power R^n of the factors' common ring (ranks adding up to n) or, for
/// n = 1, the ring whose components are the factors' components in order.
/// Blocks are ordered lexicographically by their factor block indices.
inline Partition product_partition(const std::vector<Partition>& factors, const Carrier& target) {
    if (factors.empty()) throw DomainError("product_partition: no factors");
    std::uint64_t size = 1;
    for (const auto& f : factors) size *= f.carrier().size;
    if (size != target.size) throw CarrierMismatch("product_partition: sizes do not multiply to the target");
    bool power = true;
    unsigned rank = 0;
    std::string joined;
    for (const auto& f : factors) {
        power = power && f.carrier().ring == target.ring;
        rank += f.carrier().n;
        joined += (joined.empty() ? "" : "x") + f.carrier().ring;
    }
    const bool as_power = power && rank == target.n;
    const bool as_components =
        target.n == 1 && joined == target.ring &&
        std::all_of(factors.begin(), factors.end(), [](const Partition& f) { return f.carrier().n == 1; });
    if (!as_power && !as_components) {
        throw CarrierMismatch("product_partition: factors do not form " + target.to_string());
    }
    check_cap(target.size, "product_partition");
    std::vector<std::uint64_t> label(target.size);
    for (std::uint64_t x = 0; x < target.size; ++x) {
        std::uint64_t rest = x, code = 0, place = 1;
        for (std::size_t i = factors.size(); i-- > 0;) {
            const auto& f = factors[i];
            code += f.block_of(static_cast<Point>(rest % f.carrier().size)) * place;
            rest /= f.carrier().size;
            place *= f.size();
        }
        label[x] = code;
    }
    return Partition::from_labels(target, label);
}

/// Result of extending a partition of a subgroup H to the whole module.
struct SubgroupExtension {
    /// (G \ H) | P_0 | ... | P_M.
    Partition extended;
    /// H^perp \ {0} | {0} | Q'_1 | ... | Q'_L, where Q'_l collects the points
    /// outside H^perp whose restricted character lies in the l-th dual block of P on H.
    Partition predicted_dual;
    /// Block matrix with corner -|H|, first row |P_m|, first column |G \ H| then zeros.
    KrawtchoukMatrix predicted_krawtchouk;
};

/// Trivial extension of a partition of the subgroup H (given as blocks of
/// module points whose union is H).
inline SubgroupExtension extend_to_group(const FreeModule& module, std::vector<Partition::Block> blocks,
                                         Ring::Elem unit) {
    check_cap(module.size(), "extend_to_group");
    std::vector<char> in_h(module.size(), 0);
    std::vector<Point> h;
    for (auto& blk : blocks) {
        if (blk.empty()) throw DomainError("extend_to_group: empty block");
        for (Point v : blk) {
            if (v >= module.size()) throw DomainError("extend_to_group: point outside carrier");
            if (in_h[v]) throw DomainError("extend_to_group: blocks overlap");
            in_h[v] = 1;
            h.push_back(v);
        }
    }
    std::sort(h.begin(), h.end());
    if (!in_h[0]) throw DomainError("extend_to_group: H does not contain 0");
    for (Point a : h) {
        for (Point b : h) {
            if (!in_h[module.add(a, b)]) throw DomainError("extend_to_group: H is not closed under addition");
        }
    }
    if (h.size() == module.size()) throw DomainError("extend_to_group: H must be a proper subgroup");

    Partition::Block outside;
    for (Point v = 0; v < module.size(); ++v) {
        if (!in_h[v]) outside.push_back(v);
    }
    std::vector<Partition::Block> ext;
    ext.push_back(outside);
    for (auto& blk : blocks) ext.push_back(blk);
    Partition extended(module.carrier(), ext);

    // Predicted dual from characters restricted to H.
    CharacterPairing pairing(module, unit);
    RootSum acc(pairing.order());
    Partition::Block annihilator;  // H^perp \ {0}
    std::map<Signature, std::uint32_t> ids;
    std::vector<Partition::Block> restricted;
    std::vector<Signature> rows;
    for (Point v = 1; v < module.size(); ++v) {
        bool trivial = true;
        for (Point w : h) trivial = trivial && pairing.exponent(v, w) == 0;
        if (trivial) {
            annihilator.push_back(v);
            continue;
        }
        Signature sig;
        for (const auto& blk : blocks) {
            for (Point w : blk) acc.add(pairing.exponent(v, w));
            sig.push_back(acc.take());
        }
        auto [it, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(restricted.size()));
        if (inserted) {
            restricted.emplace_back();
            rows.push_back(sig);
        }
        restricted[it->second].push_back(v);
    }
    std::vector<Partition::Block> dual_blocks;
    dual_blocks.push_back(annihilator);
    dual_blocks.push_back({0});
    for (auto& blk : restricted) dual_blocks.push_back(std::move(blk));
    Partition predicted(module.carrier(), std::move(dual_blocks));

    const unsigned order = pairing.order();
    KrawtchoukMatrix k;
    auto& top = k.entries.emplace_back();
    top.push_back(CycInt(order, -BigInt(h.size())));
    for (const auto& blk : blocks) top.push_back(CycInt(order, BigInt(blk.size())));
    auto& zero_row = k.entries.emplace_back();
    zero_row.push_back(CycInt(order, BigInt(outside.size())));
    for (const auto& blk : blocks) zero_row.push_back(CycInt(order, BigInt(blk.size())));
    for (auto& sig : rows) {
        auto& row = k.entries.emplace_back();
        row.push_back(CycInt(order));
        for (auto& e : sig) row.push_back(std::move(e));
    }
    return {std::move(extended), std::move(predicted), std::move(k)};
}

}  // namespace homring
