#pragma once

// Codes (submodules of R^n): span closure, dual codes, partition enumerators,
// MacWilliams-identity verification and bounded submodule enumeration.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "homring/cyclotomic.hpp"
#include "homring/errors.hpp"
#include "homring/partition.hpp"

namespace homring {

/// Raised when a MacWilliams check is requested for a partition that is not reflexive.
class NotReflexive : public DomainError {
public:
    using DomainError::DomainError;
};

/// A submodule of R^n: a sorted point set with a generating set.
class Code {
public:
    /// Smallest submodule containing `gens`: the sum of the cyclic modules R g.
    static Code span(const FreeModule& module, std::vector<Point> gens) {
        check_cap(module.size(), "span");
        Code c(module);
        c.insert(0);
        for (Point g : gens) {
            if (g >= module.size()) throw DomainError("span: generator outside " + module.carrier().to_string());
            c.add_cyclic(g);
        }
        c.gens_ = std::move(gens);
        return c;
    }

    /// Wraps an explicit point set; generators are chosen greedily and the set
    /// must equal their span (i.e. be a submodule).
    static Code from_elements(const FreeModule& module, std::vector<Point> points) {
        check_cap(module.size(), "from_elements");
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        if (!points.empty() && points.back() >= module.size()) {
            throw DomainError("from_elements: point outside " + module.carrier().to_string());
        }
        if (points.empty() || points.front() != 0) throw DomainError("from_elements: set does not contain 0");
        Code c(module);
        c.insert(0);
        for (Point v : points) {
            if (c.contains(v)) continue;
            c.gens_.push_back(v);
            c.add_cyclic(v);
        }
        if (c.elements_ != points) throw DomainError("from_elements: set is not a submodule");
        return c;
    }

    const FreeModule& module() const { return *module_; }
    Carrier carrier() const { return module_->carrier(); }
    const std::vector<Point>& elements() const { return elements_; }
    const std::vector<Point>& generators() const { return gens_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(Point v) const { return member_[v] != 0; }

    friend bool operator==(const Code& a, const Code& b) {
        return a.carrier() == b.carrier() && a.elements_ == b.elements_;
    }

private:
    explicit Code(const FreeModule& module) : module_(&module), member_(module.size(), 0) {}

    void insert(Point v) {
        if (!member_[v]) {
            member_[v] = 1;
            elements_.insert(std::upper_bound(elements_.begin(), elements_.end(), v), v);
        }
    }

    /// this += R g.
    void add_cyclic(Point g) {
        std::vector<Point> multiples;
        for (auto r = Ring::Elem{0}; r < module_->ring().size(); ++r) multiples.push_back(module_->scale(r, g));
        std::sort(multiples.begin(), multiples.end());
        multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
        std::vector<Point> next;
        for (Point a : elements_) {
            for (Point m : multiples) {
                const Point s = module_->add(a, m);
                if (!member_[s]) {
                    member_[s] = 1;
                    next.push_back(s);
                }
            }
        }
        elements_.insert(elements_.end(), next.begin(), next.end());
        std::sort(elements_.begin(), elements_.end());
    }

    const FreeModule* module_;
    std::vector<char> member_;
    std::vector<Point> elements_;
    std::vector<Point> gens_;
};

/// C^perp = {v : <v, g> = 0 for every generator g}. With `verify`, also builds
/// the character kernel {v : chi(<v, w>) = 1 for all w in C} and requires equality.
inline Code dual_code(const Code& code, bool verify = false) {
    const auto& module = code.module();
    std::vector<Point> points;
    for (Point v = 0; v < module.size(); ++v) {
        bool orthogonal = true;
        for (Point g : code.generators()) {
            if (module.inner(v, g) != module.ring().zero()) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) points.push_back(v);
    }
    if (verify) {
        CharacterPairing pairing(module, module.ring().one());
        std::vector<Point> kernel;
        for (Point v = 0; v < module.size(); ++v) {
            const bool trivial = std::all_of(code.elements().begin(), code.elements().end(),
                                             [&](Point w) { return pairing.exponent(v, w) == 0; });
            if (trivial) kernel.push_back(v);
        }
        if (kernel != points) throw VerificationError("dual_code: annihilator and character kernel differ");
    }
    return Code::from_elements(module, std::move(points));
}

/// |C cap P_m| for every block m.
inline std::vector<std::uint64_t> enumerator(const Code& code, const Partition& partition) {
    if (partition.carrier() != code.carrier()) {
        throw CarrierMismatch("enumerator: code on " + code.carrier().to_string() + ", partition on " +
                              partition.carrier().to_string());
    }
    std::vector<std::uint64_t> counts(partition.size(), 0);
    for (Point v : code.elements()) ++counts[partition.block_of(v)];
    return counts;
}

// ---------------------------------------------------------------------------
// MacWilliams verification

/// One identity |C| * |C^perp cap B| = sum_j T_j * |C cap B'_j|, both sides computed independently.
struct IdentityRow {
    std::size_t block = 0;
    BigInt lhs;
    CycInt rhs;
    bool holds = false;
};

struct MacWilliamsReport {
    Carrier carrier;
    std::uint64_t code_size = 0;
    std::uint64_t dual_size = 0;
    Partition partition;  // P
    Partition dual;       // Q = dual of P
    std::vector<std::uint64_t> code_on_partition;  // |C cap P_m|
    std::vector<std::uint64_t> code_on_dual;       // |C cap Q_l|
    std::vector<std::uint64_t> dual_on_partition;  // |C^perp cap P_m|
    std::vector<std::uint64_t> dual_on_dual;       // |C^perp cap Q_l|
    /// Per dual block l: |C| |C^perp cap Q_l| against sum_m K'_{m,l} |C cap P_m|,
    /// with K' the Krawtchouk matrix of (Q, P), which exists because P is reflexive.
    std::vector<IdentityRow> dual_blocks;
    /// Per primal block m: |C| |C^perp cap P_m| against sum_l K_{l,m} |C cap Q_l|,
    /// with K the Krawtchouk matrix of (P, Q).
    std::vector<IdentityRow> primal_blocks;
    bool size_product_holds = false;  // |C| |C^perp| = |R|^n
    bool bidual_holds = false;        // C^perp perp = C
    bool holds = false;
};

/// Precomputed data for checking many codes against one partition.
class MacWilliamsChecker {
public:
    /// Throws NotReflexive if P is not reflexive.
    MacWilliamsChecker(const FreeModule& module, Partition partition, Ring::Elem unit)
        : module_(&module), unit_(unit), partition_(std::move(partition)) {
        detail::check_carrier(module, partition_, "macwilliams_check");
        dual_ = dual_partition(module, partition_, unit);
        if (dual_.size() != partition_.size()) {
            throw NotReflexive("macwilliams_check: partition has " + std::to_string(partition_.size()) +
                               " blocks but its dual has " + std::to_string(dual_.size()) + "; it is not reflexive");
        }
        forward_ = krawtchouk_matrix(module, partition_, dual_, unit);
        backward_ = krawtchouk_matrix(module, dual_, partition_, unit);
    }

    const Partition& partition() const { return partition_; }
    const Partition& dual() const { return dual_; }
    const KrawtchoukMatrix& forward() const { return forward_; }
    const KrawtchoukMatrix& backward() const { return backward_; }

    MacWilliamsReport check(const Code& code, bool verify_dual = false) const {
        if (code.carrier() != module_->carrier()) throw CarrierMismatch("macwilliams_check: code carrier differs");
        const Code perp = dual_code(code, verify_dual);
        MacWilliamsReport r;
        r.carrier = module_->carrier();
        r.code_size = code.size();
        r.dual_size = perp.size();
        r.partition = partition_;
        r.dual = dual_;
        r.code_on_partition = enumerator(code, partition_);
        r.code_on_dual = enumerator(code, dual_);
        r.dual_on_partition = enumerator(perp, partition_);
        r.dual_on_dual = enumerator(perp, dual_);
        const unsigned order = module_->ring().character_order();
        const BigInt c(code.size());
        r.dual_blocks = rows(order, c, r.dual_on_dual, r.code_on_partition,
                             [&](std::size_t l, std::size_t m) { return backward_.at(m, l); });
        r.primal_blocks = rows(order, c, r.dual_on_partition, r.code_on_dual,
                               [&](std::size_t m, std::size_t l) { return forward_.at(l, m); });
        r.size_product_holds = BigInt(code.size()) * perp.size() == BigInt(module_->size());
        r.bidual_holds = dual_code(perp) == code;
        r.holds = r.size_product_holds && r.bidual_holds;
        for (const auto& row : r.dual_blocks) r.holds = r.holds && row.holds;
        for (const auto& row : r.primal_blocks) r.holds = r.holds && row.holds;
        return r;
    }

private:
    template <class Coef>
    static std::vector<IdentityRow> rows(unsigned order, const BigInt& code_size,
                                         const std::vector<std::uint64_t>& lhs_counts,
                                         const std::vector<std::uint64_t>& rhs_counts, Coef coef) {
        std::vector<IdentityRow> out;
        for (std::size_t i = 0; i < lhs_counts.size(); ++i) {
            IdentityRow row;
            row.block = i;
            row.lhs = code_size * lhs_counts[i];
            row.rhs = CycInt(order);
            for (std::size_t j = 0; j < rhs_counts.size(); ++j) {
                row.rhs += coef(i, j) * CycInt(order, BigInt(rhs_counts[j]));
            }
            row.holds = row.rhs == CycInt(order, row.lhs);
            out.push_back(std::move(row));
        }
        return out;
    }

    const FreeModule* module_;
    Ring::Elem unit_;
    Partition partition_;
    Partition dual_;
    KrawtchoukMatrix forward_;
    KrawtchoukMatrix backward_;
};

inline MacWilliamsReport macwilliams_check(const Code& code, const Partition& partition, Ring::Elem unit,
                                           bool verify_dual = false) {
    return MacWilliamsChecker(code.module(), partition, unit).check(code, verify_dual);
}

// ---------------------------------------------------------------------------
// Submodule enumeration

/// All distinct cyclic submodules R v, ordered by their point sets.
inline std::vector<Code> cyclic_submodules(const FreeModule& module) {
    check_cap(module.size(), "cyclic_submodules");
    std::set<std::vector<Point>> seen;
    std::vector<Code> out;
    for (Point v = 0; v < module.size(); ++v) {
        auto c = Code::span(module, {v});
        if (seen.insert(c.elements()).second) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) { return a.elements() < b.elements(); });
    return out;
}

/// All distinct submodules generated by at most two vectors (sums of two cyclic submodules).
inline std::vector<Code> two_generator_submodules(const FreeModule& module) {
    const auto cyclic = cyclic_submodules(module);
    std::set<std::vector<Point>> seen;
    std::vector<Code> out;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
        for (std::size_t j = i; j < cyclic.size(); ++j) {
            std::vector<Point> gens = cyclic[i].generators();
            gens.insert(gens.end(), cyclic[j].generators().begin(), cyclic[j].generators().end());
            auto c = Code::span(module, std::move(gens));
            if (seen.insert(c.elements()).second) out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) { return a.elements() < b.elements(); });
    return out;
}

}  // namespace homring
