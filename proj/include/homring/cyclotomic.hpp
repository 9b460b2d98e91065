#pragma once

// Exact arithmetic in the ring of cyclotomic integers Z[zeta_L].
//
// An element is stored in reduced coordinates: the coefficient vector of its
// representative polynomial modulo the L-th cyclotomic polynomial Phi_L, of
// length phi(L). Reduced coordinates are canonical, so equality of two sums of
// roots of unity is a plain vector comparison.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homring/errors.hpp"

namespace homring {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial, constant coefficient first.
using IntPoly = std::vector<BigInt>;

namespace detail {

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Reduces `p` in place modulo the monic polynomial `mod` (deg mod >= 1) and
/// pads the result to exactly deg(mod) coefficients.
inline void reduce_mod_monic(IntPoly& p, const IntPoly& mod) {
    const std::size_t d = mod.size() - 1;
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i] == 0) continue;
        const BigInt c = p[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (mod[j] != 0) p[i - d + j] -= c * mod[j];
        }
        p[i] = 0;
    }
    p.resize(d);
}

/// Exact quotient num / den for monic den; throws if the division leaves a remainder.
inline IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        if (num.empty()) return {};
        throw VerificationError("divide_exact: nonzero remainder");
    }
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw VerificationError("divide_exact: nonzero remainder");
    return quot;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Per-order data: Phi_L and the reduced form of every power zeta_L^k, 0 <= k < L.
struct CyclotomicData {
    unsigned order = 1;
    IntPoly phi;                                   // monic, degree totient(order)
    std::vector<std::vector<BigInt>> roots;        // roots[k] = zeta^k reduced
    std::vector<std::vector<std::int64_t>> roots64;  // same, when every entry fits
    bool roots_fit_int64 = false;
    std::int64_t max_root_coefficient = 0;

    std::size_t degree() const { return phi.size() - 1; }
};

template <class Value>
class OrderCache {
public:
    template <class Make>
    const Value& get(unsigned key, Make&& make) {
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end()) return *it->second;
        }
        // Built outside the lock: `make` may recurse into this cache.
        auto value = std::make_unique<Value>(make());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<unsigned, std::unique_ptr<Value>> entries_;
};

inline OrderCache<IntPoly>& phi_cache() {
    static OrderCache<IntPoly> cache;
    return cache;
}

inline OrderCache<CyclotomicData>& data_cache() {
    static OrderCache<CyclotomicData> cache;
    return cache;
}

}  // namespace detail

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// the product of Phi_d over the proper divisors d of n. Cached; thread-safe.
inline const IntPoly& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic_polynomial: order must be positive");
    return detail::phi_cache().get(n, [n] {
        IntPoly num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        if (n == 1) return num;
        IntPoly den{1};
        for (unsigned d = 1; d < n; ++d) {
            if (n % d == 0) den = detail::multiply(den, cyclotomic_polynomial(d));
        }
        return detail::divide_exact(std::move(num), den);
    });
}

inline unsigned euler_totient(unsigned n) {
    return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

namespace detail {

inline const CyclotomicData& cyclotomic_data(unsigned order) {
    return data_cache().get(order, [order] {
        CyclotomicData data;
        data.order = order;
        data.phi = cyclotomic_polynomial(order);
        const std::size_t d = data.degree();
        data.roots.reserve(order);
        std::vector<BigInt> cur(d, 0);
        cur[0] = 1;
        for (unsigned k = 0; k < order; ++k) {
            data.roots.push_back(cur);
            // Multiply by x and reduce the single overflowing coefficient.
            IntPoly next(d + 1, 0);
            for (std::size_t i = 0; i < d; ++i) next[i + 1] = cur[i];
            reduce_mod_monic(next, data.phi);
            cur = std::move(next);
        }
        data.roots_fit_int64 = true;
        BigInt max_abs = 0;
        for (const auto& r : data.roots) {
            for (const auto& c : r) max_abs = std::max(max_abs, BigInt(abs(c)));
        }
        if (max_abs > BigInt(std::numeric_limits<std::int32_t>::max())) {
            data.roots_fit_int64 = false;
        } else {
            data.max_root_coefficient = static_cast<std::int64_t>(max_abs);
            data.roots64.reserve(order);
            for (const auto& r : data.roots) {
                std::vector<std::int64_t> v(d);
                for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<std::int64_t>(r[i]);
                data.roots64.push_back(std::move(v));
            }
        }
        return data;
    });
}

}  // namespace detail

/// Exact element of Z[zeta_L] in reduced coordinates.
class CycInt {
public:
    /// Zero of order 1.
    CycInt() : CycInt(1u) {}

    /// Zero of the given order.
    explicit CycInt(unsigned order) : order_(order) {
        coeffs_.assign(detail::cyclotomic_data(order).degree(), 0);
    }

    /// The integer constant `value` viewed in Z[zeta_L].
    CycInt(unsigned order, BigInt value) : CycInt(order) { coeffs_[0] = std::move(value); }

    /// Builds an element from the coefficients of any polynomial in zeta_L
    /// (constant first, any length), reducing modulo Phi_L.
    static CycInt from_polynomial(unsigned order, IntPoly poly) {
        const auto& data = detail::cyclotomic_data(order);
        if (poly.size() < data.degree()) poly.resize(data.degree(), 0);
        detail::reduce_mod_monic(poly, data.phi);
        CycInt out;
        out.order_ = order;
        out.coeffs_ = std::move(poly);
        return out;
    }

    /// zeta_L^e, for any integer e (taken modulo L).
    static CycInt root(std::int64_t e, unsigned order) {
        if (order == 0) throw DomainError("CycInt::root: order must be positive");
        const auto& data = detail::cyclotomic_data(order);
        const auto k = static_cast<std::size_t>(((e % std::int64_t(order)) + order) % order);
        CycInt out;
        out.order_ = order;
        out.coeffs_ = data.roots[k];
        return out;
    }

    unsigned order() const { return order_; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
    }

    /// The integer n if this element equals the constant n, otherwise nothing.
    std::optional<BigInt> as_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return std::nullopt;
        }
        return coeffs_[0];
    }

    CycInt& operator+=(const CycInt& rhs) {
        check_order(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    CycInt& operator-=(const CycInt& rhs) {
        check_order(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    CycInt& operator*=(const CycInt& rhs) {
        check_order(rhs);
        *this = from_polynomial(order_, detail::multiply(coeffs_, rhs.coeffs_));
        return *this;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }

    friend CycInt operator-(CycInt a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Total order (order first, then coefficients lexicographically) for use as a map key.
    friend bool operator<(const CycInt& a, const CycInt& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                            b.coeffs_.end());
    }

    /// "3" for integers, otherwise "[c0, c1, ...]@L".
    std::string to_string() const {
        std::ostringstream os;
        if (auto n = as_integer()) {
            os << *n;
            return os.str();
        }
        os << '[';
        for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
        os << "]@" << order_;
        return os.str();
    }

private:
    void check_order(const CycInt& rhs) const {
        if (rhs.order_ != order_) {
            throw OrderMismatch("CycInt: orders " + std::to_string(order_) + " and " +
                                std::to_string(rhs.order_) + " differ");
        }
    }

    unsigned order_ = 1;
    std::vector<BigInt> coeffs_;
};

/// Accumulates a multiset of roots zeta_L^e and canonicalizes the sum.
///
/// Counting exponents first and reducing once keeps character sums over
/// large blocks cheap. Reduction uses 64-bit arithmetic with overflow checks
/// and falls back to big integers when a check trips.
class RootSum {
public:
    explicit RootSum(unsigned order)
        : data_(&detail::cyclotomic_data(order)), counts_(order, 0), touched_flag_(order, 0) {}

    unsigned order() const { return data_->order; }

    /// Adds zeta_L^e; `e` must already lie in [0, L).
    void add(unsigned e, std::int64_t multiplicity = 1) {
        if (!touched_flag_[e]) {
            touched_flag_[e] = 1;
            touched_.push_back(e);
        }
        counts_[e] += multiplicity;
    }

    /// Returns the accumulated sum and resets the accumulator.
    CycInt take() {
        CycInt out = evaluate();
        for (unsigned e : touched_) {
            counts_[e] = 0;
            touched_flag_[e] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    CycInt evaluate() const {
        const std::size_t d = data_->degree();
        if (data_->roots_fit_int64) {
            std::vector<std::int64_t> acc(d, 0);
            bool overflow = false;
            for (unsigned e : touched_) {
                const std::int64_t c = counts_[e];
                if (c == 0) continue;
                const auto& r = data_->roots64[e];
                for (std::size_t i = 0; i < d && !overflow; ++i) {
                    if (r[i] == 0) continue;
                    std::int64_t term;
                    overflow = __builtin_mul_overflow(c, r[i], &term) ||
                               __builtin_add_overflow(acc[i], term, &acc[i]);
                }
                if (overflow) break;
            }
            if (!overflow) {
                IntPoly coeffs(acc.begin(), acc.end());
                return CycInt::from_polynomial(data_->order, std::move(coeffs));
            }
        }
        IntPoly coeffs(d, 0);
        for (unsigned e : touched_) {
            const BigInt c = counts_[e];
            const auto& r = data_->roots[e];
            for (std::size_t i = 0; i < d; ++i) coeffs[i] += c * r[i];
        }
        return CycInt::from_polynomial(data_->order, std::move(coeffs));
    }

    const detail::CyclotomicData* data_;
    std::vector<std::int64_t> counts_;
    std::vector<char> touched_flag_;
    std::vector<unsigned> touched_;
};

}  // namespace homring
