#pragma once

// Element-free computations on a residue-field profile [(q_1,n_1),...,(q_t,n_t)]:
// the separating test, homogeneous weights of multi-indices, and the
// closed-form Krawtchouk coefficients of the pair (H', dual of H').

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homring/cyclotomic.hpp"
#include "homring/errors.hpp"

namespace homring {

// ---------------------------------------------------------------------------
// Small number theory

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    std::uint64_t value() const {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < exponent; ++i) v *= prime;
        return v;
    }
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: zero has no factorization");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        PrimePower pp{p, 0};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

inline std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

// ---------------------------------------------------------------------------
// Profiles and multi-indices

/// Multiplicity-grouped list of residue-field orders, q ascending and distinct.
class QProfile {
public:
    struct Entry {
        std::uint64_t q = 0;
        unsigned n = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    QProfile() = default;

    /// Sorts by q. Rejects q that are not prime powers, n = 0 and repeated q.
    explicit QProfile(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.q < b.q; });
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!as_prime_power(entries_[i].q)) {
                throw DomainError("QProfile: " + std::to_string(entries_[i].q) +
                                  " is not a prime power");
            }
            if (entries_[i].n == 0) throw DomainError("QProfile: multiplicity must be positive");
            if (i > 0 && entries_[i].q == entries_[i - 1].q) {
                throw DomainError("QProfile: repeated q = " + std::to_string(entries_[i].q));
            }
        }
    }

    /// Profile [(q_1,1),...,(q_t,1)] of a list of distinct prime powers.
    static QProfile of_list(const std::vector<std::uint64_t>& qs) {
        std::vector<Entry> e;
        for (auto q : qs) e.push_back({q, 1});
        return QProfile(std::move(e));
    }

    /// Profile of the distinct prime factors of N (each with multiplicity one).
    static QProfile of_integer(std::uint64_t n) {
        if (n < 2) throw DomainError("QProfile::of_integer: N must be at least 2");
        std::vector<Entry> e;
        for (const auto& pp : factorize(n)) e.push_back({pp.prime, 1});
        return QProfile(std::move(e));
    }

    /// Parses the literal "(q,n);(q,n);...".
    static QProfile parse(std::string_view text);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }

    /// |M| = prod (n_i + 1).
    std::uint64_t index_count() const {
        std::uint64_t s = 1;
        for (const auto& e : entries_) s *= e.n + 1;
        return s;
    }

    /// |soc(R)| = prod q_i^{n_i}.
    BigInt socle_order() const {
        BigInt s = 1;
        for (const auto& e : entries_) s *= boost::multiprecision::pow(BigInt(e.q), e.n);
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            os << (i ? ";" : "") << '(' << entries_[i].q << ',' << entries_[i].n << ')';
        }
        return os.str();
    }

    friend bool operator==(const QProfile&, const QProfile&) = default;

private:
    std::vector<Entry> entries_;
};

namespace detail {

inline std::uint64_t parse_unsigned(std::string_view s, std::string_view what) {
    if (s.empty() || s.size() > 18 ||
        !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(std::string(what) + ": expected an unsigned integer, got '" +
                         std::string(s) + "'");
    }
    return std::stoull(std::string(s));
}

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline QProfile QProfile::parse(std::string_view text) {
    std::vector<Entry> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        auto item = detail::strip(text.substr(pos, end - pos));
        if (item.size() < 5 || item.front() != '(' || item.back() != ')') {
            throw ParseError("profile: expected '(q,n)', got '" + std::string(item) + "'");
        }
        item = item.substr(1, item.size() - 2);
        const auto comma = item.find(',');
        if (comma == std::string_view::npos) throw ParseError("profile: missing ',' in entry");
        const auto q = detail::parse_unsigned(detail::strip(item.substr(0, comma)), "profile q");
        const auto n = detail::parse_unsigned(detail::strip(item.substr(comma + 1)), "profile n");
        entries.push_back({q, static_cast<unsigned>(n)});
        pos = end + 1;
    }
    return QProfile(std::move(entries));
}

/// An index m in [n_1]_0 x ... x [n_t]_0, or the sentinel "diamond" that labels
/// the non-socle block R \ soc(R).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> m) : m_(std::move(m)) {}

    static MultiIndex diamond() {
        MultiIndex d;
        d.diamond_ = true;
        return d;
    }
    static MultiIndex zero(std::size_t t) { return MultiIndex(std::vector<unsigned>(t, 0)); }

    bool is_diamond() const { return diamond_; }
    const std::vector<unsigned>& values() const { return m_; }
    std::size_t size() const { return m_.size(); }
    unsigned operator[](std::size_t i) const { return m_[i]; }

    bool is_zero() const {
        return !diamond_ && std::all_of(m_.begin(), m_.end(), [](unsigned v) { return v == 0; });
    }
    unsigned total() const {
        unsigned s = 0;
        for (auto v : m_) s += v;
        return s;
    }

    std::string to_string() const {
        if (diamond_) return "diamond";
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < m_.size(); ++i) os << (i ? "," : "") << m_[i];
        os << ')';
        return os.str();
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        if (a.diamond_ != b.diamond_) return b.diamond_ <=> a.diamond_;  // diamond sorts first
        return a.m_ <=> b.m_;
    }

private:
    std::vector<unsigned> m_;
    bool diamond_ = false;
};

/// All m in M in lexicographic order.
inline std::vector<MultiIndex> all_indices(const QProfile& profile) {
    std::vector<MultiIndex> out;
    std::vector<unsigned> m(profile.size(), 0);
    while (true) {
        out.emplace_back(m);
        std::size_t i = m.size();
        while (i > 0 && m[i - 1] == profile[i - 1].n) m[--i] = 0;
        if (i == 0) return out;
        ++m[i - 1];
    }
}

inline void check_index(const QProfile& profile, const MultiIndex& m) {
    if (m.is_diamond()) return;
    if (m.size() != profile.size()) throw DomainError("multi-index length does not match profile");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > profile[i].n) {
            throw DomainError("multi-index " + m.to_string() + " out of range for profile " +
                              profile.to_string());
        }
    }
}

// ---------------------------------------------------------------------------
// Separating lists

/// prod_i (q_i - 1)^{m_i}.
inline BigInt unit_product(const QProfile& profile, const MultiIndex& m) {
    BigInt p = 1;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        p *= boost::multiprecision::pow(BigInt(profile[i].q - 1), m[i]);
    }
    return p;
}

struct SeparatingResult {
    bool separating = true;
    /// Lexicographically first violating pair (m, l), m < l, when not separating.
    std::optional<std::pair<MultiIndex, MultiIndex>> witness;
};

/// Every pair m < l in M with equal unit product and equal parity of total weight.
inline std::vector<std::pair<MultiIndex, MultiIndex>> separating_violations(const QProfile& profile,
                                                                            bool first_only = false) {
    const auto idx = all_indices(profile);
    std::vector<BigInt> prod;
    prod.reserve(idx.size());
    for (const auto& m : idx) prod.push_back(unit_product(profile, m));
    std::vector<std::pair<MultiIndex, MultiIndex>> out;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (prod[a] == prod[b] && idx[a].total() % 2 == idx[b].total() % 2) {
                out.emplace_back(idx[a], idx[b]);
                if (first_only) return out;
            }
        }
    }
    return out;
}

inline SeparatingResult is_separating(const QProfile& profile) {
    auto v = separating_violations(profile, true);
    if (v.empty()) return {};
    return {false, v.front()};
}

inline SeparatingResult is_separating_integer(std::uint64_t n) {
    return is_separating(QProfile::of_integer(n));
}

/// All separating integers in [2, max].
inline std::vector<std::uint64_t> scan_separating(std::uint64_t max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= max; ++n) {
        if (is_separating_integer(n).separating) out.push_back(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weights and Krawtchouk coefficients on indices

/// 1 - prod (-1/(q_i-1))^{m_i} on M, and 1 on the diamond.
inline Rational hom_weight_of_index(const QProfile& profile, const MultiIndex& m) {
    if (m.is_diamond()) return Rational(1);
    check_index(profile, m);
    Rational prod(1);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const Rational f(BigInt(-1), BigInt(profile[i].q - 1));
        for (unsigned k = 0; k < m[i]; ++k) prod *= f;
    }
    return Rational(1) - prod;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Classical Krawtchouk polynomial K_m^{(n,q)}(x) = sum_j (-1)^j (q-1)^{m-j} C(x,j) C(n-x,m-j).
inline BigInt krawtchouk_polynomial(unsigned m, unsigned n, std::uint64_t q, unsigned x) {
    BigInt sum = 0;
    for (unsigned j = 0; j <= m; ++j) {
        BigInt term = boost::multiprecision::pow(BigInt(q - 1), m - j) * binomial(x, j) *
                      binomial(std::int64_t(n) - x, m - j);
        sum += (j % 2 ? -term : term);
    }
    return sum;
}

/// Closed-form Krawtchouk coefficient K_{l,m} of (H', dual of H') with rows
/// labelled by dual indices l and columns by primal indices m.
///
/// The diamond index refers to R \ soc(R) (columns) and rad(R) \ {0} (rows); it
/// is only meaningful when `ring_order` is given and exceeds |soc(R)|.
inline BigInt krawtchouk_closed(const QProfile& profile, const MultiIndex& l, const MultiIndex& m,
                                std::optional<BigInt> ring_order = std::nullopt) {
    check_index(profile, l);
    check_index(profile, m);
    const BigInt soc = profile.socle_order();
    if (l.is_diamond() || m.is_diamond()) {
        if (!ring_order || *ring_order <= soc) {
            throw DomainError("krawtchouk_closed: diamond index requires a non-semisimple ring");
        }
    }
    if (m.is_diamond()) {
        if (l.is_diamond()) return -soc;
        if (l.is_zero()) return *ring_order - soc;
        return 0;
    }
    if (l.is_diamond()) {
        BigInt size = 1;
        for (std::size_t i = 0; i < profile.size(); ++i) {
            size *= binomial(profile[i].n, m[i]) *
                    boost::multiprecision::pow(BigInt(profile[i].q - 1), m[i]);
        }
        return size;
    }
    BigInt prod = 1;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        prod *= krawtchouk_polynomial(m[i], profile[i].n, profile[i].q, l[i]);
    }
    return prod;
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
    bool separating = false;
    bool semisimple = false;
    bool reflexive = false;
    bool self_dual = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

/// P_hom is reflexive iff the profile separates. When it separates, P_hom is
/// the socle-level Hamming partition H' and its dual is the residue-level one,
/// so the two coincide exactly when R is semisimple or R is a single local ring
/// whose socle equals its (nonzero) radical, e.g. Z_{p^2}. `socle_is_radical`
/// flags the latter case.
inline Classification classify(const QProfile& profile, bool semisimple, bool socle_is_radical = false) {
    Classification c;
    c.separating = is_separating(profile).separating;
    c.semisimple = semisimple;
    c.reflexive = c.separating;
    c.self_dual = c.separating && (semisimple || socle_is_radical);
    return c;
}

/// Classification of Z_N: semisimple iff N is square-free; Z_{p^2} is the
/// non-semisimple self-dual case.
inline Classification classify_integer(std::uint64_t n) {
    const auto f = factorize(n);
    bool squarefree = true;
    for (const auto& pp : f) squarefree = squarefree && pp.exponent == 1;
    return classify(QProfile::of_integer(n), squarefree, f.size() == 1 && f[0].exponent == 2);
}

}  // namespace homring
