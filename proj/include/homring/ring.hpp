#pragma once

// Finite commutative Frobenius rings R = R_1 x ... x R_t with local components
// Z_{p^r} and F_{p^m}, their elements, units, socle, radical and the
// generating character chi.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "homring/errors.hpp"
#include "homring/profile.hpp"

namespace homring {

// ---------------------------------------------------------------------------
// Enumeration cap

namespace detail {

inline std::size_t initial_cap() {
    if (const char* env = std::getenv("HOMRING_MAX_ELEMENTS")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            // Unparsable override: keep the default.
        }
    }
    return 1'000'000;
}

inline std::atomic<std::size_t>& cap_storage() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

}  // namespace detail

/// Largest carrier (|R| or |R|^n) any enumeration may touch. Defaults to 10^6,
/// overridden by the HOMRING_MAX_ELEMENTS environment variable.
inline std::size_t max_elements() { return detail::cap_storage().load(); }
inline void set_max_elements(std::size_t cap) { detail::cap_storage().store(cap); }

inline void check_cap(std::uint64_t size, std::string_view what) {
    if (size > max_elements()) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(size) +
                          " elements exceed the enumeration cap of " + std::to_string(max_elements()));
    }
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (coefficients constant first)

namespace gfp {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    // Fermat: a^(p-2) mod p.
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Remainder of f modulo g (g nonzero).
inline Poly remainder(Poly f, Poly g, std::uint64_t p) {
    trim(f);
    trim(g);
    const std::uint64_t lead_inv = inverse(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t j = 0; j < g.size(); ++j) {
            f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + p * p - c * g[j] % p) % p);
        }
        trim(f);
    }
    return f;
}

/// The monic polynomial of degree d whose lower coefficients are the base-p
/// digits of `code`, constant term most significant (so increasing `code`
/// walks the lexicographic order compared from the constant term up).
inline Poly monic_from_code(std::uint64_t code, unsigned d, std::uint64_t p) {
    Poly f(d + 1, 0);
    f[d] = 1;
    for (unsigned i = d; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return f;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Exhaustive check: no monic polynomial of degree 1..deg/2 divides f.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    Poly g = f;
    trim(g);
    const unsigned deg = static_cast<unsigned>(g.size() - 1);
    if (deg == 0) return false;
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            if (remainder(g, monic_from_code(code, d, p), p).empty()) return false;
        }
    }
    return true;
}

/// Lexicographically smallest monic irreducible of degree m (coefficients compared
/// from the constant term up).
inline Poly smallest_irreducible(std::uint64_t p, unsigned m) {
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f = monic_from_code(code, m, p);
        if (is_irreducible(f, p)) return f;
    }
    throw VerificationError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace gfp

// ---------------------------------------------------------------------------
// Ring specifications

/// One local factor: Z_{p^r} or F_{p^m}.
class LocalRingSpec {
public:
    enum class Kind { Residue, Field };

    static LocalRingSpec residue(std::uint64_t p, unsigned r) {
        if (!is_prime(p)) throw DomainError("Z_{p^r}: " + std::to_string(p) + " is not prime");
        if (r == 0) throw DomainError("Z_{p^r}: exponent must be positive");
        LocalRingSpec s;
        s.kind_ = Kind::Residue;
        s.p_ = p;
        s.e_ = r;
        return s;
    }

    /// F_{p^m} with the lexicographically smallest monic irreducible modulus.
    static LocalRingSpec field(std::uint64_t p, unsigned m) {
        if (!is_prime(p)) throw DomainError("F_{p^m}: " + std::to_string(p) + " is not prime");
        if (m == 0) throw DomainError("F_{p^m}: degree must be positive");
        return field(p, gfp::smallest_irreducible(p, m));
    }

    /// F_{p^m} with an explicit monic modulus; irreducibility is verified.
    static LocalRingSpec field(std::uint64_t p, gfp::Poly modulus) {
        if (!is_prime(p)) throw DomainError("F_{p^m}: " + std::to_string(p) + " is not prime");
        gfp::trim(modulus);
        if (modulus.size() < 2 || modulus.back() != 1) {
            throw DomainError("F_{p^m}: modulus must be monic of positive degree");
        }
        for (auto c : modulus) {
            if (c >= p) throw DomainError("F_{p^m}: modulus coefficient out of range");
        }
        if (!gfp::is_irreducible(modulus, p)) throw DomainError("F_{p^m}: modulus is reducible");
        LocalRingSpec s;
        s.kind_ = Kind::Field;
        s.p_ = p;
        s.e_ = static_cast<unsigned>(modulus.size() - 1);
        s.modulus_ = std::move(modulus);
        return s;
    }

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::Field || e_ == 1; }
    std::uint64_t prime() const { return p_; }
    /// r for Z_{p^r}, m for F_{p^m}.
    unsigned exponent() const { return e_; }
    const gfp::Poly& modulus() const { return modulus_; }

    std::uint64_t size() const { return gfp::ipow(p_, e_); }
    /// Order q of the residue field, which is also |soc|.
    std::uint64_t residue_order() const { return kind_ == Kind::Residue ? p_ : size(); }
    /// Exponent of the additive group: p^r for Z_{p^r}, p for F_{p^m}.
    std::uint64_t character_order() const { return kind_ == Kind::Residue ? size() : p_; }

    std::string name() const { return (kind_ == Kind::Residue ? "Z" : "F") + std::to_string(size()); }

    friend bool operator==(const LocalRingSpec&, const LocalRingSpec&) = default;

private:
    Kind kind_ = Kind::Residue;
    std::uint64_t p_ = 2;
    unsigned e_ = 1;
    gfp::Poly modulus_;
};

/// An ordered product of local rings.
struct RingSpec {
    std::vector<LocalRingSpec> components;
    /// Set when the spec came from a single composite token Z<n>; elements can
    /// then be shown as residues mod n.
    std::uint64_t crt_modulus = 0;

    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (const auto& c : components) s *= c.size();
        return s;
    }

    std::uint64_t character_order() const {
        std::uint64_t l = 1;
        for (const auto& c : components) l = std::lcm(l, c.character_order());
        return l;
    }

    bool semisimple() const {
        return std::all_of(components.begin(), components.end(),
                           [](const LocalRingSpec& c) { return c.is_field(); });
    }

    QProfile profile() const {
        std::vector<QProfile::Entry> entries;
        for (const auto& c : components) {
            auto it = std::find_if(entries.begin(), entries.end(),
                                   [&](const auto& e) { return e.q == c.residue_order(); });
            if (it == entries.end()) {
                entries.push_back({c.residue_order(), 1});
            } else {
                ++it->n;
            }
        }
        return QProfile(std::move(entries));
    }

    /// Canonical text form, e.g. "Z2xZ3xZ7xZ13" or "Z2xF4".
    std::string name() const {
        std::string out;
        for (std::size_t i = 0; i < components.size(); ++i) {
            out += (i ? "x" : "") + components[i].name();
        }
        return out;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.components == b.components;
    }
};

/// Parses `^(Z[0-9]+|F[0-9]+)(x(Z[0-9]+|F[0-9]+))*$`. Composite Z<n> is split
/// into its prime-power factors in increasing order.
inline RingSpec parse_ring_spec(std::string_view text) {
    RingSpec spec;
    if (text.empty()) throw ParseError("ring spec: empty");
    std::size_t tokens = 0;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = text.find('x', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto tok = text.substr(pos, end - pos);
        if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'F')) {
            throw ParseError("ring spec: bad component '" + std::string(tok) + "'");
        }
        const auto n = detail::parse_unsigned(tok.substr(1), "ring spec");
        ++tokens;
        if (tok[0] == 'Z') {
            if (n < 2) throw DomainError("ring spec: Z<n> needs n >= 2");
            for (const auto& pp : factorize(n)) {
                spec.components.push_back(LocalRingSpec::residue(pp.prime, pp.exponent));
            }
            spec.crt_modulus = n;
        } else {
            auto pp = as_prime_power(n);
            if (!pp) throw DomainError("ring spec: F<q> needs a prime power, got " + std::to_string(n));
            spec.components.push_back(LocalRingSpec::field(pp->prime, pp->exponent));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (tokens != 1 || text[0] != 'Z') spec.crt_modulus = 0;
    return spec;
}

/// A point (a_1,...,a_t). Field parts hold the base-p digit encoding of the
/// representative polynomial (constant coefficient least significant).
struct RingElement {
    std::vector<std::uint64_t> parts;
    friend bool operator==(const RingElement&, const RingElement&) = default;
    friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

// ---------------------------------------------------------------------------
// Ring

/// A ring with precomputed arithmetic. Elements are addressed by their index
/// in [0, |R|): the mixed-radix number of their parts, first component most
/// significant. Index 0 is zero.
class Ring {
public:
    using Elem = std::uint32_t;

    explicit Ring(RingSpec spec) : spec_(std::move(spec)) {
        if (spec_.components.empty()) throw DomainError("ring: no components");
        const std::uint64_t size = spec_.size();
        if (size > std::numeric_limits<Elem>::max()) {
            throw CapExceeded("ring: " + std::to_string(size) + " elements do not fit an index");
        }
        size_ = static_cast<Elem>(size);
        order_ = static_cast<unsigned>(spec_.character_order());
        const auto t = spec_.components.size();
        strides_.assign(t, 1);
        for (std::size_t i = t - 1; i-- > 0;) {
            strides_[i] = strides_[i + 1] * static_cast<Elem>(spec_.components[i + 1].size());
        }
        profile_ = spec_.profile();
        for (const auto& c : spec_.components) {
            comps_.push_back(make_component(c));
            for (std::size_t g = 0; g < profile_.size(); ++g) {
                if (profile_[g].q == c.residue_order()) group_.push_back(g);
            }
        }
        one_ = 0;
        for (std::size_t i = 0; i < t; ++i) one_ += strides_[i];
        if (size_ <= kTableLimit) build_tables();
        if (size_ <= kCharLimit) {
            chi_.resize(size_);
            for (Elem x = 0; x < size_; ++x) chi_[x] = compute_chi(x);
        }
    }

    static Ring parse(std::string_view text) { return Ring(parse_ring_spec(text)); }

    const RingSpec& spec() const { return spec_; }
    std::string name() const { return spec_.name(); }
    Elem size() const { return size_; }
    /// L: the exponent of (R,+); all characters take values in Z[zeta_L].
    unsigned character_order() const { return order_; }
    const QProfile& profile() const { return profile_; }
    std::size_t component_count() const { return comps_.size(); }
    const LocalRingSpec& component(std::size_t i) const { return spec_.components[i]; }
    /// Profile position of component i.
    std::size_t component_group(std::size_t i) const { return group_[i]; }
    bool semisimple() const { return spec_.semisimple(); }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    std::uint32_t part(Elem x, std::size_t i) const {
        return static_cast<std::uint32_t>((x / strides_[i]) % comps_[i].size);
    }

    Elem encode(const RingElement& e) const {
        if (e.parts.size() != comps_.size()) throw DomainError("ring element: wrong number of parts");
        Elem x = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (e.parts[i] >= comps_[i].size) throw DomainError("ring element: part out of range");
            x += static_cast<Elem>(e.parts[i]) * strides_[i];
        }
        return x;
    }

    RingElement decode(Elem x) const {
        RingElement e;
        for (std::size_t i = 0; i < comps_.size(); ++i) e.parts.push_back(part(x, i));
        return e;
    }

    /// All elements in index order.
    std::vector<RingElement> elements() const {
        check_cap(size_, "elements");
        std::vector<RingElement> out;
        out.reserve(size_);
        for (Elem x = 0; x < size_; ++x) out.push_back(decode(x));
        return out;
    }

    Elem add(Elem x, Elem y) const {
        if (!add_.empty()) return add_[std::size_t(x) * size_ + y];
        return componentwise(x, y, [](const Component& c, std::uint32_t a, std::uint32_t b) {
            return c.add(a, b);
        });
    }

    Elem mul(Elem x, Elem y) const {
        if (!mul_.empty()) return mul_[std::size_t(x) * size_ + y];
        return componentwise(x, y, [](const Component& c, std::uint32_t a, std::uint32_t b) {
            return c.mul(a, b);
        });
    }

    Elem neg(Elem x) const {
        Elem out = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) out += comps_[i].neg(part(x, i)) * strides_[i];
        return out;
    }

    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    bool is_unit(Elem x) const {
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (comps_[i].in_radical(part(x, i))) return false;
        }
        return true;
    }

    bool in_radical(Elem x) const {
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (!comps_[i].in_radical(part(x, i))) return false;
        }
        return true;
    }

    bool in_socle(Elem x) const {
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (!comps_[i].in_socle(part(x, i))) return false;
        }
        return true;
    }

    std::vector<Elem> units() const { return filter([this](Elem x) { return is_unit(x); }); }
    std::vector<Elem> socle() const { return filter([this](Elem x) { return in_socle(x); }); }
    std::vector<Elem> radical() const { return filter([this](Elem x) { return in_radical(x); }); }

    /// |R*| = prod |R_i*|, without enumeration.
    std::uint64_t unit_count() const {
        std::uint64_t n = 1;
        for (const auto& c : spec_.components) n *= c.size() - c.size() / c.residue_order();
        return n;
    }

    /// Per profile group, the number of nonzero components of a socle element.
    MultiIndex socle_weight_profile(Elem x) const {
        if (!in_socle(x)) throw DomainError("socle_weight_profile: element is not in the socle");
        std::vector<unsigned> m(profile_.size(), 0);
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (part(x, i) != 0) ++m[group_[i]];
        }
        return MultiIndex(std::move(m));
    }

    /// Per profile group, the number of components outside the radical.
    MultiIndex residue_weight_profile(Elem x) const {
        std::vector<unsigned> m(profile_.size(), 0);
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (!comps_[i].in_radical(part(x, i))) ++m[group_[i]];
        }
        return MultiIndex(std::move(m));
    }

    /// e with chi(x) = zeta_L^e for the canonical generating character chi.
    unsigned char_exponent(Elem x) const { return chi_.empty() ? compute_chi(x) : chi_[x]; }

    /// e with chi_u(x) = chi(u x) = zeta_L^e. `u` must be a unit.
    unsigned char_exponent(Elem x, Elem u) const {
        if (!is_unit(u)) throw DomainError("char_exponent: shift " + format(u) + " is not a unit");
        return char_exponent(mul(u, x));
    }

    /// Element text. Plain form is the index; pretty form shows component
    /// values (field parts as polynomials in `a`) or the residue mod n for Z<n>.
    std::string format(Elem x, bool pretty = false) const {
        if (!pretty) return std::to_string(x);
        if (spec_.crt_modulus) return std::to_string(crt_residue(x));
        std::string out;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            out += (i ? "," : "") + comps_[i].format(part(x, i));
        }
        return comps_.size() > 1 ? "(" + out + ")" : out;
    }

    /// For rings parsed from Z<n>: the residue in [0, n) with the given CRT components.
    std::uint64_t crt_residue(Elem x) const {
        const std::uint64_t n = spec_.crt_modulus;
        if (!n) throw DomainError("crt_residue: ring was not given as Z<n>");
        unsigned __int128 r = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const std::uint64_t mi = comps_[i].size;
            const std::uint64_t rest = n / mi;
            // Inverse of rest modulo mi by extended Euclid.
            std::int64_t a = static_cast<std::int64_t>(rest % mi), b = static_cast<std::int64_t>(mi);
            std::int64_t x0 = 1, x1 = 0;
            while (b) {
                const std::int64_t qd = a / b;
                std::tie(a, b) = std::make_pair(b, a - qd * b);
                std::tie(x0, x1) = std::make_pair(x1, x0 - qd * x1);
            }
            const std::uint64_t inv =
                static_cast<std::uint64_t>((x0 % std::int64_t(mi) + std::int64_t(mi)) % std::int64_t(mi));
            r += (unsigned __int128)part(x, i) * rest % n * inv % n;
        }
        return static_cast<std::uint64_t>(r % n);
    }

    /// Index of the residue a mod n (inverse of crt_residue).
    Elem from_residue(std::uint64_t a) const {
        if (!spec_.crt_modulus) throw DomainError("from_residue: ring was not given as Z<n>");
        Elem x = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            x += static_cast<Elem>(a % comps_[i].size) * strides_[i];
        }
        return x;
    }

private:
    static constexpr Elem kTableLimit = 1024;
    static constexpr Elem kCharLimit = 1u << 22;

    struct Component {
        LocalRingSpec::Kind kind;
        std::uint64_t p = 2;
        unsigned e = 1;
        std::uint32_t size = 2;
        std::uint32_t socle_step = 1;  // Z_{p^r}: p^{r-1}
        std::uint64_t char_scale = 1;  // L / (character order of this component)
        gfp::Poly modulus;
        std::vector<std::uint32_t> mul_table;  // fields only, when small
        std::vector<std::uint32_t> trace;      // fields only

        std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
            if (kind == LocalRingSpec::Kind::Residue) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % size);
            std::uint32_t out = 0, place = 1;
            for (unsigned i = 0; i < e; ++i) {
                out += static_cast<std::uint32_t>(((a % p) + (b % p)) % p) * place;
                a /= static_cast<std::uint32_t>(p);
                b /= static_cast<std::uint32_t>(p);
                place *= static_cast<std::uint32_t>(p);
            }
            return out;
        }

        std::uint32_t neg(std::uint32_t a) const {
            if (kind == LocalRingSpec::Kind::Residue) return a == 0 ? 0 : size - a;
            std::uint32_t out = 0, place = 1;
            for (unsigned i = 0; i < e; ++i) {
                out += static_cast<std::uint32_t>((p - a % p) % p) * place;
                a /= static_cast<std::uint32_t>(p);
                place *= static_cast<std::uint32_t>(p);
            }
            return out;
        }

        std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
            if (kind == LocalRingSpec::Kind::Residue) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % size);
            if (!mul_table.empty()) return mul_table[std::size_t(a) * size + b];
            return poly_mul(a, b);
        }

        std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const {
            gfp::Poly fa = digits(a), fb = digits(b);
            gfp::Poly prod(2 * e, 0);
            for (unsigned i = 0; i < e; ++i) {
                for (unsigned j = 0; j < e; ++j) {
                    prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(fa[i]) * fb[j]) % p);
                }
            }
            return undigits(gfp::remainder(std::move(prod), modulus, p));
        }

        gfp::Poly digits(std::uint32_t a) const {
            gfp::Poly f(e, 0);
            for (unsigned i = 0; i < e; ++i) {
                f[i] = static_cast<std::uint32_t>(a % p);
                a /= static_cast<std::uint32_t>(p);
            }
            return f;
        }

        std::uint32_t undigits(const gfp::Poly& f) const {
            std::uint32_t out = 0, place = 1;
            for (unsigned i = 0; i < e && i < f.size(); ++i) {
                out += f[i] * place;
                place *= static_cast<std::uint32_t>(p);
            }
            return out;
        }

        bool in_radical(std::uint32_t a) const {
            return kind == LocalRingSpec::Kind::Residue ? a % p == 0 : a == 0;
        }
        bool in_socle(std::uint32_t a) const {
            return kind == LocalRingSpec::Kind::Residue ? a % socle_step == 0 : true;
        }

        /// Additive character exponent in units of zeta_L.
        std::uint64_t chi(std::uint32_t a) const {
            if (kind == LocalRingSpec::Kind::Residue) return a * char_scale;
            return trace[a] * char_scale;
        }

        std::string format(std::uint32_t a) const {
            if (kind == LocalRingSpec::Kind::Residue || e == 1) return std::to_string(a);
            if (a == 0) return "0";
            const auto f = digits(a);
            std::string out;
            for (unsigned i = e; i-- > 0;) {
                if (f[i] == 0) continue;
                if (!out.empty()) out += "+";
                const bool show_coeff = f[i] != 1 || i == 0;
                if (show_coeff) out += std::to_string(f[i]);
                if (i >= 1) out += "a";
                if (i >= 2) out += "^" + std::to_string(i);
            }
            return out;
        }
    };

    Component make_component(const LocalRingSpec& spec) const {
        Component c;
        c.kind = spec.kind();
        c.p = spec.prime();
        c.e = spec.exponent();
        c.size = static_cast<std::uint32_t>(spec.size());
        c.char_scale = order_ / spec.character_order();
        if (c.kind == LocalRingSpec::Kind::Residue) {
            c.socle_step = static_cast<std::uint32_t>(gfp::ipow(c.p, c.e - 1));
            return c;
        }
        c.modulus = spec.modulus();
        if (c.size <= kTableLimit) {
            c.mul_table.resize(std::size_t(c.size) * c.size);
            for (std::uint32_t a = 0; a < c.size; ++a) {
                for (std::uint32_t b = 0; b < c.size; ++b) c.mul_table[std::size_t(a) * c.size + b] = c.poly_mul(a, b);
            }
        }
        // Tr(a) = a + a^p + ... + a^{p^{m-1}}, which lies in the prime field.
        c.trace.resize(c.size);
        for (std::uint32_t a = 0; a < c.size; ++a) {
            std::uint32_t sum = 0, pw = a;
            for (unsigned k = 0; k < c.e; ++k) {
                sum = c.add(sum, pw);
                std::uint32_t next = 1;
                for (std::uint64_t j = 0; j < c.p; ++j) next = c.mul(next, pw);
                pw = next;
            }
            if (sum >= c.p) throw VerificationError("field trace left the prime field");
            c.trace[a] = sum;
        }
        return c;
    }

    template <class Op>
    Elem componentwise(Elem x, Elem y, Op op) const {
        Elem out = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) out += op(comps_[i], part(x, i), part(y, i)) * strides_[i];
        return out;
    }

    void build_tables() {
        const std::size_t n = size_;
        add_.resize(n * n);
        mul_.resize(n * n);
        for (Elem x = 0; x < size_; ++x) {
            for (Elem y = 0; y < size_; ++y) {
                add_[x * n + y] = componentwise(x, y, [](const Component& c, std::uint32_t a, std::uint32_t b) {
                    return c.add(a, b);
                });
                mul_[x * n + y] = componentwise(x, y, [](const Component& c, std::uint32_t a, std::uint32_t b) {
                    return c.mul(a, b);
                });
            }
        }
    }

    unsigned compute_chi(Elem x) const {
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i) e += comps_[i].chi(part(x, i));
        return static_cast<unsigned>(e % order_);
    }

    template <class Pred>
    std::vector<Elem> filter(Pred pred) const {
        check_cap(size_, "enumeration");
        std::vector<Elem> out;
        for (Elem x = 0; x < size_; ++x) {
            if (pred(x)) out.push_back(x);
        }
        return out;
    }

    RingSpec spec_;
    Elem size_ = 0;
    unsigned order_ = 1;
    Elem one_ = 0;
    QProfile profile_;
    std::vector<Component> comps_;
    std::vector<std::size_t> group_;
    std::vector<Elem> strides_;
    std::vector<Elem> add_, mul_;
    std::vector<unsigned> chi_;
};

}  // namespace homring
