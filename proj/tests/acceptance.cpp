// Acceptance runner: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails. Every check is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace homring;

namespace {

using Blocks = std::vector<Partition::Block>;

/// Collects failure messages for one criterion.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& a, const B& b, const std::string& what) {
        expect(a == b, what);
    }
    const std::vector<std::string>& failures() const { return failures_; }
    std::size_t checks() const { return checks_; }

private:
    std::vector<std::string> failures_;
    std::size_t checks_ = 0;
};

Partition blocks(const FreeModule& m, Blocks b) { return Partition(m.carrier(), std::move(b)); }

std::vector<std::vector<std::int64_t>> ints(const KrawtchoukMatrix& k) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : k.integers()) {
        auto& r = out.emplace_back();
        for (const auto& e : row) r.push_back(static_cast<std::int64_t>(e));
    }
    return out;
}

Rational weight(const Ring& r, std::vector<std::uint64_t> parts) { return hom_weight(r, r.encode(RingElement{std::move(parts)})); }

// ---------------------------------------------------------------------------

void golden_partitions(Checker& c) {
    struct Case {
        const char* ring;
        Blocks hom, dual;
    };
    // Z2xZ2 dual: brute force against the histogram oracle (no closed form given)
    const std::vector<Case> cases{
        {"Z8", {{0}, {1, 2, 3, 5, 6, 7}, {4}}, {{0}, {1, 3, 5, 7}, {2, 4, 6}}},
        {"Z2xZ2", {{0, 3}, {1, 2}}, {}},
        {"Z3xZ3", {{0}, {1, 2, 3, 6}, {4, 5, 7, 8}}, {{0}, {1, 2, 3, 6}, {4, 5, 7, 8}}},
        {"Z2xF4", {{0}, {4}, {1, 2, 3}, {5, 6, 7}}, {{0}, {4}, {1, 2, 3}, {5, 6, 7}}},
    };
    for (const auto& k : cases) {
        FreeModule m(make_ring(k.ring));
        const auto p = hom_partition(m);
        c.equal(p, blocks(m, k.hom), std::string(k.ring) + ": P_hom");
        for (auto u : m.ring().units()) {
            const auto d = dual_partition(m, p, u);
            c.equal(d, oracle::dual(m, p, u, 1), std::string(k.ring) + ": dual vs oracle");
            if (!k.dual.empty()) c.equal(d, blocks(m, k.dual), std::string(k.ring) + ": dual");
        }
    }
    FreeModule z2z2(make_ring("Z2xZ2"));
    const auto d = dual_partition(z2z2, hom_partition(z2z2));
    c.expect(d.find_block(Partition::Block{0}) < d.size(), "Z2xZ2: {0} is a dual block");
    c.expect(!is_reflexive(z2z2, hom_partition(z2z2), 3, true), "Z2xZ2: not reflexive");
    FreeModule z8(make_ring("Z8"));
    c.expect(is_reflexive(z8, hom_partition(z8), z8.ring().one(), true) && !is_self_dual(z8, hom_partition(z8), z8.ring().one()),
             "Z8: reflexive, not self-dual");
    for (const char* name : {"Z3xZ3", "Z2xF4"}) {
        FreeModule m(make_ring(name));
        c.expect(is_self_dual(m, hom_partition(m), m.ring().one()), std::string(name) + ": self-dual");
    }
}

void golden_weights(Checker& c) {
    const auto z8 = Ring::parse("Z8");
    c.equal(hom_weight(z8, 0), Rational(0), "Z8: w(0) = 0");
    c.equal(hom_weight(z8, 4), Rational(2), "Z8: w(4) = 2");
    const auto z2z2 = Ring::parse("Z2xZ2");
    c.equal(weight(z2z2, {1, 1}), Rational(0), "Z2xZ2: w(11) = 0");
    c.equal(weight(z2z2, {0, 1}), Rational(2), "Z2xZ2: w(01) = 2");
    const auto z3z3 = Ring::parse("Z3xZ3");
    c.equal(weight(z3z3, {1, 0}), Rational(3, 2), "Z3xZ3: w(10) = 3/2");
    c.equal(weight(z3z3, {1, 1}), Rational(3, 4), "Z3xZ3: w(11) = 3/4");
    const auto z2f4 = Ring::parse("Z2xF4");
    c.equal(weight(z2f4, {1, 0}), Rational(2), "Z2xF4: w(10) = 2");
    c.equal(weight(z2f4, {0, 1}), Rational(4, 3), "Z2xF4: w(01) = 4/3");
    c.equal(weight(z2f4, {1, 2}), Rational(2, 3), "Z2xF4: w(1a) = 2/3");
    for (const char* name : {"Z4", "Z8", "Z9", "Z25", "Z27", "F4", "F8", "F9"}) {
        const auto r = Ring::parse(name);
        const auto q = r.profile()[0].q;
        for (Ring::Elem x = 1; x < r.size(); ++x) {
            const Rational expected = r.in_socle(x) ? Rational(BigInt(q), BigInt(q - 1)) : Rational(1);
            c.equal(hom_weight(r, x), expected, std::string(name) + ": local weight at " + std::to_string(x));
        }
    }
    // Z_{p^r} x Z_{q^s} with the socle/unit mix: Z12 = Z4 x Z3
    const auto z12 = Ring::parse("Z12");
    c.equal(weight(z12, {2, 0}), Rational(2), "Z12: w(soc x 0) = 2");
    c.equal(weight(z12, {2, 1}), Rational(1, 2), "Z12: w(soc x unit) = 1/2");
    c.equal(weight(z12, {0, 1}), Rational(3, 2), "Z12: w(0 x unit) = 3/2");
    const auto z546 = Ring::parse("Z546");
    c.equal(weight(z546, {0, 1, 1, 0}), Rational(11, 12), "Z546: 11/12");
    c.equal(weight(z546, {0, 0, 0, 1}), Rational(13, 12), "Z546: 13/12");
}

void golden_krawtchouk(Checker& c) {
    FreeModule z8(make_ring("Z8"));
    const auto cols8 = blocks(z8, {{0}, {4}, {1, 2, 3, 5, 6, 7}});
    const auto rows8 = blocks(z8, {{0}, {2, 4, 6}, {1, 3, 5, 7}});
    c.equal(rows8, dual_partition(z8, cols8), "Z8: dual");
    const std::vector<std::vector<std::int64_t>> k8{{1, 1, 6}, {1, 1, -2}, {1, -1, 0}};
    c.equal(ints(krawtchouk_matrix(z8, cols8, rows8, z8.ring().one())), k8, "Z8: Krawtchouk matrix");
    // the same matrix from the closed form: q = 2, |R| = 8
    const auto d = MultiIndex::diamond();
    const auto z8p = QProfile::of_integer(8);
    c.equal(krawtchouk_closed(z8p, MultiIndex({0}), d, BigInt(8)), BigInt(6), "Z8: closed K(0, diamond)");
    c.equal(krawtchouk_closed(z8p, d, d, BigInt(8)), BigInt(-2), "Z8: closed K(diamond, diamond)");
    c.equal(krawtchouk_closed(z8p, MultiIndex({1}), MultiIndex({1}), BigInt(8)), BigInt(-1), "Z8: closed K(1, 1)");

    FreeModule z6(make_ring("Z6"));
    const auto cols6 = blocks(z6, {{0}, {3}, {1, 2}, {4, 5}});
    const auto rows6 = blocks(z6, {{0}, {1, 2}, {3}, {4, 5}});
    c.equal(cols6, hom_partition(z6), "Z6: P_hom");
    c.equal(rows6, dual_partition(z6, cols6), "Z6: dual");
    const std::vector<std::vector<std::int64_t>> k6{{1, 1, 2, 2}, {1, 1, -1, -1}, {1, -1, 2, -2}, {1, -1, -1, 1}};
    c.equal(ints(krawtchouk_matrix(z6, cols6, rows6, z6.ring().one())), k6, "Z6: Krawtchouk matrix");
}

void z546(Checker& c) {
    const auto ring = make_ring("Z546");
    FreeModule m(ring);
    const auto p = hom_partition(m);
    c.equal(p.size(), std::size_t{14}, "|P_hom| = 14");
    const auto d = dual_partition(m, p);
    c.equal(d.size(), std::size_t{16}, "|dual| = 16");
    c.equal(d, unit_orbit_partition(m), "dual = unit orbits");
    c.equal(d, hprime_partition(m), "dual = H'");
    c.equal(d, oracle::dual(m, p, m.ring().one(), 1), "dual vs oracle");
    c.expect(!is_reflexive(m, p, m.ring().one(), true), "not reflexive");
    c.expect(!classify(*ring).reflexive, "classify: not reflexive");
}

void separating(Checker& c) {
    const auto ones = [](std::vector<std::uint64_t> qs) {
        std::vector<QProfile::Entry> out;
        for (auto q : qs) out.push_back({q, 1});
        return QProfile(out);
    };
    const auto a = ones({2, 3, 7, 13});
    const auto all = separating_violations(a);
    const auto has = [&](std::vector<unsigned> x, std::vector<unsigned> y) {
        return std::find(all.begin(), all.end(), std::make_pair(MultiIndex(x), MultiIndex(y))) != all.end();
    };
    c.expect(!is_separating(a).separating, "[2,3,7,13] not separating");
    c.expect(has({0, 0, 0, 1}, {1, 1, 1, 0}), "[2,3,7,13]: 12 = 1*2*6");
    c.expect(has({0, 1, 1, 0}, {1, 0, 0, 1}), "[2,3,7,13]: 2*6 = 1*12");
    c.expect(is_separating(ones({3, 7, 13})).separating, "[3,7,13] separating");
    c.expect(!is_separating(QProfile::parse("(2,1);(3,2);(5,1)")).separating, "[(2,1),(3,2),(5,1)]");
    c.expect(is_separating(QProfile::parse("(3,2);(5,1)")).separating, "[(3,2),(5,1)]");
    c.expect(!is_separating(QProfile::parse("(3,4);(5,2)")).separating, "[(3,4),(5,2)]");
    for (unsigned n = 2; n <= 4; ++n) {
        for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
            const QProfile p(std::vector<QProfile::Entry>{{2, n}, {q, 1}});
            c.expect(!is_separating(p).separating, "q=2 with n>1 separates: " + p.to_string());
        }
        c.expect(!is_separating(QProfile(std::vector<QProfile::Entry>{{2, n}})).separating, "(2,n) separates");
    }
}

void property_suites(Checker& c) {
    for (const auto& name : oracle::test_matrix()) {
        const auto ring = make_ring(name);
        const Ring& r = *ring;
        FreeModule m(ring);
        const auto units = r.units();
        const auto table = weight_table(r);

        // oracle weight for every element and unit shift
        for (auto u : units) {
            for (Ring::Elem x = 0; x < r.size(); ++x) {
                if (hom_weight_oracle(r, x, u, units) != table.values[x]) {
                    c.expect(false, name + ": oracle weight x=" + std::to_string(x) + " u=" + std::to_string(u));
                }
            }
        }
        // axioms: w(0) = 0, unit invariance, average 1 over nonzero ideals
        c.equal(table.values[0], Rational(0), name + ": w(0)");
        for (Ring::Elem x = 0; x < r.size(); ++x) {
            for (auto u : units) {
                if (table.values[r.mul(u, x)] != table.values[x]) c.expect(false, name + ": unit invariance");
            }
        }
        if (r.size() <= 200) {
            for (const auto& ideal : two_generator_submodules(m)) {
                if (ideal.size() == 1) continue;
                Rational sum(0);
                for (auto y : ideal.elements()) sum += table.values[y];
                c.equal(sum, Rational(BigInt(ideal.size())), name + ": average over ideal");
            }
        }
        // dual of P_hom independent of the unit shift
        const auto p = hom_partition(m);
        const auto base = dual_partition(m, p, r.one());
        for (auto u : units) c.equal(dual_partition(m, p, u), base, name + ": unit shift u=" + std::to_string(u));
        // ... and of the primitive root for Z_N
        if (const unsigned L = r.character_order(); L == r.size()) {
            for (unsigned k = 2; k < L; ++k) {
                if (std::gcd(k, L) != 1) continue;
                c.equal(dual_partition(m, p, r.one(), k), base, name + ": root power " + std::to_string(k));
            }
        }
        // H': brute-force dual equals the prediction, closed-form Krawtchouk equals brute force
        const auto h = hprime_partition(m);
        const auto predicted = hprime_predicted_dual(m);
        for (auto u : units) c.equal(dual_partition(m, h, u), predicted, name + ": dual of H'");
        c.equal(krawtchouk_matrix(m, h, predicted, m.ring().one()).integers(), hprime_krawtchouk_closed(r), name + ": closed Krawtchouk");
        // classification against brute force
        const auto cl = classify(r);
        c.equal(cl.reflexive, is_reflexive(m, p, m.ring().one(), true), name + ": reflexive");
        c.equal(cl.self_dual, is_self_dual(m, p, m.ring().one()), name + ": self-dual");
        c.equal(cl.semisimple, r.semisimple(), name + ": semisimple");
    }
}

void duality_suite(Checker& c) {
    std::mt19937 rng(7);
    for (const auto& name : oracle::test_matrix()) {
        const auto ring = make_ring(name);
        FreeModule m(ring);
        const auto units = ring->units();
        if (ring->size() <= 128) {
            for (int trial = 0; trial < 8; ++trial) {
                const unsigned k = 2 + trial % 5;
                std::vector<unsigned> label(m.size()), coarse(k);
                for (auto& t : coarse) t = rng() % std::max(1u, k / 2);
                for (auto& l : label) l = rng() % k;
                const auto p = Partition::from_labels(m.carrier(), label);
                std::vector<unsigned> merged(m.size());
                for (Point v = 0; v < m.size(); ++v) merged[v] = coarse[label[v]];
                const auto q = Partition::from_labels(m.carrier(), merged);
                const auto u = units[trial % units.size()];
                const auto dp = dual_partition(m, p, u), dq = dual_partition(m, q, u);
                c.expect(dp.find_block(Partition::Block{0}) < dp.size(), name + ": {0} is a dual block");
                c.expect(p.size() <= dp.size(), name + ": |P| <= |dual|");
                c.expect(dual_partition(m, dp, u).refines(p), name + ": bidual refines P");
                c.expect(dp.refines(dq), name + ": refinement monotone");
                c.equal(dp, oracle::dual(m, p, u, 1), name + ": dual vs oracle");
            }
        }
        c.expect(is_self_dual(m, unit_orbit_partition(m), m.ring().one()), name + ": unit orbits self-dual");
        if (ring->size() <= 16) {
            for (unsigned n = 1; n <= 2; ++n) {
                FreeModule mn(ring, n);
                for (auto u : units) c.expect(is_self_dual(mn, hamming_partition(mn), u), name + ": Hamming self-dual");
            }
        }
    }
    // product of duals
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"Z3", "Z3"}, {"Z2", "F4"}, {"Z2", "Z9"}, {"Z8", "F4"}}) {
        FreeModule ma(make_ring(a)), mb(make_ring(b)), target(make_ring(a + "x" + b));
        const auto pa = hom_partition(ma), pb = unit_orbit_partition(mb);
        const auto prod = product_partition({pa, pb}, target.carrier());
        c.equal(dual_partition(target, prod), product_partition({dual_partition(ma, pa), dual_partition(mb, pb)}, target.carrier()),
                a + "x" + b + ": product of duals");
    }
    FreeModule z4(make_ring("Z4")), z4sq(make_ring("Z4"), 2);
    const auto pz = hom_partition(z4);
    c.equal(dual_partition(z4sq, product_partition({pz, pz}, z4sq.carrier())),
            product_partition({dual_partition(z4, pz), dual_partition(z4, pz)}, z4sq.carrier()), "Z4^2: product of duals");
    // the two F4 duals of 0 | 1 | a, a^2
    FreeModule f4(make_ring("F4"));
    const auto p = blocks(f4, {{0}, {1}, {2, 3}});
    c.equal(dual_partition(f4, p, f4.ring().one()), p, "F4: dual under chi");
    const auto q = dual_partition(f4, p, 3);
    c.equal(q, blocks(f4, {{0}, {1, 3}, {2}}), "F4: dual under the shifted character");
    c.expect(!is_self_dual(f4, p, 3), "F4: not self-dual under the shifted character");
    c.equal(dual_partition(f4, q, 3), p, "F4: shifted bidual");
}

void macwilliams(Checker& c) {
    for (const auto& name : oracle::test_matrix()) {
        const auto ring = make_ring(name);
        if (!is_separating(ring->profile()).separating) continue;
        for (unsigned n = 1; n <= 2; ++n) {
            FreeModule m(ring, n);
            const auto p = n == 1 ? hom_partition(m) : hom_product_partition(m);
            const MacWilliamsChecker checker(m, p, m.ring().one());
            const auto codes = two_generator_submodules(m);
            std::size_t failed = 0;
            for (const auto& code : codes) {
                const auto r = checker.check(code, m.size() <= 256);
                if (!r.holds) ++failed;
            }
            c.expect(failed == 0, name + "^" + std::to_string(n) + ": " + std::to_string(failed) + " of " +
                                      std::to_string(codes.size()) + " codes fail");
        }
    }
    FreeModule z2z2(make_ring("Z2xZ2"));
    bool refused = false;
    try {
        MacWilliamsChecker(z2z2, hom_partition(z2z2), 3);
    } catch (const NotReflexive&) {
        refused = true;
    }
    c.expect(refused, "Z2xZ2: checker refuses P_hom");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden partitions and duals (Z8, Z2xZ2, Z3xZ3, Z2xF4)", golden_partitions},
        {2, "golden homogeneous weights", golden_weights},
        {3, "golden Krawtchouk matrices (Z8, Z6)", golden_krawtchouk},
        {4, "Z546: 14 blocks, dual of 16 unit orbits = H', not reflexive", z546},
        {5, "separating verdicts", separating},
        {6, "weight, dual, H' and classification properties over the test matrix", property_suites},
        {7, "duality properties", duality_suite},
        {8, "MacWilliams identity on all cyclic and 2-generator codes", macwilliams},
    };
    bool all_ok = true;
    for (const auto& crit : criteria) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            crit.run(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && c.failures().empty();
        all_ok = all_ok && ok;
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.title << " (" << c.checks()
             << " checks, " << std::fixed;
        line.precision(1);
        line << secs << " s)";
        std::cout << line.str() << "\n";
        if (!error.empty()) std::cout << "    exception: " << error << "\n";
        for (std::size_t i = 0; i < c.failures().size() && i < 10; ++i) std::cout << "    " << c.failures()[i] << "\n";
        std::cout.flush();
    }
    return all_ok ? 0 : 1;
}
