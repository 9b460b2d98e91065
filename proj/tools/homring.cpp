// homring: command-line front end for homogeneous weights, partitions, dual
// partitions, Krawtchouk matrices, classification and MacWilliams checks.
//
// Exit codes: 0 success, 1 internal error, 2 usage/input error,
// 3 enumeration cap exceeded, 4 verification failure.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homring/homring.hpp"
#include "homring/io.hpp"

using namespace homring;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kCap = 3, kVerification = 4 };

struct Output {
    bool json = false;
    bool pretty = false;
};

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::uint64_t parse_integer(const std::string& s, const char* what) {
    if (!all_digits(s)) throw ParseError(std::string(what) + ": expected a non-negative integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw DomainError(std::string(what) + ": '" + s + "' is too large");
    }
}

Ring::Elem parse_unit(const Ring& ring, const std::optional<std::string>& text) {
    if (!text) return ring.one();
    const auto u = parse_integer(*text, "--unit");
    if (u >= ring.size()) throw DomainError("--unit " + *text + " is not an element of " + ring.name());
    if (!ring.is_unit(static_cast<Ring::Elem>(u))) throw DomainError("--unit " + *text + " is not a unit");
    return static_cast<Ring::Elem>(u);
}

/// "v1;v2;..." with each vector "c1,c2,...,cn" of element encodings.
std::vector<Point> parse_vectors(const FreeModule& module, const std::vector<std::string>& args) {
    std::vector<Point> out;
    for (const auto& arg : args) {
        std::stringstream vectors(arg);
        std::string vec;
        while (std::getline(vectors, vec, ';')) {
            if (vec.find_first_not_of(" \t") == std::string::npos) continue;
            std::vector<Ring::Elem> coords;
            std::stringstream parts(vec);
            std::string c;
            while (std::getline(parts, c, ',')) {
                c.erase(std::remove_if(c.begin(), c.end(), [](unsigned char ch) { return std::isspace(ch); }), c.end());
                const auto x = parse_integer(c, "--gens");
                if (x >= module.ring().size()) throw DomainError("--gens: " + c + " is not an element of " + module.ring().name());
                coords.push_back(static_cast<Ring::Elem>(x));
            }
            if (coords.size() != module.rank()) {
                throw ParseError("--gens: vector '" + vec + "' has " + std::to_string(coords.size()) +
                                 " coordinates, expected " + std::to_string(module.rank()));
            }
            out.push_back(module.point(coords));
        }
    }
    return out;
}

Partition build_partition(const FreeModule& module, const std::string& kind) {
    if (kind == "hom") return module.rank() == 1 ? hom_partition(module) : hom_product_partition(module);
    if (kind == "hom-sum") return hom_sum_partition(module);
    if (kind == "orbits") return unit_orbit_partition(module);
    if (kind == "hamming") return hamming_partition(module);
    if (kind == "hprime") return hprime_partition(module);
    throw ParseError("unknown partition kind '" + kind + "'");
}

std::string block_text(const FreeModule& module, const Partition::Block& blk, bool pretty) {
    std::string s;
    for (std::size_t i = 0; i < blk.size(); ++i) s += (i ? "," : "") + module.format(blk[i], pretty);
    return s;
}

void print_partition(const FreeModule& module, const Partition& p, const Output& out, const char* title) {
    if (out.json) {
        std::cout << io::partition(p, out.pretty ? &module : nullptr).dump(2) << "\n";
        return;
    }
    std::cout << title << " on " << p.carrier().to_string() << ": " << p.size() << " blocks\n";
    for (std::size_t b = 0; b < p.size(); ++b) {
        std::cout << "  [" << b << "] " << block_text(module, p.block(b), out.pretty) << "\n";
    }
}

std::string cyc_text(const CycInt& x) { return x.to_string(); }

void print_matrix(const std::vector<std::vector<std::string>>& cells) {
    std::size_t width = 1;
    for (const auto& row : cells) {
        for (const auto& c : row) width = std::max(width, c.size());
    }
    for (const auto& row : cells) {
        std::cout << " ";
        for (const auto& c : row) std::cout << " " << std::string(width - c.size(), ' ') << c;
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_weights(const std::string& spec, bool oracle, const std::optional<std::string>& unit, const Output& out) {
    const auto ring = make_ring(spec);
    const auto u = parse_unit(*ring, unit);
    const auto table = oracle ? verified_weight_table(*ring, u) : weight_table(*ring);
    if (out.json) {
        auto doc = io::weights(table, *ring, out.pretty);
        doc["oracle_checked"] = oracle;
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    std::cout << "homogeneous weights on " << ring->name() << (oracle ? " (character-sum check passed)" : "") << "\n";
    for (Ring::Elem x = 0; x < ring->size(); ++x) {
        std::cout << "  " << ring->format(x, out.pretty) << "\t" << table.values[x].str() << "\n";
    }
    return kOk;
}

int cmd_partition(const std::string& spec, unsigned n, const std::string& kind, const Output& out) {
    FreeModule module(make_ring(spec), n);
    print_partition(module, build_partition(module, kind), out, "partition");
    return kOk;
}

int cmd_dual(const std::string& spec, unsigned n, const std::string& kind, const std::optional<std::string>& unit,
             bool twice, const Output& out) {
    FreeModule module(make_ring(spec), n);
    const auto u = parse_unit(module.ring(), unit);
    const auto p = build_partition(module, kind);
    auto d = dual_partition(module, p, u);
    if (twice) d = dual_partition(module, d, u);
    if (out.json) {
        json doc{{"partition", io::partition(p, out.pretty ? &module : nullptr)},
                 {twice ? "bidual" : "dual", io::partition(d, out.pretty ? &module : nullptr)},
                 {"unit", u},
                 {"reflexive", twice ? d == p : d.size() == p.size()},
                 {"self_dual", twice ? json(nullptr) : json(d == p)}};
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    print_partition(module, p, out, "partition");
    print_partition(module, d, out, twice ? "bidual" : "dual");
    std::cout << "reflexive: " << ((twice ? d == p : d.size() == p.size()) ? "yes" : "no") << "\n";
    if (!twice) std::cout << "self-dual: " << (d == p ? "yes" : "no") << "\n";
    return kOk;
}

int cmd_krawtchouk(const std::string& spec, unsigned n, const std::string& kind, const std::optional<std::string>& unit,
                   bool closed, bool verify, const Output& out) {
    FreeModule module(make_ring(spec), n);
    const Ring& ring = module.ring();
    if (closed) {
        if (n != 1) throw DomainError("--closed is defined on R only (n = 1)");
        const auto k = hprime_krawtchouk_closed(ring);
        const auto rows = hprime_dual_labels(ring);
        const auto cols = hprime_labels(ring);
        if (verify) {
            const auto u = parse_unit(ring, unit);
            const auto h = hprime_partition(module);
            const auto d = dual_partition(module, h, u);
            if (d != hprime_predicted_dual(module)) throw VerificationError("dual of H' differs from the predicted dual");
            if (krawtchouk_matrix(module, h, hprime_predicted_dual(module), u).integers() != k) {
                throw VerificationError("closed-form Krawtchouk matrix differs from brute force");
            }
        }
        if (out.json) {
            json r = json::array(), c = json::array();
            for (const auto& l : rows) r.push_back(io::multi_index(l));
            for (const auto& m : cols) c.push_back(io::multi_index(m));
            std::cout << json{{"ring", ring.name()}, {"row_labels", r}, {"col_labels", c},
                              {"entries", io::integer_matrix(k)}, {"verified", verify}}
                             .dump(2)
                      << "\n";
            return kOk;
        }
        std::cout << "closed-form Krawtchouk matrix of (H', dual) on " << ring.name()
                  << (verify ? " (matches brute force)" : "") << "\n";
        std::vector<std::vector<std::string>> cells{{"l\\m"}};
        for (const auto& m : cols) cells[0].push_back(m.to_string());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto& row = cells.emplace_back();
            row.push_back(rows[i].to_string());
            for (const auto& e : k[i]) row.push_back(e.str());
        }
        print_matrix(cells);
        return kOk;
    }
    const auto u = parse_unit(ring, unit);
    const auto p = build_partition(module, kind);
    const auto d = dual_partition(module, p, u);
    const auto k = krawtchouk_matrix(module, p, d, u);
    if (out.json) {
        std::cout << json{{"partition", io::partition(p)}, {"dual", io::partition(d)}, {"unit", u},
                          {"matrix", io::krawtchouk(k)}}
                         .dump(2)
                  << "\n";
        return kOk;
    }
    print_partition(module, p, out, "columns (partition)");
    print_partition(module, d, out, "rows (dual)");
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : k.entries) {
        auto& r = cells.emplace_back();
        for (const auto& e : row) r.push_back(cyc_text(e));
    }
    print_matrix(cells);
    return kOk;
}

int cmd_separating(const std::string& arg, const Output& out) {
    const auto profile = all_digits(arg) ? QProfile::of_integer(parse_integer(arg, "N")) : QProfile::parse(arg);
    const auto r = is_separating(profile);
    if (out.json) {
        std::cout << io::separating(profile, r).dump(2) << "\n";
        return kOk;
    }
    std::cout << profile.to_string() << ": " << (r.separating ? "separating" : "not separating") << "\n";
    if (r.witness) {
        std::cout << "witness: " << r.witness->first.to_string() << " and " << r.witness->second.to_string()
                  << " (product " << unit_product(profile, r.witness->first).str() << ")\n";
    }
    return kOk;
}

int cmd_classify(const std::string& arg, bool verify, const Output& out) {
    const std::string spec = all_digits(arg) ? "Z" + arg : arg;
    const auto parsed = parse_ring_spec(spec);
    const auto c = all_digits(arg) ? classify_integer(parse_integer(arg, "N")) : classify(parsed);
    bool verified = false;
    if (verify && parsed.size() <= max_elements()) {
        FreeModule module(make_ring(parsed), 1);
        const auto p = hom_partition(module);
        const auto d = dual_partition(module, p);
        const bool reflexive = d.size() == p.size();
        const bool self_dual = d == p;
        if (reflexive != c.reflexive || self_dual != c.self_dual) {
            throw VerificationError("classification disagrees with brute force: reflexive " +
                                    std::to_string(reflexive) + ", self-dual " + std::to_string(self_dual));
        }
        verified = true;
    }
    if (out.json) {
        auto doc = io::classification(c);
        doc["ring"] = parsed.name();
        doc["verified"] = verified;
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }
    std::cout << parsed.name() << (verified ? " (verified by brute force)" : "") << "\n"
              << "  separating: " << c.separating << "\n  semisimple: " << c.semisimple
              << "\n  reflexive:  " << c.reflexive << "\n  self-dual:  " << c.self_dual << "\n";
    return kOk;
}

int cmd_hprime(const std::string& spec, const Output& out) {
    FreeModule module(make_ring(spec), 1);
    const auto h = hprime_partition(module);
    const auto d = hprime_predicted_dual(module);
    if (out.json) {
        json cols = json::array(), rows = json::array();
        for (const auto& m : hprime_labels(module.ring())) cols.push_back(io::multi_index(m));
        for (const auto& l : hprime_dual_labels(module.ring())) rows.push_back(io::multi_index(l));
        std::cout << json{{"hprime", io::partition(h, out.pretty ? &module : nullptr)},
                          {"hprime_labels", cols},
                          {"predicted_dual", io::partition(d, out.pretty ? &module : nullptr)},
                          {"predicted_dual_labels", rows}}
                         .dump(2)
                  << "\n";
        return kOk;
    }
    print_partition(module, h, out, "H'");
    print_partition(module, d, out, "predicted dual");
    return kOk;
}

int cmd_macwilliams(const std::string& spec, unsigned n, const std::vector<std::string>& gens, const std::string& kind,
                    const std::optional<std::string>& unit, const Output& out) {
    FreeModule module(make_ring(spec), n);
    const auto u = parse_unit(module.ring(), unit);
    const auto code = Code::span(module, parse_vectors(module, gens));
    const auto report = MacWilliamsChecker(module, build_partition(module, kind), u).check(code, true);
    if (out.json) {
        std::cout << io::macwilliams(report).dump(2) << "\n";
    } else {
        std::cout << "code of size " << report.code_size << " in " << report.carrier.to_string() << ", dual code of size "
                  << report.dual_size << "\n";
        std::cout << "dual blocks  l: |C||C^perp & Q_l| = sum_m K'_{m,l} |C & P_m|\n";
        for (const auto& r : report.dual_blocks) {
            std::cout << "  " << r.block << ": " << r.lhs.str() << " = " << r.rhs.to_string() << (r.holds ? "  ok" : "  FAIL")
                      << "\n";
        }
        std::cout << "primal blocks m: |C||C^perp & P_m| = sum_l K_{l,m} |C & Q_l|\n";
        for (const auto& r : report.primal_blocks) {
            std::cout << "  " << r.block << ": " << r.lhs.str() << " = " << r.rhs.to_string() << (r.holds ? "  ok" : "  FAIL")
                      << "\n";
        }
        std::cout << "|C||C^perp| = |R|^n: " << (report.size_product_holds ? "ok" : "FAIL") << "\n"
                  << "C^perp^perp = C: " << (report.bidual_holds ? "ok" : "FAIL") << "\n"
                  << "identity " << (report.holds ? "holds" : "FAILS") << "\n";
    }
    if (!report.holds) {
        std::cerr << "homring: MacWilliams identity failed\n";
        return kVerification;
    }
    return kOk;
}

int cmd_scan(std::uint64_t max, const Output& out) {
    const auto found = scan_separating(max);
    if (out.json) {
        std::cout << json{{"max", max}, {"separating", found}}.dump(2) << "\n";
        return kOk;
    }
    for (auto n : found) std::cout << n << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homogeneous weights, dual partitions and MacWilliams checks over finite Frobenius rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "Emit canonical JSON");
    app.add_flag("--pretty", out.pretty, "Render elements as residues / polynomials in a");

    std::string spec, kind = "hom", arg;
    unsigned n = 1;
    std::optional<std::string> unit;
    bool oracle = false, closed = false, verify = false;
    std::vector<std::string> gens;
    std::uint64_t max = 0;

    const auto add_ring = [&](CLI::App* cmd) { cmd->add_option("ring", spec, "Ring spec, e.g. Z8 or Z2xF4")->required(); };
    const auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--of", kind, "Partition: hom, hom-sum, orbits, hamming, hprime")
            ->check(CLI::IsMember({"hom", "hom-sum", "orbits", "hamming", "hprime"}));
        cmd->add_option("-n", n, "Rank of the free module R^n")->check(CLI::Range(1u, 64u));
    };
    const auto add_unit = [&](CLI::App* cmd) { cmd->add_option("--unit", unit, "Character shift u (element encoding)"); };

    auto* weights = app.add_subcommand("weights", "Homogeneous weight of every element");
    add_ring(weights);
    add_unit(weights);
    weights->add_flag("--oracle", oracle, "Cross-check against the unit character sum");

    auto* partition = app.add_subcommand("partition", "A partition of R^n (default P_hom)");
    add_ring(partition);
    add_kind(partition);

    auto* dual = app.add_subcommand("dual", "Dual partition");
    auto* bidual = app.add_subcommand("bidual", "Dual of the dual partition");
    for (auto* cmd : {dual, bidual}) {
        add_ring(cmd);
        add_kind(cmd);
        add_unit(cmd);
    }

    auto* kraw = app.add_subcommand("krawtchouk", "Krawtchouk matrix of a partition and its dual");
    add_ring(kraw);
    add_kind(kraw);
    add_unit(kraw);
    kraw->add_flag("--closed", closed, "Closed-form matrix of (H', dual)");
    kraw->add_flag("--verify", verify, "With --closed, compare against brute force");

    auto* separating = app.add_subcommand("separating", "Separating test for a profile \"(q,n);...\" or integer N");
    separating->add_option("profile", arg, "Profile literal or integer")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Reflexivity / self-duality of P_hom");
    classify_cmd->add_option("ring", arg, "Ring spec or integer N")->required();
    classify_cmd->add_flag("--verify", verify, "Cross-check against brute-force duals");

    auto* hprime = app.add_subcommand("hprime", "H' partition and its predicted dual");
    add_ring(hprime);

    auto* mw = app.add_subcommand("macwilliams", "Verify the MacWilliams identity for a code");
    add_ring(mw);
    add_kind(mw);
    add_unit(mw);
    mw->add_option("--gens", gens, "Generators: vectors separated by ';', coordinates by ','");

    auto* scan = app.add_subcommand("scan-separating", "All separating integers up to a bound");
    scan->add_option("--max", max, "Upper bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*weights) return cmd_weights(spec, oracle, unit, out);
        if (*partition) return cmd_partition(spec, n, kind, out);
        if (*dual) return cmd_dual(spec, n, kind, unit, false, out);
        if (*bidual) return cmd_dual(spec, n, kind, unit, true, out);
        if (*kraw) return cmd_krawtchouk(spec, n, kind, unit, closed, verify, out);
        if (*separating) return cmd_separating(arg, out);
        if (*classify_cmd) return cmd_classify(arg, verify, out);
        if (*hprime) return cmd_hprime(spec, out);
        if (*mw) return cmd_macwilliams(spec, n, gens, kind, unit, out);
        if (*scan) return cmd_scan(max, out);
    } catch (const CapExceeded& e) {
        std::cerr << "homring: " << e.what() << "\n";
        return kCap;
    } catch (const VerificationError& e) {
        std::cerr << "homring: verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const ParseError& e) {
        std::cerr << "homring: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "homring: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "homring: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
