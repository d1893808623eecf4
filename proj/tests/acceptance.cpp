/*
   Copyright 2026 The chromideal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// Acceptance run: one PASS/FAIL line per criterion on stdout, diagnostics on
// stderr, exit status 1 if any criterion fails.

#include "oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace chromideal;
namespace fs = std::filesystem;

namespace {

// Tolerances.
constexpr double k5_seconds = 10.0;
constexpr double exhaustive_seconds = 600.0;
constexpr double panel_seconds = 60.0;
constexpr std::size_t permutations = 10;
constexpr std::size_t planar_degeneracy = 5;
constexpr std::size_t planar_greedy_colors = 6;
constexpr int determinism_runs = 3;

const RationalField Q{};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
auto timed(double& seconds, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = fn();
    seconds = seconds_since(t0);
    return r;
}

/// Runs body(i) for i in [0, count) on all cores.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) body(i);
        });
}

class Ledger {
   public:
    void fail(const std::string& what) {
        std::lock_guard lock(mu_);
        if (failures_++ < 10) std::cerr << "  " << what << "\n";
    }
    bool ok() const { return failures_ == 0; }
    std::size_t failures() const { return failures_; }

   private:
    std::mutex mu_;
    std::size_t failures_ = 0;
};

bool report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << std::endl;
    return pass;
}

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << "n=" << g.n() << " edges={";
    for (const auto& e : g.edges()) s << " " << e.u << "-" << e.v;
    s << " }";
    return s.str();
}

template <Field K>
bool is_unit_basis(const GroebnerBasis<K>& gb) {
    return gb.elements.size() == 1 && gb.elements[0].is_constant() && gb.elements[0].leading_coeff() == gb.elements[0].field().one();
}

/// Reduced bases from 10 shuffles of the generator list all equal reference.
template <Field K>
bool permutation_invariant(const ColoringInstance<K>& inst, const GroebnerBasis<K>& reference, std::uint64_t seed) {
    auto gens = inst.generators();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < permutations; ++i) {
        std::shuffle(gens.begin(), gens.end(), rng);
        if (buchberger(gens, inst.order).basis.elements != reference.elements) return false;
    }
    return true;
}

// Every instance decided anywhere below records its field flags here for criterion 7
// and its basis checks for criterion 5.
struct Tally {
    Ledger gb;            // criterion 5
    Ledger fields;        // criterion 7
    std::atomic<std::size_t> gb_checked{0};
    std::atomic<std::size_t> q_permuted{0};
    std::atomic<std::size_t> flags_compared{0};
};

Tally tally;

struct Both {
    Decision<PrimeField> gf;
    Decision<RationalField> q;
    double gf_seconds = 0, q_seconds = 0;
};

/// Decides over GF(p) and the rationals, then runs the criterion 5 and 7 checks.
Both decide_both(const Graph& g, std::uint32_t k, std::uint64_t seed, bool permute_rational) {
    Both out;
    const ColoringInstance gf(g, k, default_prime_field(k));
    const ColoringInstance q(g, k, Q);
    out.gf = timed(out.gf_seconds, [&] { return decide_colorable(gf); });
    out.q = timed(out.q_seconds, [&] { return decide_colorable(q); });
    const auto tag = describe(g) + " k=" + std::to_string(k);

    if (out.gf.colorable != out.q.colorable) tally.fields.fail("field flags differ: " + tag);
    ++tally.flags_compared;

    if (!satisfies_groebner_criterion(out.gf.basis)) tally.gb.fail("GF basis fails the S-pair check: " + tag);
    if (!satisfies_groebner_criterion(out.q.basis)) tally.gb.fail("rational basis fails the S-pair check: " + tag);
    if (!permutation_invariant(gf, out.gf.basis, seed)) tally.gb.fail("GF basis depends on generator order: " + tag);
    if (permute_rational) {
        if (!permutation_invariant(q, out.q.basis, seed)) tally.gb.fail("rational basis depends on generator order: " + tag);
        ++tally.q_permuted;
    }
    ++tally.gb_checked;
    return out;
}

// ---------------------------------------------------------------------------

bool criterion_k5() {
    Ledger led;
    const Graph k5 = complete_graph(5);
    double worst = 0;
    if (oracle::count_colorings(k5, 4) != 0) led.fail("oracle found a 4-coloring of K5");
    if (brute_force_color(k5, 4)) led.fail("backtracking found a 4-coloring of K5");

    auto run = [&](const auto& field, const char* name) {
        double secs = 0;
        const bool ok = timed(secs, [&] {
            const ColoringInstance inst(k5, 4, field);
            const auto d = decide_colorable(inst);
            const auto cert = infeasibility_certificate(inst);
            const auto gens = inst.generators();
            bool good = !d.colorable && is_unit_basis(d.basis);
            good = good && verify_certificate(gens, Certificate<std::decay_t<decltype(field)>>{cert});
            return good;
        });
        worst = std::max(worst, secs);
        if (!ok) led.fail(std::string("K5 over ") + name + ": expected basis {1} and a verifying certificate");
        if (secs >= k5_seconds) led.fail(std::string("K5 over ") + name + " took " + std::to_string(secs) + " s");
    };
    run(PrimeField(5), "GF(5)");
    run(Q, "Q");
    decide_both(k5, 4, 1, true);

    std::ostringstream d;
    d << "GF(5) and Q give {1}, oracle 0/1024, certificates verify, slowest " << worst << " s (limit " << k5_seconds << " s)";
    return report(1, "K5 is not 4-colorable", led.ok(), d.str());
}

bool criterion_exhaustive() {
    Ledger led;
    struct Job {
        Graph g;
        std::uint32_t k;
    };
    std::vector<Job> jobs;
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
            for (std::uint32_t k = 2; k <= 4; ++k) jobs.push_back({oracle::graph_from_mask(n, mask), k});

    std::mutex mu;
    double decide_seconds = 0;
    const auto t0 = std::chrono::steady_clock::now();
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& [g, k] = jobs[i];
        const auto both = decide_both(g, k, 1000 + i, true);
        const bool expected = brute_force_color(g, k).has_value();
        if (both.gf.colorable != expected) led.fail("GF decision disagrees with oracle: " + describe(g) + " k=" + std::to_string(k));
        std::lock_guard lock(mu);
        decide_seconds += both.gf_seconds + both.q_seconds;
    });
    const double wall = seconds_since(t0);

    const bool pass = led.ok() && decide_seconds < exhaustive_seconds;
    std::ostringstream d;
    d << jobs.size() << " instances (n<=5, k=2..4), " << led.failures() << " discrepancies, decision time " << decide_seconds
      << " s (limit " << exhaustive_seconds << " s), wall " << wall << " s";
    return report(2, "exhaustive small graphs match backtracking", pass, d.str());
}

bool criterion_panel() {
    Ledger led;
    struct Row {
        std::string name;
        Graph g;
        std::uint32_t k;
        bool expected;
    };
    const std::vector<Row> panel = {
        {"C5", cycle_graph(5), 2, false},      {"C5", cycle_graph(5), 3, true},      {"C7", cycle_graph(7), 2, false},
        {"C7", cycle_graph(7), 3, true},       {"Petersen", petersen_graph(), 2, false}, {"Petersen", petersen_graph(), 3, true},
        {"W5", wheel_graph(5), 3, false},      {"W5", wheel_graph(5), 4, true},      {"K4", complete_graph(4), 3, false},
        {"K4", complete_graph(4), 4, true},
    };
    double worst = 0;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        const auto& r = panel[i];
        const auto tag = r.name + " k=" + std::to_string(r.k);
        const auto both = decide_both(r.g, r.k, 5000 + i, true);
        worst = std::max({worst, both.gf_seconds, both.q_seconds});
        if (both.gf.colorable != r.expected || both.q.colorable != r.expected) led.fail("wrong decision: " + tag);
        if (brute_force_color(r.g, r.k).has_value() != r.expected) led.fail("oracle disagrees: " + tag);
        if (both.gf_seconds >= panel_seconds || both.q_seconds >= panel_seconds) led.fail("too slow: " + tag);
    }
    std::ostringstream d;
    d << panel.size() << " decisions over GF(p) and Q agree with the oracle, slowest " << worst << " s (limit " << panel_seconds
      << " s)";
    return report(3, "named-graph panel", led.ok(), d.str());
}

std::vector<std::pair<std::size_t, std::uint64_t>> planar_set() {
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::uint64_t s = 1; s <= 25; ++s) out.emplace_back(6 + (s - 1) % 6, s);
    return out;
}

bool criterion_planar() {
    Ledger led;
    const auto set = planar_set();
    std::atomic<std::size_t> colored{0};
    parallel_for(set.size(), [&](std::size_t i) {
        const auto [n, seed] = set[i];
        const Graph g = maximal_planar_graph(n, seed);
        const auto tag = "maximal_planar:" + std::to_string(n) + ":" + std::to_string(seed);
        const auto both = decide_both(g, 4, 9000 + i, false);
        if (!both.gf.colorable) led.fail("GB path says not 4-colorable: " + tag);
        if (!brute_force_color(g, 4)) led.fail("oracle says not 4-colorable: " + tag);
        if (!both.gf.colorable) return;
        const ColoringInstance inst(g, 4, default_prime_field(4));
        const auto c = extract_coloring(inst, both.gf);
        const auto gens = inst.generators();
        const bool in_range = std::ranges::all_of(c.colors, [](auto x) { return x < 4; });
        if (!is_proper(g, c) || !in_range || !verify_certificate(gens, Certificate<PrimeField>{ColoringCertificate{c, 4}}))
            led.fail("extracted coloring does not verify: " + tag);
        else
            ++colored;
    });
    std::ostringstream d;
    d << set.size() << " maximal planar graphs (n=6..11) 4-colorable by GB and oracle, " << colored
      << " extracted colorings verified";
    return report(4, "seeded maximal planar graphs are 4-colorable", led.ok(), d.str());
}

bool criterion_groebner() {
    std::ostringstream d;
    d << tally.gb_checked << " instances from criteria 1-4: every GF(p) and Q basis passes the S-pair check; GF(p) bases invariant under "
      << permutations << " shuffles each, Q bases likewise on " << tally.q_permuted << " instances (criteria 1-3)";
    return report(5, "Groebner basis correctness", tally.gb.ok(), d.str());
}

bool criterion_identity() {
    Ledger led;
    std::mt19937_64 rng(42);
    constexpr std::size_t nvars = 6;
    std::size_t checked = 0;
    auto check = [&](const auto& field, const char* name) {
        using K = std::decay_t<decltype(field)>;
        for (std::uint32_t k = 1; k <= 8; ++k)
            for (int trial = 0; trial < 5; ++trial) {
                const std::size_t u = 1 + rng() % nvars;
                std::size_t v = 1 + rng() % (nvars - 1);
                if (v >= u) ++v;
                const auto xu = Polynomial<K>::variable(field, nvars, u, MonomialOrder::grevlex);
                const auto xv = Polynomial<K>::variable(field, nvars, v, MonomialOrder::grevlex);
                auto power = [&](const Polynomial<K>& x) {
                    auto p = Polynomial<K>::one(field, nvars, MonomialOrder::grevlex);
                    for (std::uint32_t i = 0; i < k; ++i) p = p * x;
                    return p;
                };
                const auto lhs = (xu - xv) * edge_poly(field, nvars, u, v, k);
                if (lhs != power(xu) - power(xv))
                    led.fail(std::string(name) + " k=" + std::to_string(k) + " u=" + std::to_string(u) + " v=" + std::to_string(v));
                ++checked;
            }
    };
    check(Q, "Q");
    check(PrimeField(17), "GF(17)");
    std::ostringstream d;
    d << checked << " random pairs, k=1..8, over Q and GF(17)";
    return report(6, "(x_u - x_v) * Q_uv = x_u^k - x_v^k", led.ok(), d.str());
}

bool criterion_fields() {
    std::ostringstream d;
    d << tally.flags_compared << " instances from criteria 2-4 give equal flags over Q and GF(p), p smallest prime = 1 mod k";
    return report(7, "field independence", tally.fields.ok(), d.str());
}

bool criterion_degeneracy() {
    Ledger led;
    std::vector<Graph> graphs;
    for (const auto& [n, seed] : planar_set()) graphs.push_back(maximal_planar_graph(n, seed));
    for (std::size_t n = 3; n <= 100; ++n)
        for (std::uint64_t seed = 1; seed <= 10; ++seed) graphs.push_back(maximal_planar_graph(n, seed));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) graphs.push_back(maximal_planar_graph(500, seed));
    // Face insertion only yields 3-degenerate graphs; the icosahedron reaches 5.
    graphs.push_back(oracle::icosahedron());

    std::size_t worst_degeneracy = 0, worst_colors = 0;
    for (const auto& g : graphs) {
        const auto elim = elimination_order(g);
        const auto greedy = greedy_color(g, elim.order);
        worst_degeneracy = std::max(worst_degeneracy, elim.degeneracy);
        worst_colors = std::max(worst_colors, greedy.colors_used);
        if (g.edge_count() != 3 * g.n() - 6) led.fail("not maximal planar by edge count: " + describe(g));
        if (g.n() <= 100 && elim.degeneracy != oracle::peel_degeneracy(g)) led.fail("degeneracy disagrees with oracle");
        if (elim.degeneracy > planar_degeneracy) led.fail("degeneracy " + std::to_string(elim.degeneracy));
        if (greedy.colors_used > planar_greedy_colors || greedy.colors_used != colors_used(greedy.coloring))
            led.fail("greedy used " + std::to_string(greedy.colors_used) + " colors");
        if (!is_proper(g, greedy.coloring)) led.fail("greedy coloring is not proper");
    }
    std::ostringstream d;
    d << graphs.size() << " maximal planar graphs (n=3..100, 500, icosahedron), max degeneracy " << worst_degeneracy << " (limit "
      << planar_degeneracy << "), max greedy colors " << worst_colors << " (limit " << planar_greedy_colors << "), all proper";
    return report(8, "degeneracy bound", led.ok(), d.str());
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool criterion_determinism() {
    Ledger led;
    const fs::path dir = fs::temp_directory_path() / "chromideal-acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto file = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };

    // Invocations mirroring criteria 1-4, each with the output files it writes.
    std::vector<std::pair<std::string, std::vector<std::string>>> calls;
    for (const char* field : {"gf:5", "rational"}) {
        const std::string f = field;
        const std::string tag = f == "rational" ? "q" : "gf";
        calls.push_back({"solve --gen complete:5 --k 4 --field " + f, {}});
        calls.push_back({"encode --gen complete:5 --k 4 --field " + f + " --output " + file("k5_" + tag + ".json"), {"k5_" + tag + ".json"}});
        calls.push_back({"certify --gen complete:5 --k 4 --field " + f + " --output " + file("cert_" + tag + ".json"), {"cert_" + tag + ".json"}});
        calls.push_back({"verify --generators " + file("k5_" + tag + ".json") + " --certificate " + file("cert_" + tag + ".json"), {}});
        calls.push_back({"gb --gen complete:5 --k 4 --field " + f, {}});
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 12; ++i) {
        const std::size_t n = 3 + rng() % 3;
        const auto g = oracle::graph_from_mask(n, rng() % (std::uint64_t{1} << (n * (n - 1) / 2)));
        const auto name = "small" + std::to_string(i) + ".col";
        std::ofstream(dir / name) << write_dimacs(g);
        for (std::uint32_t k = 2; k <= 4; ++k) {
            calls.push_back({"solve --input " + file(name) + " --k " + std::to_string(k), {}});
            calls.push_back({"solve --input " + file(name) + " --k " + std::to_string(k) + " --field rational", {}});
        }
    }
    for (const auto& [spec, ks] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"cycle:5", {2, 3}}, {"cycle:7", {2, 3}}, {"petersen", {2, 3}}, {"wheel:5", {3, 4}}, {"complete:4", {3, 4}}})
        for (int k : ks) {
            calls.push_back({"solve --gen " + spec + " --k " + std::to_string(k), {}});
            calls.push_back({"solve --gen " + spec + " --k " + std::to_string(k) + " --field rational", {}});
            calls.push_back({"color --gen " + spec + " --k " + std::to_string(k), {}});
        }
    for (const auto& [n, seed] : planar_set()) {
        const auto spec = "maximal_planar:" + std::to_string(n) + ":" + std::to_string(seed);
        calls.push_back({"color --gen " + spec + " --k 4", {}});
        calls.push_back({"solve --gen " + spec + " --k 4 --field rational", {}});
    }
    calls.push_back({"gen --gen maximal_planar:50 --seed 3", {}});

    std::vector<std::string> first(calls.size());
    parallel_for(calls.size(), [&](std::size_t i) {
        const auto& [args, outputs] = calls[i];
        for (int run = 0; run < determinism_runs; ++run) {
            const auto out = dir / ("stdout" + std::to_string(i) + "_" + std::to_string(run));
            const std::string cmd = std::string("\"") + CHROMIDEAL_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
            const int status = std::system(cmd.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
                led.fail("exit status " + std::to_string(status) + ": " + args);
                return;
            }
            std::string bytes = slurp(out);
            for (const auto& o : outputs) bytes += "\n--" + o + "--\n" + slurp(dir / o);
            if (run == 0)
                first[i] = std::move(bytes);
            else if (bytes != first[i])
                led.fail("output differs between runs: " + args);
        }
    });
    fs::remove_all(dir);
    std::ostringstream d;
    d << calls.size() << " CLI invocations, " << determinism_runs << " runs each, byte-identical stdout and output files";
    return report(9, "deterministic CLI output", led.ok(), d.str());
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion_k5();
    all &= criterion_exhaustive();
    all &= criterion_panel();
    all &= criterion_planar();
    all &= criterion_groebner();
    all &= criterion_identity();
    all &= criterion_fields();
    all &= criterion_degeneracy();
    all &= criterion_determinism();
    return all ? 0 : 1;
}
