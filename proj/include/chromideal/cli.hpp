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

#ifndef CHROMIDEAL_CLI_HPP
#define CHROMIDEAL_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "colorideal.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "groebner.hpp"
#include "io.hpp"

namespace chromideal::cli {

using io::json;

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_budget = 2 };

struct RunConfig {
    std::string command;
    std::string input;
    std::string gen;
    std::uint32_t k = 4;
    std::string field;  // empty: gf:p for the smallest prime p = 1 (mod k)
    std::string order = "grevlex";
    std::uint64_t seed = 0;
    std::size_t max_pairs = BuchbergerOptions{}.max_pairs;
    std::size_t max_terms = BuchbergerOptions{}.max_terms;
    std::string format = "json";
    std::string output;
    std::string generators;
    std::string certificate;
    bool timing = false;
};

namespace detail {

class usage_error : public error {
   public:
    using error::error;
};

inline std::string default_field(std::uint32_t k) { return "gf:" + std::to_string(smallest_prime_one_mod(k)); }

/// Calls fn with the field named by spec ("rational" or "gf:P").
template <class Fn>
int with_field(const std::string& spec, std::uint32_t k, bool need_roots, Fn&& fn) {
    if (spec == "rational") return fn(RationalField{});
    if (spec.rfind("gf:", 0) == 0) {
        const auto digits = spec.substr(3);
        if (digits.empty() || digits.size() > 10 || !std::ranges::all_of(digits, [](char c) { return c >= '0' && c <= '9'; }))
            throw usage_error("bad field '" + spec + "'");
        const auto p = std::stoull(digits);
        if (p > 0x7fffffffULL || !is_prime(p)) throw usage_error("field modulus " + digits + " is not a prime below 2^31");
        if (need_roots && (p - 1) % k != 0)
            throw usage_error("GF(" + digits + ") lacks the " + std::to_string(k) + "-th roots of unity (need p = 1 mod k)");
        return fn(PrimeField(static_cast<std::uint32_t>(p)));
    }
    throw usage_error("field must be 'rational' or 'gf:P', got '" + spec + "'");
}

class Runner {
   public:
    Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

    int run() {
        if (cfg_.k == 0) throw usage_error("--k must be at least 1");
        if (cfg_.max_pairs == 0 || cfg_.max_terms == 0) throw usage_error("budget caps must be positive");
        if (cfg_.format != "json" && cfg_.format != "text") throw usage_error("--format must be json or text");
        order_ = parse_order(cfg_.order);
        field_spec_ = cfg_.field.empty() ? default_field(cfg_.k) : cfg_.field;
        started_ = std::chrono::steady_clock::now();

        const auto& c = cfg_.command;
        if (c == "gen") return gen();
        if (c == "oracle") return oracle();
        if (c == "verify") return verify();
        if (c == "gb" && !cfg_.generators.empty())
            return with_field(field_spec_, cfg_.k, false, [&](auto f) { return gb_of_file(f); });
        return with_field(field_spec_, cfg_.k, c != "gb" && c != "encode", [&](auto f) {
            if (c == "encode") return encode(f);
            if (c == "solve") return solve(f);
            if (c == "color") return color(f);
            if (c == "certify") return certify(f);
            if (c == "gb") return gb_of_graph(f);
            throw usage_error("unknown command '" + c + "'");
        });
    }

   private:
    Graph load_graph() const {
        if (cfg_.input.empty() == cfg_.gen.empty()) throw usage_error("give exactly one of --input or --gen");
        if (!cfg_.gen.empty()) return generate(cfg_.gen, cfg_.seed);
        std::vector<std::string> warnings;
        auto g = io::read_graph_file(cfg_.input, &warnings);
        for (const auto& w : warnings) err_ << "warning: " << w << "\n";
        return g;
    }

    BuchbergerOptions budget() const {
        BuchbergerOptions o;
        o.max_pairs = cfg_.max_pairs;
        o.max_terms = cfg_.max_terms;
        return o;
    }

    std::int64_t elapsed_ms() const {
        if (!cfg_.timing) return 0;
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started_).count();
    }

    json result(bool colorable, std::size_t basis_size, const std::optional<Coloring>& coloring,
                const std::optional<std::string>& cert_path) const {
        json j;
        j["colorable"] = colorable;
        j["k"] = cfg_.k;
        j["field"] = field_spec_;
        j["order"] = std::string(to_string(order_));
        j["basis_size"] = basis_size;
        j["coloring"] = coloring ? io::coloring_to_json(*coloring) : json(nullptr);
        j["certificate_path"] = cert_path ? json(*cert_path) : json(nullptr);
        j["elapsed_ms"] = elapsed_ms();
        return j;
    }

    static std::string text_value(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_object()) {
            std::string s;
            for (const auto& [key, val] : v.items()) s += (s.empty() ? "" : " ") + key + ":" + text_value(val);
            return s;
        }
        if (v.is_array()) {
            std::string s;
            for (const auto& x : v) s += "\n  " + text_value(x);
            return s;
        }
        return v.dump();
    }

    /// Writes to --output when set (except for certify, which owns that path), else to stdout.
    void emit(const json& j, bool to_output_file = true) const {
        std::string text;
        if (cfg_.format == "json") {
            text = j.dump(2) + "\n";
        } else {
            for (const auto& [key, val] : j.items()) text += key + ": " + text_value(val) + "\n";
        }
        if (to_output_file && !cfg_.output.empty())
            io::write_file(cfg_.output, text);
        else
            out_ << text;
    }

    int gen() const {
        const auto g = load_graph();
        const std::string text = cfg_.format == "json" ? io::graph_to_json(g).dump(2) + "\n" : write_dimacs(g);
        if (cfg_.output.empty())
            out_ << text;
        else
            io::write_file(cfg_.output, text);
        return exit_ok;
    }

    int oracle() const {
        const auto g = load_graph();
        const auto c = brute_force_color(g, cfg_.k);
        emit(result(c.has_value(), 0, c, std::nullopt));
        return exit_ok;
    }

    template <Field K>
    ColoringInstance<K> instance(const K& f) const {
        return ColoringInstance<K>(load_graph(), cfg_.k, f, order_, budget());
    }

    template <Field K>
    int encode(const K& f) const {
        const auto g = load_graph();
        json j;
        j["nvars"] = g.n();
        j["k"] = cfg_.k;
        j["field"] = field_spec_;
        j["order"] = std::string(to_string(order_));
        j["generators"] = io::polys_to_json(encode_graph(g, cfg_.k, f, order_));
        emit(j);
        return exit_ok;
    }

    template <Field K>
    int solve(const K& f) const {
        const auto inst = instance(f);
        const auto d = decide_colorable(inst);
        emit(result(d.colorable, d.basis.elements.size(), std::nullopt, std::nullopt));
        return exit_ok;
    }

    template <Field K>
    int color(const K& f) const {
        const auto inst = instance(f);
        auto d = decide_colorable(inst);
        const auto size = d.basis.elements.size();
        std::optional<Coloring> c;
        if (d.colorable) c = extract_coloring(inst, std::move(d));
        emit(result(c.has_value(), size, c, std::nullopt));
        return exit_ok;
    }

    template <Field K>
    int certify(const K& f) const {
        const auto inst = instance(f);
        auto d = decide_colorable(inst);
        const bool colorable = d.colorable;
        const auto size = d.basis.elements.size();
        Certificate<K> cert;
        std::optional<Coloring> c;
        if (colorable) {
            c = extract_coloring(inst, std::move(d));
            cert = ColoringCertificate{*c, cfg_.k};
        } else {
            cert = infeasibility_certificate(inst);
        }
        const auto cert_json = io::certificate_to_json(cert);
        if (cfg_.output.empty()) {
            out_ << cert_json.dump(2) << "\n";
            return exit_ok;
        }
        io::write_file(cfg_.output, cert_json.dump(2) + "\n");
        emit(result(colorable, size, c, cfg_.output), false);
        return exit_ok;
    }

    template <Field K>
    json basis_json(const GroebnerBasis<K>& gb) const {
        json j;
        j["field"] = field_spec_;
        j["order"] = std::string(to_string(order_));
        j["basis_size"] = gb.elements.size();
        j["trivial"] = is_trivial(gb);
        j["basis"] = io::polys_to_json(gb.elements);
        return j;
    }

    template <Field K>
    int gb_of_graph(const K& f) const {
        const auto g = load_graph();
        const auto res = buchberger(encode_graph(g, cfg_.k, f, order_), order_, budget());
        emit(basis_json(res.basis));
        return exit_ok;
    }

    template <Field K>
    int gb_of_file(const K& f) const {
        const auto file = io::generator_file_from_json(io::parse_json(io::read_file(cfg_.generators), cfg_.generators));
        const auto gens = io::polys_from_json(file.generators, file.nvars, f, order_);
        const auto res = buchberger(gens, order_, budget());
        emit(basis_json(res.basis));
        return exit_ok;
    }

    int verify() const {
        if (cfg_.generators.empty() || cfg_.certificate.empty())
            throw usage_error("verify needs --generators and --certificate");
        const auto file = io::generator_file_from_json(io::parse_json(io::read_file(cfg_.generators), cfg_.generators));
        const auto cert_json = io::parse_json(io::read_file(cfg_.certificate), cfg_.certificate);
        const std::string spec = !cfg_.field.empty() ? cfg_.field : file.field.value_or("rational");
        const auto ord = file.order ? parse_order(*file.order) : order_;
        bool valid = false;
        with_field(spec, cfg_.k, false, [&](auto f) {
            try {
                const auto gens = io::polys_from_json(file.generators, file.nvars, f, ord);
                const auto cert = io::certificate_from_json(cert_json, file.nvars, f, ord);
                valid = verify_certificate(gens, cert);
            } catch (const error& e) {
                err_ << "verify: " << e.what() << "\n";
                valid = false;
            }
            return 0;
        });
        json j;
        j["valid"] = valid;
        emit(j);
        return exit_ok;
    }

    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    MonomialOrder order_ = MonomialOrder::grevlex;
    std::string field_spec_;
    std::chrono::steady_clock::time_point started_;
};

}  // namespace detail

/// Parses argv (without the program name) into cfg. Returns an exit code when parsing ends the run.
inline std::optional<int> parse_args(std::vector<std::string> args, RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph colorability through Groebner bases of coloring ideals", "chromideal"};
    app.require_subcommand(1, 1);

    struct Spec {
        const char* name;
        const char* help;
        bool graph;
    };
    const Spec specs[] = {
        {"encode", "print the coloring-ideal generators of a graph", true},
        {"solve", "decide k-colorability with a Groebner basis", true},
        {"color", "decide and extract a coloring by specialization", true},
        {"certify", "emit a coloring or a Nullstellensatz certificate", true},
        {"verify", "check a certificate against a generator file", false},
        {"gb", "print the reduced Groebner basis of a coloring ideal or generator file", true},
        {"gen", "generate a named or random planar graph", true},
        {"oracle", "decide k-colorability by backtracking", true},
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
        if (s.graph) {
            auto* in = sub->add_option("--input", cfg.input, "graph file (.col or .json)");
            auto* gen = sub->add_option("--gen", cfg.gen, "generator FAMILY[:ARGS], e.g. complete:5, maximal_planar:10:1");
            in->excludes(gen);
        }
        if (std::string(s.name) == "verify" || std::string(s.name) == "gb")
            sub->add_option("--generators", cfg.generators, "generator file (JSON)");
        if (std::string(s.name) == "verify") sub->add_option("--certificate", cfg.certificate, "certificate file (JSON)");
        sub->add_option("--k", cfg.k, "number of colors")->default_val(4);
        sub->add_option("--field", cfg.field, "rational | gf:P (default gf:p, smallest prime p = 1 mod k)");
        sub->add_option("--order", cfg.order, "lex | grlex | grevlex")->default_val("grevlex");
        sub->add_option("--seed", cfg.seed, "seed for random generators")->default_val(0);
        sub->add_option("--max-pairs", cfg.max_pairs, "critical pair budget");
        sub->add_option("--max-terms", cfg.max_terms, "stored term budget");
        sub->add_option("--format", cfg.format, "json | text")->default_val("json");
        sub->add_option("--output", cfg.output, "output path");
        sub->add_flag("--timing", cfg.timing, "report wall time in elapsed_ms (otherwise 0)");
    }
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    return std::nullopt;
}

/// Runs one command. Exit codes: 0 answer produced, 1 usage or input error, 2 budget exceeded.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (auto code = parse_args(std::move(args), cfg, out, err)) return *code;
    try {
        return detail::Runner(cfg, out, err).run();
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace chromideal::cli

#endif  // CHROMIDEAL_CLI_HPP
