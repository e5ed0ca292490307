#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "altcodes/alt_code.hpp"
#include "altcodes/bench.hpp"
#include "altcodes/code_check.hpp"
#include "altcodes/errors.hpp"
#include "altcodes/fic.hpp"
#include "altcodes/generate.hpp"
#include "altcodes/language_file.hpp"
#include "altcodes/oracle.hpp"
#include "altcodes/report_json.hpp"

namespace altcodes::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_budget = 3;

struct Globals {
    bool json = false;
    bool exit_status = false;
    std::uint64_t budget = SearchBudget{}.max_candidates;
    double timeout_secs = 0;
    std::size_t evidence_cap = 16;

    SearchBudget search_budget() const {
        SearchBudget b;
        b.max_candidates = budget;
        if (timeout_secs > 0)
            b.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(std::ceil(timeout_secs * 1000)));
        return b;
    }
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    Globals g;

    FiniteLanguage load(const std::string& path) {
        ParsedLanguage parsed = load_language_file(path);
        for (const auto& w : parsed.warnings) err_ << path << ": " << w << '\n';
        return std::move(parsed.language);
    }

    int verdict(bool positive) const { return g.exit_status && !positive ? exit_negative : exit_ok; }

    void emit(const nlohmann::json& doc) { out_ << doc.dump(2) << '\n'; }

    static std::string factors(const std::vector<Word>& f) {
        std::string s;
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "." : "") + f[i];
        return s;
    }

    void print_witness(const AmbiguityWitness& w) {
        out_ << "witness: " << w.word << " = " << factors(w.factorization_a) << " = " << factors(w.factorization_b)
             << '\n';
    }

    int check_code(const std::string& file) {
        const FiniteLanguage z = load(file);
        const SpTrace trace = sardinas_patterson(z);
        std::optional<AmbiguityWitness> witness;
        if (!trace.is_code()) witness = ambiguity_witness(z);
        if (g.json) {
            auto doc = json::envelope("check code");
            doc["language"] = json::language(z);
            doc["verdict"] = to_string(trace.verdict);
            doc["sp_trace"] = json::sp_trace(trace);
            doc["witness"] = witness ? json::witness(*witness) : nlohmann::json(nullptr);
            emit(doc);
        } else {
            out_ << "verdict: " << to_string(trace.verdict) << '\n'
                 << "halting: " << to_string(trace.halting_reason) << '\n';
            for (std::size_t i = 0; i < trace.u_sets.size(); ++i)
                out_ << "U" << i + 1 << " = " << trace.u_sets[i] << '\n';
            if (witness) print_witness(*witness);
        }
        return verdict(trace.is_code());
    }

    int check_class(const std::string& file) {
        const FiniteLanguage z = load(file);
        const CodeClassReport r = classify_code(z);
        if (g.json) {
            auto doc = json::envelope("check class");
            doc["language"] = json::language(z);
            doc["report"] = json::class_report(r);
            emit(doc);
        } else {
            auto yn = [](bool b) { return b ? "yes" : "no"; };
            out_ << "code: " << yn(r.is_code) << '\n'
                 << "prefix: " << yn(r.is_prefix) << '\n'
                 << "suffix: " << yn(r.is_suffix) << '\n'
                 << "bifix: " << yn(r.is_bifix) << '\n'
                 << "maximal prefix: " << yn(r.is_maximal_prefix) << '\n'
                 << "maximal suffix: " << yn(r.is_maximal_suffix) << '\n'
                 << "maximal bifix: " << yn(r.is_maximal_bifix) << '\n';
            if (r.witness) print_witness(*r.witness);
        }
        return verdict(r.is_code);
    }

    int check_product(const std::string& xfile, const std::string& yfile) {
        const FiniteLanguage x = load(xfile);
        const FiniteLanguage y = load(yfile);
        const StrongVerdict strong = check_strong(x, y);
        const AltVerdict& alt = strong.alternative;
        const ProductVerdict& prod = alt.product_unambiguous;
        if (g.json) {
            auto doc = json::envelope("check product");
            doc["x"] = json::language(x);
            doc["y"] = json::language(y);
            doc["product"] = json::product_verdict(prod, g.evidence_cap);
            doc["alternative"] = json::alt_verdict(alt, g.evidence_cap);
            doc["strong"] = json::strong_verdict(strong, g.evidence_cap);
            emit(doc);
        } else {
            auto yn = [](bool b) { return b ? "yes" : "no"; };
            out_ << "unambiguous: " << yn(prod.unambiguous) << " (|XY| = " << prod.cardinality_check.first
                 << ", |X||Y| = " << prod.cardinality_check.second << ")\n";
            if (!prod.overlap_set.empty()) out_ << "overlap: " << capped(prod.overlap_set) << '\n';
            out_ << "XY code: " << yn(alt.product_code.is_code()) << '\n'
                 << "alternative: " << yn(alt.is_alternative) << '\n'
                 << "strong: " << yn(strong.is_strong) << '\n';
            if (!strong.condition1_violations.empty())
                out_ << "condition 1 violations: " << capped(strong.condition1_violations) << '\n';
            if (!strong.condition2_violations.empty())
                out_ << "condition 2 violations: " << capped(strong.condition2_violations) << '\n';
        }
        return verdict(alt.is_alternative);
    }

    int decide(const std::string& file, bool trace) {
        const FiniteLanguage z = load(file);
        const DecisionReport r = decide_alt_induced(z, {g.search_budget(), trace});
        if (g.json) {
            auto doc = json::envelope("decide");
            doc["language"] = json::language(z);
            doc.update(json::decision(r));
            emit(doc);
        } else {
            out_ << "verdict: " << to_string(r.verdict) << '\n'
                 << "route: " << to_string(r.route) << '\n'
                 << "form: " << to_string(r.form.kind) << '\n';
            if (r.gcd) out_ << "gcd: " << r.gcd->gcd << '\n';
            if (r.decomposition) out_ << "X = " << r.decomposition->x << '\n' << "Y = " << r.decomposition->y << '\n';
            if (r.search) {
                out_ << "candidates: " << r.search_stats.candidates() << " (u " << r.search_stats.u_tried << ", Y "
                     << r.search_stats.y_tried << ", X " << r.search_stats.x_tried << ")\n";
                if (trace) print_trace(*r.search);
            }
        }
        return verdict(r.verdict == Verdict::AltInduced);
    }

    void print_trace(const FicSearchState& s) {
        out_ << "w = " << s.w << ", t = " << s.t << '\n';
        for (const auto& step : s.steps) {
            out_ << "u = " << step.u << ": S = " << step.s << ", " << step.y_tried << " Y, " << step.x_tried
                 << " X\n";
            for (const auto& c : step.candidates)
                out_ << "  Y = " << c.y << ", P = " << c.p << ", " << c.x_tried << " X\n";
        }
    }

    int enumerate(const std::string& file, bool strong) {
        const FiniteLanguage z = load(file);
        const auto decs = strong ? enumerate_strong_decompositions(z, g.search_budget())
                                 : enumerate_decompositions(z, g.search_budget());
        if (g.json) {
            auto doc = json::envelope(strong ? "enumerate --strong" : "enumerate");
            doc["language"] = json::language(z);
            doc["count"] = decs.size();
            nlohmann::json list = nlohmann::json::array();
            for (const auto& d : decs) list.push_back(json::decomposition(d));
            doc["decompositions"] = list;
            emit(doc);
        } else {
            out_ << decs.size() << (strong ? " strong" : "") << " decomposition(s)\n";
            for (const auto& d : decs) out_ << d.x << " . " << d.y << '\n';
        }
        return verdict(!decs.empty());
    }

    int oracle(const std::string& file) {
        const FiniteLanguage z = load(file);
        OracleBudget budget;
        budget.max_steps = g.budget;
        budget.max_suffixes = 64;
        const OracleResult r = brute_force_decompositions(z, budget);
        if (g.json) {
            auto doc = json::envelope("oracle");
            doc["language"] = json::language(z);
            doc.update(json::oracle_result(r));
            emit(doc);
        } else {
            out_ << "code: " << (r.is_code ? "yes" : "no") << '\n';
            if (r.witness) print_witness(*r.witness);
            out_ << r.decompositions.size() << " decomposition(s)\n";
            for (const auto& d : r.decompositions) out_ << d.x << " . " << d.y << '\n';
        }
        return verdict(!r.decompositions.empty());
    }

    int gen(const GenParams& params) {
        const GeneratedInstance inst = gen_instance(params);
        if (g.json) {
            auto doc = json::envelope("gen");
            doc["kind"] = to_string(params.kind);
            doc["seed"] = params.seed;
            doc["language"] = json::language(inst.language);
            doc["planted"] = inst.planted ? json::decomposition(*inst.planted) : nlohmann::json(nullptr);
            emit(doc);
        } else {
            out_ << render_language(inst.language);
        }
        return exit_ok;
    }

    int bench(const std::string& spec, const std::string& path) {
        const BenchGrid grid = parse_bench_grid(spec);
        const auto records = bench_fic(grid, path, g.search_budget());
        std::size_t over_budget = 0;
        for (const auto& r : records) over_budget += r.verdict == "budget";
        if (g.json) {
            auto doc = json::envelope("bench");
            doc["out"] = path;
            doc["records"] = records.size();
            doc["over_budget"] = over_budget;
            emit(doc);
        } else {
            out_ << records.size() << " record(s) written to " << path << '\n';
            if (over_budget) out_ << over_budget << " run(s) exceeded the budget\n";
        }
        return over_budget ? exit_budget : exit_ok;
    }

    int input_error(const std::string& command, const std::string& message,
                    const std::optional<AmbiguityWitness>& witness = std::nullopt) {
        err_ << "error: " << message << '\n';
        if (witness) err_ << "witness: " << witness->word << " = " << factors(witness->factorization_a) << " = "
                          << factors(witness->factorization_b) << '\n';
        if (g.json) {
            auto doc = json::envelope(command);
            doc["error"] = message;
            if (witness) doc["witness"] = json::witness(*witness);
            emit(doc);
        }
        return exit_input;
    }

    int budget_error(const std::string& command, const std::string& message) {
        err_ << "error: " << message << '\n';
        if (g.json) {
            auto doc = json::envelope(command);
            doc["error"] = message;
            doc["verdict"] = "budget";
            emit(doc);
        }
        return exit_budget;
    }

private:
    std::string capped(const FiniteLanguage& x) const {
        if (x.size() <= g.evidence_cap) return to_string(x);
        std::string s = "{";
        std::size_t i = 0;
        for (const auto& w : x) {
            if (i == g.evidence_cap) break;
            s += (i++ ? ", " : "") + display(w);
        }
        return s + ", ... } (" + std::to_string(x.size()) + " words)";
    }

    std::ostream& out_;
    std::ostream& err_;
};

/// Runs one invocation; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Runner runner(out, err);
    Globals& g = runner.g;

    CLI::App app{"Finite codes, alternative codes and alt-induced decisions", "altcodes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "Print a machine-readable report");
    app.add_flag("--exit-status", g.exit_status, "Exit 1 on a negative verdict");
    app.add_option("--budget", g.budget, "Maximum number of search candidates")->check(CLI::PositiveNumber);
    app.add_option("--timeout", g.timeout_secs, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
    app.add_option("--evidence-cap", g.evidence_cap, "Maximum words listed per evidence set");

    std::string file, xfile, yfile;
    bool strong = false, trace = false;

    auto* check = app.add_subcommand("check", "Code and product checks");
    check->require_subcommand(1);
    auto* check_code = check->add_subcommand("code", "Sardinas-Patterson verdict and witness");
    check_code->add_option("FILE", file)->required();
    auto* check_class = check->add_subcommand("class", "Prefix/suffix/bifix classification");
    check_class->add_option("FILE", file)->required();
    auto* check_product = check->add_subcommand("product", "Unambiguity, alternative and strong checks for (X, Y)");
    check_product->add_option("XFILE", xfile)->required();
    check_product->add_option("YFILE", yfile)->required();

    auto* decide = app.add_subcommand("decide", "Decide whether a code is alt-induced");
    decide->add_option("FILE", file)->required();
    decide->add_flag("--trace", trace, "Print the prefix-pool search trace");

    auto* enumerate = app.add_subcommand("enumerate", "List all inducing pairs");
    enumerate->add_option("FILE", file)->required();
    enumerate->add_flag("--strong", strong, "Only strong alternative pairs");

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference decomposition search");
    oracle->add_option("FILE", file)->required();

    GenParams params;
    std::string kind = "prefix";
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"prefix", "maximal-prefix", "alt-induced", "random-code", "hard"}));
    gen->add_option("--alphabet", params.alphabet_size)->check(CLI::Range(1, 26));
    gen->add_option("--size", params.size)->check(CLI::PositiveNumber);
    gen->add_option("--maxlen", params.max_length)->check(CLI::PositiveNumber);
    gen->add_option("--seed", params.seed);

    std::string grid, out_path;
    auto* bench = app.add_subcommand("bench", "Benchmark the decision procedure over a parameter grid");
    bench->add_option("--param-grid", grid, "e.g. kind=hard;size=4,6,8;reps=3")->required();
    bench->add_option("--out", out_path, "CSV output path")->required();

    std::string command = "altcodes";
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input;
    }

    if (*check_code) command = "check code";
    else if (*check_class) command = "check class";
    else if (*check_product) command = "check product";
    else command = app.get_subcommands().front()->get_name();

    try {
        if (*check_code) return runner.check_code(file);
        if (*check_class) return runner.check_class(file);
        if (*check_product) return runner.check_product(xfile, yfile);
        if (*decide) return runner.decide(file, trace);
        if (*enumerate) return runner.enumerate(file, strong);
        if (*oracle) return runner.oracle(file);
        if (*gen) {
            params.kind = *parse_gen_kind(kind);
            return runner.gen(params);
        }
        if (*bench) return runner.bench(grid, out_path);
    } catch (const not_a_code& e) {
        return runner.input_error(command, e.what(), e.witness());
    } catch (const parse_error& e) {
        return runner.input_error(command, e.what());
    } catch (const contract_violation& e) {
        return runner.input_error(command, e.what());
    } catch (const budget_exceeded& e) {
        return runner.budget_error(command, e.what());
    }
    return exit_input;
}

}  // namespace altcodes::cli
