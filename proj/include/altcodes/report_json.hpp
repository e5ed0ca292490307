#pragma once

// JSON renderings of every report type. Top-level documents carry
// "schema": 1. Requires nlohmann/json.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "altcodes/alt_code.hpp"
#include "altcodes/code_check.hpp"
#include "altcodes/fic.hpp"
#include "altcodes/language.hpp"
#include "altcodes/oracle.hpp"

namespace altcodes::json {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json envelope(const std::string& command) { return {{"schema", schema_version}, {"command", command}}; }

inline json words(const FiniteLanguage& x) {
    json out = json::array();
    for (const auto& w : x) out.push_back(w);
    return out;
}

inline json language(const FiniteLanguage& x) {
    json alphabet = std::string(x.alphabet().begin(), x.alphabet().end());
    return {{"words", words(x)}, {"alphabet", alphabet}, {"alphabet_declared", x.alphabet_declared()}};
}

/// Diagnostic evidence, truncated to `cap` words.
inline json evidence(const FiniteLanguage& x, std::size_t cap) {
    json listed = json::array();
    for (const auto& w : x) {
        if (listed.size() >= cap) break;
        listed.push_back(w);
    }
    return {{"count", x.size()}, {"words", listed}, {"truncated", x.size() > cap}};
}

inline json witness(const AmbiguityWitness& w) {
    return {{"word", w.word}, {"factorization_a", w.factorization_a}, {"factorization_b", w.factorization_b}};
}

inline json sp_trace(const SpTrace& t) {
    json sets = json::array();
    for (const auto& u : t.u_sets) sets.push_back(words(u));
    return {{"verdict", to_string(t.verdict)}, {"halting_reason", to_string(t.halting_reason)}, {"u_sets", sets}};
}

inline json class_report(const CodeClassReport& r) {
    return {{"is_code", r.is_code},
            {"is_prefix", r.is_prefix},
            {"is_suffix", r.is_suffix},
            {"is_bifix", r.is_bifix},
            {"is_maximal_prefix", r.is_maximal_prefix},
            {"is_maximal_suffix", r.is_maximal_suffix},
            {"is_maximal_bifix", r.is_maximal_bifix},
            {"witness", r.witness ? witness(*r.witness) : json(nullptr)}};
}

inline json product_verdict(const ProductVerdict& v, std::size_t cap) {
    return {{"unambiguous", v.unambiguous},
            {"overlap_set", evidence(v.overlap_set, cap)},
            {"cardinality_check", {v.cardinality_check.first, v.cardinality_check.second}}};
}

inline json alt_verdict(const AltVerdict& v, std::size_t cap) {
    return {{"is_alternative", v.is_alternative},
            {"product_code", sp_trace(v.product_code)},
            {"product_unambiguous", product_verdict(v.product_unambiguous, cap)}};
}

inline json strong_verdict(const StrongVerdict& v, std::size_t cap) {
    return {{"is_strong", v.is_strong},
            {"condition1_violations", evidence(v.condition1_violations, cap)},
            {"condition2_violations", evidence(v.condition2_violations, cap)},
            {"char_route",
             {{"x_prefix", v.char_route.x_prefix},
              {"y_suffix", v.char_route.y_suffix},
              {"product_code", v.char_route.product_code}}}};
}

inline json decomposition(const Decomposition& d) { return {{"x", words(d.x)}, {"y", words(d.y)}}; }

inline json stats(const SearchStats& s) {
    return {{"u_tried", s.u_tried}, {"y_tried", s.y_tried}, {"x_tried", s.x_tried}};
}

inline json search_state(const FicSearchState& s) {
    json steps = json::array();
    for (const auto& step : s.steps) {
        json candidates = json::array();
        for (const auto& c : step.candidates)
            candidates.push_back({{"y", words(c.y)}, {"p", words(c.p)}, {"x_tried", c.x_tried}});
        steps.push_back({{"u", step.u},
                         {"s", words(step.s)},
                         {"y_tried", step.y_tried},
                         {"x_tried", step.x_tried},
                         {"candidates", candidates}});
    }
    return {{"w", s.w}, {"t", std::string(1, s.t)}, {"p_w", s.p_w}, {"d_set", s.d_set}, {"steps", steps}};
}

inline json gcd_pretest(const GcdPretest& g) {
    json sizes = json::object();
    for (const auto& [letter, size] : g.block_sizes) sizes[std::string(1, letter)] = size;
    return {{"reject", g.reject}, {"gcd", g.gcd}, {"block_sizes", sizes}, {"d_set", g.d_set}};
}

inline json decision(const DecisionReport& r) {
    json form = {{"kind", to_string(r.form.kind)},
                 {"letter", r.form.letter ? json(std::string(1, *r.form.letter)) : json(nullptr)}};
    return {{"verdict", to_string(r.verdict)},
            {"route", to_string(r.route)},
            {"decomposition", r.decomposition ? decomposition(*r.decomposition) : json(nullptr)},
            {"search_stats", stats(r.search_stats)},
            {"standard_form", form},
            {"gcd", r.gcd ? gcd_pretest(*r.gcd) : json(nullptr)},
            {"search", r.search ? search_state(*r.search) : json(nullptr)}};
}

inline json oracle_result(const OracleResult& r) {
    json decs = json::array();
    for (const auto& d : r.decompositions) decs.push_back(decomposition(d));
    return {{"is_code", r.is_code},
            {"witness", r.witness ? witness(*r.witness) : json(nullptr)},
            {"decompositions", decs}};
}

}  // namespace altcodes::json
