#pragma once

// Benchmark harness for decide_alt_induced over generated instances.
//
// Grid specs are ';'-separated `key=v1,v2,...` entries:
//   kind    generator kinds (default alt-induced; "hard" = planted hard)
//   k       alphabet sizes (default 2)
//   size    instance sizes; for kind=hard the first-letter block size n
//   maxlen  maximum word lengths (default 6)
//   reps    repetitions per cell (default 1)
//   seed    base seed (default 1)
// The cells are the cartesian product kind x k x size x maxlen. An empty
// spec is an empty grid.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "altcodes/budget.hpp"
#include "altcodes/errors.hpp"
#include "altcodes/fic.hpp"
#include "altcodes/generate.hpp"

namespace altcodes {

struct BenchCell {
    GenKind kind = GenKind::AltInduced;
    std::size_t k = 2;
    std::size_t size = 0;
    std::size_t max_length = 6;
};

struct BenchGrid {
    std::vector<BenchCell> cells;
    std::size_t reps = 1;
    std::uint64_t seed = 1;
};

struct BenchRecord {
    std::string id;
    std::string kind;
    std::uint64_t seed = 0;
    std::size_t k = 0;
    std::size_t z_size = 0;
    /// Shortest word length, min Z.
    std::size_t m = 0;
    /// Smallest first-letter block size.
    std::size_t n = 0;
    double wall_ms = 0;
    std::uint64_t candidates = 0;
    /// AltInduced, NotAltInduced, or "budget" when the search gave up.
    std::string verdict;
    /// Planted decomposition known; a completed run must say AltInduced.
    bool planted = false;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view bench_csv_header = "id,kind,seed,k,z_size,m,n,wall_ms,candidates,verdict,planted";

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = s.find(sep, start);
        out.emplace_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) return out;
        start = end + 1;
    }
}

template <class T>
T parse_number(std::string_view s, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw contract_violation(std::string("invalid ") + what + " '" + std::string(s) + "'");
    return value;
}

}  // namespace detail

inline BenchGrid parse_bench_grid(std::string_view spec) {
    BenchGrid grid;
    if (spec.find_first_not_of(" \t") == std::string_view::npos) return grid;

    std::map<std::string, std::vector<std::string>> entries;
    for (const auto& part : detail::split(spec, ';')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw contract_violation("grid entry '" + part + "' lacks '='");
        const std::string key = part.substr(0, eq);
        if (key != "kind" && key != "k" && key != "size" && key != "maxlen" && key != "reps" && key != "seed")
            throw contract_violation("unknown grid key '" + key + "'");
        entries[key] = detail::split(std::string_view(part).substr(eq + 1), ',');
    }
    if (!entries.contains("size")) throw contract_violation("grid needs a size= entry");

    auto numbers = [&](const std::string& key, std::size_t fallback) {
        std::vector<std::size_t> out;
        if (!entries.contains(key)) return std::vector<std::size_t>{fallback};
        for (const auto& v : entries[key]) out.push_back(detail::parse_number<std::size_t>(v, key.c_str()));
        return out;
    };
    std::vector<GenKind> kinds;
    for (const auto& v : entries.contains("kind") ? entries["kind"] : std::vector<std::string>{"alt-induced"}) {
        const auto kind = parse_gen_kind(v);
        if (!kind) throw contract_violation("unknown generator kind '" + v + "'");
        kinds.push_back(*kind);
    }
    if (entries.contains("reps")) grid.reps = detail::parse_number<std::size_t>(entries["reps"].at(0), "reps");
    if (entries.contains("seed")) grid.seed = detail::parse_number<std::uint64_t>(entries["seed"].at(0), "seed");

    for (GenKind kind : kinds)
        for (std::size_t k : numbers("k", 2))
            for (std::size_t size : numbers("size", 0))
                for (std::size_t maxlen : numbers("maxlen", 6)) grid.cells.push_back({kind, k, size, maxlen});
    return grid;
}

inline std::string to_csv_row(const BenchRecord& r) {
    char wall[64];
    const auto res = std::to_chars(wall, wall + sizeof wall, r.wall_ms);
    std::ostringstream os;
    os << r.id << ',' << r.kind << ',' << r.seed << ',' << r.k << ',' << r.z_size << ',' << r.m << ',' << r.n << ','
       << std::string_view(wall, static_cast<std::size_t>(res.ptr - wall)) << ',' << r.candidates << ','
       << r.verdict << ',' << (r.planted ? 1 : 0);
    return os.str();
}

inline BenchRecord parse_csv_row(std::string_view line) {
    const auto f = detail::split(line, ',');
    if (f.size() != 11) throw contract_violation("bench row must have 11 fields");
    BenchRecord r;
    r.id = f[0];
    r.kind = f[1];
    r.seed = detail::parse_number<std::uint64_t>(f[2], "seed");
    r.k = detail::parse_number<std::size_t>(f[3], "k");
    r.z_size = detail::parse_number<std::size_t>(f[4], "z_size");
    r.m = detail::parse_number<std::size_t>(f[5], "m");
    r.n = detail::parse_number<std::size_t>(f[6], "n");
    r.wall_ms = detail::parse_number<double>(f[7], "wall_ms");
    r.candidates = detail::parse_number<std::uint64_t>(f[8], "candidates");
    r.verdict = f[9];
    r.planted = detail::parse_number<int>(f[10], "planted") != 0;
    return r;
}

/// Measures decide_alt_induced on one language. Budget exhaustion is
/// recorded as verdict "budget", never raised.
inline BenchRecord bench_language(const std::string& id, const FiniteLanguage& z, const SearchBudget& budget) {
    BenchRecord r;
    r.id = id;
    r.kind = "file";
    r.k = z.alphabet().size();
    r.z_size = z.size();
    r.m = z.min_length();
    const auto sizes = partition_by_first_letter(z).block_sizes();
    r.n = std::min_element(sizes.begin(), sizes.end(), [](auto& a, auto& b) { return a.second < b.second; })->second;

    const auto start = std::chrono::steady_clock::now();
    try {
        const DecisionReport report = decide_alt_induced(z, {budget, false});
        r.verdict = to_string(report.verdict);
        r.candidates = report.search_stats.candidates();
    } catch (const budget_exceeded&) {
        r.verdict = "budget";
        r.candidates = budget.max_candidates;
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline BenchRecord bench_instance(const std::string& id, const GenParams& params, const SearchBudget& budget) {
    const GeneratedInstance inst = gen_instance(params);
    BenchRecord r = bench_language(id, inst.language, budget);
    r.kind = to_string(params.kind);
    r.seed = params.seed;
    r.planted = inst.planted.has_value();
    return r;
}

inline std::vector<BenchRecord> run_bench(const BenchGrid& grid, const SearchBudget& budget) {
    std::vector<BenchRecord> records;
    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
        const BenchCell& cell = grid.cells[c];
        for (std::size_t rep = 0; rep < grid.reps; ++rep) {
            const GenParams params{cell.kind, cell.k, cell.size, cell.max_length, grid.seed + c * 1'000'003 + rep};
            records.push_back(
                bench_instance("c" + std::to_string(c) + "r" + std::to_string(rep), params, budget));
        }
    }
    return records;
}

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
    os << bench_csv_header << '\n';
    for (const auto& r : records) os << to_csv_row(r) << '\n';
}

/// Runs the grid and writes the CSV to `out_path`.
inline std::vector<BenchRecord> bench_fic(const BenchGrid& grid, const std::string& out_path,
                                          const SearchBudget& budget = {}) {
    std::ofstream out(out_path);
    if (!out) throw contract_violation("cannot write '" + out_path + "'");
    auto records = run_bench(grid, budget);
    write_bench_csv(out, records);
    if (!out) throw contract_violation("failed writing '" + out_path + "'");
    return records;
}

}  // namespace altcodes
