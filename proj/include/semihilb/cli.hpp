#pragma once

#include "semihilb/corpus.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace semihilb::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

/// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_not_applicable = 2;

struct Command {
    std::string verb;   // info, apery, hilbert, strata, check, residue-table, construct-sp, search
    std::string target; // check: thm-e3, thm-e4, apj1, lemma-r0, c3, ap24, symmetric, delta, corpus
    std::optional<std::vector<Int>> gens; // integer list argument (generators, or S_p parameters)
    std::optional<Int> e;                 // residue-table
    Format format = Format::Text;
    std::optional<int> max_level;
    std::optional<std::pair<Int, Int>> e_range;
    std::optional<int> v_offset;
    std::optional<Int> gen_bound;
    int workers = 1;
    std::uint64_t seed = default_seed;
};

struct Report {
    Json payload;
    std::vector<std::string> warnings;
    int exit_code = exit_ok;
    std::string csv; // search in csv format
};

/// argv without the program name. Throws Error{UsageError} naming the
/// offending flag or argument.
Command parse(const std::vector<std::string>& args);

/// Throws library errors for invalid input.
Report execute(const Command& cmd);

/// Deterministic rendering of a report. Hilbert vectors print as
/// "[1,10,9,11,12,13->]" in text mode.
std::string render(const Report& r, Format f);

/// Full pipeline: parse, execute, render to out; errors go to err.
/// Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

} // namespace semihilb::cli
