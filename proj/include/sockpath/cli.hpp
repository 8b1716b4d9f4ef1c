#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sockpath/exact_prob.hpp"
#include "sockpath/ktuple.hpp"
#include "sockpath/probability.hpp"

namespace sockpath::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  // verify found a disagreement; also unexpected internal errors
    kExitUsage = 2,
    kExitResourceCap = 3,
    kExitDomain = 4,
};

inline constexpr unsigned kDefaultPrecision = 6;

/// Comma-separated positive integers, optionally wrapped in parentheses;
/// whitespace is ignored. Throws MalformedInputError naming the bad token.
KTuple parse_tuple_literal(std::string_view text);

/// Heights separated by commas and/or whitespace, optional parentheses.
/// Only checks that every token is a non-negative integer.
std::vector<int> parse_path_literal(std::string_view text);

/// One row of a serialized distribution table.
struct OutputRecord {
    KTuple tuple;
    ExactProb probability;
    std::string probability_decimal;
    BigInt permutation_count;
    std::vector<int> path;  // empty when the tuple is not realizable
};

OutputRecord make_record(const KTuple& t, const ProbabilityContext& ctx, unsigned precision);

enum class TableSort { lex, prob };

/// Rows of `table` in the requested order. Probability order is descending,
/// ties broken by lexicographic tuple order.
std::vector<OutputRecord> table_records(const DistributionTable& table, TableSort sort, unsigned precision);

inline constexpr std::string_view kTableCsvHeader = "tuple,probability,probability_decimal,count";

std::string table_to_csv(const std::vector<OutputRecord>& rows);
std::string table_to_json(unsigned n, const std::vector<OutputRecord>& rows);

/// Inverse of table_to_csv / table_to_json (path is recovered from JSON only).
/// Throws MalformedInputError on schema violations.
std::vector<OutputRecord> parse_table_csv(std::string_view text);
std::vector<OutputRecord> parse_table_json(std::string_view text);

/// Column-per-draw mountain; row r (top row = max height) has a mark at
/// every index i with x_i >= r. Trailing blanks are trimmed.
std::string render_ascii(const DyckPath& p);

struct Environment {
    unsigned threads = 0;  // 0 = auto
};

/// Reads SOCKPATH_THREADS; throws MalformedInputError when it is not a
/// non-negative integer.
Environment environment_from_process();

/// Runs one command line (without argv[0]). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace sockpath::cli
