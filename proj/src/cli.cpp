#include "sockpath/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sockpath/dyck_path.hpp"
#include "sockpath/errors.hpp"
#include "sockpath/process.hpp"

namespace sockpath::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string_view strip_parens(std::string_view s, std::string_view what) {
    s = trim(s);
    const bool open = !s.empty() && s.front() == '(';
    const bool close = !s.empty() && s.back() == ')';
    if (open != close || (open && s.size() < 2)) {
        throw MalformedInputError(std::string(what) + " literal has unbalanced parentheses: '" + std::string(s) + "'");
    }
    if (open) s = s.substr(1, s.size() - 2);
    return s;
}

int parse_int_token(std::string_view token, int min_value, std::string_view what) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || value < min_value) {
        throw MalformedInputError("bad " + std::string(what) + " token '" + std::string(token) + "'");
    }
    return value;
}

std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

KTuple parse_tuple_literal(std::string_view text) {
    const std::string_view body = strip_parens(text, "tuple");
    if (trim(body).empty()) throw MalformedInputError("empty tuple literal");
    std::vector<int> k;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = body.find(',', start);
        const std::string_view token = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
        k.push_back(parse_int_token(token, 1, "tuple"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return KTuple(std::move(k));
}

std::vector<int> parse_path_literal(std::string_view text) {
    const std::string_view body = strip_parens(text, "path");
    std::vector<int> x;
    std::size_t i = 0;
    std::size_t separators = 0;
    while (i < body.size()) {
        const char c = body[i];
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (c == ',') ++separators;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < body.size() && body[j] != ',' && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
        if (!x.empty() && separators > 1) throw MalformedInputError("empty token in path literal");
        x.push_back(parse_int_token(body.substr(i, j - i), 0, "path"));
        separators = 0;
        i = j;
    }
    if (x.empty()) throw MalformedInputError("empty path literal");
    return x;
}

OutputRecord make_record(const KTuple& t, const ProbabilityContext& ctx, unsigned precision) {
    OutputRecord rec{t, ctx.probability(t), {}, BigInt(0), {}};
    rec.probability_decimal = rec.probability.to_decimal(precision);
    if (validate_ktuple(t)) {
        rec.permutation_count = ctx.permutation_count(t);
        rec.path = to_vector(path_of_ktuple(t).heights());
    }
    return rec;
}

std::vector<OutputRecord> table_records(const DistributionTable& table, TableSort sort, unsigned precision) {
    const ProbabilityContext ctx(table.n);
    std::vector<OutputRecord> rows;
    rows.reserve(table.entries.size());
    for (const auto& [t, p] : table.entries) rows.push_back(make_record(t, ctx, precision));
    if (sort == TableSort::prob) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const OutputRecord& a, const OutputRecord& b) { return a.probability > b.probability; });
    }
    return rows;
}

std::string table_to_csv(const std::vector<OutputRecord>& rows) {
    std::string out(kTableCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += '"' + to_literal(r.tuple) + "\"," + r.probability.to_string() + ',' + r.probability_decimal + ',' +
               r.permutation_count.str() + '\n';
    }
    return out;
}

namespace {

Json record_json(const OutputRecord& r) {
    Json j;
    j["tuple"] = to_vector(r.tuple.entries());
    j["probability_exact"] = r.probability.to_string();
    j["probability_decimal"] = r.probability_decimal;
    j["permutation_count"] = r.permutation_count.str();
    j["path"] = r.path;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Splits one CSV line, honoring double-quoted fields (no embedded quotes needed here).
std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw MalformedInputError("unterminated quote in CSV line: " + std::string(line));
    return fields;
}

}  // namespace

std::string table_to_json(unsigned n, const std::vector<OutputRecord>& rows) {
    Json j;
    j["n"] = n;
    j["generator"] = "exact";
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(record_json(r));
    j["rows"] = std::move(arr);
    j["metadata"] = Json::object();
    return dump(j);
}

std::vector<OutputRecord> parse_table_csv(std::string_view text) {
    std::vector<OutputRecord> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kTableCsvHeader) {
        throw MalformedInputError("CSV table must start with header '" + std::string(kTableCsvHeader) + "'");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 4) throw MalformedInputError("CSV row must have 4 fields: " + line);
        rows.push_back(OutputRecord{parse_tuple_literal(f[0]), Rational::parse(f[1]), f[2], parse_natural(f[3]), {}});
    }
    return rows;
}

std::vector<OutputRecord> parse_table_json(std::string_view text) {
    std::vector<OutputRecord> rows;
    try {
        const Json j = Json::parse(text);
        for (const auto& r : j.at("rows")) {
            OutputRecord rec{KTuple(r.at("tuple").get<std::vector<int>>()),
                             Rational::parse(r.at("probability_exact").get<std::string>()),
                             r.at("probability_decimal").get<std::string>(),
                             parse_natural(r.at("permutation_count").get<std::string>()),
                             r.at("path").get<std::vector<int>>()};
            rows.push_back(std::move(rec));
        }
    } catch (const Json::exception& e) {
        throw MalformedInputError(std::string("bad JSON table: ") + e.what());
    }
    return rows;
}

std::string render_ascii(const DyckPath& p) {
    static constexpr std::string_view kMark = "•";
    const auto x = p.heights();
    std::string out;
    for (int r = p.max_height(); r >= 1; --r) {
        std::string row;
        std::size_t pending_blanks = 0;
        for (int h : x) {
            if (h >= r) {
                row.append(pending_blanks, ' ');
                pending_blanks = 0;
                row += kMark;
            } else {
                ++pending_blanks;
            }
        }
        out += row;
        out += '\n';
    }
    return out;
}

Environment environment_from_process() {
    Environment env;
    if (const char* v = std::getenv("SOCKPATH_THREADS"); v != nullptr && *v != '\0') {
        const std::string_view s(v);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw MalformedInputError("SOCKPATH_THREADS must be a non-negative integer, got '" + std::string(s) + "'");
        }
        env.threads = value;
    }
    return env;
}

namespace {

enum class Format { text, csv, json };

struct GlobalOptions {
    std::string format;  // empty = command default
    unsigned precision = kDefaultPrecision;
    std::optional<unsigned> max_n;
};

Format format_or(const GlobalOptions& g, Format fallback) {
    if (g.format.empty()) return fallback;
    if (g.format == "text") return Format::text;
    if (g.format == "csv") return Format::csv;
    return Format::json;
}

unsigned cap_or(const GlobalOptions& g, unsigned fallback) { return g.max_n.value_or(fallback); }

int cmd_prob(const GlobalOptions& g, const std::string& literal, std::ostream& out) {
    const KTuple t = parse_tuple_literal(literal);
    const ProbabilityContext ctx(t.n());
    const OutputRecord rec = make_record(t, ctx, g.precision);
    if (format_or(g, Format::text) == Format::json) {
        out << dump(record_json(rec));
    } else if (format_or(g, Format::text) == Format::csv) {
        out << table_to_csv({rec});
    } else {
        out << rec.probability.to_string() << " (" << rec.probability_decimal << ")\n";
    }
    return kExitOk;
}

int cmd_table(const GlobalOptions& g, unsigned n, const std::string& sort, std::ostream& out) {
    const auto table = full_distribution(n, cap_or(g, kDefaultEnumerationCap));
    const auto rows = table_records(table, sort == "prob" ? TableSort::prob : TableSort::lex, g.precision);
    if (format_or(g, Format::csv) == Format::json) {
        out << table_to_json(n, rows);
    } else {
        out << table_to_csv(rows);
    }
    return kExitOk;
}

int cmd_path(const GlobalOptions& g, const std::string& literal, bool ascii, std::ostream& out) {
    const KTuple t = parse_tuple_literal(literal);
    const DyckPath p = path_of_ktuple(t);
    if (format_or(g, Format::text) == Format::json) {
        Json j;
        j["tuple"] = to_vector(t.entries());
        j["path"] = to_vector(p.heights());
        out << dump(j);
        return kExitOk;
    }
    out << to_string(p) << '\n';
    if (ascii) out << render_ascii(p);
    return kExitOk;
}

int cmd_ktuple(const GlobalOptions& g, const std::vector<std::string>& tokens, std::ostream& out) {
    std::string joined;
    for (const auto& tok : tokens) joined += tok + " ";
    const DyckPath p(parse_path_literal(joined));
    const KTuple t = ktuple_of_path(p);
    if (format_or(g, Format::text) == Format::json) {
        Json j;
        j["path"] = to_vector(p.heights());
        j["tuple"] = to_vector(t.entries());
        j["down_steps"] = down_step_indices(p);
        out << dump(j);
        return kExitOk;
    }
    out << to_string(t) << '\n';
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, unsigned n, const Environment& env, std::ostream& out) {
    BruteForceOptions opts;
    opts.cap = cap_or(g, kDefaultBruteForceCap);
    opts.workers = env.threads;
    const auto tallies = brute_force_counts(n, opts);
    const ProbabilityContext ctx(n);

    struct Line {
        KTuple tuple;
        BigInt tally;
        BigInt expected;
        bool pass;
    };
    std::vector<Line> lines;
    std::size_t checked = 0;
    bool all_pass = true;
    auto gen = enumerate_ktuples(n, std::max(n, cap_or(g, kDefaultEnumerationCap)));
    while (auto t = gen.next()) {
        const auto it = tallies.find(*t);
        const BigInt tally = it == tallies.end() ? BigInt(0) : BigInt(it->second);
        const BigInt expected = ctx.permutation_count(*t);
        lines.push_back({*t, tally, expected, tally == expected});
        all_pass = all_pass && lines.back().pass;
        ++checked;
    }
    BigInt total = 0;
    for (const auto& [t, c] : tallies) {
        total += c;
        if (!validate_ktuple(t)) {
            lines.push_back({t, BigInt(c), BigInt(0), false});
            all_pass = false;
        }
    }
    const bool total_ok = total == ctx.orderings();
    all_pass = all_pass && total_ok;

    if (format_or(g, Format::text) == Format::json) {
        Json j;
        j["n"] = n;
        j["generator"] = "exact";
        Json arr = Json::array();
        for (const auto& l : lines) {
            Json r;
            r["tuple"] = to_vector(l.tuple.entries());
            r["tally"] = l.tally.str();
            r["expected"] = l.expected.str();
            r["pass"] = l.pass;
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        j["metadata"] = Json{{"orderings", ctx.orderings().str()},
                             {"tally_total", total.str()},
                             {"tuples_checked", checked},
                             {"pass", all_pass}};
        out << dump(j);
    } else {
        for (const auto& l : lines) {
            out << (l.pass ? "PASS " : "FAIL ") << to_literal(l.tuple) << " tally=" << l.tally.str()
                << " expected=" << l.expected.str() << '\n';
        }
        if (!total_ok) out << "FAIL tally total " << total.str() << " != " << ctx.orderings().str() << '\n';
        out << (all_pass ? "PASS" : "FAIL") << ": " << checked << " tuples checked against " << ctx.orderings().str()
            << " orderings\n";
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const GlobalOptions& g, unsigned n, std::uint64_t trials, std::uint64_t seed, const Environment& env,
                 std::ostream& out, std::ostream& err) {
    SimulationOptions opts;
    opts.cap = cap_or(g, kDefaultSimulationCap);
    opts.workers = env.threads;
    const auto report = monte_carlo(n, trials, seed, opts);
    const unsigned prec = g.precision;
    const ProbabilityContext ctx(n);

    switch (format_or(g, Format::text)) {
    case Format::json: {
        Json j;
        j["n"] = n;
        j["generator"] = "simulation";
        Json arr = Json::array();
        for (const auto& r : report.comparison) {
            Json row = record_json(make_record(r.tuple, ctx, prec));
            row["count"] = r.count;
            row["empirical"] = r.empirical.to_string();
            row["empirical_decimal"] = r.empirical.to_decimal(prec);
            row["abs_deviation"] = r.deviation.to_string();
            row["abs_deviation_decimal"] = r.deviation.to_decimal(prec);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        j["metadata"] = Json{{"seed", seed},
                             {"trials", trials},
                             {"max_abs_deviation", report.max_deviation.to_string()},
                             {"max_abs_deviation_decimal", report.max_deviation.to_decimal(prec)}};
        out << dump(j);
        break;
    }
    case Format::csv:
        out << "tuple,count,empirical,empirical_decimal,probability,probability_decimal,abs_deviation,"
               "abs_deviation_decimal\n";
        for (const auto& r : report.comparison) {
            out << '"' << to_literal(r.tuple) << "\"," << r.count << ',' << r.empirical.to_string() << ','
                << r.empirical.to_decimal(prec) << ',' << r.exact.to_string() << ',' << r.exact.to_decimal(prec)
                << ',' << r.deviation.to_string() << ',' << r.deviation.to_decimal(prec) << '\n';
        }
        err << "max_abs_deviation=" << report.max_deviation.to_decimal(prec) << '\n';
        break;
    case Format::text:
        out << "n=" << n << " trials=" << trials << " seed=" << seed << '\n';
        out << "tuple count empirical exact abs_deviation\n";
        for (const auto& r : report.comparison) {
            out << to_literal(r.tuple) << ' ' << r.count << ' ' << r.empirical.to_decimal(prec) << ' '
                << r.exact.to_decimal(prec) << ' ' << r.deviation.to_decimal(prec) << '\n';
        }
        out << "max_abs_deviation: " << report.max_deviation.to_decimal(prec) << " ("
            << report.max_deviation.to_string() << ")\n";
        break;
    }
    return kExitOk;
}

std::string law_text(const HeightLaw& law) {
    std::string s = "{";
    for (const auto& [h, p] : law) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(h) + ": " + p.to_string();
    }
    return s + "}";
}

int cmd_stats(const GlobalOptions& g, unsigned n, const std::string& what, std::optional<unsigned> k, std::ostream& out,
              std::ostream& err) {
    const unsigned cap = cap_or(g, kDefaultEnumerationCap);
    HeightLaw law;
    Moments m;
    std::string label;
    if (what == "xk") {
        if (!k) {
            err << "error: --what xk requires --k\n";
            return kExitUsage;
        }
        if (*k < 1 || *k > 2 * n) {
            err << "error: --k " << *k << " outside 1.." << 2 * n << '\n';
            return kExitUsage;
        }
        auto stat = marginal_xk(n, *k, cap);
        law = std::move(stat.law);
        m = {std::move(stat.mean), std::move(stat.variance)};
        label = "X_" + std::to_string(*k);
    } else {
        law = max_distribution(n, cap);
        m = moments_of(law);
        label = "max";
    }

    const unsigned prec = g.precision;
    switch (format_or(g, Format::text)) {
    case Format::json: {
        Json j;
        j["n"] = n;
        j["statistic"] = what;
        if (k && what == "xk") j["k"] = *k;
        Json arr = Json::array();
        for (const auto& [h, p] : law) {
            arr.push_back(Json{{"height", h}, {"probability", p.to_string()}, {"probability_decimal", p.to_decimal(prec)}});
        }
        j["law"] = std::move(arr);
        j["mean"] = m.mean.to_string();
        j["mean_decimal"] = m.mean.to_decimal(prec);
        j["variance"] = m.variance.to_string();
        j["variance_decimal"] = m.variance.to_decimal(prec);
        out << dump(j);
        break;
    }
    case Format::csv:
        out << "height,probability,probability_decimal\n";
        for (const auto& [h, p] : law) out << h << ',' << p.to_string() << ',' << p.to_decimal(prec) << '\n';
        break;
    case Format::text:
        out << "n=" << n << ' ' << label << '\n';
        out << "law: " << law_text(law) << '\n';
        out << "mean: " << m.mean.to_string() << " (" << m.mean.to_decimal(prec) << ")\n";
        out << "variance: " << m.variance.to_string() << " (" << m.variance.to_decimal(prec) << ")\n";
        break;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Exact combinatorics of the sock-sorting process"};
    app.name("sockpath");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    unsigned max_n = 0;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--precision", g.precision, "Digits after the decimal point")->check(CLI::Range(0u, 60u));
    auto* max_n_opt = app.add_option("--max-n", max_n, "Override the n cap of the chosen command")
                          ->check(CLI::PositiveNumber);

    std::string tuple_literal;
    bool ascii = false;
    std::vector<std::string> path_tokens;
    unsigned n = 0;
    std::string sort = "lex";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string what = "xk";
    unsigned k_value = 0;

    auto* prob = app.add_subcommand("prob", "Exact probability of a k-tuple");
    prob->add_option("tuple", tuple_literal, "e.g. 2,4,3,2,1")->required();

    auto* table = app.add_subcommand("table", "Probability of every valid k-tuple of order n");
    table->add_option("n", n)->required();
    table->add_option("--sort", sort)->check(CLI::IsMember({"lex", "prob"}));

    auto* path = app.add_subcommand("path", "Dyck path of a k-tuple");
    path->add_option("tuple", tuple_literal)->required();
    path->add_flag("--ascii", ascii, "Draw the path as a mountain");

    auto* ktuple = app.add_subcommand("ktuple", "k-tuple of a Dyck path");
    ktuple->add_option("heights", path_tokens, "e.g. 1,2,1,0")->required();

    auto* verify = app.add_subcommand("verify", "Check the counting formula against every sock ordering");
    verify->add_option("n", n)->required();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the k-tuple law");
    simulate->add_option("n", n)->required();
    simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed);

    auto* stats = app.add_subcommand("stats", "Exact law of X_k or of the maximum height");
    stats->add_option("n", n)->required();
    stats->add_option("--what", what)->check(CLI::IsMember({"xk", "max"}));
    auto* k_opt = stats->add_option("--k", k_value);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (max_n_opt->count() > 0) {
        g.max_n = max_n;
        err << "warning: --max-n overrides the default cap; enumeration and brute force grow combinatorially\n";
    }

    try {
        if (*prob) return cmd_prob(g, tuple_literal, out);
        if (*table) return cmd_table(g, n, sort, out);
        if (*path) return cmd_path(g, tuple_literal, ascii, out);
        if (*ktuple) return cmd_ktuple(g, path_tokens, out);
        if (*verify) return cmd_verify(g, n, env, out);
        if (*simulate) return cmd_simulate(g, n, trials, seed, env, out, err);
        if (*stats) {
            return cmd_stats(g, n, what, k_opt->count() > 0 ? std::optional<unsigned>(k_value) : std::nullopt, out,
                             err);
        }
    } catch (const MalformedInputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const ValidityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace sockpath::cli
