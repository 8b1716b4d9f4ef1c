#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sockpath/errors.hpp"
#include "sockpath/probability.hpp"

using namespace sockpath;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<KTuple> collect(unsigned n) {
    std::vector<KTuple> out;
    auto gen = enumerate_ktuples(n);
    while (auto t = gen.next()) out.push_back(*t);
    return out;
}

}  // namespace

TEST_CASE("Rational basics") {
    CHECK(q("6/9") == q("2/3"));
    CHECK(q("2/3").to_string() == "2/3");
    CHECK(q("4/2").to_string() == "2");
    CHECK(q("0/5").to_string() == "0");
    CHECK(q("-3/6").to_string() == "-1/2");
    CHECK(q("2/3").to_decimal(6) == "0.666667");
    CHECK(q("1").to_decimal(6) == "1.000000");
    CHECK(q("0").to_decimal(6) == "0.000000");
    CHECK(q("1/8").to_decimal(2) == "0.13");  // half away from zero
    CHECK(q("1/945").to_decimal(6) == "0.001058");
    CHECK(q("5/3").to_decimal(0) == "2");
    CHECK(q("-1/3").to_decimal(3) == "-0.333");
    CHECK_THROWS_AS(Rational::parse("1/0"), MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("a/2"), MalformedInputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), MalformedInputError);
    CHECK_THROWS_AS(Rational::parse(""), MalformedInputError);
    CHECK(factorial(10) == 3628800);
    CHECK(parse_natural("0012") == 12);
    CHECK(q("010/02") == 5);
    CHECK_THROWS_AS(parse_natural("1e3"), MalformedInputError);
}

TEST_CASE("decimal rendering is the correct rounding") {
    // |decimal - value| <= 1/2 ulp at the chosen precision, checked exactly.
    for (const char* s : {"2/3", "1/945", "8/63", "999999/1000000", "1/7", "5/11"}) {
        const Rational v = q(s);
        for (unsigned d = 0; d <= 8; ++d) {
            const std::string dec = v.to_decimal(d);
            std::string digits = dec;
            digits.erase(std::remove(digits.begin(), digits.end(), '.'), digits.end());
            BigInt scale = 1;
            for (unsigned i = 0; i < d; ++i) scale *= 10;
            const Rational shown(parse_natural(digits), scale);
            CHECK((shown - v).abs() <= Rational(BigInt(1), 2 * scale));
        }
    }
}

TEST_CASE("tuple_probability examples") {
    CHECK(tuple_probability(KTuple{1}) == 1);
    CHECK(tuple_probability(KTuple{2, 1}) == q("2/3"));
    CHECK(tuple_probability(KTuple{1, 1}) == q("1/3"));
    CHECK(tuple_probability(KTuple{5, 4, 3, 2, 1}) == q("8/63"));
    CHECK(tuple_probability(KTuple{1, 1, 1, 1, 1}) == q("1/945"));
    CHECK(tuple_probability(KTuple{1, 2}) == 0);
    CHECK(tuple_probability(KTuple{3, 1, 1}) == 0);
}

TEST_CASE("permutation_count examples") {
    CHECK(permutation_count(KTuple{1}) == 2);
    CHECK(permutation_count(KTuple{2, 1}) == 16);
    CHECK(permutation_count(KTuple{2, 4, 3, 2, 1}) == 184320);
    CHECK(permutation_count(KTuple{5, 4, 3, 2, 1}) == 460800);
    CHECK_THROWS_AS(permutation_count(KTuple{1, 2}), ValidityError);
    CHECK_THROWS_AS(ProbabilityContext(3).permutation_count(KTuple{2, 1}), std::invalid_argument);
}

TEST_CASE("Theorem agrees with the exhaustive process oracle for n <= 4") {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto counts = oracle::process_counts(n);
        const ProbabilityContext ctx(n);
        std::set<std::vector<int>> keys;
        for (const auto& [k, c] : counts) {
            const KTuple t(k);
            keys.insert(k);
            CHECK(ctx.permutation_count(t) == c);
            CHECK(ctx.probability(t) == Rational(BigInt(c), ctx.orderings()));
        }
        std::set<std::vector<int>> enumerated;
        for (const auto& t : collect(n)) enumerated.emplace(t.entries().begin(), t.entries().end());
        CHECK(keys == enumerated);
    }
}

TEST_CASE("enumerate_ktuples examples") {
    CHECK(collect(1) == std::vector<KTuple>{KTuple{1}});
    CHECK(collect(2) == std::vector<KTuple>{KTuple{1, 1}, KTuple{2, 1}});
    CHECK(collect(5).size() == 42);
    CHECK_THROWS_AS(enumerate_ktuples(15), ResourceLimitError);
}

TEST_CASE("enumerate_ktuples is lexicographic, valid, and matches the path route") {
    const auto c = oracle::catalan_upto(12);
    for (unsigned n = 1; n <= 10; ++n) {
        const auto tuples = collect(n);
        CHECK(BigInt(tuples.size()) == c[n]);
        CHECK(std::is_sorted(tuples.begin(), tuples.end()));
        CHECK(std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end());
        for (const auto& t : tuples) CHECK(validate_ktuple(t));

        std::vector<KTuple> via_paths;
        auto paths = dyck_paths(n);
        while (auto p = paths.next()) via_paths.push_back(ktuple_of_path(*p));
        std::sort(via_paths.begin(), via_paths.end());
        CHECK(via_paths == tuples);
    }
}

TEST_CASE("full_distribution examples and normalization") {
    const auto t1 = full_distribution(1);
    CHECK(t1.entries.size() == 1);
    CHECK(t1.entries.at(KTuple{1}) == 1);

    const auto t2 = full_distribution(2);
    CHECK(t2.entries.size() == 2);
    CHECK(t2.entries.at(KTuple{1, 1}) == q("1/3"));
    CHECK(t2.entries.at(KTuple{2, 1}) == q("2/3"));

    const auto t5 = full_distribution(5);
    CHECK(t5.entries.size() == 42);
    CHECK(t5.entries.at(KTuple{5, 4, 3, 2, 1}) == q("8/63"));
    for (unsigned n = 1; n <= 9; ++n) CHECK(full_distribution(n).total() == 1);
}

TEST_CASE("probability depends only on the multiset of entries") {
    const auto table = full_distribution(6);
    std::size_t compared = 0;
    for (const auto& [t, p] : table.entries) {
        std::vector<int> perm(t.entries().begin(), t.entries().end());
        std::sort(perm.begin(), perm.end());
        do {
            const KTuple other(perm);
            if (validate_ktuple(other)) {
                CHECK(tuple_probability(other) == p);
                ++compared;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CHECK(compared > table.entries.size());
}

TEST_CASE("marginal_xk examples") {
    auto s = marginal_xk(1, 1);
    CHECK(s.mean == 1);
    CHECK(marginal_xk(1, 2).mean == 0);

    s = marginal_xk(2, 2);
    CHECK(s.mean == q("4/3"));
    CHECK(s.law == HeightLaw{{0, q("1/3")}, {2, q("2/3")}});
    CHECK(s.variance == q("8/9"));

    CHECK_THROWS_AS(marginal_xk(2, 0), std::out_of_range);
    CHECK_THROWS_AS(marginal_xk(2, 5), std::out_of_range);
    CHECK_THROWS_AS(marginal_xk(20, 1), ResourceLimitError);
}

TEST_CASE("marginal laws for n = 5 match frozen brute-force values") {
    // Frozen from an independent enumeration of all 113400 sock-type orderings.
    struct Expected {
        unsigned k;
        HeightLaw law;
        const char* mean;
        const char* variance;
    };
    const std::vector<Expected> expected{
        {1, {{1, q("1")}}, "1", "0"},
        {2, {{0, q("1/9")}, {2, q("8/9")}}, "16/9", "32/81"},
        {3, {{1, q("1/3")}, {3, q("2/3")}}, "7/3", "8/9"},
        {4, {{0, q("1/21")}, {2, q("4/7")}, {4, q("8/21")}}, "8/3", "80/63"},
        {5, {{1, q("5/21")}, {3, q("40/63")}, {5, q("8/63")}}, "25/9", "800/567"},
        {6, {{0, q("1/21")}, {2, q("4/7")}, {4, q("8/21")}}, "8/3", "80/63"},
        {9, {{1, q("1")}}, "1", "0"},
        {10, {{0, q("1")}}, "0", "0"},
    };
    for (const auto& e : expected) {
        const auto s = marginal_xk(5, e.k);
        CHECK(s.law == e.law);
        CHECK(s.mean == q(e.mean));
        CHECK(s.variance == q(e.variance));
    }
}

TEST_CASE("marginal invariants") {
    for (unsigned n = 1; n <= 7; ++n) {
        for (unsigned k = 1; k <= 2 * n; ++k) {
            const auto s = marginal_xk(n, k);
            Rational mass{0};
            Rational mean{0};
            for (const auto& [h, p] : s.law) {
                mass += p;
                mean += p * Rational(h);
                CHECK(h % 2 == static_cast<int>(k % 2));
                CHECK(h >= 0);
                CHECK(h <= static_cast<int>(std::min(k, 2 * n - k)));
            }
            CHECK(mass == 1);
            CHECK(mean == s.mean);
        }
        CHECK(marginal_xk(n, 2 * n).law == HeightLaw{{0, Rational(1)}});
        CHECK(marginal_xk(n, 1).law == HeightLaw{{1, Rational(1)}});
    }
}

TEST_CASE("max_distribution") {
    CHECK(max_distribution(1) == HeightLaw{{1, Rational(1)}});
    CHECK(max_distribution(2) == HeightLaw{{1, q("1/3")}, {2, q("2/3")}});
    CHECK(max_distribution(5) == HeightLaw{{1, q("1/945")},
                                           {2, q("16/189")},
                                           {3, q("8/21")},
                                           {4, q("128/315")},
                                           {5, q("8/63")}});
    for (unsigned n = 1; n <= 8; ++n) {
        Rational mass{0};
        for (const auto& [h, p] : max_distribution(n)) mass += p;
        CHECK(mass == 1);
    }
    CHECK_THROWS_AS(max_distribution(15), ResourceLimitError);
}
