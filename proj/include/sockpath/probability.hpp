#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sockpath/dyck_path.hpp"
#include "sockpath/exact_prob.hpp"
#include "sockpath/ktuple.hpp"

namespace sockpath {

/// Factorials and powers for one n, computed once and reused across tuples.
class ProbabilityContext {
public:
    explicit ProbabilityContext(unsigned n);

    unsigned n() const noexcept { return n_; }

    /// (2n)!, the size of the sample space of sock orderings.
    const BigInt& orderings() const noexcept { return orderings_; }

    /// 2^n * n! * prod k_i. Throws ValidityError for unrealizable tuples and
    /// std::invalid_argument when t.n() != n().
    BigInt permutation_count(const KTuple& t) const;

    /// permutation_count(t) / (2n)!, or exactly 0 when t is unrealizable.
    ExactProb probability(const KTuple& t) const;

private:
    unsigned n_;
    BigInt prefactor_;  // 2^n * n!
    BigInt orderings_;
};

ExactProb tuple_probability(const KTuple& t);
BigInt permutation_count(const KTuple& t);

/// Every valid k-tuple of order n, once each, in lexicographic order.
///
/// Built by direct recursion on the realizability rule: k_1 ranges over 1..n,
/// k_{i+1} over max(1, k_i - 1)..n - i, and k_n is forced to 1.
class KTupleGenerator {
public:
    explicit KTupleGenerator(unsigned n, unsigned cap = kDefaultEnumerationCap);

    std::optional<KTuple> next();

private:
    bool advance();

    std::vector<int> k_;
    bool started_ = false;
    bool done_ = false;
};

inline KTupleGenerator enumerate_ktuples(unsigned n, unsigned cap = kDefaultEnumerationCap) {
    return KTupleGenerator(n, cap);
}

struct DistributionTable {
    unsigned n = 0;
    std::map<KTuple, ExactProb> entries;

    ExactProb total() const;
};

DistributionTable full_distribution(unsigned n, unsigned cap = kDefaultEnumerationCap);

using HeightLaw = std::map<int, ExactProb>;

struct Moments {
    Rational mean;
    Rational variance;
};

/// Mean and variance of a law on integer heights.
Moments moments_of(const HeightLaw& law);

/// Exact law of X_k, the table count after draw k (1 <= k <= 2n).
struct MarginalStat {
    unsigned k = 0;
    HeightLaw law;
    Rational mean;
    Rational variance;
};

MarginalStat marginal_xk(unsigned n, unsigned k, unsigned cap = kDefaultEnumerationCap);

/// Exact law of max_i X_i.
HeightLaw max_distribution(unsigned n, unsigned cap = kDefaultEnumerationCap);

}  // namespace sockpath
