#include "sockpath/probability.hpp"

#include <algorithm>
#include <stdexcept>

#include "sockpath/errors.hpp"

namespace sockpath {

ProbabilityContext::ProbabilityContext(unsigned n) : n_(n) {
    if (n == 0) throw MalformedInputError("n must be at least 1");
    prefactor_ = factorial(n) << n;
    orderings_ = factorial(2 * n);
}

BigInt ProbabilityContext::permutation_count(const KTuple& t) const {
    if (t.n() != n_) {
        throw std::invalid_argument("tuple of order " + std::to_string(t.n()) + " used with context for n = " +
                                    std::to_string(n_));
    }
    require_valid(t);
    BigInt out = prefactor_;
    for (int k : t.entries()) out *= k;
    return out;
}

ExactProb ProbabilityContext::probability(const KTuple& t) const {
    if (!validate_ktuple(t)) return ExactProb{0};
    return ExactProb(permutation_count(t), orderings_);
}

ExactProb tuple_probability(const KTuple& t) { return ProbabilityContext(t.n()).probability(t); }

BigInt permutation_count(const KTuple& t) { return ProbabilityContext(t.n()).permutation_count(t); }

KTupleGenerator::KTupleGenerator(unsigned n, unsigned cap) {
    check_cap(n, cap, "enumerate_ktuples");
    k_.assign(n, 1);
}

std::optional<KTuple> KTupleGenerator::next() {
    if (done_) return std::nullopt;
    if (started_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return KTuple(k_);
}

bool KTupleGenerator::advance() {
    const std::size_t n = k_.size();
    // 0-based position p holds k_{p+1}, bounded above by n - p.
    for (std::size_t p = n - 1; p-- > 0;) {
        if (k_[p] + 1 <= static_cast<int>(n - p)) {
            ++k_[p];
            for (std::size_t m = p + 1; m < n; ++m) k_[m] = std::max(1, k_[m - 1] - 1);
            return true;
        }
    }
    return false;
}

ExactProb DistributionTable::total() const {
    ExactProb sum{0};
    for (const auto& [t, p] : entries) sum += p;
    return sum;
}

DistributionTable full_distribution(unsigned n, unsigned cap) {
    DistributionTable table;
    table.n = n;
    auto gen = enumerate_ktuples(n, cap);
    const ProbabilityContext ctx(n);
    while (auto t = gen.next()) {
        ExactProb p = ctx.probability(*t);
        table.entries.emplace_hint(table.entries.end(), std::move(*t), std::move(p));
    }
    return table;
}

Moments moments_of(const HeightLaw& law) {
    Rational mean{0};
    Rational second{0};
    for (const auto& [h, p] : law) {
        mean += p * Rational(h);
        second += p * Rational(static_cast<long long>(h) * h);
    }
    return {mean, second - mean * mean};
}

namespace {

// Accumulates each path's exact probability, keyed by `key(path)`, into
// integer tallies over the common denominator (2n)!.
template <typename KeyFn>
HeightLaw law_by_enumeration(unsigned n, unsigned cap, KeyFn key) {
    auto gen = enumerate_ktuples(n, cap);
    const ProbabilityContext ctx(n);
    std::map<int, BigInt> counts;
    while (auto t = gen.next()) {
        counts[key(path_of_ktuple(*t))] += ctx.permutation_count(*t);
    }
    HeightLaw law;
    for (const auto& [h, c] : counts) law.emplace(h, ExactProb(c, ctx.orderings()));
    return law;
}

}  // namespace

MarginalStat marginal_xk(unsigned n, unsigned k, unsigned cap) {
    check_cap(n, cap, "marginal_xk");
    if (k < 1 || k > 2 * n) {
        throw std::out_of_range("draw index k = " + std::to_string(k) + " outside 1.." + std::to_string(2 * n));
    }
    MarginalStat stat;
    stat.k = k;
    stat.law = law_by_enumeration(n, cap, [k](const DyckPath& p) { return p.x(k); });
    auto m = moments_of(stat.law);
    stat.mean = std::move(m.mean);
    stat.variance = std::move(m.variance);
    return stat;
}

HeightLaw max_distribution(unsigned n, unsigned cap) {
    return law_by_enumeration(n, cap, [](const DyckPath& p) { return p.max_height(); });
}

}  // namespace sockpath
