#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sockpath/dyck_path.hpp"
#include "sockpath/exact_prob.hpp"
#include "sockpath/ktuple.hpp"
#include "sockpath/rng.hpp"
#include "sockpath/sock.hpp"

namespace sockpath {

inline constexpr unsigned kDefaultBruteForceCap = 5;
// (2n)! must fit in 64 bits for rank/unrank over the ordering space.
inline constexpr unsigned kBruteForceCeiling = 10;
inline constexpr unsigned kDefaultSimulationCap = kDefaultEnumerationCap;

struct ProcessTrace {
    SockSequence omega;
    DyckPath path;
    KTuple tuple;
};

/// Height goes up when the drawn sock's type has not been seen before and
/// down when it completes a pair. Side flags never affect the path.
ProcessTrace run_process(const SockSequence& omega);

/// Uniform ordering of the 2n socks by Fisher-Yates over all_socks(n).
SockSequence random_permutation(unsigned n, Xoshiro256& rng);

/// 0 means std::thread::hardware_concurrency() (at least 1).
unsigned resolve_workers(unsigned requested);

struct ComparisonRow {
    KTuple tuple;
    std::uint64_t count = 0;
    Rational empirical;  // count / trials
    ExactProb exact;
    Rational deviation;  // |empirical - exact|
};

struct SimulationReport {
    unsigned n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<KTuple, std::uint64_t> empirical;
    std::vector<ComparisonRow> comparison;  // every valid tuple, lexicographic
    Rational max_deviation;
};

struct SimulationOptions {
    unsigned workers = 1;
    unsigned cap = kDefaultSimulationCap;
};

/// Trial i draws from Xoshiro256::for_trial(seed, i), so the report depends
/// only on (n, trials, seed) and never on the worker count.
SimulationReport monte_carlo(unsigned n, std::uint64_t trials, std::uint64_t seed,
                             const SimulationOptions& options = {});

enum class BruteForceMode {
    full,           // every (2n)! ordering of distinguishable socks
    collapse_sides  // every ordering of sock types, each weighted by 2^n
};

struct BruteForceOptions {
    unsigned cap = kDefaultBruteForceCap;
    unsigned workers = 1;
    BruteForceMode mode = BruteForceMode::full;
};

/// Runs the process on every ordering and tallies the resulting k-tuples.
std::map<KTuple, std::uint64_t> brute_force_counts(unsigned n, const BruteForceOptions& options = {});

/// Lexicographic rank/unrank of permutations of {0, ..., size-1}.
std::vector<int> unrank_permutation(std::uint64_t rank, std::size_t size);
std::uint64_t rank_permutation(std::span<const int> perm);

}  // namespace sockpath
