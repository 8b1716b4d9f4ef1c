#include "sockpath/process.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "sockpath/errors.hpp"
#include "sockpath/probability.hpp"

namespace sockpath {

namespace {

// Internally a sock is the code 2 * (type - 1) + side, so code >> 1 is the
// 0-based type and all_socks(n) is codes 0..2n-1 in order.
constexpr unsigned kMaskedPathCeiling = 32;

Sock sock_of_code(int code) { return Sock{(code >> 1) + 1, static_cast<Side>(code & 1)}; }

int code_of_sock(const Sock& s) { return 2 * (s.type - 1) + static_cast<int>(s.side); }

// Bit m is set iff draw m + 1 is an up-step.
std::uint64_t up_mask(std::span<const int> codes) {
    std::uint64_t seen = 0;
    std::uint64_t mask = 0;
    for (std::size_t m = 0; m < codes.size(); ++m) {
        const std::uint64_t bit = std::uint64_t{1} << (codes[m] >> 1);
        if ((seen & bit) == 0) {
            seen |= bit;
            mask |= std::uint64_t{1} << m;
        }
    }
    return mask;
}

DyckPath path_of_mask(std::uint64_t mask, unsigned n) {
    std::vector<int> x(2 * n);
    int h = 0;
    for (std::size_t m = 0; m < x.size(); ++m) {
        h += ((mask >> m) & 1) != 0 ? 1 : -1;
        x[m] = h;
    }
    return DyckPath(std::move(x));
}

void shuffle_codes(std::span<int> codes, Xoshiro256& rng) {
    for (std::size_t i = codes.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(codes[i - 1], codes[j]);
    }
}

std::vector<int> canonical_codes(unsigned n) {
    std::vector<int> codes(2 * n);
    std::iota(codes.begin(), codes.end(), 0);
    return codes;
}

std::uint64_t factorial_u64(std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= i;
    return out;
}

// Splits [0, total) into `parts` contiguous ranges and runs body(begin, end, part).
template <typename Body>
void parallel_ranges(std::uint64_t total, unsigned parts, Body body) {
    if (parts <= 1) {
        body(std::uint64_t{0}, total, 0u);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(parts);
    for (unsigned p = 0; p < parts; ++p) {
        const std::uint64_t begin = total / parts * p + std::min<std::uint64_t>(p, total % parts);
        const std::uint64_t end = begin + total / parts + (p < total % parts ? 1 : 0);
        threads.emplace_back([=, &body] { body(begin, end, p); });
    }
}

}  // namespace

ProcessTrace run_process(const SockSequence& omega) {
    std::vector<int> codes;
    codes.reserve(omega.draws().size());
    for (const Sock& s : omega.draws()) codes.push_back(code_of_sock(s));

    std::vector<bool> seen(omega.n(), false);
    std::vector<int> x;
    x.reserve(codes.size());
    int h = 0;
    for (int c : codes) {
        auto type = static_cast<std::size_t>(c >> 1);
        if (!seen[type]) {
            seen[type] = true;
            ++h;
        } else {
            --h;
        }
        x.push_back(h);
    }
    DyckPath path(std::move(x));
    KTuple tuple = ktuple_of_path(path);
    return ProcessTrace{omega, std::move(path), std::move(tuple)};
}

SockSequence random_permutation(unsigned n, Xoshiro256& rng) {
    if (n == 0) throw MalformedInputError("random_permutation: n must be at least 1");
    auto codes = canonical_codes(n);
    shuffle_codes(codes, rng);
    std::vector<Sock> draws;
    draws.reserve(codes.size());
    for (int c : codes) draws.push_back(sock_of_code(c));
    return SockSequence(std::move(draws));
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

SimulationReport monte_carlo(unsigned n, std::uint64_t trials, std::uint64_t seed, const SimulationOptions& options) {
    check_cap(n, std::min(options.cap, kMaskedPathCeiling), "monte_carlo");
    if (trials == 0) throw MalformedInputError("monte_carlo: trials must be at least 1");

    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(options.workers), trials));
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(workers);
    parallel_ranges(trials, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned part) {
        auto& tally = partial[part];
        std::vector<int> codes(2 * n);
        for (std::uint64_t i = begin; i < end; ++i) {
            std::iota(codes.begin(), codes.end(), 0);
            auto rng = Xoshiro256::for_trial(seed, i);
            shuffle_codes(codes, rng);
            ++tally[up_mask(codes)];
        }
    });

    std::map<std::uint64_t, std::uint64_t> merged;
    for (const auto& tally : partial) {
        for (const auto& [mask, count] : tally) merged[mask] += count;
    }

    SimulationReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    for (const auto& [mask, count] : merged) {
        report.empirical.emplace(ktuple_of_path(path_of_mask(mask, n)), count);
    }

    const ProbabilityContext ctx(n);
    auto gen = enumerate_ktuples(n, options.cap);
    while (auto t = gen.next()) {
        ComparisonRow row{*t, 0, {}, ctx.probability(*t), {}};
        if (auto it = report.empirical.find(*t); it != report.empirical.end()) row.count = it->second;
        row.empirical = Rational(BigInt(row.count), BigInt(trials));
        row.deviation = (row.empirical - row.exact).abs();
        if (row.deviation > report.max_deviation) report.max_deviation = row.deviation;
        report.comparison.push_back(std::move(row));
    }
    return report;
}

std::map<KTuple, std::uint64_t> brute_force_counts(unsigned n, const BruteForceOptions& options) {
    check_cap(n, std::min(options.cap, kBruteForceCeiling), "brute_force_counts",
              "the oracle is O((2n)!); use the Monte Carlo simulator for larger n");

    const std::size_t len = 2 * n;
    const std::size_t slots = std::size_t{1} << len;
    std::vector<std::uint64_t> tally(slots, 0);

    if (options.mode == BruteForceMode::full) {
        const std::uint64_t total = factorial_u64(len);
        const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(options.workers), total));
        std::vector<std::vector<std::uint64_t>> partial(workers);
        parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned part) {
            auto& local = partial[part];
            local.assign(slots, 0);
            if (begin == end) return;
            auto perm = unrank_permutation(begin, len);
            for (std::uint64_t r = begin; r < end; ++r) {
                ++local[up_mask(perm)];
                std::next_permutation(perm.begin(), perm.end());
            }
        });
        for (const auto& local : partial) {
            for (std::size_t s = 0; s < slots; ++s) tally[s] += local[s];
        }
    } else {
        // Type sequences only; code 2t stands for either sock of type t.
        std::vector<int> codes(len);
        for (std::size_t i = 0; i < len; ++i) codes[i] = static_cast<int>(i & ~std::size_t{1});
        const std::uint64_t sides = std::uint64_t{1} << n;
        do {
            tally[up_mask(codes)] += sides;
        } while (std::next_permutation(codes.begin(), codes.end()));
    }

    std::map<KTuple, std::uint64_t> out;
    for (std::size_t s = 0; s < slots; ++s) {
        if (tally[s] != 0) out.emplace(ktuple_of_path(path_of_mask(s, n)), tally[s]);
    }
    return out;
}

std::vector<int> unrank_permutation(std::uint64_t rank, std::size_t size) {
    if (size > 20) throw std::invalid_argument("unrank_permutation: size above 20 overflows 64-bit ranks");
    if (rank >= factorial_u64(size)) {
        throw std::out_of_range("unrank_permutation: rank " + std::to_string(rank) + " >= " +
                                std::to_string(size) + "!");
    }
    std::vector<int> pool(size);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(size);
    for (std::size_t i = size; i > 0; --i) {
        const std::uint64_t block = factorial_u64(i - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

std::uint64_t rank_permutation(std::span<const int> perm) {
    const std::size_t size = perm.size();
    if (size > 20) throw std::invalid_argument("rank_permutation: size above 20 overflows 64-bit ranks");
    std::vector<bool> used(size, false);
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < size; ++i) {
        const int v = perm[i];
        if (v < 0 || static_cast<std::size_t>(v) >= size || used[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("rank_permutation: input is not a permutation of 0.." +
                                        std::to_string(size - 1));
        }
        std::uint64_t smaller_unused = 0;
        for (int u = 0; u < v; ++u) {
            if (!used[static_cast<std::size_t>(u)]) ++smaller_unused;
        }
        used[static_cast<std::size_t>(v)] = true;
        rank += smaller_unused * factorial_u64(size - 1 - i);
    }
    return rank;
}

}  // namespace sockpath
