#pragma once

// Test-only reference computations. None of these call into the library's
// enumeration, bijection or counting code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "sockpath/exact_prob.hpp"

namespace oracle {

using sockpath::BigInt;

// Catalan numbers by the convolution recurrence C_{m+1} = sum C_i C_{m-i}.
inline std::vector<BigInt> catalan_upto(unsigned n) {
    std::vector<BigInt> c(n + 1, 0);
    c[0] = 1;
    for (unsigned m = 0; m < n; ++m) {
        for (unsigned i = 0; i <= m; ++i) c[m + 1] += c[i] * c[m - i];
    }
    return c;
}

// Every +-1 height sequence of length 2n starting from 0, filtered to Dyck paths.
inline std::vector<std::vector<int>> all_dyck_by_bitmask(unsigned n) {
    std::vector<std::vector<int>> out;
    const unsigned len = 2 * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::vector<int> x;
        int h = 0;
        bool ok = true;
        for (unsigned m = 0; m < len && ok; ++m) {
            h += ((mask >> m) & 1) ? 1 : -1;
            ok = h >= 0;
            x.push_back(h);
        }
        if (ok && h == 0) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// K_j = x_{L_j}, L_j = min{i > L_{j-1} : x_{i+1} = x_i - 1}, 1-based, by the literal definition.
inline std::vector<int> k_by_definition(const std::vector<int>& x0) {
    std::vector<int> x(x0.size() + 1, 0);  // x[0] = 0, x[i] = x_i
    std::copy(x0.begin(), x0.end(), x.begin() + 1);
    const std::size_t len = x0.size();
    std::vector<int> k;
    std::size_t prev = 0;
    for (std::size_t j = 1; j <= len / 2; ++j) {
        std::size_t i = prev + 1;
        while (i < len && x[i + 1] != x[i] - 1) ++i;
        k.push_back(x[i]);
        prev = i;
    }
    return k;
}

// Exhaustive pair-completion process over all (2n)! orderings of socks 0..2n-1,
// sock s having type s / 2. Tallies the k-tuple of every ordering.
inline std::map<std::vector<int>, std::uint64_t> process_counts(unsigned n) {
    std::vector<int> socks(2 * n);
    for (unsigned i = 0; i < 2 * n; ++i) socks[i] = static_cast<int>(i);
    std::map<std::vector<int>, std::uint64_t> out;
    do {
        std::vector<int> on_table;
        std::vector<int> k;
        for (int s : socks) {
            auto it = std::find(on_table.begin(), on_table.end(), s / 2);
            if (it == on_table.end()) {
                on_table.push_back(s / 2);
            } else {
                k.push_back(static_cast<int>(on_table.size()));
                on_table.erase(it);
            }
        }
        ++out[k];
    } while (std::next_permutation(socks.begin(), socks.end()));
    return out;
}

}  // namespace oracle
