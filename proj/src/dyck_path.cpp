#include "sockpath/dyck_path.hpp"

#include <algorithm>
#include <cstdlib>

#include "sockpath/errors.hpp"

namespace sockpath {

std::optional<PathViolation> find_path_violation(std::span<const int> x) {
    if (x.empty()) {
        return PathViolation{1, "path is empty"};
    }
    if (x[0] != 1) {
        return PathViolation{1, "x_1 must be 1 (got " + std::to_string(x[0]) + ")"};
    }
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (std::abs(x[i] - x[i - 1]) != 1) {
            return PathViolation{i + 1, "step from x_" + std::to_string(i) + " = " + std::to_string(x[i - 1]) +
                                            " to x_" + std::to_string(i + 1) + " = " + std::to_string(x[i]) +
                                            " is not +1 or -1"};
        }
        if (x[i] < 0) {
            return PathViolation{i + 1, "height x_" + std::to_string(i + 1) + " is negative"};
        }
    }
    if (x.size() % 2 != 0) {
        return PathViolation{x.size(), "odd length " + std::to_string(x.size()) + " (a Dyck path has 2n heights)"};
    }
    if (x.back() != 0) {
        return PathViolation{x.size(), "path must end at height 0 (x_" + std::to_string(x.size()) +
                                           " = " + std::to_string(x.back()) + ")"};
    }
    return std::nullopt;
}

DyckPath::DyckPath(std::vector<int> heights) : heights_(std::move(heights)) {
    if (heights_.empty()) {
        throw MalformedInputError("path must have at least one height");
    }
    if (auto v = find_path_violation(heights_)) {
        throw ValidityError(v->index, "not a Dyck path at index " + std::to_string(v->index) + ": " + v->message);
    }
}

int DyckPath::x(std::size_t i) const {
    if (i == 0) return 0;
    if (i > heights_.size()) {
        throw std::out_of_range("path index " + std::to_string(i) + " outside 0.." +
                                std::to_string(heights_.size()));
    }
    return heights_[i - 1];
}

int DyckPath::max_height() const noexcept { return *std::max_element(heights_.begin(), heights_.end()); }

std::vector<std::size_t> down_step_indices(const DyckPath& p) {
    const auto x = p.heights();
    std::vector<std::size_t> out;
    out.reserve(p.n());
    // x_{i+1} = x_i - 1 with i >= 1; the first step (x_0 -> x_1) is always up.
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (x[i + 1] == x[i] - 1) out.push_back(i + 1);
    }
    return out;
}

KTuple ktuple_of_path(const DyckPath& p) {
    std::vector<int> k;
    k.reserve(p.n());
    for (std::size_t l : down_step_indices(p)) k.push_back(p.x(l));
    return KTuple(std::move(k));
}

DyckPath path_of_ktuple(const KTuple& t) {
    require_valid(t);
    const auto k = t.entries();
    const std::size_t n = k.size();
    std::vector<int> x(2 * n, -1);
    for (int i = 1; i <= k[0]; ++i) x[i - 1] = i;
    // For j = 1..n: x_{k_j + 2j - 1 + i} = k_j - 1 + i while k_j - 1 + i <= k_{j+1},
    // with k_{n+1} = 0 closing the path.
    for (std::size_t j = 1; j <= n; ++j) {
        const int kj = k[j - 1];
        const int next = j < n ? k[j] : 0;
        const std::size_t base = static_cast<std::size_t>(kj) + 2 * j - 1;
        for (int i = 0; kj - 1 + i <= next; ++i) {
            x[base + static_cast<std::size_t>(i) - 1] = kj - 1 + i;
        }
    }
    return DyckPath(std::move(x), DyckPath::Trusted{});
}

DyckPathGenerator::DyckPathGenerator(unsigned n, unsigned cap) {
    check_cap(n, cap, "dyck_paths");
    heights_.resize(2 * n);
    for (std::size_t i = 0; i < heights_.size(); ++i) heights_[i] = (i % 2 == 0) ? 1 : 0;
}

std::optional<DyckPath> DyckPathGenerator::next() {
    if (done_) return std::nullopt;
    if (started_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return DyckPath(heights_, DyckPath::Trusted{});
}

bool DyckPathGenerator::advance() {
    auto& x = heights_;
    const std::size_t len = x.size();
    // Rightmost down-step that can become an up-step and still return to 0.
    for (std::size_t j = len - 1; j-- > 1;) {
        const int prev = x[j - 1];
        const int remaining = static_cast<int>(len - 1 - j);
        if (x[j] == prev - 1 && prev + 1 <= remaining) {
            x[j] = prev + 1;
            for (std::size_t m = j + 1; m < len; ++m) x[m] = x[m - 1] > 0 ? x[m - 1] - 1 : 1;
            return true;
        }
    }
    return false;
}

std::string to_string(const DyckPath& p) {
    std::string out;
    for (int h : p.heights()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(h);
    }
    return out;
}

}  // namespace sockpath
