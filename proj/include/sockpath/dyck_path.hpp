#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sockpath/ktuple.hpp"

namespace sockpath {

inline constexpr unsigned kDefaultEnumerationCap = 14;

/// Height sequence (x_1, ..., x_2n) with x_1 = 1, unit steps, x_i >= 0 and
/// x_2n = 0. The starting height x_0 = 0 is implicit and never stored.
class DyckPath {
public:
    /// Throws ValidityError at the first offending (1-based) index, or
    /// MalformedInputError for an empty sequence.
    explicit DyckPath(std::vector<int> heights);

    unsigned n() const noexcept { return static_cast<unsigned>(heights_.size() / 2); }
    std::size_t length() const noexcept { return heights_.size(); }

    /// x_i for 1 <= i <= 2n; x(0) returns the implicit starting height 0.
    int x(std::size_t i) const;

    std::span<const int> heights() const noexcept { return heights_; }

    int max_height() const noexcept;

    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    struct Trusted {};
    DyckPath(std::vector<int> heights, Trusted) : heights_(std::move(heights)) {}

    friend DyckPath path_of_ktuple(const KTuple& t);
    friend class DyckPathGenerator;

    std::vector<int> heights_;
};

struct PathViolation {
    std::size_t index;  // 1-based
    std::string message;
};

/// First index at which `heights` fails to be a Dyck path, if any.
std::optional<PathViolation> find_path_violation(std::span<const int> heights);

/// L_1 < ... < L_n: the indices i with x_{i+1} = x_i - 1 (1-based).
std::vector<std::size_t> down_step_indices(const DyckPath& p);

/// (K_1, ..., K_n) with K_j = x_{L_j}.
KTuple ktuple_of_path(const DyckPath& p);

/// The unique Dyck path whose k-tuple is `t`. Throws ValidityError if `t`
/// is not realizable.
DyckPath path_of_ktuple(const KTuple& t);

/// Every Dyck path of semilength n, once each, in lexicographic order of the
/// height sequence. One consumer per instance.
class DyckPathGenerator {
public:
    explicit DyckPathGenerator(unsigned n, unsigned cap = kDefaultEnumerationCap);

    std::optional<DyckPath> next();

private:
    bool advance();

    std::vector<int> heights_;
    bool started_ = false;
    bool done_ = false;
};

inline DyckPathGenerator dyck_paths(unsigned n, unsigned cap = kDefaultEnumerationCap) {
    return DyckPathGenerator(n, cap);
}

/// "1 2 1 0"
std::string to_string(const DyckPath& p);

}  // namespace sockpath
