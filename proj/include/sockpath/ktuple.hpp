#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sockpath {

/// Heights (k_1, ..., k_n) of the table at each pair completion.
///
/// A KTuple is always well-formed (non-empty, every entry >= 1). Whether it
/// is realizable by a Dyck path is a separate question answered by
/// validate_ktuple(). Indices in the public accessors are 1-based.
class KTuple {
public:
    explicit KTuple(std::vector<int> entries);
    KTuple(std::initializer_list<int> entries) : KTuple(std::vector<int>(entries)) {}

    unsigned n() const noexcept { return static_cast<unsigned>(entries_.size()); }

    /// k_i for 1 <= i <= n.
    int k(std::size_t i) const;

    std::span<const int> entries() const noexcept { return entries_; }

    friend auto operator<=>(const KTuple&, const KTuple&) = default;
    friend bool operator==(const KTuple&, const KTuple&) = default;

private:
    std::vector<int> entries_;
};

/// First entry at which a well-formed tuple breaks the realizability rule.
struct TupleViolation {
    std::size_t index;    // 1-based position of the offending entry
    std::string message;  // cites the violated constraint, e.g. "k_2 >= k_1 - 1"
};

std::optional<TupleViolation> find_violation(const KTuple& t);

/// True iff k_{i+1} >= k_i - 1 for 1 <= i < n and k_n = 1.
bool validate_ktuple(const KTuple& t);

/// Same check on raw entries; throws MalformedInputError when `entries` is
/// empty or holds a value < 1, so "malformed" never collapses into "false".
bool validate_ktuple(std::span<const int> entries);

/// Throws ValidityError naming the first violation, if any.
void require_valid(const KTuple& t);

/// "2,4,3,2,1"
std::string to_string(const KTuple& t);

/// "(2,4,3,2,1)"
std::string to_literal(const KTuple& t);

}  // namespace sockpath
