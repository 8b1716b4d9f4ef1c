#include "sockpath/ktuple.hpp"

#include "sockpath/errors.hpp"

namespace sockpath {

namespace {

void require_well_formed(std::span<const int> entries) {
    if (entries.empty()) {
        throw MalformedInputError("k-tuple must have at least one entry");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 1) {
            throw MalformedInputError("k-tuple entry k_" + std::to_string(i + 1) + " = " +
                                      std::to_string(entries[i]) + " is not a positive integer");
        }
    }
}

std::optional<TupleViolation> violation_of(std::span<const int> k) {
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i] < k[i - 1] - 1) {
            const std::string cur = "k_" + std::to_string(i + 1);
            const std::string prev = "k_" + std::to_string(i);
            return TupleViolation{i + 1, "constraint " + cur + " >= " + prev + " - 1 violated (" + cur +
                                             " = " + std::to_string(k[i]) + ", " + prev + " = " +
                                             std::to_string(k[i - 1]) + ")"};
        }
    }
    if (k.back() != 1) {
        return TupleViolation{k.size(), "constraint k_n = 1 violated (k_" + std::to_string(k.size()) +
                                            " = " + std::to_string(k.back()) + ")"};
    }
    return std::nullopt;
}

}  // namespace

KTuple::KTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    require_well_formed(entries_);
}

int KTuple::k(std::size_t i) const {
    if (i < 1 || i > entries_.size()) {
        throw std::out_of_range("k-tuple index " + std::to_string(i) + " outside 1.." +
                                std::to_string(entries_.size()));
    }
    return entries_[i - 1];
}

std::optional<TupleViolation> find_violation(const KTuple& t) { return violation_of(t.entries()); }

bool validate_ktuple(const KTuple& t) { return !violation_of(t.entries()).has_value(); }

bool validate_ktuple(std::span<const int> entries) {
    require_well_formed(entries);
    return !violation_of(entries).has_value();
}

void require_valid(const KTuple& t) {
    if (auto v = find_violation(t)) {
        throw ValidityError(v->index, "invalid k-tuple " + to_literal(t) + ": " + v->message);
    }
}

std::string to_string(const KTuple& t) {
    std::string out;
    for (int v : t.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::string to_literal(const KTuple& t) { return "(" + to_string(t) + ")"; }

}  // namespace sockpath
