#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace sockpath {

enum class Side : int { left = 0, right = 1 };

struct Sock {
    int type = 1;  // 1..n
    Side side = Side::left;

    friend auto operator<=>(const Sock&, const Sock&) = default;
};

/// An ordering of all 2n distinguishable socks, as drawn from the dryer.
class SockSequence {
public:
    /// Throws MalformedInputError for odd/empty length or out-of-range socks,
    /// ValidityError (1-based draw index) for a repeated sock.
    explicit SockSequence(std::vector<Sock> draws);

    unsigned n() const noexcept { return static_cast<unsigned>(draws_.size() / 2); }
    std::span<const Sock> draws() const noexcept { return draws_; }

    /// Draw m for 1 <= m <= 2n.
    const Sock& draw(std::size_t m) const;

    friend bool operator==(const SockSequence&, const SockSequence&) = default;

private:
    std::vector<Sock> draws_;
};

/// Socks in canonical order (1,L), (1,R), (2,L), ..., (n,R).
std::vector<Sock> all_socks(unsigned n);

/// "(1,0) (2,0) (2,1) (1,1)"
std::string to_string(const SockSequence& s);

}  // namespace sockpath
