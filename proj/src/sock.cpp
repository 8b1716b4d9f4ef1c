#include "sockpath/sock.hpp"

#include "sockpath/errors.hpp"

namespace sockpath {

SockSequence::SockSequence(std::vector<Sock> draws) : draws_(std::move(draws)) {
    if (draws_.empty() || draws_.size() % 2 != 0) {
        throw MalformedInputError("a sock sequence holds 2n draws; got " + std::to_string(draws_.size()));
    }
    const int n = static_cast<int>(draws_.size() / 2);
    std::vector<bool> seen(draws_.size(), false);
    for (std::size_t m = 0; m < draws_.size(); ++m) {
        const Sock& s = draws_[m];
        const int side = static_cast<int>(s.side);
        if (s.type < 1 || s.type > n || (side != 0 && side != 1)) {
            throw MalformedInputError("draw " + std::to_string(m + 1) + " is not a sock of {1.." +
                                      std::to_string(n) + "} x {0,1}");
        }
        const std::size_t code = static_cast<std::size_t>(2 * (s.type - 1) + side);
        if (seen[code]) {
            throw ValidityError(m + 1, "sock (" + std::to_string(s.type) + "," + std::to_string(side) +
                                           ") drawn twice (again at draw " + std::to_string(m + 1) + ")");
        }
        seen[code] = true;
    }
}

const Sock& SockSequence::draw(std::size_t m) const {
    if (m < 1 || m > draws_.size()) {
        throw std::out_of_range("draw index " + std::to_string(m) + " outside 1.." + std::to_string(draws_.size()));
    }
    return draws_[m - 1];
}

std::vector<Sock> all_socks(unsigned n) {
    std::vector<Sock> out;
    out.reserve(2 * n);
    for (unsigned t = 1; t <= n; ++t) {
        out.push_back({static_cast<int>(t), Side::left});
        out.push_back({static_cast<int>(t), Side::right});
    }
    return out;
}

std::string to_string(const SockSequence& s) {
    std::string out;
    for (const Sock& d : s.draws()) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(d.type) + "," + std::to_string(static_cast<int>(d.side)) + ")";
    }
    return out;
}

}  // namespace sockpath
