#include "sockpath/errors.hpp"

namespace sockpath {

void check_cap(unsigned n, unsigned cap, const char* what, const char* advice) {
    if (n == 0) {
        throw MalformedInputError(std::string(what) + ": n must be at least 1");
    }
    if (n > cap) {
        std::string msg = std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(cap);
        if (advice != nullptr) {
            msg += "; ";
            msg += advice;
        }
        throw ResourceLimitError(n, cap, msg);
    }
}

}  // namespace sockpath
