#ifndef NEARIND_GUARD_HPP
#define NEARIND_GUARD_HPP

#include <stdexcept>
#include <string>

namespace nearind {

/// An exhaustive computation was asked for a size above its configured cap.
class GuardExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline void check_guard(const char* what, int value, int cap) {
    if (value > cap) {
        throw GuardExceeded(std::string(what) + ": " + std::to_string(value) + " exceeds the limit of " +
                            std::to_string(cap));
    }
}

}  // namespace nearind

#endif  // NEARIND_GUARD_HPP
