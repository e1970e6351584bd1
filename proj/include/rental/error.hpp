#pragma once

#include <stdexcept>
#include <string>

namespace rental {

// Error kinds mirror the status codes of the C API (see include/rental.h).
enum class ErrorKind {
    invalid_argument = 1,
    config = 2,
    empty_interval = 3,
    singular_virtual_value = 4,
    horizon_too_small = 5,
    reward_class = 6,
    requires_iid = 7,
    ir_violation = 8,
    size_bound = 9,
    io = 10,
    internal = 11,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) raise(kind, msg);
}

} // namespace rental
