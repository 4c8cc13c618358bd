#ifndef VDELTA_ERRORS_HPP
#define VDELTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vdelta {

// Thrown on malformed Gauss code text; carries the byte offset of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Thrown when a move/macro is applied at a site that does not satisfy its precondition.
class move_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a computation exceeds its configured budget (e.g. bracket state sum).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vdelta

#endif
