#ifndef SEGRE_ERRORS_HPP
#define SEGRE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace segre {

/// Malformed input text: ring files, divisor files, polynomial strings.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace segre

#endif
