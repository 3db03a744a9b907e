#pragma once

#include <stdexcept>
#include <string>

namespace hwcl {

// Malformed textual input (weights, tuples, group specifiers).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap would be exceeded (tensor dimension, box count).
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A numerical contract was violated: unitarity defect, coincident
// evaluation points, incompatible conditional data, degenerate phase
// pattern.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hwcl
