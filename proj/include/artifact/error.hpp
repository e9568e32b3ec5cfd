#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid input: wrong dimensions, out-of-domain arguments,
// degenerate geometry where a construction is undefined.
struct DomainError : Error {
    using Error::Error;
};

// Text that does not conform to a grammar or file format. `where` is a byte
// offset for expression text, a 1-based line number for catalog files.
struct FormatError : Error {
    std::size_t where;
    FormatError(const std::string& msg, std::size_t pos) : Error(msg), where(pos) {}
};

// Lookup of an unknown catalog entry or file.
struct NotFoundError : Error {
    using Error::Error;
};

// An iteration failed to settle within its budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// A horoball configuration violating the packing constraints, with one
// human-readable entry per violated constraint.
struct InadmissibleError : Error {
    std::vector<std::string> violations;
    explicit InadmissibleError(std::vector<std::string> v)
        : Error(v.empty() ? std::string("inadmissible configuration")
                          : "inadmissible configuration: " + v.front()),
          violations(std::move(v)) {}
};

} // namespace artifact
