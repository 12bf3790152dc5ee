#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sepset {

// Search or refinement ran out of its configured budget before it could
// produce the requested object.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The space does not expose the capability an operation needs (for example
// an exact residual witness for non-strict extension).
struct UnsupportedCapability : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A space document, family description, or distance matrix failed
// validation.  The message names the offending entry.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (unknown type tag, missing field, bad number).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Choice extraction could not select a label for some level.
struct ExtractionError : std::runtime_error {
    ExtractionError(std::uint32_t level, const std::string& what)
        : std::runtime_error(what), level(level) {}
    std::uint32_t level;
};

}  // namespace sepset
