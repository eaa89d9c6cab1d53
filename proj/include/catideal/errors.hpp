#pragma once

#include <stdexcept>
#include <string>

namespace catideal {

/// Composition attempted between morphisms whose endpoints do not match.
struct ComposabilityError : std::runtime_error {
    explicit ComposabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A map fails to descend to a quotient (h(subS) not contained in subT, or
/// an induced composition depends on the chosen representatives).
struct WellDefinednessViolation : std::runtime_error {
    explicit WellDefinednessViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Quotient of ideals or groups requested with J not contained in I.
struct ContainmentViolation : std::runtime_error {
    explicit ContainmentViolation(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search would exceed the configured enumeration cap.
struct EnumerationCapExceeded : std::runtime_error {
    explicit EnumerationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A category or complex description document failed to parse.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace catideal
