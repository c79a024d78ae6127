// Error taxonomy shared across the library.
//
// StructuralError: the caller handed us something malformed (a table that is
// not a group, a hom between mismatched groups, a symbol out of range).
// BudgetError: the instance is well-formed but exceeds a configured
// enumeration budget; never silently truncate instead.
// TheoremViolation: a property that is proved to hold failed at runtime.
// This is a library defect and is always surfaced loudly.

#pragma once

#include <stdexcept>
#include <string>

namespace gca {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

class BudgetError : public Error {
public:
    using Error::Error;
};

class TheoremViolation : public Error {
public:
    using Error::Error;
};

} // namespace gca
