#pragma once

#include <stdexcept>
#include <string>

namespace indcx {

// Malformed input: unknown labels, bad JSON, invalid family dimensions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A graph move or replacement whose hypothesis does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Explicit enumeration would exceed the configured face budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace indcx
