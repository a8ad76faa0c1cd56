#pragma once

#include <stdexcept>
#include <string>

namespace srcid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by (or evaluation at) a point too close to a pole.
struct SingularError : Error {
    using Error::Error;
};

// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Problem size beyond the enumeration caps.
struct SizeError : Error {
    using Error::Error;
};

}  // namespace srcid
