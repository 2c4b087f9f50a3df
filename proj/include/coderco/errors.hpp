#pragma once

#include <stdexcept>
#include <string>

namespace coderco {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix shapes do not line up for the requested operation.
struct ShapeError : Error {
    using Error::Error;
};

// A dimension, flat index, or assembled degree left the configured bounds.
struct OverflowError : Error {
    using Error::Error;
};

// A structure failed one of its defining identities during validation.
struct AxiomError : Error {
    using Error::Error;
};

// Input text or JSON could not be turned into a domain object.
struct ParseError : Error {
    using Error::Error;
};

// quotient_dim was handed a subspace that is not contained in the big space.
struct ContainmentError : Error {
    using Error::Error;
};

}  // namespace coderco
