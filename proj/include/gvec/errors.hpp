#pragma once

#include <stdexcept>
#include <string>

namespace gvec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Extent list and element count disagree, or an extent is invalid.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Index tuple or linear index outside the valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Dimension number out of range or rank mismatch.
class DimError : public Error {
public:
    using Error::Error;
};

/// Block grid does not evenly partition the tensor, or a malformed grid.
class BlockError : public Error {
public:
    using Error::Error;
};

/// Tensor file could not be parsed.
class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gvec
