#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ntlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent row lengths, non-binary characters, non-bijective images.
class MalformedInput : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed one of the documented desk-scale limits.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A hypothesis (2-homogeneity, distance range, design property) fails.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class UndefinedDistanceError : public Error {
public:
    using Error::Error;
};

class DegenerateSeedError : public Error {
public:
    using Error::Error;
};

class EmptyLayerError : public Error {
public:
    using Error::Error;
};

class MissingDataError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ntlab
