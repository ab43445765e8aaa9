#pragma once

#include <stdexcept>
#include <string>

namespace henon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied parameters outside an operation's domain.
/// The CLI maps this family to exit code 2.
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed on otherwise valid input (exit code 3).
class NumericFailure : public Error {
public:
    using Error::Error;
};

class Subcritical : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class DomainError : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class InvalidArgs : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class VariableMismatch : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class ZeroPiece : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class NotPositiveSolution : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class MeshTooCoarse : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class IllConditioned : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class HorizonExceeded : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class CrossCheckMismatch : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class NotConverged : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

} // namespace henon
