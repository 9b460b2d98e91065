#pragma once

#include <stdexcept>
#include <string>

namespace homring {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (ring specs, profile literals, vectors).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input outside the mathematical domain (q not a prime power, non-unit shift, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured element cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed. Seeing one of these means a bug, or an input the theory excludes.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Cyclotomic integers of different orders were combined.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// Partitions or codes living on different carriers were combined.
class CarrierMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace homring
