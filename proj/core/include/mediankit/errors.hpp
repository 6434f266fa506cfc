#pragma once

#include <stdexcept>
#include <string>

namespace mediankit {

/// Input failed eager validation (bad table, bad relation, bad document).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured bound.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

class NotConservativeError : public std::runtime_error {
public:
    explicit NotConservativeError(const std::string& what) : std::runtime_error(what) {}
};

/// Chain decomposition needs at least five elements.
class TooSmallError : public std::runtime_error {
public:
    explicit TooSmallError(const std::string& what) : std::runtime_error(what) {}
};

class NotMedianSemilatticeError : public std::runtime_error {
public:
    explicit NotMedianSemilatticeError(const std::string& what) : std::runtime_error(what) {}
};

class NotAHomError : public std::runtime_error {
public:
    NotAHomError(const std::string& what, int x, int y, int z)
        : std::runtime_error(what), witness{x, y, z} {}
    int witness[3];
};

/// The source or image algebra has no chain ordering (it is 2x2-like).
class NoChainOrderingError : public std::runtime_error {
public:
    explicit NoChainOrderingError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal inconsistency: a verified structure failed a theorem-level check.
class RoundTripFailure : public std::logic_error {
public:
    explicit RoundTripFailure(const std::string& what) : std::logic_error(what) {}
};

} // namespace mediankit
