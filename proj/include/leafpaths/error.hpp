#ifndef LEAFPATHS_ERROR_HPP
#define LEAFPATHS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace leafpaths {

// Every failure mode raised by the library carries one of these kinds so
// callers (and tests) can distinguish them without parsing messages.
enum class ErrorKind {
    TooFewVertices,    // degree sequence with n < 2 (or empty out-degree sequence)
    BadDegreeEntry,    // degree < 1, or out-degree < 0
    DegreeSumMismatch, // sum != 2(n-1) for degrees, != n-1 for out-degrees
    VertexOutOfRange,
    MalformedInput,    // unparseable line in an edge-list file
    EdgeCountMismatch,
    SelfLoop,
    ParallelEdge,
    CycleDetected,
    Disconnected,
    KOutOfRange,
    Overflow,          // length-set sum would exceed the capacity
    CapExceeded,       // enumeration scope beyond the configured cap
    NonBinaryTree,
    InvalidParameter,
    NoTreeInScope,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace leafpaths

#endif
