#ifndef NEFKIT_ERRORS_HPP
#define NEFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nefkit {

// Malformed input (files, flags).  CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A named hypothesis of an operation is violated.  CLI exit code 2.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotReflexiveError : PreconditionError {
    NotReflexiveError() : PreconditionError("NotReflexive: Minkowski sum of parts is not reflexive") {}
};

// phi_j(e_i) outside {0,1}; carries the offending (j, i), 1-based.
struct NotNefError : PreconditionError {
    int part;
    int vertex;
    NotNefError(int j, int i, const std::string& value)
        : PreconditionError("NotNef: phi_" + std::to_string(j) + "(e_" + std::to_string(i) +
                            ") = " + value + " is not in {0,1}"),
          part(j),
          vertex(i) {}
};

// Invariant violation inside the library.  CLI exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace nefkit

#endif
