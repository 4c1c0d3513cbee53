#pragma once

#include <stdexcept>
#include <string>

namespace lipmap {

/// Malformed input: bad vertex ids, duplicate edges, unparsable files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural precondition of the called operation does not hold
/// (disconnected graph, non-tree passed to the tree algorithm, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exhaustive search exceeded its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lipmap
