#pragma once

#include <stdexcept>
#include <string>

namespace reskit {

// Base class for everything this library throws on purpose.  Catching
// reskit::Error at the CLI boundary is enough to map failures to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The caller handed us data that violates a documented precondition of the
// public API (wrong dimension, malformed partition grid, oversized inputs
// for an exact algorithm, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// An internal routine was entered in a state its contract forbids.  Unlike
// InvalidInput this points at a bug in *calling* code inside the library.
struct PreconditionViolated : Error {
    using Error::Error;
};

// "This should be impossible" — an invariant the algorithms rely on failed.
// Always a bug in this library, never the caller's fault.
struct InternalError : Error {
    using Error::Error;
};

// An exact computation was abandoned because it exceeded a configured size
// bound (e.g. exhaustive search over too many vertex partitions).
struct ResourceLimit : Error {
    using Error::Error;
};

// Repeated attempts to pick a generic sample point kept landing on a
// degenerate locus.  Deterministic retries are bounded; hitting the bound
// raises this.
struct DegeneracyError : Error {
    using Error::Error;
};

// The polytope family fails the essentiality rank test; none of the
// construction routines apply.  Carries a human-readable witness subset.
struct NonEssential : Error {
    using Error::Error;
};

// Planar family recognized as exceptional: every compatible coefficient
// partition yields an identically-zero determinant, so no useful element
// exists.
struct ExceptionalFamily : Error {
    using Error::Error;
};

// The requested construction strategy (or the bounded search fallback)
// finished without producing a compatible partition.
struct NoPartitionFound : Error {
    using Error::Error;
};

} // namespace reskit
