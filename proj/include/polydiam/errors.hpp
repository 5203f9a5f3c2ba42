#ifndef POLYDIAM_ERRORS_HPP
#define POLYDIAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polydiam {

/// Base for all input-level failures (CLI exit code 1).
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A violated internal invariant: a bug, not bad input (CLI exit code 2).
class InternalInvariantError : public std::logic_error {
  public:
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

enum class ParseErrorKind {
    MalformedHeader,
    WrongRowArity,
    ZeroNormalRow,
    DuplicateRow,
    BadNumber,
};

/// Parse failure; always names the offending 1-based line.
class ParseError : public InputError {
  public:
    ParseError(ParseErrorKind kind, int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

  private:
    ParseErrorKind kind_;
    int line_;
};

/// Constraint normals do not span full rank; no vertices exist.
class NotPointedError : public InputError {
  public:
    explicit NotPointedError(const std::string& what) : InputError(what) {}
};

/// The inequality system has no feasible point.
class EmptyPolyhedronError : public InputError {
  public:
    explicit EmptyPolyhedronError(const std::string& what) : InputError(what) {}
};

/// Substituting a facet equality produced a constant constraint "0 <= c" with c < 0.
class EmptyFacetError : public InputError {
  public:
    explicit EmptyFacetError(const std::string& what) : InputError(what) {}
};

/// The restricted polyhedron lost pointedness; the distance-preservation
/// check is skipped for such instances.
class ResultNotPointedError : public InputError {
  public:
    explicit ResultNotPointedError(const std::string& what) : InputError(what) {}
};

/// A random sample failed the simplicity/boundedness validation.
/// Carries re-sample advice; never retried silently.
class DegenerateSampleError : public InputError {
  public:
    explicit DegenerateSampleError(const std::string& what) : InputError(what) {}
};

/// Raised when the ball facet sets of two vertices fail to intersect.
/// Impossible for valid connected input; signals an upstream bug.
class NoCommonFacetError : public InternalInvariantError {
  public:
    explicit NoCommonFacetError(const std::string& what) : InternalInvariantError(what) {}
};

}  // namespace polydiam

#endif
