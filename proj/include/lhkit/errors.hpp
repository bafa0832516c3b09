#ifndef LHKIT_ERRORS_HPP
#define LHKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lhkit {

/// A family's regularity conditions fail, a table denominator vanishes, or a
/// recurrence coefficient gamma_n is zero. Carries the violated condition
/// and the smallest offending index (-1 when not index-specific).
class RegularityError : public std::domain_error {
public:
    RegularityError(const std::string& condition, int n)
        : std::domain_error(n >= 0 ? "regularity: " + condition + " violated at n=" + std::to_string(n)
                                   : "regularity: " + condition),
          condition_(condition),
          n_(n) {}
    const std::string& condition() const { return condition_; }
    int index() const { return n_; }

private:
    std::string condition_;
    int n_;
};

/// An operation needs more trailing moments than the prefix provides.
class TruncationError : public std::length_error {
public:
    explicit TruncationError(const std::string& what) : std::length_error(what) {}
};

/// Degree bounds admit no solution when fitting a relation.
class NoSolutionError : public std::runtime_error {
public:
    explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// All elimination minors vanish while assembling the differential equation.
class DegenerateRelationsError : public std::runtime_error {
public:
    explicit DegenerateRelationsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lhkit

#endif
