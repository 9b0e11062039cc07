#pragma once

#include <stdexcept>
#include <string>

namespace sdirac {

// Base class for all library failures. The CLI maps these to exit code 1;
// anything else (bad flags, unparsable config) is exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// invalid argument domain (order not half-integer, |m| > l, eps < 0, ...)
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// evaluation at or too close to a pole of a special function or kernel
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error(what) {}
};

// a series or quadrature failed to reach its tolerance
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// grid does not resolve / contain the requested object
class GridError : public Error {
public:
    explicit GridError(const std::string& what) : Error(what) {}
};

// a SUSY classification or pairing query has no defined answer
class ClassificationError : public Error {
public:
    explicit ClassificationError(const std::string& what) : Error(what) {}
};

// requesting the absent partner of an unpaired level
class UnpairedLevelError : public Error {
public:
    explicit UnpairedLevelError(const std::string& what) : Error(what) {}
};

// model has no discrete spectrum in the requested sector
class NoDiscreteSpectrumError : public Error {
public:
    explicit NoDiscreteSpectrumError(const std::string& what) : Error(what) {}
};

// model has no continuous spectrum
class NoContinuumError : public Error {
public:
    explicit NoContinuumError(const std::string& what) : Error(what) {}
};

// evaluation on the continuum branch cut
class BranchCutError : public Error {
public:
    explicit BranchCutError(const std::string& what) : Error(what) {}
};

// the supplied (psi+, psi-) fields are not a SUSY partner pair
class InconsistentPairError : public Error {
public:
    explicit InconsistentPairError(const std::string& what) : Error(what) {}
};

} // namespace sdirac
