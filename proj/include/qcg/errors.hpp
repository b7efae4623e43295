#ifndef QCG_ERRORS_HPP
#define QCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input and structural errors.
class InputError : public Error { using Error::Error; };
class DegreeError : public Error { using Error::Error; };
class BoundaryMismatch : public Error { using Error::Error; };
class ZeroCycle : public Error { using Error::Error; };
class NotACycle : public Error { using Error::Error; };
class CutLeafEdge : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class CapExceeded : public Error { using Error::Error; };

// Cohomological errors.
class IncompleteTable : public Error { using Error::Error; };
class NotACocycle : public Error { using Error::Error; };
class NotACoboundary : public Error { using Error::Error; };
class NotAHomomorphism : public Error { using Error::Error; };
class NotFixed : public Error { using Error::Error; };
class ParityFailure : public Error { using Error::Error; };
class NotGammaN : public Error { using Error::Error; };
class WeightMismatch : public Error { using Error::Error; };

}  // namespace qcg

#endif  // QCG_ERRORS_HPP
