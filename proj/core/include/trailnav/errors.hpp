#pragma once

#include <stdexcept>
#include <string>

namespace trailnav {

/// Base class for all trailnav errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// mask I/O and geometry
class MissingFileError : public Error { public: using Error::Error; };
class MalformedImageError : public Error { public: using Error::Error; };
class IllegalClassValueError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
class ZeroFactorError : public Error { public: using Error::Error; };

// midline
class InvalidMidlineError : public Error { public: using Error::Error; };
class DegenerateGeometryError : public Error { public: using Error::Error; };

// pathfit
class UnderdeterminedError : public Error { public: using Error::Error; };
class DuplicateParamsError : public Error { public: using Error::Error; };
class NumericalFailureError : public Error { public: using Error::Error; };

// compensator
class WeightOutOfRangeError : public Error { public: using Error::Error; };

// dataprep
class UnmappedIdError : public Error { public: using Error::Error; };
class BoxOutOfBoundsError : public Error { public: using Error::Error; };
class EmptyDatasetError : public Error { public: using Error::Error; };

// evalkit
class DimensionMismatchError : public Error { public: using Error::Error; };
class NoEvaluablePixelsError : public Error { public: using Error::Error; };

// configuration / world files
class ConfigError : public Error { public: using Error::Error; };
class InvalidWorldError : public Error { public: using Error::Error; };
class EmptyDirectoryError : public Error { public: using Error::Error; };

}  // namespace trailnav
