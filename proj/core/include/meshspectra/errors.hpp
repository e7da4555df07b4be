#pragma once

#include <stdexcept>
#include <string>

namespace meshspectra {

/// Base class for everything this library throws on bad input or bad data.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed mesh/manifest/feature file. Carries the 1-based line number when known.
class ParseError : public Error {
  public:
    ParseError(const std::string& file, long line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    long line() const { return line_; }

  private:
    long line_;
};

/// A face references a vertex that does not exist.
class IndexError : public Error {
  public:
    using Error::Error;
};

class EmptyMeshError : public Error {
  public:
    using Error::Error;
};

class BadLambdaError : public Error {
  public:
    using Error::Error;
};

class BandLimitError : public Error {
  public:
    using Error::Error;
};

class DegreeOutOfRangeError : public Error {
  public:
    using Error::Error;
};

class DegenerateNormError : public Error {
  public:
    using Error::Error;
};

class NegativeInputError : public Error {
  public:
    using Error::Error;
};

class WindowTooLargeError : public Error {
  public:
    using Error::Error;
};

class GridMismatchError : public Error {
  public:
    using Error::Error;
};

/// Descriptor kinds/lengths disagree where they must match (DTW pairs, feature dirs).
class KindMismatchError : public Error {
  public:
    using Error::Error;
};

/// Corpus items are not all of the same feature type, or do not fit the metric.
class MixedTypesError : public Error {
  public:
    using Error::Error;
};

class EmptyCurveError : public Error {
  public:
    using Error::Error;
};

class LabelMismatchError : public Error {
  public:
    using Error::Error;
};

class OutOfRangeError : public Error {
  public:
    using Error::Error;
};

/// Every class in the corpus is a singleton, so NN/FT/ST are undefined.
class SingletonClassesError : public Error {
  public:
    using Error::Error;
};

}  // namespace meshspectra
