#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace straycal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument, index, bound, or out-of-range value.
struct DomainError : Error {
  using Error::Error;
};

// Quadrature step count below the accuracy floor.
struct PrecisionError : Error {
  using Error::Error;
};

// Correlation phasor has zero amplitude; phase is undefined.
struct DegeneratePhasorError : Error {
  using Error::Error;
};

// Input data unusable: too few points, degenerate distribution, or
// too many invalid pixels.
struct DataError : Error {
  using Error::Error;
};

// Amplitude segmentation produced an empty cluster.
struct SegmentationError : DataError {
  using DataError::DataError;
};

// The optimizer's loss function returned a non-finite value.
struct EvaluationError : Error {
  int particle_index;
  EvaluationError(const std::string& msg, int index)
      : Error(msg), particle_index(index) {}
};

struct IoError : Error {
  enum class Kind {
    OpenFailed,
    BadMagic,
    Truncated,
    SizeMismatch,
    DimensionMismatch,
    AmplitudeMismatch,
    BadFormat,
  };
  Kind kind;
  IoError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Row-major 2D pixel grid. (u, v) = (column, row).
template <typename T>
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int w, int h, T fill = T{})
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw DomainError("grid dimensions must be positive");
  }

  T& at(int u, int v) { return data[static_cast<std::size_t>(v) * width + u]; }
  const T& at(int u, int v) const {
    return data[static_cast<std::size_t>(v) * width + u];
  }

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }

  template <typename U>
  bool same_shape(const Grid<U>& other) const {
    return width == other.width && height == other.height;
  }
};

}  // namespace straycal
