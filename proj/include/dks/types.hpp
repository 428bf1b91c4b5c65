#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace dks {

template <typename Scalar> using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar> using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<double>;
using Matrix = MatrixX<double>;

using Vertex = std::int32_t;
using Label = std::int64_t;

/// Malformed input text; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An exhaustive routine refused an instance above its size guard.
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A solver hit a numerical failure (non-finite values, impossible FW gap).
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace dks
