#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace mukit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Thrown when a truncation dimension is too small to host a construction;
/// carries the smallest dimension that would work.
class ResizeRequired : public std::runtime_error {
 public:
  ResizeRequired(const std::string& what, Index needed)
      : std::runtime_error(what), needed_dim(needed) {}
  Index needed_dim;
};

/// Thrown when an optimization backend cannot produce a certified result.
/// Never carries a fabricated value.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Derives an independent stream seed from a root seed and a stream index
/// (splitmix64 finalizer). Used so parallel trials stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t root, std::uint64_t stream = 0) {
  return std::mt19937_64(derive_seed(root, stream));
}

}  // namespace mukit
