#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spoofguard {

// Row-major matrices so on-disk layout (row-major f32/f64) maps 1:1.
using MatF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VecD = Eigen::VectorXd;
using VecF = Eigen::VectorXf;

enum class ErrorKind {
  kUsage,     // bad flags, bad config keys, bad dimensions requested
  kIo,        // filesystem failures
  kFormat,    // malformed or unsupported file contents
  kData,      // semantically invalid data (labels, duplicates, empty sets)
  kTraining,  // optimizer divergence / non-convergence
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// ---- Deterministic RNG helpers -------------------------------------------
//
// std::mt19937_64 output is fully pinned by the standard; the std::*_distribution
// mappings are not. Everything random in this library goes through the helpers
// below so that a given seed produces the same bits on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1).
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform in (0, 1].
inline double uniform01_open_lo(std::mt19937_64& g) {
  return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

inline std::size_t uniform_index(std::mt19937_64& g, std::size_t n) {
  return static_cast<std::size_t>(g() % n);
}

// Standard normal via Box-Muller (no cached second value).
inline double gaussian(std::mt19937_64& g) {
  const double u1 = uniform01_open_lo(g);
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Fisher-Yates with the pinned index mapping above.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_index(g, i)]);
  }
}

// Numerically safe logistic clamped to the open interval (0, 1).
double logistic(double x);

constexpr int kDefaultSampleRate = 16000;
constexpr int kDefaultFrameMs = 20;
constexpr int kDefaultDctCoeffs = 128;
constexpr int kDefaultContext = 10;

}  // namespace spoofguard
