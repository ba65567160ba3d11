#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Symmetric matrix of shortest-path lengths of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Row-major entries; validates symmetry, zero diagonal, positive
  /// off-diagonal entries and the triangle inequality.
  DistanceMatrix(int n, std::vector<int> entries);

  int order() const { return n_; }
  int operator()(int i, int j) const { return d_[i * n_ + j]; }
  std::span<const int> row(int i) const {
    return {d_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  long long row_sum(int i) const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

struct PerronOptions {
  double bracket_width = 1e-10;
  int max_iter = 100000;
};

/// Spectral radius with a Collatz-Wielandt bracket lower <= value <= upper.
struct PerronResult {
  double lambda = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> vector;  // positive, unit Euclidean norm
  double residual = 0.0;       // max |(Dx - lambda x)_i|
  int iterations = 0;

  double width() const { return upper - lower; }
};

class PerronError : public std::runtime_error {
 public:
  PerronError(const std::string& what, double lower, double upper, int iterations)
      : std::runtime_error(what), lower(lower), upper(upper), iterations(iterations) {}
  double lower;
  double upper;
  int iterations;
};

/// Power iteration from the all-ones vector. After every step the
/// Collatz-Wielandt ratios min/max (Dx)_i / x_i bracket the Perron root;
/// the bracket is widened by a floating-point error allowance and the
/// iteration stops once its width is at most `bracket_width`.
///
/// Throws PerronError with the best bracket if max_iter runs out, and
/// std::invalid_argument for a non-positive width or an empty matrix.
PerronResult perron(const DistanceMatrix& dm, const PerronOptions& options = {});

PerronResult perron(const Graph& g, const PerronOptions& options = {});

/// (x' D x) / (x' x).
double rayleigh_quotient(const DistanceMatrix& dm, std::span<const double> x);

/// x' (d_new - d_old) x.
double quadratic_form_delta(const DistanceMatrix& d_old,
                            const DistanceMatrix& d_new,
                            std::span<const double> x);

enum class Relation { kLess, kGreater, kIndistinguishable };

struct SpectralOrdering {
  Relation relation = Relation::kIndistinguishable;
  /// Disjoint brackets: distance between them (> 0). Otherwise the
  /// overlap width, reported as a negative number.
  double gap_lower_bound = 0.0;
};

/// Orders two Perron roots from their brackets alone.
SpectralOrdering certified_compare(const PerronResult& a, const PerronResult& b);

const char* to_string(Relation r);

}  // namespace distspec
