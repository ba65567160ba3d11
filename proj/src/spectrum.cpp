#include "distspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace distspec {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

void check_dimension(int n, std::size_t got, const char* op) {
  if (static_cast<std::size_t>(n) != got) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(n) + " vs " +
                                std::to_string(got) + ")");
  }
}

void multiply(const DistanceMatrix& dm, std::span<const double> x,
              std::vector<double>& y) {
  const int n = dm.order();
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    auto row = dm.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries)
    : n_(n), d_(std::move(entries)) {
  if (n < 0) throw std::invalid_argument("DistanceMatrix: negative order");
  check_dimension(n * n, d_.size(), "DistanceMatrix");
  for (int i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0) {
      throw std::invalid_argument("DistanceMatrix: nonzero diagonal");
    }
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw std::invalid_argument("DistanceMatrix: not symmetric");
      }
      if (i != j && (*this)(i, j) < 1) {
        throw std::invalid_argument("DistanceMatrix: off-diagonal entry < 1");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k)) {
          throw std::invalid_argument("DistanceMatrix: triangle inequality fails");
        }
      }
    }
  }
}

long long DistanceMatrix::row_sum(int i) const {
  auto r = row(i);
  return std::accumulate(r.begin(), r.end(), 0LL);
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw GraphError("distance_matrix: graph is disconnected");
      }
      d[static_cast<std::size_t>(s) * n + t] = dist[t];
    }
  }
  return DistanceMatrix(n, std::move(d));
}

PerronResult perron(const DistanceMatrix& dm, const PerronOptions& options) {
  const int n = dm.order();
  if (n == 0) throw std::invalid_argument("perron: empty matrix");
  if (!(options.bracket_width > 0)) {
    throw std::invalid_argument("perron: bracket width must be positive");
  }
  if (n == 1) {
    return PerronResult{0.0, 0.0, 0.0, {1.0}, 0.0, 0};
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y;
  double best_lower = 0.0;
  double best_upper = std::numeric_limits<double>::infinity();
  // Relative rounding allowance for one matrix-vector product and a ratio.
  const double slack = (n + 2) * kUnitRoundoff;

  for (int it = 1; it <= options.max_iter; ++it) {
    multiply(dm, x, y);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const double pad = slack * hi;
    lo = std::max(0.0, lo - pad);
    hi += pad;
    best_lower = std::max(best_lower, lo);
    best_upper = std::min(best_upper, hi);

    if (hi - lo <= options.bracket_width) {
      PerronResult out;
      out.iterations = it;
      out.lower = lo;
      out.upper = hi;
      out.lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
      out.lambda = std::clamp(out.lambda, lo, hi);
      out.vector = x;
      double res = 0.0;
      for (int i = 0; i < n; ++i) {
        res = std::max(res, std::abs(y[i] - out.lambda * x[i]));
      }
      out.residual = res;
      return out;
    }

    const double scale = norm2(y);
    for (int i = 0; i < n; ++i) x[i] = y[i] / scale;
  }
  throw PerronError("perron: bracket did not close within " +
                        std::to_string(options.max_iter) + " iterations",
                    best_lower, best_upper, options.max_iter);
}

PerronResult perron(const Graph& g, const PerronOptions& options) {
  return perron(distance_matrix(g), options);
}

double rayleigh_quotient(const DistanceMatrix& dm, std::span<const double> x) {
  check_dimension(dm.order(), x.size(), "rayleigh_quotient");
  std::vector<double> y;
  multiply(dm, x, y);
  const double num = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
  const double den = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
  if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
  return num / den;
}

double quadratic_form_delta(const DistanceMatrix& d_old,
                            const DistanceMatrix& d_new,
                            std::span<const double> x) {
  check_dimension(d_old.order(), static_cast<std::size_t>(d_new.order()),
                  "quadratic_form_delta");
  check_dimension(d_old.order(), x.size(), "quadratic_form_delta");
  const int n = d_old.order();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int diff = d_new(i, j) - d_old(i, j);
      if (diff != 0) acc += diff * x[i] * x[j];
    }
  }
  return acc;
}

SpectralOrdering certified_compare(const PerronResult& a, const PerronResult& b) {
  if (a.upper < b.lower) return {Relation::kLess, b.lower - a.upper};
  if (a.lower > b.upper) return {Relation::kGreater, a.lower - b.upper};
  const double overlap = std::min(a.upper, b.upper) - std::max(a.lower, b.lower);
  return {Relation::kIndistinguishable, -overlap};
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLess: return "LESS";
    case Relation::kGreater: return "GREATER";
    case Relation::kIndistinguishable: return "INDISTINGUISHABLE";
  }
  return "?";
}

}  // namespace distspec
