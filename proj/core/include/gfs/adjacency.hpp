#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gfs/tensor.hpp"

namespace gfs {

class Rng;

/// Provenance of an adjacency matrix: which generator produced it.
enum class AdjacencyKind {
  Random,              // row softmax of a standard-Gaussian draw
  Uniform,             // every entry 1/n
  Identity,            // isolates every vertex
  IdentityPlusRandom,  // I + Random
  IdentityPlusUniform, // I + Uniform
  DistanceKernel,      // Gaussian kernel over point distances, row-normalized
  LnEquivalent,        // (Diag(w)/sigma)(I - R), the layer-norm matrix form
};

std::string to_string(AdjacencyKind kind);

/// Dense n x n vertex-mixing matrix with a provenance tag.
struct AdjacencyMatrix {
  std::size_t n = 0;
  Tensor values;  // n x n
  AdjacencyKind kind = AdjacencyKind::Identity;
};

/// Row softmax of an n x n standard-Gaussian draw; rows sum to 1.
AdjacencyMatrix gen_random(std::size_t n, Rng& rng);

/// Every entry exactly 1/n; multiplying by it averages all vertices.
AdjacencyMatrix gen_uniform(std::size_t n);

/// Standard identity: each vertex sees only itself.
AdjacencyMatrix gen_identity(std::size_t n);

/// I + a, entrywise.
AdjacencyMatrix add_self_loop(const AdjacencyMatrix& a);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// exp(-dist^2 / bandwidth^2) for pairs within `cutoff`, rows normalized
/// to sum to 1. A row with no neighbors inside the cutoff falls back to a
/// pure self-loop so the matrix stays row-stochastic.
AdjacencyMatrix gen_distance_kernel(const std::vector<Point2>& coords, double bandwidth,
                                    double cutoff);

/// The matrix A = (Diag(w)/sigma) * (I - R) with R filled with 1/n, for
/// which vertex-axis layer normalization equals A*v at feature dim 1 with
/// no bias.
AdjacencyMatrix ln_equivalent_matrix(const std::vector<double>& w, double sigma);

/// values * x for a length-n vector x.
std::vector<double> apply(const AdjacencyMatrix& a, const std::vector<double>& x);

}  // namespace gfs
