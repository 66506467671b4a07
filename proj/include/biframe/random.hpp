#pragma once

#include "biframe/types.hpp"

#include <cstdint>
#include <random>

namespace biframe {

/// Matrix with i.i.d. standard complex Gaussian entries
/// (real and imaginary parts N(0, 1/2), unit total variance).
Matrix gaussian_matrix(Index rows, Index cols, std::mt19937_64& rng);

Vector gaussian_vector(Index dim, std::mt19937_64& rng);

/// Uniformly distributed unit vector (normalized complex Gaussian).
Vector random_unit_vector(Index dim, std::mt19937_64& rng);

/// Haar-distributed unitary via QR of a Gaussian matrix with the phase fix.
Matrix haar_unitary(Index dim, std::mt19937_64& rng);

/// Random invertible operator with singular values uniform in
/// [sigma_min, sigma_max]; condition number at most sigma_max/sigma_min.
Matrix random_invertible(Index dim, std::mt19937_64& rng, double sigma_min = 0.5,
                         double sigma_max = 2.0);

}  // namespace biframe
