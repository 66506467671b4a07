#include "biframe/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace biframe {

Matrix gaussian_matrix(Index rows, Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = 1.0 / std::sqrt(2.0);
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re * scale, im * scale);
        }
    }
    return m;
}

Vector gaussian_vector(Index dim, std::mt19937_64& rng) {
    return gaussian_matrix(dim, 1, rng);
}

Vector random_unit_vector(Index dim, std::mt19937_64& rng) {
    Vector v = gaussian_vector(dim, rng);
    double n = v.norm();
    while (n == 0.0) {
        v = gaussian_vector(dim, rng);
        n = v.norm();
    }
    return v / n;
}

Matrix haar_unitary(Index dim, std::mt19937_64& rng) {
    const Matrix g = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(j) *= d / mag;
    }
    return q;
}

Matrix random_invertible(Index dim, std::mt19937_64& rng, double sigma_min, double sigma_max) {
    const Matrix u = haar_unitary(dim, rng);
    const Matrix v = haar_unitary(dim, rng);
    std::uniform_real_distribution<double> uniform(sigma_min, sigma_max);
    Eigen::VectorXd sigma(dim);
    for (Index k = 0; k < dim; ++k) sigma(k) = uniform(rng);
    return u * sigma.asDiagonal() * v.adjoint();
}

}  // namespace biframe
