#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sek/graph.hpp"

namespace sek {

// Accuracy reported for every computed eigenvalue.
inline constexpr double kSolverTol = 1e-10;
// Jacobi sweeps stop once every off-diagonal entry is at most this.
inline constexpr double kOffDiagonalTol = 1e-12;
// Absolute slack for comparing spectral quantities against irrational bound values.
inline constexpr double kDefaultEpsEq = 1e-8;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
MatrixX<Scalar> adjacency_matrix(const Graph& g) {
    const int n = g.order();
    MatrixX<Scalar> a = MatrixX<Scalar>::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) a(u, v) = Scalar(1);
    }
    return a;
}

// Eigenpairs of a real symmetric matrix: values sorted descending, vectors(:, i) pairs with values(i).
template <typename Scalar>
struct SymmetricEigen {
    VectorX<Scalar> values;
    MatrixX<Scalar> vectors;
    int sweeps = 0;
};

// Cyclic Jacobi rotations until max |a_pq| <= off_tol. Deterministic: the rotation order is fixed
// and no randomisation or pivoting by magnitude is used.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      typename Derived::Scalar off_tol,
                                                      int max_sweeps = 100) {
    using Scalar = typename Derived::Scalar;
    using std::abs;
    using std::sqrt;

    if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen needs a square matrix");
    const Eigen::Index n = input.rows();
    MatrixX<Scalar> a = input;
    MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n);

    auto max_off = [&] {
        Scalar m(0);
        for (Eigen::Index q = 1; q < n; ++q)
            for (Eigen::Index p = 0; p < q; ++p) m = std::max(m, abs(a(p, q)));
        return m;
    };

    int sweep = 0;
    while (max_off() > off_tol) {
        if (++sweep > max_sweeps) throw std::runtime_error("Jacobi iteration did not converge");
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (apq == Scalar(0)) continue;
                // Rotation annihilating a(p,q): t = tan(phi) is the smaller root of t^2 + 2 theta t - 1 = 0.
                const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
                const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                                 (abs(theta) + sqrt(theta * theta + Scalar(1)));
                const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
                const Scalar s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar akp = a(k, p);
                    const Scalar akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar apk = a(p, k);
                    const Scalar aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = Scalar(0);
                a(q, p) = Scalar(0);
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar vkp = v(k, p);
                    const Scalar vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

    SymmetricEigen<Scalar> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values(i) = a(order[i], order[i]);
        out.vectors.col(i) = v.col(order[i]);
    }
    out.sweeps = sweep;
    return out;
}

struct Spectrum {
    std::vector<double> values;  // descending
    double tol = kSolverTol;
};

struct PerronData {
    double value = 0;
    std::vector<double> vector;  // unit norm, entry 0 positive
};

SymmetricEigen<double> adjacency_eigen(const Graph& g);

Spectrum spectrum(const Graph& g);
double least_eigenvalue(const Graph& g);
double spectral_radius(const Graph& g);
// Unit eigenvector for the least eigenvalue, as produced by the solver.
std::vector<double> least_eigenvector(const Graph& g);
PerronData perron_vector(const Graph& g);
// |lambda_n + rho| <= 100 tol; throws std::invalid_argument on non-bipartite input.
bool check_bipartite_negation(const Graph& g);

}  // namespace sek
