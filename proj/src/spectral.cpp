#include "sek/spectral.hpp"

namespace sek {

namespace {

void require_nonempty(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("spectral quantities need at least one vertex");
}

}  // namespace

SymmetricEigen<double> adjacency_eigen(const Graph& g) {
    require_nonempty(g);
    return jacobi_eigen(adjacency_matrix<double>(g), kOffDiagonalTol);
}

Spectrum spectrum(const Graph& g) {
    const auto eig = adjacency_eigen(g);
    return {std::vector<double>(eig.values.data(), eig.values.data() + eig.values.size()), kSolverTol};
}

double least_eigenvalue(const Graph& g) { return spectrum(g).values.back(); }

double spectral_radius(const Graph& g) {
    const auto s = spectrum(g);
    return std::max(s.values.front(), -s.values.back());
}

std::vector<double> least_eigenvector(const Graph& g) {
    const auto eig = adjacency_eigen(g);
    const auto col = eig.vectors.col(eig.vectors.cols() - 1);
    return {col.data(), col.data() + col.size()};
}

PerronData perron_vector(const Graph& g) {
    require_nonempty(g);
    if (!is_connected(g)) throw std::invalid_argument("the Perron vector is defined for connected graphs only");
    const auto eig = adjacency_eigen(g);
    VectorX<double> x = eig.vectors.col(0);
    if (x(0) < 0) x = -x;
    x.normalize();
    return {eig.values(0), std::vector<double>(x.data(), x.data() + x.size())};
}

bool check_bipartite_negation(const Graph& g) {
    if (!is_bipartite(g)) throw std::invalid_argument("bipartite negation check needs a bipartite graph");
    if (g.order() == 0) return true;
    const auto s = spectrum(g);
    return std::abs(s.values.back() + s.values.front()) <= 100 * kSolverTol;
}

}  // namespace sek
