#include "clamp/krylov.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace clamp {

GmresResult gmres_solve(const LinearMap& map, const Vec& b, int max_iters,
                        double tau) {
    if (max_iters < 1) throw std::invalid_argument("gmres_solve: budget must be >= 1");
    if (b.size() != map.dim) throw std::invalid_argument("gmres_solve: rhs dimension mismatch");

    GmresResult result;
    result.solution = Vec::Zero(map.dim);

    const double beta = b.norm();
    if (beta < tau) {
        result.breakdown = true;
        return result;
    }

    const int K = max_iters;
    std::vector<Vec>& V = result.basis;
    V.reserve(static_cast<std::size_t>(K) + 1);
    V.push_back(b / beta);

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(K + 1, K);
    // Givens rotations applied to H's columns as they arrive; g carries the
    // rotated rhs beta*e1, so |g(m)| is the current least-squares residual.
    std::vector<double> cs(K), sn(K);
    Vec g = Vec::Zero(K + 1);
    g(0) = beta;

    int m = 0;
    bool broke_down = false;
    for (int j = 0; j < K; ++j) {
        Vec w = map.matvec(V[static_cast<std::size_t>(j)]);
        if (!w.allFinite()) throw std::runtime_error("gmres_solve: matvec produced non-finite values");

        // Modified Gram-Schmidt
        for (int l = 0; l <= j; ++l) {
            H(l, j) = V[static_cast<std::size_t>(l)].dot(w);
            w -= H(l, j) * V[static_cast<std::size_t>(l)];
        }
        H(j + 1, j) = w.norm();

        // Apply the accumulated rotations to the new column, then form the
        // rotation that annihilates H(j+1, j).
        for (int l = 0; l < j; ++l) {
            const double tmp = cs[static_cast<std::size_t>(l)] * H(l, j) + sn[static_cast<std::size_t>(l)] * H(l + 1, j);
            H(l + 1, j) = -sn[static_cast<std::size_t>(l)] * H(l, j) + cs[static_cast<std::size_t>(l)] * H(l + 1, j);
            H(l, j) = tmp;
        }
        const double denom = std::hypot(H(j, j), H(j + 1, j));
        if (denom > 0.0) {
            cs[static_cast<std::size_t>(j)] = H(j, j) / denom;
            sn[static_cast<std::size_t>(j)] = H(j + 1, j) / denom;
        } else {
            cs[static_cast<std::size_t>(j)] = 1.0;
            sn[static_cast<std::size_t>(j)] = 0.0;
        }
        H(j, j) = denom;
        H(j + 1, j) = 0.0;
        g(j + 1) = -sn[static_cast<std::size_t>(j)] * g(j);
        g(j) = cs[static_cast<std::size_t>(j)] * g(j);

        m = j + 1;
        const double h_next = (j + 1 <= K) ? w.norm() : 0.0;
        if (h_next < tau) {
            broke_down = true;
            break;
        }
        V.push_back(w / h_next);
    }

    // Back-substitute the triangularized Hessenberg system.
    Vec y = Vec::Zero(m);
    for (int i = m - 1; i >= 0; --i) {
        double s = g(i);
        for (int l = i + 1; l < m; ++l) s -= H(i, l) * y(l);
        y(i) = s / H(i, i);
    }
    for (int i = 0; i < m; ++i) result.solution += y(i) * V[static_cast<std::size_t>(i)];

    result.iterations = m;
    result.residual = std::abs(g(m));
    result.breakdown = broke_down;
    // Trim the basis to the m vectors actually spanning the solution space.
    if (V.size() > static_cast<std::size_t>(m)) V.resize(static_cast<std::size_t>(m));
    return result;
}

}  // namespace clamp
