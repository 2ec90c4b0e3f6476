#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

namespace clamp {

using Vec = Eigen::VectorXd;

/// Square linear operator given only as an action v -> M(v).
struct LinearMap {
    Eigen::Index dim = 0;
    std::function<Vec(const Vec&)> matvec;
};

struct GmresResult {
    Vec solution;
    int iterations = 0;          // Arnoldi steps actually taken (m <= K)
    double residual = 0.0;       // final least-squares residual norm
    bool breakdown = false;      // ||b|| < tau, or h_{j+1,j} < tau mid-cycle
    std::vector<Vec> basis;      // orthonormal Krylov basis v_1..v_m
};

/// Fixed-budget GMRES without restarts or preconditioning. Arnoldi uses
/// modified Gram-Schmidt; the Hessenberg least-squares problem is maintained
/// incrementally with Givens rotations. If ||b|| < tau the zero vector is
/// returned with the breakdown flag set. Throws std::runtime_error when the
/// matvec produces non-finite values.
GmresResult gmres_solve(const LinearMap& map, const Vec& b, int max_iters,
                        double tau = 1e-12);

}  // namespace clamp
