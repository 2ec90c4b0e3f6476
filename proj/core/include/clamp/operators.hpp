#pragma once

#include <Eigen/Core>
#include <functional>

namespace clamp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Matrix-free forward operator: apply evaluates A(x), jvp/vjp evaluate the
/// Jacobian actions J_A v and J_A^T u at a linearization point x. For linear
/// operators jvp ignores the point and equals apply.
struct ForwardOperator {
    Eigen::Index input_dim = 0;
    Eigen::Index output_dim = 0;
    bool is_linear = false;
    std::function<Vec(const Vec&)> apply;
    std::function<Vec(const Vec&, const Vec&)> jvp;  // (x, v) -> J_A v
    std::function<Vec(const Vec&, const Vec&)> vjp;  // (x, u) -> J_A^T u
};

/// Measurement y = A(x0) + n with n ~ N(0, beta_y^2 I).
struct MeasurementModel {
    ForwardOperator op;
    Vec y;
    double beta_y = 0.05;
};

ForwardOperator make_identity_operator(Eigen::Index dim);

/// Dense linear operator; used for oracles and random test instances.
ForwardOperator make_dense_operator(Mat A);

/// Elementwise binary mask (inpainting analog). Self-adjoint diagonal.
ForwardOperator make_mask_operator(Vec mask);

/// Circular 2-D convolution on an H x W grid with an odd-sized kernel
/// (deblurring analog). The adjoint is circular correlation.
ForwardOperator make_conv_operator(Mat kernel, int height, int width);

/// Block-average pooling by `factor` in each grid direction (super-resolution
/// analog). factor must divide both grid dims.
ForwardOperator make_downsample_operator(int factor, int height, int width);

/// Masked DFT with an optional complex diagonal sensitivity map. Complex data
/// travels as interleaved (re, im) pairs, so a signal of n complex samples is
/// a real vector of length 2n. The DFT is unitary (1/sqrt(n) scaling).
/// `freq_mask` has one binary entry per real channel (length 2n); `sens` is an
/// interleaved complex diagonal of length 2n, or empty for identity.
ForwardOperator make_masked_fourier_operator(Vec freq_mask, Vec sens = Vec());

/// Smoothed Fourier magnitude |F P x| with zero-padding to oversample*dim
/// (phase-retrieval analog): apply(x)_i = sqrt(|(F P x)_i|^2 + smooth_eps).
/// Input is real; output has one entry per padded frequency.
ForwardOperator make_magnitude_operator(Eigen::Index dim, int oversample,
                                        double smooth_eps = 1e-12);

/// Elementwise smooth saturation (high-dynamic-range analog):
///   y = u * (1 + (u^2)^k)^(-1/(2k)) with u = gain*x, k = sharpness.
/// Slope gain near zero, limit +/-1 at infinity, derivative
///   dy/dx = gain * (1 + (u^2)^k)^(-(2k+1)/(2k)).
ForwardOperator make_saturation_operator(Eigen::Index dim, double gain,
                                         double sharpness);

/// conv(phi_gamma(x)) with the smooth monotone pointwise map
/// phi_gamma(x) = (exp(gamma*x) - 1)/gamma (identity at gamma = 0).
ForwardOperator make_nonlinear_blur_operator(Mat kernel, int height, int width,
                                             double gamma);

/// Composition outer(inner(.)) with chain-rule jvp/vjp. Used to fold a latent
/// decoder into the measurement operator.
ForwardOperator compose_operators(const ForwardOperator& outer,
                                  const ForwardOperator& inner);

/// Central finite-difference fallback for J_A v, step h = 1e-4*(1+||x||_inf).
Vec finite_difference_jvp(const std::function<Vec(const Vec&)>& apply,
                          const Vec& x, const Vec& v);

/// Max over random probe pairs of |<Jv,u> - <v,J^T u>| / (||Jv|| ||u|| + eps).
double adjoint_check(const ForwardOperator& op, const Vec& x, int trials,
                     unsigned seed);

}  // namespace clamp
