#ifndef h0_core_model_hpp
#define h0_core_model_hpp

#include <Eigen/Dense>
#include <functional>

#include "h0/grids.hpp"

namespace h0 {

  enum class Rep {
    position,  // first variable is x
    spectral   // first variable is q
  };

  // Sampled function on the strip R x [-1,1]. Rows follow the line grid
  // (x or q depending on rep), columns follow the angle grid.
  struct StripFunction {
    Rep rep = Rep::position;
    Grid1D line;
    AngleGrid angles;
    Eigen::MatrixXcd values;  // line.n rows, angles.size() columns

    void check_shape() const;
  };

  // Sampled function on R x {|p| >= 1}, the image side of the velocity
  // inversion. Values at |p| < 1 are stored explicitly as zeros. An
  // optional closed-form evaluator supports off-grid sampling.
  struct SpectralDensity {
    Grid1D q_grid;
    Grid1D p_grid;
    Eigen::MatrixXcd values;  // q_grid.n rows, p_grid.n columns
    std::function<cplx(double q, double p)> eval;  // may be empty

    void check_shape() const;
  };

  // One scattering channel: a spatial coefficient with exact support
  // bounds and a velocity profile.
  struct Channel {
    std::function<double(double)> c;     // coefficient on the line
    double support_lo = 0.0;             // exact support interval of c
    double support_hi = 0.0;
    std::function<cplx(double)> phi;     // velocity profile on [-1,1]
    std::string label;
  };

  struct CollisionKernel {
    std::vector<Channel> channels;

    // Rank of the velocity-profile Gram matrix under the L2(-1,1) pairing,
    // counted at a relative eigenvalue threshold.
    int gram_rank(double rel_tol = 1e-8, int quad_order = 64) const;
  };

  // Spatial coefficient that vanishes identically on periodic gaps:
  // zero whenever |x - x0 - a*round((x-x0)/a)| < eps, and equal to a
  // smooth envelope elsewhere. The gap zeros are exact, not rounded.
  struct GapLatticeCoefficient {
    double x0 = 0.0;
    double a = 1.0;
    double eps = 0.25;
    std::function<double(double)> envelope;  // defaults to 1

    double operator()(double x) const;
  };

  double eval_gap_coefficient(const GapLatticeCoefficient& coeff, double x);

  // Triangular bump of unit height: support [center-halfwidth,
  // center+halfwidth].
  struct HatFunction {
    double center = 0.0;
    double halfwidth = 0.25;

    double operator()(double x) const;
    double norm() const;  // sqrt(2*halfwidth/3)
    // (2*pi)^(-1/2) * integral of h(x) * exp(i*r*x) dx, in closed form.
    cplx fourier_conj(double r) const;
  };

  // Finite family of test functions attached to a coefficient support.
  struct TestFunctionFamily {
    std::vector<HatFunction> members;

    // Hats spread uniformly across [lo,hi], widths chosen so supports stay
    // inside the interval.
    static TestFunctionFamily spread(double lo, double hi, int count);
  };

  // Norm in L2(|p| dq dp) of a sampled density, by composite quadrature on
  // both grids.
  double weighted_norm(const SpectralDensity& F);

  // Norm of a strip function, optionally with the |mu| weight on the
  // velocity factor.
  enum class StripWeight { plain, abs_mu };
  double strip_norm(const StripFunction& u, StripWeight weight = StripWeight::plain);

}

#endif
