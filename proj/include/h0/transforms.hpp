#ifndef h0_transforms_hpp
#define h0_transforms_hpp

#include "h0/core_model.hpp"

namespace h0 {

  // Result of a line Fourier transform on a uniform grid. The dual grid is
  // uniform with spacing 2*pi/(n*h) and is centered so that a symmetric
  // input grid maps to a symmetric output grid.
  struct LineTransform {
    Grid1D p_grid;
    Eigen::VectorXcd values;
    double boundary_rel = 0.0;   // edge magnitude of the input, relative
    double tail_rel = 0.0;       // edge magnitude of the output, relative
    bool decay_ok = false;       // boundary_rel <= 1e-12
  };

  // (2*pi)^(-1/2) * integral f(x) exp(sign*i*p*x) dx on the dual grid.
  // Requires an even node count. The transform itself never throws on poor
  // decay; the result carries the measured boundary magnitudes.
  LineTransform fourier_line(const Grid1D& x_grid, const Eigen::VectorXcd& f,
                             int sign = -1);

  // The uniform grid dual to g under fourier_line.
  Grid1D fourier_dual_grid(const Grid1D& g);

  // Band-limited (Whittaker) interpolation of samples on a uniform grid.
  // Targets outside the grid span evaluate to zero.
  class SincTable {
  public:
    SincTable(const Grid1D& grid, const Eigen::VectorXcd& samples);
    cplx operator()(double t) const;

  private:
    double p0_, dp_, pend_;
    Eigen::VectorXcd alt_;  // samples with alternating signs folded in
  };

  // Sampled function on a product of two line grids.
  struct PlaneFunction {
    Grid1D first;
    Grid1D second;
    Eigen::MatrixXcd values;  // first.n rows, second.n columns

    void check_shape() const;
  };

  enum class PlaneWeight { plain, abs_second };
  double plane_norm(const PlaneFunction& v, PlaneWeight weight = PlaneWeight::plain);

  // Row-wise Fourier transform in the second variable.
  PlaneFunction fourier_second(const PlaneFunction& v, int sign = -1);

  // Barycentric interpolation in the velocity variable, per quadrature
  // panel of the angle grid.
  class AngleInterp {
  public:
    explicit AngleInterp(const AngleGrid& grid);
    // Coefficient vector c with f(mu) ~= sum_k c_k f(mu_k).
    Eigen::VectorXd coefficients(double mu) const;

  private:
    AngleGrid grid_;
    std::vector<double> bary_;  // barycentric weights, both panels
    int half_;
  };

  struct VelocityTransformResult {
    StripFunction field;       // transformed data
    double boundary_rel = 0.0; // worst spatial decay among velocity rows
    double tail_rel = 0.0;     // worst spectral tail among velocity rows
    bool decay_ok = false;
  };

  // Velocity-scaled Fourier transform of a position-representation strip
  // function: output(q, mu) = |mu|^(-1) * fhat(q/mu, mu) with fhat the line
  // transform in x at fixed mu.
  VelocityTransformResult phi_forward(const StripFunction& f,
                                      const Grid1D& q_grid);

  struct PhiInverseParams {
    double row_drop_rel = 1e-14;   // rows below this relative mass are zero
    int gl_order = 12;             // panel order for the oscillatory quadrature
    double nodes_per_period = 10.0;
    long max_row_nodes = 4000000;  // budget before raising ResolutionError
  };

  // Inverse of phi_forward: g(x, mu) = (2*pi)^(-1/2) * integral over q of
  // exp(i*x*q/mu) u(q, mu) dq, with adaptive oscillatory quadrature per
  // velocity row.
  StripFunction phi_inverse(const StripFunction& u, const Grid1D& x_grid,
                            const PhiInverseParams& params = {});

  // Velocity inversion: (Jv)(q, s) = s^(-2) v(q, 1/s) for |s| > 1, zero
  // for |s| <= 1. The zeros inside the unit interval are stored.
  PlaneFunction j_map(const StripFunction& v, double s_max, int n_s);

  struct PsiParams {
    double s_max = 64.0;
    int n_s = 8192;
    double min_q_distance = 1e-3;  // required distance of supp v from q = 0
  };

  // Oscillatory pairing transform: (Psi v)(q, x) is the Fourier transform
  // of (Jv)(q, .) evaluated at -x*q.
  PlaneFunction psi_transform(const StripFunction& v, const Grid1D& x_grid,
                              const PsiParams& params = {});

  // Multiply each spectral row by exp(-i*q*t); implements free evolution on
  // the spectral side.
  StripFunction translate_spectral(const StripFunction& u, double t);

  // Discrepancy between the direct space-time pairing of the evolved field
  // against h(x) * phi(mu) and its one-dimensional spectral reduction
  // through psi_transform, maximized over the supplied times.
  double sampling_identity_check(const StripFunction& u,
                                 const std::function<cplx(double)>& phi,
                                 const HatFunction& h,
                                 const std::vector<double>& times,
                                 const PsiParams& params = {});

}

#endif
