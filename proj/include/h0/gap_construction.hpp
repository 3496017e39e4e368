#ifndef h0_gap_construction_hpp
#define h0_gap_construction_hpp

#include <map>

#include "h0/core_model.hpp"
#include "h0/transforms.hpp"

namespace h0 {

  // Parameters of the lattice construction. The coefficient vanishes on
  // gaps of half width eps around x0 + a*Z; the spectral profile lives on
  // thin windows around odd multiples of pi/a and vanishes to order n at
  // the window centers of the dual lattice.
  struct LatticeParams {
    double a = 1.0;
    double eps = 0.25;
    double x0 = 0.0;
    double b = 3.0;
    double nu = 0.1;
    int n = 1;
    double modulation = 0.0;  // extra phase exp(i*modulation*a*r)

    double delta() const { return eps / a; }
    void validate() const;
  };

  // Smooth bump exp(1 - delta^2/(delta^2 - s^2)) on (-delta, delta), unit
  // value at the center, identically zero outside.
  double bump(double s, double delta);

  // 2pi-periodic bump of unit height centered at odd multiples of pi with
  // support half width nu.
  double periodic_bump(double p, double nu);

  // Fourier transform (2*pi)^(-1/2) integral of bump(s, delta) exp(-i*p*s),
  // by adaptive Gauss quadrature sized to the phase.
  cplx bump_hat(double p, double delta);

  // Monotone majorant of |bump_hat| used for truncation decisions.
  double bump_hat_envelope(double p, double delta);

  // The spectral profile f(r) = periodic_bump(a*r) * (i*a*r)^n *
  // bump_hat(a*r) * exp(i*(modulation - x0/a)*a*r). Zero outside thin
  // windows around odd multiples of pi/a.
  class LatticeProfile {
  public:
    explicit LatticeProfile(const LatticeParams& params);

    cplx operator()(double r) const;
    const LatticeParams& params() const { return params_; }

    // Smallest radius beyond which the window tail is below tol in the
    // weighted L1 sense used by the quadrature assembly.
    double rmax(double tol = 1e-9) const;

    // Support windows with |r| <= radius, both signs, ascending.
    std::vector<std::pair<double, double>> windows(double radius) const;

    struct NodeSet {
      std::vector<double> r;
      std::vector<double> w;
      std::vector<cplx> f;
      double weighted_l2() const;  // sum w |f|^2 |r|
    };

    // Gauss nodes per support window with the profile evaluated on them.
    NodeSet window_nodes(double radius, int gl_order) const;

  private:
    LatticeParams params_;
    mutable std::map<std::pair<double, int>, NodeSet> cache_;
  };

  // Largest |f| on the inner interval [-b, b]; the construction keeps the
  // profile identically zero there whenever b stays inside the first
  // spectral gap.
  double verify_window_clearance(const LatticeProfile& profile, double b,
                                 int samples = 20001);

  struct LocalizationReport {
    double leak_rel = 0.0;  // sup off lattice / sup everywhere
    double sup_all = 0.0;
    double tail_rel = 0.0;  // estimated truncated window mass, relative
  };

  // Checks that the transform of f(r) r^(-j) concentrates on the
  // eps-vicinity of the coefficient lattice.
  LocalizationReport verify_lattice_localization(const LatticeProfile& profile,
                                                 int j, int gl_order = 24,
                                                 double step_divisor = 40.0);

  // Multiplier q on [-b, b], zero outside.
  struct SpectralWindow {
    double b = 3.0;
    cplx operator()(double q) const
    {
      return (q >= -b && q <= b) ? cplx(q) : cplx(0.0);
    }
  };

  // The assembled member of the selfadjoint subspace, kept in closed form:
  // density F(q, p) = chi(q) f(p q), its lift u(q, mu) = mu^(-2) F(q, 1/mu)
  // and the position field g obtained from u by the inverse velocity
  // transform.
  struct GapBundle {
    LatticeParams params;
    LatticeProfile profile;
    SpectralWindow chi;
    double norm = 0.0;  // shared value of the three norms

    explicit GapBundle(const LatticeParams& p);

    SpectralDensity density(const Grid1D& q_grid, const Grid1D& p_grid) const;
    StripFunction lift(const Grid1D& q_grid, const AngleGrid& angles) const;
    StripFunction field(const Grid1D& x_grid, const AngleGrid& angles) const;

    // Exact membership reduction: the pairing of the freely evolved field
    // against hat * mu^j, evaluated through closed-form velocity moments
    // on the profile quadrature. Returns the residual normalized by the
    // norms of field, hat and velocity profile, maximized over inputs.
    double membership_residual(const std::vector<int>& js,
                               const std::vector<HatFunction>& hats,
                               const std::vector<double>& times) const;

    // Canonical collision kernel paired with this construction: channels
    // mu^j, j < n, sharing the gap coefficient.
    CollisionKernel canonical_kernel() const;

    std::vector<HatFunction> canonical_hats() const;
  };

  GapBundle build_gap_bundle(const LatticeParams& params);

  // Membership residual for an arbitrary quadrature profile (not
  // necessarily a lattice construction); used for negative controls.
  double node_membership_residual(const LatticeProfile::NodeSet& nodes,
                                  double b, const std::vector<int>& js,
                                  const std::vector<HatFunction>& hats,
                                  const std::vector<double>& times);

  // integral of mu^j exp(-i*mu*s) over [0, A]
  cplx axis_moment(int j, double A, double s);
  // integral of sign(mu) mu^j exp(-i*mu*s) over [-A, A]
  cplx signed_axis_moment(int j, double A, double s);

  // Generic sampled-field membership check: translates the field with the
  // free flow, pairs with hat * conj(phi), normalizes by the three norms,
  // and maximizes over the supplied times.
  double verify_membership(const StripFunction& g,
                           const std::function<cplx(double)>& phi,
                           const HatFunction& h,
                           const std::vector<double>& times);

  struct IndependenceResult {
    int rank = 0;
    int expected = 0;
    bool independent = false;
    std::vector<double> singular_values;
  };

  // Numerical-rank probe for a family of separable densities
  // F_j(q, p) = window_factors[j](q) * spectral_factors[j](p q) * whats(pq):
  // samples both factors on probe sets, filters probes where the shared
  // transform factor vanishes, and ranks the resulting matrix.
  IndependenceResult independence_check(
    const std::vector<std::function<cplx(double)>>& spectral_factors,
    const std::vector<std::function<cplx(double)>>& window_factors,
    const LatticeParams& shared, const std::vector<double>& probe_rs,
    const std::vector<double>& probe_qs, double rel_tol = 1e-8);

}

#endif
