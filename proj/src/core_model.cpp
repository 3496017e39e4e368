#include "h0/core_model.hpp"

#include <cmath>

namespace h0 {

  void StripFunction::check_shape() const
  {
    require(values.rows() == line.n && values.cols() == angles.size(),
            "StripFunction: value matrix does not match grids");
  }

  void SpectralDensity::check_shape() const
  {
    require(values.rows() == q_grid.n && values.cols() == p_grid.n,
            "SpectralDensity: value matrix does not match grids");
  }

  int CollisionKernel::gram_rank(double rel_tol, int quad_order) const
  {
    const int n = (int)channels.size();
    if (n == 0)
      return 0;
    AngleGrid ag = AngleGrid::gauss(quad_order);
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < ag.size(); ++k) {
      Eigen::VectorXcd ph(n);
      for (int i = 0; i < n; ++i)
        ph(i) = channels[(std::size_t)i].phi(ag.mu[(std::size_t)k]);
      G += ag.w[(std::size_t)k] * ph * ph.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    if (top <= 0.0)
      return 0;
    int rank = 0;
    for (int i = 0; i < n; ++i)
      if (es.eigenvalues()(i) > rel_tol * top)
        ++rank;
    return rank;
  }

  double GapLatticeCoefficient::operator()(double x) const
  {
    const double d = x - x0 - a * std::round((x - x0) / a);
    if (std::abs(d) < eps)
      return 0.0;
    return envelope ? envelope(x) : 1.0;
  }

  double eval_gap_coefficient(const GapLatticeCoefficient& coeff, double x)
  {
    return coeff(x);
  }

  double HatFunction::operator()(double x) const
  {
    const double t = 1.0 - std::abs(x - center) / halfwidth;
    return t > 0.0 ? t : 0.0;
  }

  double HatFunction::norm() const
  {
    return std::sqrt(2.0 * halfwidth / 3.0);
  }

  cplx HatFunction::fourier_conj(double r) const
  {
    const double z = 0.5 * r * halfwidth;
    double s2;
    if (std::abs(z) < 1e-6) {
      s2 = 1.0 - z * z / 3.0;
    } else {
      const double s = std::sin(z) / z;
      s2 = s * s;
    }
    return std::exp(kI * (r * center)) * (halfwidth * s2 / kSqrt2Pi);
  }

  TestFunctionFamily TestFunctionFamily::spread(double lo, double hi, int count)
  {
    require(count >= 1, "TestFunctionFamily: need at least one member");
    require(hi > lo, "TestFunctionFamily: empty support interval");
    TestFunctionFamily fam;
    const double span = hi - lo;
    const double step = span / count;
    const double w = 0.45 * step;
    for (int i = 0; i < count; ++i)
      fam.members.push_back(HatFunction{lo + (i + 0.5) * step, w});
    return fam;
  }

  double weighted_norm(const SpectralDensity& F)
  {
    F.check_shape();
    const std::vector<double> wq = F.q_grid.integration_weights();
    const std::vector<double> wp = F.p_grid.integration_weights();
    double acc = 0.0;
    for (int i = 0; i < F.q_grid.n; ++i) {
      double row = 0.0;
      for (int j = 0; j < F.p_grid.n; ++j)
        row += wp[(std::size_t)j] * std::norm(F.values(i, j)) *
               std::abs(F.p_grid.nodes[(std::size_t)j]);
      acc += wq[(std::size_t)i] * row;
    }
    require(std::isfinite(acc), "weighted_norm: non-finite accumulation");
    return std::sqrt(acc);
  }

  double strip_norm(const StripFunction& u, StripWeight weight)
  {
    u.check_shape();
    const std::vector<double> wx = u.line.integration_weights();
    double acc = 0.0;
    for (int i = 0; i < u.line.n; ++i) {
      double row = 0.0;
      for (int k = 0; k < u.angles.size(); ++k) {
        const double vw = weight == StripWeight::abs_mu
                            ? std::abs(u.angles.mu[(std::size_t)k])
                            : 1.0;
        row += u.angles.w[(std::size_t)k] * vw * std::norm(u.values(i, k));
      }
      acc += wx[(std::size_t)i] * row;
    }
    require(std::isfinite(acc), "strip_norm: non-finite accumulation");
    return std::sqrt(acc);
  }

}
