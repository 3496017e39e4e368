#include "h0/transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

namespace h0 {

  namespace {

    std::mutex& fftw_mutex()
    {
      static std::mutex m;
      return m;
    }

    // Unnormalized DFT with the requested exponent sign, via FFTW.
    void dft(std::vector<cplx>& data, int sign)
    {
      std::lock_guard<std::mutex> lock(fftw_mutex());
      fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
      fftw_plan plan = fftw_plan_dft_1d((int)data.size(), buf, buf,
                                        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                        FFTW_ESTIMATE);
      fftw_execute(plan);
      fftw_destroy_plan(plan);
    }

    double vector_max_abs(const Eigen::VectorXcd& v)
    {
      double m = 0.0;
      for (Eigen::Index i = 0; i < v.size(); ++i)
        m = std::max(m, std::abs(v(i)));
      return m;
    }

  }

  Grid1D fourier_dual_grid(const Grid1D& g)
  {
    require(g.n % 2 == 0, "fourier_dual_grid: even node count required");
    const double dp = kTwoPi / (g.n * g.spacing());
    return Grid1D::uniform_spaced(-0.5 * g.n * dp, dp, g.n);
  }

  LineTransform fourier_line(const Grid1D& x_grid, const Eigen::VectorXcd& f,
                             int sign)
  {
    require(f.size() == x_grid.n, "fourier_line: sample count mismatch");
    require(x_grid.n % 2 == 0 && x_grid.n >= 4,
            "fourier_line: even node count of at least 4 required");
    require(sign == 1 || sign == -1, "fourier_line: sign must be +1 or -1");

    const int n = x_grid.n;
    const double h = x_grid.spacing();
    LineTransform out;
    out.p_grid = fourier_dual_grid(x_grid);

    std::vector<cplx> buf((std::size_t)n);
    for (int j = 0; j < n; ++j)
      buf[(std::size_t)j] = (j % 2 == 0 ? 1.0 : -1.0) * f(j);
    dft(buf, sign);

    out.values.resize(n);
    const double scale = h / kSqrt2Pi;
    for (int k = 0; k < n; ++k) {
      const double p = out.p_grid.nodes[(std::size_t)k];
      const cplx phase = std::exp(cplx(0.0, sign * p * x_grid.lo));
      out.values(k) = scale * phase * buf[(std::size_t)k];
    }

    const double fmax = vector_max_abs(f);
    const double vmax = vector_max_abs(out.values);
    out.boundary_rel =
      fmax > 0.0 ? std::max(std::abs(f(0)), std::abs(f(n - 1))) / fmax : 0.0;
    out.tail_rel = vmax > 0.0 ? std::max(std::abs(out.values(0)),
                                         std::abs(out.values(n - 1))) / vmax
                              : 0.0;
    out.decay_ok = out.boundary_rel <= 1e-12;
    return out;
  }

  SincTable::SincTable(const Grid1D& grid, const Eigen::VectorXcd& samples)
  {
    require(samples.size() == grid.n, "SincTable: sample count mismatch");
    p0_ = grid.lo;
    dp_ = grid.spacing();
    pend_ = grid.hi;
    alt_.resize(grid.n);
    for (int j = 0; j < grid.n; ++j)
      alt_(j) = (j % 2 == 0 ? 1.0 : -1.0) * samples(j);
  }

  cplx SincTable::operator()(double t) const
  {
    if (t < p0_ - 1e-12 || t > pend_ + 1e-12)
      return 0.0;
    const double s = (t - p0_) / dp_;
    const long m = std::lround(s);
    const double frac = s - (double)m;
    const long n = alt_.size();
    if (std::abs(frac) < 1e-9 && m >= 0 && m < n)
      return alt_(m) * ((m % 2 == 0) ? 1.0 : -1.0);
    cplx acc = 0.0;
    for (long j = 0; j < n; ++j)
      acc += alt_(j) / (s - (double)j);
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    return acc * (std::sin(kPi * frac) * sgn / kPi);
  }

  void PlaneFunction::check_shape() const
  {
    require(values.rows() == first.n && values.cols() == second.n,
            "PlaneFunction: value matrix does not match grids");
  }

  double plane_norm(const PlaneFunction& v, PlaneWeight weight)
  {
    v.check_shape();
    const std::vector<double> w1 = v.first.integration_weights();
    const std::vector<double> w2 = v.second.integration_weights();
    double acc = 0.0;
    for (int i = 0; i < v.first.n; ++i) {
      double row = 0.0;
      for (int j = 0; j < v.second.n; ++j) {
        const double sw = weight == PlaneWeight::abs_second
                            ? std::abs(v.second.nodes[(std::size_t)j])
                            : 1.0;
        row += w2[(std::size_t)j] * sw * std::norm(v.values(i, j));
      }
      acc += w1[(std::size_t)i] * row;
    }
    require(std::isfinite(acc), "plane_norm: non-finite accumulation");
    return std::sqrt(acc);
  }

  PlaneFunction fourier_second(const PlaneFunction& v, int sign)
  {
    v.check_shape();
    PlaneFunction out;
    out.first = v.first;
    out.second = fourier_dual_grid(v.second);
    out.values.resize(v.first.n, v.second.n);
    for (int i = 0; i < v.first.n; ++i) {
      LineTransform lt = fourier_line(v.second, v.values.row(i).transpose(),
                                      sign);
      out.values.row(i) = lt.values.transpose();
    }
    return out;
  }

  AngleInterp::AngleInterp(const AngleGrid& grid) : grid_(grid)
  {
    const int n = grid.size();
    require(n >= 4 && n % 2 == 0, "AngleInterp: malformed angle grid");
    half_ = n / 2;
    bary_.resize((std::size_t)n);
    for (int panel = 0; panel < 2; ++panel) {
      const int off = panel * half_;
      const double lo = grid.mu[(std::size_t)off];
      const double hi = grid.mu[(std::size_t)(off + half_ - 1)];
      const double mid = 0.5 * (lo + hi), span = 0.5 * (hi - lo);
      for (int i = 0; i < half_; ++i) {
        double w = 1.0;
        const double xi = (grid.mu[(std::size_t)(off + i)] - mid) / span;
        for (int j = 0; j < half_; ++j) {
          if (j == i)
            continue;
          const double xj = (grid.mu[(std::size_t)(off + j)] - mid) / span;
          w /= (xi - xj);
        }
        bary_[(std::size_t)(off + i)] = w;
      }
    }
  }

  Eigen::VectorXd AngleInterp::coefficients(double mu) const
  {
    require(mu >= -1.0 && mu <= 1.0, "AngleInterp: velocity outside [-1,1]");
    const int panel = mu < 0.0 ? 0 : 1;
    const int off = panel * half_;
    const double lo = grid_.mu[(std::size_t)off];
    const double hi = grid_.mu[(std::size_t)(off + half_ - 1)];
    const double mid = 0.5 * (lo + hi), span = 0.5 * (hi - lo);
    const double xi = (mu - mid) / span;

    Eigen::VectorXd c = Eigen::VectorXd::Zero(grid_.size());
    double denom = 0.0;
    for (int i = 0; i < half_; ++i) {
      const double xn = (grid_.mu[(std::size_t)(off + i)] - mid) / span;
      if (std::abs(xi - xn) < 1e-14) {
        c.setZero();
        c(off + i) = 1.0;
        return c;
      }
      const double t = bary_[(std::size_t)(off + i)] / (xi - xn);
      c(off + i) = t;
      denom += t;
    }
    c /= denom;
    return c;
  }

  VelocityTransformResult phi_forward(const StripFunction& f,
                                      const Grid1D& q_grid)
  {
    f.check_shape();
    require(f.rep == Rep::position, "phi_forward: expects position data");

    VelocityTransformResult out;
    out.field.rep = Rep::spectral;
    out.field.line = q_grid;
    out.field.angles = f.angles;
    out.field.values = Eigen::MatrixXcd::Zero(q_grid.n, f.angles.size());

    double gmax = 0.0;
    for (int k = 0; k < f.angles.size(); ++k)
      gmax = std::max(gmax, vector_max_abs(f.values.col(k)));

    for (int k = 0; k < f.angles.size(); ++k) {
      const double mu = f.angles.mu[(std::size_t)k];
      const Eigen::VectorXcd col = f.values.col(k);
      if (gmax > 0.0 && vector_max_abs(col) <= 1e-300 * gmax)
        continue;
      LineTransform lt = fourier_line(f.line, col, -1);
      out.boundary_rel = std::max(out.boundary_rel, lt.boundary_rel);
      out.tail_rel = std::max(out.tail_rel, lt.tail_rel);
      SincTable table(lt.p_grid, lt.values);
      const double inv = 1.0 / std::abs(mu);
      for (int i = 0; i < q_grid.n; ++i)
        out.field.values(i, k) = inv * table(q_grid.nodes[(std::size_t)i] / mu);
    }
    out.decay_ok = out.boundary_rel <= 1e-12;
    return out;
  }

  StripFunction phi_inverse(const StripFunction& u, const Grid1D& x_grid,
                            const PhiInverseParams& params)
  {
    u.check_shape();
    require(u.rep == Rep::spectral, "phi_inverse: expects spectral data");

    StripFunction g;
    g.rep = Rep::position;
    g.line = x_grid;
    g.angles = u.angles;
    g.values = Eigen::MatrixXcd::Zero(x_grid.n, u.angles.size());

    const double xabs = std::max(std::abs(x_grid.lo), std::abs(x_grid.hi));
    double gmax = 0.0;
    for (int k = 0; k < u.angles.size(); ++k)
      gmax = std::max(gmax, vector_max_abs(u.values.col(k)));
    if (gmax == 0.0)
      return g;

    for (int k = 0; k < u.angles.size(); ++k) {
      const double mu = u.angles.mu[(std::size_t)k];
      const Eigen::VectorXcd col = u.values.col(k);
      const double cmax = vector_max_abs(col);
      if (cmax <= params.row_drop_rel * gmax)
        continue;

      int i0 = 0, i1 = u.line.n - 1;
      while (i0 < i1 && std::abs(col(i0)) <= params.row_drop_rel * cmax)
        ++i0;
      while (i1 > i0 && std::abs(col(i1)) <= params.row_drop_rel * cmax)
        --i1;
      i0 = std::max(0, i0 - 2);
      i1 = std::min(u.line.n - 1, i1 + 2);
      const double qlo = u.line.nodes[(std::size_t)i0];
      const double qhi = u.line.nodes[(std::size_t)i1];
      const double width = std::max(qhi - qlo, 2.0 * u.line.spacing());

      const double periods = width * (xabs + 8.0) / (kTwoPi * std::abs(mu));
      const long nodes_needed =
        std::max<long>(48, (long)std::ceil(params.nodes_per_period * periods) + 32);
      if (nodes_needed > params.max_row_nodes)
        throw ResolutionError(
          "phi_inverse: velocity row at mu = " + std::to_string(mu) +
          " needs " + std::to_string(nodes_needed) +
          " quadrature nodes, budget is " +
          std::to_string(params.max_row_nodes));

      const int n_panels =
        (int)((nodes_needed + params.gl_order - 1) / params.gl_order);
      std::vector<double> edges((std::size_t)n_panels + 1);
      for (int j = 0; j <= n_panels; ++j)
        edges[(std::size_t)j] = qlo + (qhi - qlo) * j / n_panels;
      QuadRule rule = composite_gl(edges, params.gl_order);

      SincTable table(u.line, col);
      std::vector<cplx> uval(rule.size());
      for (std::size_t m = 0; m < rule.size(); ++m)
        uval[m] = table(rule.nodes[m]);

      for (int i = 0; i < x_grid.n; ++i) {
        const double rate = x_grid.nodes[(std::size_t)i] / mu;
        cplx acc = 0.0;
        for (std::size_t m = 0; m < rule.size(); ++m)
          acc += rule.weights[m] * uval[m] *
                 std::exp(cplx(0.0, rate * rule.nodes[m]));
        g.values(i, k) = acc / kSqrt2Pi;
      }
    }
    return g;
  }

  PlaneFunction j_map(const StripFunction& v, double s_max, int n_s)
  {
    v.check_shape();
    require(s_max > 1.0, "j_map: s_max must exceed 1");
    require(n_s >= 8 && n_s % 2 == 0, "j_map: even node count of at least 8");

    PlaneFunction out;
    out.first = v.line;
    out.second = Grid1D::uniform_spaced(-s_max, 2.0 * s_max / n_s, n_s);
    out.values = Eigen::MatrixXcd::Zero(v.line.n, n_s);

    AngleInterp interp(v.angles);
    for (int j = 0; j < n_s; ++j) {
      const double s = out.second.nodes[(std::size_t)j];
      if (std::abs(s) <= 1.0)
        continue;
      const Eigen::VectorXcd c =
        interp.coefficients(1.0 / s).cast<cplx>();
      out.values.col(j) = (v.values * c) / (s * s);
    }
    return out;
  }

  PlaneFunction psi_transform(const StripFunction& v, const Grid1D& x_grid,
                              const PsiParams& params)
  {
    v.check_shape();
    require(v.rep == Rep::spectral, "psi_transform: expects spectral data");

    double gmax = 0.0;
    for (int i = 0; i < v.line.n; ++i)
      gmax = std::max(gmax, vector_max_abs(v.values.row(i).transpose()));
    for (int i = 0; i < v.line.n; ++i) {
      const double q = v.line.nodes[(std::size_t)i];
      if (std::abs(q) < params.min_q_distance &&
          vector_max_abs(v.values.row(i).transpose()) > 1e-12 * gmax)
        throw InvalidInputError(
          "psi_transform: spectral support reaches closer than " +
          std::to_string(params.min_q_distance) + " to q = 0");
    }

    PlaneFunction jm = j_map(v, params.s_max, params.n_s);
    PlaneFunction fs = fourier_second(jm, -1);

    const double xabs = std::max(std::abs(x_grid.lo), std::abs(x_grid.hi));
    const double qabs =
      std::max(std::abs(v.line.lo), std::abs(v.line.hi));
    const double span = std::max(std::abs(fs.second.lo), fs.second.hi);
    if (xabs * qabs > span) {
      const long needed =
        (long)std::ceil(params.n_s * xabs * qabs / span) + 2;
      throw ResolutionError(
        "psi_transform: target phase " + std::to_string(xabs * qabs) +
        " exceeds the dual span " + std::to_string(span) +
        ", increase n_s to about " + std::to_string(needed));
    }

    PlaneFunction out;
    out.first = v.line;
    out.second = x_grid;
    out.values.resize(v.line.n, x_grid.n);
    for (int i = 0; i < v.line.n; ++i) {
      SincTable table(fs.second, fs.values.row(i).transpose());
      const double q = v.line.nodes[(std::size_t)i];
      for (int j = 0; j < x_grid.n; ++j)
        out.values(i, j) = table(-x_grid.nodes[(std::size_t)j] * q);
    }
    return out;
  }

  StripFunction translate_spectral(const StripFunction& u, double t)
  {
    u.check_shape();
    require(u.rep == Rep::spectral, "translate_spectral: expects spectral data");
    StripFunction out = u;
    for (int i = 0; i < u.line.n; ++i)
      out.values.row(i) *=
        std::exp(cplx(0.0, -u.line.nodes[(std::size_t)i] * t));
    return out;
  }

  double sampling_identity_check(const StripFunction& u,
                                 const std::function<cplx(double)>& phi,
                                 const HatFunction& h,
                                 const std::vector<double>& times,
                                 const PsiParams& params)
  {
    u.check_shape();
    require(!times.empty(), "sampling_identity_check: no times supplied");

    const Grid1D xh = Grid1D::uniform(h.center - h.halfwidth,
                                      h.center + h.halfwidth, 201);
    const std::vector<double> wx = xh.integration_weights();
    const std::vector<double> wq = u.line.integration_weights();

    // Spectral route: pair psi of (u * phi) with h once, then reduce each
    // time to a single oscillatory q integral.
    StripFunction v = u;
    for (int k = 0; k < u.angles.size(); ++k)
      v.values.col(k) *= phi(u.angles.mu[(std::size_t)k]);
    PlaneFunction psi = psi_transform(v, xh, params);
    Eigen::VectorXcd paired(u.line.n);
    for (int i = 0; i < u.line.n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < xh.n; ++j)
        acc += wx[(std::size_t)j] * psi.values(i, j) *
               h(xh.nodes[(std::size_t)j]);
      paired(i) = acc;
    }

    double worst = 0.0;
    for (double t : times) {
      StripFunction ut = translate_spectral(u, t);
      StripFunction gt = phi_inverse(ut, xh);
      cplx left = 0.0;
      for (int i = 0; i < xh.n; ++i) {
        cplx vel = 0.0;
        for (int k = 0; k < u.angles.size(); ++k)
          vel += u.angles.w[(std::size_t)k] * phi(u.angles.mu[(std::size_t)k]) *
                 gt.values(i, k);
        left += wx[(std::size_t)i] * h(xh.nodes[(std::size_t)i]) * vel;
      }
      cplx right = 0.0;
      for (int i = 0; i < u.line.n; ++i)
        right += wq[(std::size_t)i] *
                 std::exp(cplx(0.0, -u.line.nodes[(std::size_t)i] * t)) *
                 paired(i);
      worst = std::max(worst, std::abs(left - right));
    }
    return worst;
  }

}
