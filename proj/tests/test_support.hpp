#ifndef h0_test_support_hpp
#define h0_test_support_hpp

// Shared fixtures for the test binaries: a smooth function corpus on the
// strip whose members vanish at mu = 0 to fourth order and at mu = +-1 to
// second order, so every velocity row stays resolvable on the shared
// spectral grid.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "h0/core_model.hpp"
#include "h0/transforms.hpp"

namespace h0::testing {

  inline Grid1D corpus_x_grid()
  {
    return Grid1D::uniform_spaced(-16.0, 0.0625, 512);
  }

  inline AngleGrid corpus_angles()
  {
    return AngleGrid::gauss(16);
  }

  // Spectral grid fine enough that the row at the smallest velocity node of
  // corpus_angles() is still sampled above its Nyquist rate.
  inline Grid1D corpus_q_grid()
  {
    return Grid1D::uniform_spaced(-8.0, 16.0 / 4096.0, 4096);
  }

  struct CorpusEntry {
    std::string name;
    std::function<double(double)> envelope;   // x factor
    std::function<double(double)> profile;    // mu factor
  };

  inline std::vector<CorpusEntry> corpus_entries()
  {
    auto pow_int = [](double v, int k) {
      double r = 1.0;
      for (int i = 0; i < k; ++i)
        r *= v;
      return r;
    };
    auto mu4 = [pow_int](double mu) {
      return pow_int(mu, 4) * pow_int(1.0 - mu * mu, 2);
    };
    auto mu5 = [pow_int](double mu) {
      return pow_int(mu, 5) * pow_int(1.0 - mu * mu, 2);
    };
    auto mu6 = [pow_int](double mu) {
      return pow_int(mu, 6) * pow_int(1.0 - mu * mu, 3);
    };
    auto mu_mix = [mu4, mu5](double mu) { return mu4(mu) + 0.5 * mu5(mu); };

    std::vector<CorpusEntry> out;
    out.push_back({"gauss", [](double x) { return std::exp(-0.5 * x * x); }, mu4});
    out.push_back({"odd_gauss", [](double x) { return x * std::exp(-0.5 * x * x); }, mu4});
    out.push_back({"shifted", [](double x) { return std::exp(-0.5 * (x - 1.0) * (x - 1.0)); }, mu5});
    out.push_back({"cosine_packet", [](double x) { return std::exp(-0.25 * x * x) * std::cos(2.0 * x); }, mu4});
    out.push_back({"sine_packet", [](double x) { return std::exp(-0.5 * x * x) * std::sin(x); }, mu6});
    out.push_back({"wide", [](double x) { return std::exp(-x * x / 3.0); }, mu5});
    out.push_back({"left_shift", [](double x) { return std::exp(-0.5 * (x + 2.0) * (x + 2.0)); }, mu4});
    out.push_back({"quadratic", [](double x) { return x * x * std::exp(-0.5 * x * x); }, mu6});
    out.push_back({"fast_packet", [](double x) { return std::exp(-0.5 * x * x) * std::cos(5.0 * x); }, mu4});
    out.push_back({"blend", [](double x) { return (1.0 + 0.3 * x) * std::exp(-0.4 * x * x); }, mu_mix});
    return out;
  }

  inline StripFunction sample_strip(const Grid1D& x, const AngleGrid& ag,
                                    const std::function<double(double)>& env,
                                    const std::function<double(double)>& prof)
  {
    StripFunction f;
    f.rep = Rep::position;
    f.line = x;
    f.angles = ag;
    f.values.resize(x.n, ag.size());
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < ag.size(); ++k)
        f.values(i, k) = env(x.nodes[(std::size_t)i]) * prof(ag.mu[(std::size_t)k]);
    return f;
  }

  // Random smooth spectral-side field supported on q in [0.5, 3.5], used
  // by the pairing and boundedness checks.
  inline StripFunction random_spectral_field(std::mt19937_64& rng,
                                             const Grid1D& q_grid,
                                             const AngleGrid& ag)
  {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double centers[3] = {1.4, 2.0, 2.7};
    double cs[3], ws[3];
    int ks[3];
    for (int j = 0; j < 3; ++j) {
      cs[j] = unif(rng);
      ws[j] = 0.25 + 0.15 * std::abs(unif(rng));
      ks[j] = 4 + j;
    }
    StripFunction v;
    v.rep = Rep::spectral;
    v.line = q_grid;
    v.angles = ag;
    v.values.resize(q_grid.n, ag.size());
    const double span = q_grid.hi - q_grid.lo;
    for (int i = 0; i < q_grid.n; ++i) {
      const double q = q_grid.nodes[(std::size_t)i];
      // Smooth window pinning the field to zero at both spectral edges.
      const double sw = std::sin(kPi * (q - q_grid.lo) / span);
      const double win = sw * sw;
      for (int k = 0; k < ag.size(); ++k) {
        const double mu = ag.mu[(std::size_t)k];
        double acc = 0.0;
        for (int j = 0; j < 3; ++j) {
          const double z = (q - centers[j]) / ws[j];
          double muk = 1.0;
          for (int e = 0; e < ks[j]; ++e)
            muk *= mu;
          acc += cs[j] * std::exp(-z * z) * muk;
        }
        const double edge = (1.0 - mu * mu);
        v.values(i, k) = acc * edge * edge * win;
      }
    }
    return v;
  }

}

#endif
