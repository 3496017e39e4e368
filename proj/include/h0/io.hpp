#ifndef h0_io_hpp
#define h0_io_hpp

#include <json.hpp>

#include "h0/core_model.hpp"

namespace h0 {

  using json = nlohmann::ordered_json;

  inline constexpr const char* kReportSchemaVersion = "1.0";
  inline constexpr const char* kCsvHeader = "x_or_q, mu_or_p, re, im";

  // Complex numbers serialize as two-element arrays [re, im].
  json complex_to_json(cplx z);
  cplx complex_from_json(const json& j);

  void write_strip_csv(const std::string& path, const StripFunction& u);
  void write_density_csv(const std::string& path, const SpectralDensity& F);

  // One verified quantity: measured value, the tolerance it was held to,
  // and the verdict.
  struct CheckRecord {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
  };

  struct Report {
    std::string command;
    json config_echo;
    std::uint64_t seed = 0;
    json metrics;
    std::vector<CheckRecord> checks;
    double wall_clock_sec = 0.0;

    void add_check(const std::string& name, double value, double tol);
    bool all_pass() const;
    json to_json() const;
    void write(const std::string& path) const;
  };

  // Stable content hash used to echo which configuration produced a report.
  std::string fnv1a_hex(const std::string& data);

}

#endif
