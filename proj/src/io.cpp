#include "h0/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace h0 {

  json complex_to_json(cplx z)
  {
    return json::array({z.real(), z.imag()});
  }

  cplx complex_from_json(const json& j)
  {
    require(j.is_array() && j.size() == 2,
            "complex_from_json: expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
  }

  namespace {

    std::string fmt_double(double v)
    {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      return buf;
    }

    void write_csv(const std::string& path,
                   const std::vector<double>& first,
                   const std::vector<double>& second,
                   const Eigen::MatrixXcd& values)
    {
      std::ofstream out(path);
      require(out.good(), "write_csv: cannot open " + path);
      out << kCsvHeader << "\n";
      for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
          const cplx z = values((Eigen::Index)i, (Eigen::Index)j);
          out << fmt_double(first[i]) << ", " << fmt_double(second[j]) << ", "
              << fmt_double(z.real()) << ", " << fmt_double(z.imag()) << "\n";
        }
      }
      require(out.good(), "write_csv: write failure on " + path);
    }

  }

  void write_strip_csv(const std::string& path, const StripFunction& u)
  {
    u.check_shape();
    write_csv(path, u.line.nodes, u.angles.mu, u.values);
  }

  void write_density_csv(const std::string& path, const SpectralDensity& F)
  {
    F.check_shape();
    write_csv(path, F.q_grid.nodes, F.p_grid.nodes, F.values);
  }

  void Report::add_check(const std::string& name, double value, double tol)
  {
    checks.push_back(CheckRecord{name, value, tol, value <= tol});
  }

  bool Report::all_pass() const
  {
    for (const auto& c : checks)
      if (!c.pass)
        return false;
    return true;
  }

  json Report::to_json() const
  {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = command;
    j["config"] = config_echo;
    j["config_hash"] = fnv1a_hex(config_echo.dump());
    j["seed"] = seed;
    j["metrics"] = metrics;
    json arr = json::array();
    for (const auto& c : checks) {
      json e;
      e["name"] = c.name;
      e["value"] = c.value;
      e["tol"] = c.tol;
      e["pass"] = c.pass;
      arr.push_back(e);
    }
    j["checks"] = arr;
    j["all_pass"] = all_pass();
    j["wall_clock_sec"] = wall_clock_sec;
    return j;
  }

  void Report::write(const std::string& path) const
  {
    std::ofstream out(path);
    require(out.good(), "Report::write: cannot open " + path);
    out << to_json().dump(2) << "\n";
    require(out.good(), "Report::write: write failure on " + path);
  }

  std::string fnv1a_hex(const std::string& data)
  {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

}
