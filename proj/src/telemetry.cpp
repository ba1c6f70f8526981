#include "attsim/telemetry.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace attsim {

const char* const kCsvHeader =
    "t,se1,se2,se3,we1,we2,we3,theta,u1,u2,u3,s1,s2,s3,rho,g,h,gamma2,v,V1,V2,"
    "roll,pitch,yaw";

namespace {
/// Shortest round-trippable-ish formatting: 9 significant digits everywhere.
std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::ofstream open_or_throw(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}
} // namespace

void emit_csv(const std::vector<SimRecord>& records, const std::string& path) {
  if (records.empty()) {
    throw ValidationError("telemetry: no records to write");
  }
  std::ofstream out = open_or_throw(path);
  out << kCsvHeader << '\n';
  for (const SimRecord& r : records) {
    out << num(r.t) << ',' << num(r.sigma_e.x()) << ',' << num(r.sigma_e.y())
        << ',' << num(r.sigma_e.z()) << ',' << num(r.omega_e.x()) << ','
        << num(r.omega_e.y()) << ',' << num(r.omega_e.z()) << ','
        << num(r.theta) << ',' << num(r.u.x()) << ',' << num(r.u.y()) << ','
        << num(r.u.z()) << ',' << num(r.diag.s.x()) << ',' << num(r.diag.s.y())
        << ',' << num(r.diag.s.z()) << ',' << num(r.diag.rho) << ','
        << num(r.diag.g) << ',' << num(r.diag.h) << ',' << num(r.diag.gamma2)
        << ',' << num(r.v) << ',' << num(r.V1) << ',' << num(r.V2) << ','
        << num(r.euler.roll) << ',' << num(r.euler.pitch) << ','
        << num(r.euler.yaw) << '\n';
  }
  if (!out) {
    throw IoError("error writing '" + path + "'");
  }
}

void emit_plot_data(const std::vector<SimRecord>& records,
                    const std::string& directory) {
  if (records.empty()) {
    throw ValidationError("telemetry: no records to plot");
  }
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) {
    throw IoError("cannot create plot directory '" + directory +
                  "': " + ec.message());
  }
  const fs::path dir(directory);

  {
    std::ofstream out = open_or_throw(dir / "theta.dat");
    out << "# t_s theta_rad\n";
    for (const SimRecord& r : records) {
      out << num(r.t) << ' ' << num(r.theta) << '\n';
    }
  }
  {
    std::ofstream out = open_or_throw(dir / "omega.dat");
    out << "# t_s we1_rad_s we2_rad_s we3_rad_s\n";
    for (const SimRecord& r : records) {
      out << num(r.t) << ' ' << num(r.omega_e.x()) << ' '
          << num(r.omega_e.y()) << ' ' << num(r.omega_e.z()) << '\n';
    }
  }
  {
    std::ofstream out = open_or_throw(dir / "euler.dat");
    out << "# t_s roll_rad pitch_rad yaw_rad\n";
    for (const SimRecord& r : records) {
      out << num(r.t) << ' ' << num(r.euler.roll) << ' '
          << num(r.euler.pitch) << ' ' << num(r.euler.yaw) << '\n';
    }
  }
  {
    std::ofstream out = open_or_throw(dir / "torque.dat");
    out << "# t_s u1_Nm u2_Nm u3_Nm\n";
    for (const SimRecord& r : records) {
      out << num(r.t) << ' ' << num(r.u.x()) << ' ' << num(r.u.y()) << ' '
          << num(r.u.z()) << '\n';
    }
  }
  {
    std::ofstream out = open_or_throw(dir / "manifest.txt");
    out << "theta.dat:  rotation angle about the initial Euler axis [rad] vs "
           "time [s]\n"
        << "omega.dat:  angular-velocity error components [rad/s] vs time "
           "[s]\n"
        << "euler.dat:  3-2-1 Euler angles of the absolute attitude [rad] vs "
           "time [s]\n"
        << "torque.dat: commanded control torque components [N*m] vs time "
           "[s]\n";
  }
}

} // namespace attsim
