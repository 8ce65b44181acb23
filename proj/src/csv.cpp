#include "nlc/csv.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nlc {

const std::string_view csv_header =
    "t,kinetic,elastic,penalty,total_E,E_alpha,dissipation,energy_residual,max_d,div_residual,helicity,enstrophy";

namespace {

constexpr std::size_t column_count = 12;

std::array<double DiagnosticsRecord::*, column_count> columns() {
  return {&DiagnosticsRecord::t,           &DiagnosticsRecord::kinetic,
          &DiagnosticsRecord::elastic,     &DiagnosticsRecord::penalty,
          &DiagnosticsRecord::total_E,     &DiagnosticsRecord::E_alpha,
          &DiagnosticsRecord::dissipation, &DiagnosticsRecord::energy_residual,
          &DiagnosticsRecord::max_d,       &DiagnosticsRecord::div_residual,
          &DiagnosticsRecord::helicity,    &DiagnosticsRecord::enstrophy};
}

}  // namespace

std::string csv_row(const DiagnosticsRecord& r) {
  std::string out;
  char buf[32];
  bool first = true;
  for (auto m : columns()) {
    std::snprintf(buf, sizeof buf, "%.17g", r.*m);
    if (!first) out += ',';
    out += buf;
    first = false;
  }
  return out;
}

void append_csv(const std::string& path, const DiagnosticsRecord& r) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream f(path, std::ios::app);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for appending");
  if (fresh) f << csv_header << '\n';
  f << csv_row(r) << '\n';
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<DiagnosticsRecord> read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line) || line != csv_header) throw std::runtime_error("unexpected header in '" + path + "'");
  std::vector<DiagnosticsRecord> rows;
  const auto cols = columns();
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    DiagnosticsRecord r;
    std::istringstream ss(line);
    std::string cell;
    std::size_t i = 0;
    while (std::getline(ss, cell, ',')) {
      if (i >= column_count) throw std::runtime_error("too many columns in '" + path + "'");
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') throw std::runtime_error("bad value '" + cell + "' in '" + path + "'");
      r.*cols[i++] = v;
    }
    if (i != column_count) throw std::runtime_error("too few columns in '" + path + "'");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace nlc
