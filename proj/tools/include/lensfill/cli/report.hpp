#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lensfill/cftuple.hpp"
#include "lensfill/exact_arith.hpp"

namespace lensfill::cli {

struct FillingEntry {
  CFTuple n;
  std::int64_t chi = 0;
  std::int64_t b2 = 0;
  CFTuple handles;
  std::vector<Integer> rot;
  friend bool operator==(const FillingEntry&, const FillingEntry&) = default;
};

struct SpinEntry {
  std::vector<int> s;
  Integer gamma_filling;
  Integer gamma_standard;
  friend bool operator==(const SpinEntry&, const SpinEntry&) = default;
};

struct ReportFlags {
  bool rational_ball = false;
  std::optional<Integer> ball_m;
  std::optional<Integer> ball_h;
  bool unique = false;
  bool involution = false;  ///< q^2 = 1 mod p
  friend bool operator==(const ReportFlags&, const ReportFlags&) = default;
};

/// Everything computed for one lens space. Reports describe minimal
/// fillings; `blowups` is always 0 and only recorded for downstream tables.
struct Report {
  Integer p;
  Integer q;
  CFTuple b;
  CFTuple a;
  Integer qbar;
  Integer mu_k;  ///< coefficient of mu_k in terms of mu_1
  std::int64_t blowups = 0;
  std::vector<CFTuple> z_set;
  std::vector<std::vector<std::size_t>> classes;  ///< indices into z_set
  std::vector<FillingEntry> fillings;             ///< parallel to z_set
  std::vector<SpinEntry> spin;
  ReportFlags flags;
  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const Integer& p, const Integer& q);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Report& r);
/// Throws nlohmann::json::exception or InputError on malformed input.
Report report_from_json(const nlohmann::ordered_json& j);

std::string render_text(const Report& r);
std::string csv_header();
/// One row per filling.
std::string render_csv_rows(const Report& r);

}  // namespace lensfill::cli
