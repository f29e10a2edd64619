#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xco2recon/types.hpp"

namespace xco2 {

/// Calendar timestamp, always UTC.
struct UtcTime {
  int year = 2024;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  int hour = 0;
  int minute = 0;
  double second = 0;

  int day_of_year() const;
  double year_fraction() const;  // in [0, 1), midnight Jan 1 = 0
  static bool is_leap(int year);
  static UtcTime parse_iso8601(std::string_view s);  // throws bad_data
  std::string to_iso8601() const;
};

/// Plate-carree degree grid. Cell (0,0) sits at the lower corner
/// (lat_min, lon_min); rows advance with latitude, columns with longitude.
struct GridSpec {
  double lat_min = 0;
  double lat_max = 0;
  double lon_min = 0;
  double lon_max = 0;
  double cell_size = 0.25;

  int rows() const;
  int cols() const;
  double lat_center(int row) const { return lat_min + (row + 0.5) * cell_size; }
  double lon_center(int col) const { return lon_min + (col + 0.5) * cell_size; }
  void validate() const;  // throws invalid_config
};

struct CellId {
  int row = 0;
  int col = 0;
  auto operator<=>(const CellId&) const = default;
};

/// One satellite retrieval.
struct SoundingRecord {
  double lat = 0;
  double lon = 0;
  UtcTime time;
  double xco2 = 0;   // ppm
  double sigma = 0;  // ppm, retrieval uncertainty
};

/// Range checks applied on ingest (quality control). Throws domain_error.
void validate_record(const SoundingRecord& rec);

/// Per-cell aggregate statistics plus the gap-masked monthly series.
struct GridCellSeries {
  CellId cell;
  double mean = 0;
  double median = 0;
  double std_dev = 0;  // population convention (divide by n)
  double min = 0;
  double max = 0;
  long count = 0;
  std::array<std::optional<double>, 12> monthly;  // [0] = January
  int doy_first = 0;
  int doy_last = 0;
  double doy_mean = 0;
};

/// Nearest-cell assignment by floor arithmetic; points exactly on the max
/// boundary clamp into the last cell. Throws out_of_extent.
CellId assign_cell(double lat, double lon, const GridSpec& spec);

/// Mergeable per-cell accumulator. Values are retained so the median (and
/// order-independent statistics) can be computed exactly after a merge.
struct CellAccumulator {
  std::vector<double> values;
  std::array<std::vector<double>, 12> monthly_values;
  std::vector<int> doys;

  void add(const SoundingRecord& rec);
  void merge(const CellAccumulator& other);
  GridCellSeries finalize(CellId cell) const;
};

using CellMap = std::map<CellId, GridCellSeries>;

/// Bin records onto the grid and compute per-cell statistics. Statistics are
/// computed from per-cell sorted value lists, so the result is invariant to
/// the input ordering (and to any partition/merge evaluation strategy).
CellMap aggregate(const std::vector<SoundingRecord>& records, const GridSpec& spec);

/// Fractions of records per meteorological season.
struct SeasonFractions {
  double djf = 0;  // winter: December-February
  double mam = 0;  // spring: March-May
  double jja = 0;  // summer: June-August
  double son = 0;  // fall: September-November
};

SeasonFractions seasonal_histogram(const std::vector<SoundingRecord>& records);

/// Season index 0=winter .. 3=fall for a calendar month 1..12.
int season_of_month(int month);

/// Report rows "<Season><tab><Months><tab><pct>%" with one-decimal percents.
std::vector<std::string> format_seasonal_table(const SeasonFractions& f);

}  // namespace xco2
