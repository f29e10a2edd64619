#include "xco2recon/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace xco2 {

namespace {

constexpr int kMonthDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

int days_in_month(int year, int month) {
  if (month == 2 && UtcTime::is_leap(year)) return 29;
  return kMonthDays[month - 1];
}

}  // namespace

bool UtcTime::is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int UtcTime::day_of_year() const {
  int doy = day;
  for (int m = 1; m < month; ++m) doy += days_in_month(year, m);
  return doy;
}

double UtcTime::year_fraction() const {
  const double days = is_leap(year) ? 366.0 : 365.0;
  const double within_day = (hour * 3600.0 + minute * 60.0 + second) / 86400.0;
  return (day_of_year() - 1 + within_day) / days;
}

UtcTime UtcTime::parse_iso8601(std::string_view s) {
  UtcTime t;
  int n = 0;
  const std::string buf(s);
  const int got = std::sscanf(buf.c_str(), "%d-%d-%dT%d:%d:%lf%n", &t.year, &t.month, &t.day,
                              &t.hour, &t.minute, &t.second, &n);
  if (got < 3) fail(Errc::bad_data, "unparseable timestamp: " + buf);
  if (got >= 3 && got < 6) {
    // date-only form
    t.hour = t.minute = 0;
    t.second = 0;
  }
  if (t.month < 1 || t.month > 12 || t.day < 1 || t.day > days_in_month(t.year, t.month) ||
      t.hour < 0 || t.hour > 23 || t.minute < 0 || t.minute > 59 || t.second < 0 ||
      t.second >= 61)
    fail(Errc::bad_data, "timestamp out of range: " + buf);
  return t;
}

std::string UtcTime::to_iso8601() const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%06.3fZ", year, month, day, hour,
                minute, second);
  return buf;
}

int GridSpec::rows() const {
  return static_cast<int>(std::ceil((lat_max - lat_min) / cell_size - 1e-9));
}

int GridSpec::cols() const {
  return static_cast<int>(std::ceil((lon_max - lon_min) / cell_size - 1e-9));
}

void GridSpec::validate() const {
  if (!(lat_min < lat_max) || !(lon_min < lon_max) || !(cell_size > 0))
    fail(Errc::invalid_config, "grid extent must be non-empty with positive cell size");
}

void validate_record(const SoundingRecord& rec) {
  if (rec.lat < -90 || rec.lat > 90 || rec.lon < -180 || rec.lon > 180)
    fail(Errc::domain_error, "sounding coordinates out of range");
  if (rec.xco2 < 300 || rec.xco2 > 500)
    fail(Errc::domain_error, "xco2 outside the 300-500 ppm quality range");
  if (!(rec.sigma >= 0)) fail(Errc::domain_error, "negative retrieval uncertainty");
}

CellId assign_cell(double lat, double lon, const GridSpec& spec) {
  if (lat < spec.lat_min || lat > spec.lat_max || lon < spec.lon_min || lon > spec.lon_max)
    fail(Errc::out_of_extent, "point outside grid extent");
  int row = static_cast<int>(std::floor((lat - spec.lat_min) / spec.cell_size));
  int col = static_cast<int>(std::floor((lon - spec.lon_min) / spec.cell_size));
  row = std::min(row, spec.rows() - 1);
  col = std::min(col, spec.cols() - 1);
  return {row, col};
}

void CellAccumulator::add(const SoundingRecord& rec) {
  values.push_back(rec.xco2);
  monthly_values[rec.time.month - 1].push_back(rec.xco2);
  doys.push_back(rec.time.day_of_year());
}

void CellAccumulator::merge(const CellAccumulator& other) {
  values.insert(values.end(), other.values.begin(), other.values.end());
  for (int m = 0; m < 12; ++m)
    monthly_values[m].insert(monthly_values[m].end(), other.monthly_values[m].begin(),
                             other.monthly_values[m].end());
  doys.insert(doys.end(), other.doys.begin(), other.doys.end());
}

namespace {

// Statistics over a sorted copy; sorting first makes the result independent
// of accumulation order.
struct SortedStats {
  double mean, median, stddev, min, max;
};

SortedStats stats_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = static_cast<double>(v.size());
  double sum = 0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const std::size_t mid = v.size() / 2;
  const double median = v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
  return {mean, median, std::sqrt(ss / n), v.front(), v.back()};
}

}  // namespace

GridCellSeries CellAccumulator::finalize(CellId cell) const {
  GridCellSeries out;
  out.cell = cell;
  out.count = static_cast<long>(values.size());
  const SortedStats s = stats_of(values);
  out.mean = s.mean;
  out.median = s.median;
  out.std_dev = s.stddev;
  out.min = s.min;
  out.max = s.max;
  for (int m = 0; m < 12; ++m) {
    if (!monthly_values[m].empty()) out.monthly[m] = stats_of(monthly_values[m]).mean;
  }
  std::vector<int> d(doys);
  std::sort(d.begin(), d.end());
  out.doy_first = d.front();
  out.doy_last = d.back();
  long doy_sum = 0;
  for (int x : d) doy_sum += x;
  out.doy_mean = static_cast<double>(doy_sum) / static_cast<double>(d.size());
  return out;
}

CellMap aggregate(const std::vector<SoundingRecord>& records, const GridSpec& spec) {
  spec.validate();
  std::map<CellId, CellAccumulator> acc;
  for (const auto& rec : records) {
    validate_record(rec);
    acc[assign_cell(rec.lat, rec.lon, spec)].add(rec);
  }
  CellMap out;
  for (const auto& [cell, a] : acc) out.emplace(cell, a.finalize(cell));
  return out;
}

int season_of_month(int month) {
  if (month == 12 || month <= 2) return 0;
  if (month <= 5) return 1;
  if (month <= 8) return 2;
  return 3;
}

SeasonFractions seasonal_histogram(const std::vector<SoundingRecord>& records) {
  SeasonFractions f;
  if (records.empty()) return f;
  double counts[4] = {0, 0, 0, 0};
  for (const auto& rec : records) counts[season_of_month(rec.time.month)] += 1;
  const double n = static_cast<double>(records.size());
  f.djf = counts[0] / n;
  f.mam = counts[1] / n;
  f.jja = counts[2] / n;
  f.son = counts[3] / n;
  return f;
}

std::vector<std::string> format_seasonal_table(const SeasonFractions& f) {
  const char* names[4] = {"Summer", "Spring", "Fall", "Winter"};
  const char* months[4] = {"June-August", "March-May", "September-November", "December-February"};
  const double pct[4] = {f.jja, f.mam, f.son, f.djf};
  std::vector<std::string> rows;
  for (int i = 0; i < 4; ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s\t%s\t%.1f%%", names[i], months[i], 100.0 * pct[i]);
    rows.emplace_back(buf);
  }
  return rows;
}

}  // namespace xco2
