#pragma once

#include <string>
#include <vector>

#include "hilbloc/qseries.hpp"
#include "hilbloc/universal.hpp"

namespace hilbloc {

enum class OutputFormat { plain, csv, json };

OutputFormat parse_format(const std::string& s);

struct SeriesRow {
  std::string label;
  QSeries series;
  std::string note;
};

// plain: "label: 1, 7, 35"; csv: label,n,coefficient; json: fractions as "p/q" strings.
std::string format_series(const std::vector<SeriesRow>& rows, OutputFormat fmt);

// Reads back the JSON produced by format_series.
std::vector<SeriesRow> parse_series_json(const std::string& text);

struct PolyRow {
  std::string label;
  UniversalPoly poly;
};

std::string format_polys(const std::vector<PolyRow>& rows, OutputFormat fmt);

}  // namespace hilbloc
