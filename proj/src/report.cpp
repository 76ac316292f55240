#include "hilbloc/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hilbloc {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "plain") return OutputFormat::plain;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected plain, csv, json)");
}

std::string format_series(const std::vector<SeriesRow>& rows, OutputFormat fmt) {
  std::string out;
  switch (fmt) {
    case OutputFormat::plain:
      for (const auto& r : rows) {
        out += r.label + ":";
        for (int k = 0; k <= r.series.order(); ++k) out += (k ? ", " : " ") + to_string(r.series[k]);
        if (!r.note.empty()) out += "  (" + r.note + ")";
        out += "\n";
      }
      return out;
    case OutputFormat::csv:
      out = "label,n,coefficient\n";
      for (const auto& r : rows)
        for (int k = 0; k <= r.series.order(); ++k)
          out += csv_field(r.label) + "," + std::to_string(k) + "," + to_string(r.series[k]) + "\n";
      return out;
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json c = json::array();
        for (int k = 0; k <= r.series.order(); ++k) c.push_back(to_string(r.series[k]));
        json row = {{"label", r.label}, {"order", r.series.order()}, {"coefficients", c}};
        if (!r.note.empty()) row["note"] = r.note;
        arr.push_back(row);
      }
      return json{{"series", arr}}.dump(2) + "\n";
    }
  }
  return out;
}

std::vector<SeriesRow> parse_series_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<SeriesRow> out;
  for (const auto& r : j.at("series")) {
    std::vector<BigRational> c;
    for (const auto& x : r.at("coefficients")) c.push_back(parse_rational(x.get<std::string>()));
    out.push_back({r.at("label").get<std::string>(), QSeries(r.at("order").get<int>(), std::move(c)),
                   r.value("note", std::string())});
  }
  return out;
}

std::string format_polys(const std::vector<PolyRow>& rows, OutputFormat fmt) {
  std::string out;
  switch (fmt) {
    case OutputFormat::plain:
      for (const auto& r : rows) out += r.label + ": " + r.poly.to_string() + "\n";
      return out;
    case OutputFormat::csv:
      out = "label,monomial,coefficient\n";
      for (const auto& r : rows)
        for (const auto& [e, c] : r.poly.terms()) {
          UniversalPoly m;
          m.add_term(e, BigRational(1));
          out += csv_field(r.label) + "," + m.to_string() + "," + to_string(c) + "\n";
        }
      return out;
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json vars = json::array();
        for (UVar v : r.poly.variables()) vars.push_back(to_string(v));
        json terms = json::array();
        for (const auto& [e, c] : r.poly.terms()) {
          json ex = json::array();
          for (UVar v : r.poly.variables()) ex.push_back(e[static_cast<int>(v)]);
          terms.push_back({{"exponents", ex}, {"coefficient", to_string(c)}});
        }
        arr.push_back({{"label", r.label}, {"variables", vars}, {"terms", terms}, {"text", r.poly.to_string()}});
      }
      return json{{"polynomials", arr}}.dump(2) + "\n";
    }
  }
  return out;
}

}  // namespace hilbloc
