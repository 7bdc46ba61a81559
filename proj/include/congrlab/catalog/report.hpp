#pragma once

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "congrlab/catalog/runner.hpp"
#include "congrlab/error.hpp"

namespace congrlab {

enum class ReportFormat { Json, Csv, Text };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw Error(ErrorKind::InvalidArgument, "unknown report format '" + s + "'");
}

struct EmitOptions {
  // Timings vary run to run; they are zeroed unless requested.
  bool timing = false;
};

namespace detail {

inline std::string valuation_text(const CheckResult& r) {
  return r.valuation == kInfiniteValuation ? "inf" : std::to_string(r.valuation);
}

inline nlohmann::ordered_json record_json(const CheckResult& r, const EmitOptions& opt) {
  nlohmann::ordered_json j;
  j["check"] = r.name();
  j["prime"] = r.prime ? nlohmann::ordered_json(*r.prime) : nlohmann::ordered_json(nullptr);
  j["t"] = r.t ? nlohmann::ordered_json(r.t->to_fraction_string()) : nlohmann::ordered_json(nullptr);
  j["target"] = r.target ? nlohmann::ordered_json(*r.target) : nlohmann::ordered_json(nullptr);
  if (r.status == Status::Error) j["valuation"] = nullptr;
  else if (r.valuation == kInfiniteValuation) j["valuation"] = "inf";
  else j["valuation"] = r.valuation;
  j["pass"] = r.pass();
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["us"] = opt.timing ? r.elapsed_us : 0;
  if (r.status == Status::Error) j["error"] = r.message;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width of UTF-8 text (one column per code point).
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string text_valuation(const CheckResult& r) {
  if (r.status == Status::Error) return r.message;
  if (r.valuation == kInfiniteValuation) return "exact";
  if (r.valuation_capped) return "v≥" + std::to_string(r.valuation);
  return "v=" + std::to_string(r.valuation);
}

}  // namespace detail

inline void emit_report(const Report& report, ReportFormat format, std::ostream& out, const EmitOptions& opt = {}) {
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : report.results) arr.push_back(detail::record_json(r, opt));
      out << arr.dump(1) << "\n";
      break;
    }
    case ReportFormat::Csv: {
      out << "check,prime,t,target,valuation,pass,lhs,rhs,us\n";
      for (const auto& r : report.results) {
        out << detail::csv_field(r.name()) << ',' << (r.prime ? std::to_string(*r.prime) : "") << ','
            << (r.t ? r.t->to_fraction_string() : "") << ',' << (r.target ? std::to_string(*r.target) : "") << ','
            << (r.status == Status::Error ? "" : detail::valuation_text(r)) << ',' << (r.pass() ? "true" : "false")
            << ',' << detail::csv_field(r.status == Status::Error ? "ERROR: " + r.message : r.lhs) << ','
            << detail::csv_field(r.rhs) << ',' << (opt.timing ? r.elapsed_us : 0) << "\n";
      }
      break;
    }
    case ReportFormat::Text: {
      std::vector<std::vector<std::string>> rows;
      bool any_prime = false, any_t = false;
      for (const auto& r : report.results) {
        any_prime = any_prime || r.prime.has_value();
        any_t = any_t || r.t.has_value();
      }
      for (const auto& r : report.results) {
        std::vector<std::string> row{r.name()};
        if (any_prime) row.push_back(r.prime ? "p=" + std::to_string(*r.prime) : "");
        if (any_t) row.push_back(r.t ? "t=" + r.t->to_fraction_string() : "");
        row.push_back(to_string(r.status));
        row.push_back(detail::text_valuation(r));
        if (opt.timing) row.push_back(std::to_string(r.elapsed_us) + "us");
        rows.push_back(std::move(row));
      }
      std::vector<std::size_t> width;
      for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], detail::display_width(row[i]));
      }
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) line += ' ';
          line += row[i];
          if (i + 1 < row.size()) line.append(width[i] - detail::display_width(row[i]), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
      }
      break;
    }
  }
  if (!out) throw Error(ErrorKind::InvalidArgument, "failed writing report");
}

}  // namespace congrlab
