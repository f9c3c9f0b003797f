#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "vndim/pi_rational.hpp"

namespace vndim::format {

enum class OutputFormat { Text, Json, Csv };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  fail(ErrorKind::Usage, "unknown format '" + std::string(s) + "' (text|json|csv)");
}

struct TextStyle {
  bool ascii = false;
  std::string_view dot() const { return ascii ? "*" : "·"; }
  std::string_view pi() const { return ascii ? "pi" : "π"; }
};

/// "a/b", "a/b·π" or "a/(b·π)"; a unit coefficient on pi is dropped.
inline std::string render(const PiRational& x, TextStyle style = {}) {
  const Rational& c = x.coeff();
  const std::string pi(style.pi());
  switch (x.pi_exp()) {
    case 1: {
      if (c == Rational(1)) return pi;
      if (c == Rational(-1)) return "-" + pi;
      return c.str() + std::string(style.dot()) + pi;
    }
    case -1: {
      if (c.is_integer()) return c.num().str() + "/" + pi;
      return c.num().str() + "/(" + c.den().str() + std::string(style.dot()) + pi + ")";
    }
    default: return c.str();
  }
}

/// Inverse of `render`, accepting either the unicode or the ASCII spelling.
inline PiRational parse_pi_rational(std::string_view text) {
  std::string s(text);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  };
  replace_all("π", "pi");
  replace_all("·", "*");
  auto ends_with = [&](std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (s == "pi") return PiRational::pi();
  if (s == "-pi") return {Rational(-1), 1};
  if (ends_with("*pi)")) {
    // a/(b*pi)
    auto open = s.find("/(");
    if (open == std::string::npos) fail(ErrorKind::Usage, "malformed value '" + std::string(text) + "'");
    Rational a = Rational::parse(s.substr(0, open));
    Rational b = Rational::parse(s.substr(open + 2, s.size() - open - 2 - 4));
    return {a / b, -1};
  }
  if (ends_with("/pi")) return {Rational::parse(s.substr(0, s.size() - 3)), -1};
  if (ends_with("*pi")) return {Rational::parse(s.substr(0, s.size() - 3)), 1};
  return {Rational::parse(s), 0};
}

namespace detail {
inline nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}
inline BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  fail(ErrorKind::Usage, "expected an integer in JSON");
}
}  // namespace detail

/// {"num": n, "den": d, "pi_exp": e}; integers beyond 64 bits are emitted as strings.
inline nlohmann::json to_json(const PiRational& x) {
  return {{"num", detail::big_to_json(x.coeff().num())},
          {"den", detail::big_to_json(x.coeff().den())},
          {"pi_exp", x.pi_exp()}};
}

inline PiRational pi_rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j.contains("pi_exp"))
    fail(ErrorKind::Usage, "expected {num, den, pi_exp}");
  return {Rational(detail::big_from_json(j.at("num")), detail::big_from_json(j.at("den"))),
          j.at("pi_exp").get<int>()};
}

/// A single output cell.
using Value = std::variant<std::int64_t, BigInt, bool, std::string, PiRational>;

inline std::string render(const Value& v, TextStyle style = {}) {
  struct Visitor {
    TextStyle style;
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const BigInt& x) const { return x.str(); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& x) const { return x; }
    std::string operator()(const PiRational& x) const { return render(x, style); }
  };
  return std::visit(Visitor{style}, v);
}

inline nlohmann::json to_json(const Value& v) {
  struct Visitor {
    nlohmann::json operator()(std::int64_t x) const { return x; }
    nlohmann::json operator()(const BigInt& x) const { return detail::big_to_json(x); }
    nlohmann::json operator()(bool x) const { return x; }
    nlohmann::json operator()(const std::string& x) const { return x; }
    nlohmann::json operator()(const PiRational& x) const { return to_json(x); }
  };
  return std::visit(Visitor{}, v);
}

/// Named fields of one result, in display order.
using Record = std::vector<std::pair<std::string, Value>>;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Display width in code points, so the padding is right for π and ·.
inline std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

/// A one-field record renders as the bare value in text and JSON.
inline void write(std::ostream& out, const Record& rec, OutputFormat fmt, TextStyle style = {}) {
  switch (fmt) {
    case OutputFormat::Text:
      if (rec.size() == 1) {
        out << render(rec.front().second, style) << '\n';
      } else {
        for (const auto& [k, v] : rec) out << k << ": " << render(v, style) << '\n';
      }
      break;
    case OutputFormat::Json: {
      if (rec.size() == 1) {
        out << to_json(rec.front().second).dump() << '\n';
      } else {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : rec) j[k] = to_json(v);
        out << j.dump() << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << csv_escape(rec[i].first);
      out << '\n';
      for (std::size_t i = 0; i < rec.size(); ++i)
        out << (i ? "," : "") << csv_escape(render(rec[i].second, {.ascii = true}));
      out << '\n';
      break;
    }
  }
}

inline void write(std::ostream& out, const Table& table, OutputFormat fmt, TextStyle style = {}) {
  switch (fmt) {
    case OutputFormat::Text: {
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = display_width(table.columns[c]);
      for (const auto& row : table.rows) {
        auto& r = cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
          r.push_back(render(row[c], style));
          width[c] = std::max(width[c], display_width(r.back()));
        }
      }
      auto line = [&](const std::vector<std::string>& fields) {
        std::string s;
        for (std::size_t c = 0; c < fields.size(); ++c) {
          s += fields[c];
          if (c + 1 < fields.size()) s += std::string(width[c] - display_width(fields[c]) + 2, ' ');
        }
        out << s << '\n';
      };
      out << "# " << table.title << '\n';
      line(table.columns);
      for (const auto& r : cells) line(r);
      break;
    }
    case OutputFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : table.rows) {
        nlohmann::json j = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c) j[table.columns[c]] = to_json(row[c]);
        rows.push_back(std::move(j));
      }
      out << nlohmann::json{{"table", table.title}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_escape(table.columns[c]);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          out << (c ? "," : "") << csv_escape(render(row[c], {.ascii = true}));
        out << '\n';
      }
      break;
    }
  }
}

}  // namespace vndim::format
