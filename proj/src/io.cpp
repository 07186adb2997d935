#include "ndfourier/io.hpp"

#include <ostream>

#include "ndfourier/errors.hpp"

namespace ndf {

using nlohmann::json;

json to_json(const NDNumber& x, int digits) {
  return {{"context", x.ctx().name()},
          {"lower", to_string(x.lower())},
          {"upper", to_decimal(x.upper(), digits)},
          {"decimal_digits", digits}};
}

json to_json(const FourierSeries& series, int digits) {
  auto record = [&](unsigned n, const NDNumber& c) {
    return json{{"n", n}, {"lower", to_string(c.lower())}, {"upper", to_decimal(c.upper(), digits)}};
  };
  json cos = json::array();
  for (unsigned n = 0; n <= series.n_max(); ++n) cos.push_back(record(n, series.cos_coeff(n)));
  json sin = json::array();
  for (unsigned n = 1; n <= series.n_max(); ++n) sin.push_back(record(n, series.sin_coeff(n)));
  return {{"schema_version", kSchemaVersion},
          {"kind", "fourier_series"},
          {"context", series.context->name()},
          {"precision_bits", series.context->precision_bits()},
          {"f_T", to_string(series.period_lower)},
          {"n_max", series.n_max()},
          {"decimal_digits", digits},
          {"cos", cos},
          {"sin", sin}};
}

FourierSeries fourier_series_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("coefficient file is not a JSON object");
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError("unsupported schema_version " + doc.at("schema_version").dump());
    }
    long bits = doc.at("precision_bits").get<long>();
    ContextPtr ctx = make_context(ArithmeticContext::parse(doc.at("context").get<std::string>(), bits));
    Rational period = parse_rational(doc.at("f_T").get<std::string>());
    auto n_max = doc.at("n_max").get<unsigned>();
    const json& cos = doc.at("cos");
    const json& sin = doc.at("sin");
    if (cos.size() != n_max + 1 || sin.size() != n_max) throw ParseError("coefficient lists do not match n_max");

    FourierSeries out{ctx, period, {}, {}};
    for (unsigned n = 0; n <= n_max; ++n) {
      if (cos[n].at("n").get<unsigned>() != n) throw ParseError("cosine coefficients out of order");
      out.cos_coeffs.emplace_back(ctx, parse_rational(cos[n].at("lower").get<std::string>()));
    }
    for (unsigned n = 1; n <= n_max; ++n) {
      if (sin[n - 1].at("n").get<unsigned>() != n) throw ParseError("sine coefficients out of order");
      out.sin_coeffs.emplace_back(ctx, parse_rational(sin[n - 1].at("lower").get<std::string>()));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed coefficient file: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed coefficient file: ") + e.what());
  }
}

json to_json(const std::vector<FigurePoint>& points, const std::string& figure, int digits) {
  json rows = json::array();
  for (const FigurePoint& p : points) {
    rows.push_back({{"x", to_string(p.x)},
                    {"y", to_string(p.y)},
                    {"x_decimal", to_decimal(p.x, digits)},
                    {"y_decimal", to_decimal(p.y, digits)},
                    {"coordinate_system", to_string(p.coordinates)}});
  }
  return {{"schema_version", kSchemaVersion}, {"figure", figure}, {"decimal_digits", digits}, {"points", rows}};
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_figure_csv(std::ostream& out, const std::vector<FigurePoint>& points, bool with_decimals,
                      int digits) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(points.size());
  for (const FigurePoint& p : points) {
    rows.push_back({to_string(p.x), to_string(p.y), to_string(p.coordinates)});
    if (with_decimals) {
      rows.back().push_back(to_decimal(p.x, digits));
      rows.back().push_back(to_decimal(p.y, digits));
    }
  }
  std::vector<std::string> header = {"x", "y", "coordinate_system"};
  if (with_decimals) header.insert(header.end(), {"x_decimal", "y_decimal"});
  write_csv(out, header, rows);
}

}  // namespace ndf
