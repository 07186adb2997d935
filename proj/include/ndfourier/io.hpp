#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ndfourier/fourier.hpp"
#include "ndfourier/sawtooth.hpp"

namespace ndf {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kDisplayDigits = 20;

// {"context", "lower": "p/q", "upper": decimal, "decimal_digits"}
nlohmann::json to_json(const NDNumber& x, int digits = kDisplayDigits);

// {"schema_version", "context", "precision_bits", "f_T", "n_max", "cos": [...], "sin": [...]}
// Every coefficient record carries n, the exact lower coordinate and a
// decimal upper coordinate.
nlohmann::json to_json(const FourierSeries& series, int digits = kDisplayDigits);

// Throws ParseError on schema violations.
FourierSeries fourier_series_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const std::vector<FigurePoint>& points, const std::string& figure, int digits = kDisplayDigits);

// Comma separated, header row, LF line endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Rows "x,y,x_decimal,y_decimal,coordinate_system": exact p/q values followed
// by decimal renderings with `digits` significant digits.
// Exact p/q columns; decimal columns are appended only on request.
void write_figure_csv(std::ostream& out, const std::vector<FigurePoint>& points, bool with_decimals = false,
                      int digits = kDisplayDigits);

}  // namespace ndf
