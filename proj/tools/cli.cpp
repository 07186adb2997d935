#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ndfourier/errors.hpp"
#include "ndfourier/fourier.hpp"
#include "ndfourier/io.hpp"
#include "ndfourier/sawtooth.hpp"
#include "ndfourier/selftest.hpp"

namespace ndf::cli {

namespace {

using nlohmann::json;

const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage or parse error (including an unknown bijection)\n"
    "  2  map: at least one value is outside the domain of the map (e.g. not in the Cantor set)\n"
    "  3  reconstruct/figures: coefficient file missing or corrupt\n"
    "  4  quadrature did not converge\n"
    "  5  selftest: at least one suite failed\n";

// Raw flag values; numbers stay strings until the whole command line parsed.
struct Config {
  std::string bijection = "ternary-line:minus";
  long precision_bits = kDefaultPrecisionBits;
  std::string f_t = "1";
  std::optional<unsigned> terms;
  unsigned samples = 512;
  unsigned panels = 1;
  unsigned nodes = 32;
  double tol = 1e-12;
  unsigned threads = 0;
  std::string format;  // csv, except analyze which defaults to json
  std::string output;
  bool decimal_input = false;
  int digits = kDisplayDigits;
  bool with_decimals = false;
  std::string coefficients;
  std::string signal = "sawtooth";
  std::string which;
  std::optional<std::string> x_min;
  std::optional<std::string> x_max;
  bool forward = false;
  bool inverse = false;
  std::vector<std::string> values;
};

struct CoefficientFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Config& c) {
  cmd->add_option("--bijection", c.bijection,
                  "identity | benioff:p=P | fechner:a=A,b=B | ternary-line[:minus|plus] | quaternary[:minus|plus] | "
                  "middle-third")
      ->capture_default_str();
  cmd->add_option("--precision-bits", c.precision_bits, "Binary precision of transcendental values")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", c.output, "Output file (default stdout)");
  cmd->add_flag("--decimal-input", c.decimal_input, "Accept decimal literals such as 0.25 for rational arguments");
  cmd->add_option("--digits", c.digits, "Significant digits in decimal renderings")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
}

void add_period(CLI::App* cmd, Config& c) {
  cmd->add_option("--f-T", c.f_t, "Lowercase period f(T), rational")->capture_default_str();
}

void add_quadrature(CLI::App* cmd, Config& c) {
  cmd->add_option("--panels", c.panels, "Initial composite panels")->check(CLI::Range(1, 1 << 14))->capture_default_str();
  cmd->add_option("--nodes", c.nodes, "Gauss-Legendre nodes per panel")->check(CLI::Range(2, 512))->capture_default_str();
  cmd->add_option("--tol", c.tol, "Relative quadrature tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads for coefficient integrals (0 = all cores)")
      ->capture_default_str();
}

void add_window(CLI::App* cmd, Config& c) {
  cmd->add_option("--samples", c.samples, "Sample count")->check(CLI::Range(2U, 1U << 24))->capture_default_str();
  cmd->add_option("--x-min", c.x_min, "Window start, lower coordinates");
  cmd->add_option("--x-max", c.x_max, "Window end (exclusive), lower coordinates");
}

Rational number(const Config& c, const std::string& text) { return parse_rational(text, c.decimal_input); }

QuadratureSpec quadrature(const Config& c) {
  QuadratureSpec spec;
  spec.initial_panels = c.panels;
  spec.nodes = c.nodes;
  spec.rel_tol = c.tol;
  return spec;
}

// Writes either to the --output file or to `out`.
class Sink {
 public:
  Sink(const Config& c, std::ostream& out) : out_(&out) {
    if (!c.output.empty()) {
      file_.open(c.output, std::ios::binary);
      if (!file_) throw ParseError("cannot open output file " + c.output);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void write(const json& doc) { *out_ << doc.dump(2) << '\n'; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json header(const std::string& kind, const ContextPtr& ctx, int digits) {
  return {{"schema_version", kSchemaVersion},
          {"kind", kind},
          {"context", ctx->name()},
          {"precision_bits", ctx->precision_bits()},
          {"decimal_digits", digits}};
}

int cmd_map(const Config& c, const ContextPtr& ctx, std::ostream& out, std::ostream& err) {
  if (c.forward && c.inverse) throw ParseError("--forward and --inverse are mutually exclusive");
  if (c.values.empty()) throw ParseError("map needs at least one value");
  const bool inverse = c.inverse;
  std::vector<Rational> inputs;
  for (const std::string& v : c.values) inputs.push_back(number(c, v));

  std::vector<std::vector<std::string>> rows;
  bool failed = false;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string result, decimal, status = "ok";
    try {
      Rational r = inverse ? ctx->inverse(inputs[i]) : ctx->forward(inputs[i]);
      result = to_string(r);
      decimal = to_decimal(r, c.digits);
    } catch (const NotInCantorSet& e) {
      status = "not-in-cantor-set";
      err << "map: " << c.values[i] << ": " << e.what() << '\n';
      failed = true;
    } catch (const DomainError& e) {
      status = "domain-error";
      err << "map: " << c.values[i] << ": " << e.what() << '\n';
      failed = true;
    } catch (const std::length_error& e) {
      status = "expansion-too-long";
      err << "map: " << c.values[i] << ": " << e.what() << '\n';
      failed = true;
    }
    rows.push_back({to_string(inputs[i]), result, decimal, status});
  }

  Sink sink(c, out);
  if (c.format == "json") {
    json doc = header("map", ctx, c.digits);
    doc["direction"] = inverse ? "inverse" : "forward";
    json list = json::array();
    for (const auto& r : rows) {
      json row{{"input", r[0]}, {"status", r[3]}};
      row["result"] = r[1].empty() ? json(nullptr) : json(r[1]);
      row["decimal"] = r[2].empty() ? json(nullptr) : json(r[2]);
      list.push_back(row);
    }
    doc["rows"] = list;
    sink.write(doc);
  } else {
    write_csv(sink.stream(), {"input", "result", "decimal", "status"}, rows);
  }
  return failed ? kNotInCantorSet : kOk;
}

NDFunction signal(const Config& c, const ContextPtr& ctx, const Rational& period) {
  if (c.signal == "sawtooth") return sawtooth_nd(ctx, period);
  throw ParseError("unknown signal '" + c.signal + "' (expected sawtooth)");
}

int cmd_analyze(const Config& c, const ContextPtr& ctx, std::ostream& out) {
  const Rational period = number(c, c.f_t);
  NDFunction a = signal(c, ctx, period);
  FourierSeries series = analyze(a, period, c.terms.value_or(30), quadrature(c), c.threads);
  Sink sink(c, out);
  if (c.format == "json") {
    sink.write(to_json(series, c.digits));
  } else {
    std::vector<std::vector<std::string>> rows;
    for (unsigned n = 0; n <= series.n_max(); ++n) {
      const NDNumber& v = series.cos_coeff(n);
      rows.push_back({"cos", std::to_string(n), to_string(v.lower()), to_decimal(v.upper(), c.digits)});
    }
    for (unsigned n = 1; n <= series.n_max(); ++n) {
      const NDNumber& v = series.sin_coeff(n);
      rows.push_back({"sin", std::to_string(n), to_string(v.lower()), to_decimal(v.upper(), c.digits)});
    }
    write_csv(sink.stream(), {"basis", "n", "lower", "upper_decimal"}, rows);
  }
  return kOk;
}

FourierSeries load_series(const Config& c) {
  if (c.coefficients.empty()) throw CoefficientFileError("--coefficients is required");
  std::ifstream in(c.coefficients);
  if (!in) throw CoefficientFileError("cannot read coefficient file " + c.coefficients);
  try {
    json doc = json::parse(in);
    return fourier_series_from_json(doc);
  } catch (const json::exception& e) {
    throw CoefficientFileError(c.coefficients + ": " + e.what());
  } catch (const ParseError& e) {
    throw CoefficientFileError(c.coefficients + ": " + e.what());
  }
}

unsigned checked_terms(const Config& c, const FourierSeries& s) {
  unsigned terms = c.terms.value_or(s.n_max());
  if (terms > s.n_max()) {
    throw ParseError("--terms " + std::to_string(terms) + " exceeds the " + std::to_string(s.n_max()) +
                     " harmonics in the coefficient file");
  }
  return terms;
}

int cmd_reconstruct(const Config& c, std::ostream& out) {
  FourierSeries series = load_series(c);
  const unsigned terms = checked_terms(c, series);
  const Rational half = series.period_lower / 2;
  const Rational lo = c.x_min ? number(c, *c.x_min) : -half;
  const Rational hi = c.x_max ? number(c, *c.x_max) : half;
  std::vector<std::vector<std::string>> rows;
  json points = json::array();
  for (const Rational& x : uniform_samples(lo, hi, c.samples)) {
    NDNumber point(series.context, x);
    NDNumber value = reconstruct(series, point, terms);
    rows.push_back({to_string(x), to_string(value.lower()), to_string(point.upper()), to_string(value.upper()),
                    to_decimal(point.upper(), c.digits), to_decimal(value.upper(), c.digits)});
  }
  Sink sink(c, out);
  std::vector<std::string> cols{"x_lower", "y_lower", "x_upper", "y_upper", "x_upper_decimal", "y_upper_decimal"};
  if (c.format == "json") {
    json doc = header("reconstruction", series.context, c.digits);
    doc["terms"] = terms;
    doc["f_T"] = to_string(series.period_lower);
    for (const auto& r : rows) {
      json p;
      for (std::size_t i = 0; i < cols.size(); ++i) p[cols[i]] = r[i];
      points.push_back(p);
    }
    doc["points"] = points;
    sink.write(doc);
  } else {
    write_csv(sink.stream(), cols, rows);
  }
  return kOk;
}

int cmd_spectrum(const Config& c, const ContextPtr& ctx, std::ostream& out) {
  const unsigned terms = c.terms.value_or(10);
  std::vector<std::vector<std::string>> rows;
  for (unsigned long n = 1; n <= terms; ++n) {
    Rational np = spectrum_n_prime(ctx, n);
    rows.push_back({std::to_string(n), to_string(np), to_decimal(np, c.digits)});
  }
  Sink sink(c, out);
  if (c.format == "json") {
    json doc = header("spectrum", ctx, c.digits);
    json list = json::array();
    for (const auto& r : rows) list.push_back({{"n", std::stoul(r[0])}, {"n_prime", r[1]}, {"n_prime_decimal", r[2]}});
    doc["rows"] = list;
    sink.write(doc);
  } else {
    write_csv(sink.stream(), {"n", "n_prime", "n_prime_decimal"}, rows);
  }
  return kOk;
}

int cmd_figures(const Config& c, const ContextPtr& ctx, std::ostream& out) {
  static const std::vector<std::pair<std::string, FigureKind>> kinds = {
      {"fig1-upper", FigureKind::Fig1Upper}, {"fig1-lower", FigureKind::Fig1Lower},
      {"fig2-upper", FigureKind::Fig2Upper}, {"fig2-lower", FigureKind::Fig2Lower},
      {"fig3-upper", FigureKind::Fig3Terms}, {"fig3-lower", FigureKind::Fig3Terms}};
  auto it = std::find_if(kinds.begin(), kinds.end(), [&](const auto& k) { return k.first == c.which; });
  if (it == kinds.end()) throw ParseError("unknown figure '" + c.which + "'");

  FigureRequest request;
  request.kind = it->second;
  request.samples = c.samples;
  if (c.x_min) request.x_min = number(c, *c.x_min);
  if (c.x_max) request.x_max = number(c, *c.x_max);

  const Rational period = number(c, c.f_t);
  std::optional<FourierSeries> series;
  if (request.kind == FigureKind::Fig3Terms) {
    request.terms = c.terms.value_or(c.which == "fig3-upper" ? 5U : 30U);
    if (!c.coefficients.empty()) {
      series = load_series(c);
      if (request.terms > series->n_max()) throw ParseError("coefficient file has too few harmonics");
    } else {
      series = analyze(sawtooth_nd(ctx, period), period, request.terms, quadrature(c), c.threads);
    }
  }
  request.period_lower = period;
  std::vector<FigurePoint> points = figure_data(request, ctx, series ? &*series : nullptr);

  Sink sink(c, out);
  if (c.format == "json") {
    json doc = to_json(points, c.which, c.digits);
    doc["context"] = (request.kind == FigureKind::Fig1Upper)   ? "ternary-line:minus"
                     : (request.kind == FigureKind::Fig1Lower) ? "quaternary:plus"
                                                               : ctx->name();
    if (request.kind == FigureKind::Fig3Terms) doc["terms"] = request.terms;
    sink.write(doc);
  } else {
    write_figure_csv(sink.stream(), points, c.with_decimals, c.digits);
  }
  return kOk;
}

int cmd_selftest(const Config& c, const ContextPtr& ctx, std::ostream& out) {
  SelftestOptions options;
  options.quadrature = quadrature(c);
  std::vector<SuiteResult> results = run_selftest(ctx, options);
  bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });

  auto sci = [](double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(3) << v;
    return s.str();
  };
  Sink sink(c, out);
  if (c.format == "json") {
    json doc = header("selftest", ctx, c.digits);
    json list = json::array();
    for (const auto& r : results) {
      list.push_back({{"suite", r.name},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"max_deviation", r.max_deviation},
                      {"tolerance", r.tolerance},
                      {"note", r.note}});
    }
    doc["suites"] = list;
    doc["passed"] = all;
    sink.write(doc);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results) {
      std::string note = r.note;
      std::replace(note.begin(), note.end(), ',', ';');
      rows.push_back({r.name, r.passed ? "pass" : "fail", std::to_string(r.cases), sci(r.max_deviation),
                      sci(r.tolerance), note});
    }
    write_csv(sink.stream(), {"suite", "result", "cases", "max_deviation", "tolerance", "note"}, rows);
  }
  return all ? kOk : kSelftestFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Non-Diophantine arithmetic, calculus and Fourier analysis on Cantor sets", "ndfourier"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  auto* map = app.add_subcommand("map", "Apply f (--forward) or f^-1 (--inverse) to exact rationals");
  add_common(map, c);
  map->add_flag("--forward", c.forward, "Upper -> lower coordinates (default)");
  map->add_flag("--inverse", c.inverse, "Lower -> upper coordinates");
  map->add_option("values", c.values, "Rationals such as 1/3 or -2")->required();

  auto* an = app.add_subcommand("analyze", "Fourier coefficients of a signal");
  add_common(an, c);
  add_period(an, c);
  add_quadrature(an, c);
  an->add_option("--signal", c.signal, "Signal to analyze")->capture_default_str();
  an->add_option("--terms", c.terms, "Highest harmonic n_max (default 30)");

  auto* rec = app.add_subcommand("reconstruct", "Sample partial Fourier sums from a coefficient file");
  add_common(rec, c);
  add_window(rec, c);
  rec->add_option("--coefficients", c.coefficients, "JSON written by analyze --format json");
  rec->add_option("--terms", c.terms, "Highest harmonic used (default: all in the file)");

  auto* spec = app.add_subcommand("spectrum", "Eigenvalue labels n' = f^-1(n) for n = 1..terms");
  add_common(spec, c);
  spec->add_option("--terms", c.terms, "Largest n (default 10)");

  auto* fig = app.add_subcommand("figures", "Figure datasets");
  add_common(fig, c);
  add_period(fig, c);
  add_quadrature(fig, c);
  add_window(fig, c);
  fig->add_option("--which", c.which, "fig1-upper | fig1-lower | fig2-upper | fig2-lower | fig3-upper | fig3-lower")
      ->required();
  fig->add_option("--terms", c.terms, "Harmonics for fig3 (default 5 for fig3-upper, 30 for fig3-lower)");
  fig->add_option("--coefficients", c.coefficients, "Reuse coefficients from analyze for fig3");
  fig->add_flag("--with-decimals", c.with_decimals, "Append x_decimal,y_decimal columns to the CSV");

  auto* self = app.add_subcommand("selftest", "Run the property suites");
  add_common(self, c);
  add_quadrature(self, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    // The bijection is validated before anything is computed.
    if (c.format.empty()) c.format = *an ? "json" : "csv";
    ContextPtr ctx = make_context(ArithmeticContext::parse(c.bijection, c.precision_bits));
    if (*map) return cmd_map(c, ctx, out, err);
    if (*an) return cmd_analyze(c, ctx, out);
    if (*rec) return cmd_reconstruct(c, out);
    if (*spec) return cmd_spectrum(c, ctx, out);
    if (*fig) return cmd_figures(c, ctx, out);
    if (*self) return cmd_selftest(c, ctx, out);
  } catch (const CoefficientFileError& e) {
    err << "error: " << e.what() << '\n';
    return kCoefficientFile;
  } catch (const QuadratureNonConvergent& e) {
    err << "error: " << e.what() << '\n';
    return kQuadratureFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ndf::cli
