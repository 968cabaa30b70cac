#include "rellich/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rellich/errors.hpp"

namespace rellich {
namespace {

std::string fixed_width(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string short_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string opt_short(const std::optional<double>& v) { return v ? short_real(*v) : "-"; }

std::string opt_csv(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw InvalidArgument("unknown format '" + std::string(text) + "' (table|csv|json)");
}

std::string format_real(double v) {
  if (v == 0.0) return "0";  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_real(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return "null";
  return format_real(*v);
}

ConstantSummary summarize_constant(int n, const Rational& alpha, const Spectrum& spectrum,
                                   double membership_tol) {
  const Params p = derive(n, alpha);
  ConstantSummary s;
  s.n = n;
  s.alpha = alpha;
  s.domain = spectrum.domain().describe();
  s.report = classify(p, spectrum, membership_tol);
  s.delta_rad_exact = to_string(exact::derive(n, alpha).delta_rad);
  if (spectrum.domain().is_full_sphere()) {
    if (p.critical()) {
      s.critical_exact = to_string(exact::critical_constant(n));
    } else {
      s.M_exact = to_string(exact::best_mode_constant_sphere(n, alpha).value);
    }
  }
  return s;
}

std::string render_constant(const ConstantSummary& s, OutputFormat format) {
  const ConstantReport& r = s.report;
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json:
      out << "{\"n\":" << s.n << ",\"alpha\":" << format_real(to_double(s.alpha))
          << ",\"alpha_exact\":" << json_string(to_string(s.alpha))
          << ",\"domain\":" << json_string(s.domain) << ",\"delta_rad\":" << json_real(r.delta_rad)
          << ",\"delta_rad_exact\":" << json_string(s.delta_rad_exact) << ",\"M\":" << json_real(r.M)
          << ",\"M_exact\":" << (s.M_exact ? json_string(*s.M_exact) : "null")
          << ",\"critical\":" << json_real(r.critical)
          << ",\"critical_exact\":" << (s.critical_exact ? json_string(*s.critical_exact) : "null")
          << ",\"argmin_lambda\":" << json_real(r.argmin_lambda)
          << ",\"regime\":" << json_string(to_string(r.regime))
          << ",\"positive\":" << (r.positive ? "true" : "false")
          << ",\"certified_equality\":" << json_string(to_string(r.certified_equality))
          << ",\"certified\":" << (r.certified() ? "true" : "false") << "}\n";
      break;
    case OutputFormat::Csv:
      out << "n,alpha,domain,delta_rad,M,critical,argmin_lambda,regime,positive,certified_equality\n"
          << s.n << ',' << format_real(to_double(s.alpha)) << ',' << s.domain << ','
          << format_real(r.delta_rad) << ',' << opt_csv(r.M) << ',' << opt_csv(r.critical) << ','
          << opt_csv(r.argmin_lambda) << ',' << to_string(r.regime) << ','
          << (r.positive ? "true" : "false") << ',' << to_string(r.certified_equality) << '\n';
      break;
    case OutputFormat::Table: {
      auto line = [&](const std::string& k, const std::string& v) {
        out << fixed_width(k, 16) << v << '\n';
      };
      line("n", std::to_string(s.n));
      line("alpha", to_string(s.alpha));
      line("domain", s.domain);
      line("delta_rad", short_real(r.delta_rad) + "  (" + s.delta_rad_exact + ")");
      if (r.M) line("M", short_real(*r.M) + (s.M_exact ? "  (" + *s.M_exact + ")" : ""));
      if (r.critical) {
        line("critical", short_real(*r.critical) + (s.critical_exact ? "  (" + *s.critical_exact + ")" : ""));
      }
      if (r.argmin_lambda) line("argmin_lambda", short_real(*r.argmin_lambda));
      line("regime", std::string(to_string(r.regime)));
      line("positive", r.positive ? "true" : "false");
      line("certificate", std::string(to_string(r.certified_equality)));
      break;
    }
  }
  return out.str();
}

std::string render_scan(const std::vector<ScanRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "alpha,delta_rad,M,numeric_delta,regime,certified\n";
      for (const ScanRow& r : rows) {
        out << format_real(r.alpha) << ',' << format_real(r.delta_rad) << ',' << opt_csv(r.M) << ','
            << opt_csv(r.numeric_delta) << ',' << r.regime << ','
            << (r.certified ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::Json:
      out << "[\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const ScanRow& r = rows[i];
        out << "  {\"alpha\":" << format_real(r.alpha) << ",\"delta_rad\":" << format_real(r.delta_rad)
            << ",\"M\":" << json_real(r.M) << ",\"numeric_delta\":" << json_real(r.numeric_delta)
            << ",\"regime\":" << json_string(r.regime)
            << ",\"certified\":" << (r.certified ? "true" : "false") << '}'
            << (i + 1 < rows.size() ? "," : "") << '\n';
      }
      out << "]\n";
      break;
    case OutputFormat::Table:
      out << fixed_width("alpha", 12) << fixed_width("delta_rad", 16) << fixed_width("M", 16)
          << fixed_width("numeric_delta", 16) << fixed_width("regime", 13) << "certified\n";
      for (const ScanRow& r : rows) {
        out << fixed_width(to_string(r.alpha_exact), 12) << fixed_width(short_real(r.delta_rad), 16)
            << fixed_width(opt_short(r.M), 16) << fixed_width(opt_short(r.numeric_delta), 16)
            << fixed_width(r.regime, 13) << (r.certified ? "yes" : "no") << '\n';
      }
      break;
  }
  return out.str();
}

std::string render_spectrum(const Spectrum& spectrum, std::size_t count, OutputFormat format) {
  const std::vector<double> values = spectrum.first(count);
  const ResolutionMeta& m = spectrum.meta();
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "index,lambda\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << format_real(values[i]) << '\n';
      break;
    case OutputFormat::Json:
      out << "{\"domain\":" << json_string(spectrum.domain().describe())
          << ",\"n\":" << spectrum.dimension() << ",\"values\":[";
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_real(values[i]);
      out << "],\"grid\":" << m.grid << ",\"refined_grid\":" << m.refined_grid
          << ",\"error_estimate\":" << json_real(m.error_estimate) << ",\"m_max\":" << m.m_max
          << ",\"complete\":" << (m.complete ? "true" : "false") << "}\n";
      break;
    case OutputFormat::Table:
      out << "domain " << spectrum.domain().describe() << ", n = " << spectrum.dimension() << '\n';
      if (m.grid != 0) {
        out << "grid " << m.grid << " -> " << m.refined_grid << ", error estimate "
            << short_real(m.error_estimate) << ", m <= " << m.m_max
            << (m.complete ? "" : " (cutoff may hide eigenvalues)") << '\n';
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << fixed_width(std::to_string(i), 6) << short_real(values[i]) << '\n';
      }
      break;
  }
  return out.str();
}

std::string render_transform(const std::vector<TransformRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "name,n,alpha,mode,x_ratio,cylinder_ratio,discrepancy\n";
      for (const TransformRow& r : rows) {
        out << r.name << ',' << r.n << ',' << format_real(r.alpha) << ',' << r.mode << ','
            << format_real(r.result.x_ratio) << ',' << format_real(r.result.cylinder.ratio) << ','
            << format_real(r.result.discrepancy) << '\n';
      }
      break;
    case OutputFormat::Json:
      out << "[\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const TransformRow& r = rows[i];
        out << "  {\"name\":" << json_string(r.name) << ",\"n\":" << r.n
            << ",\"alpha\":" << format_real(r.alpha) << ",\"mode\":" << r.mode
            << ",\"x_ratio\":" << format_real(r.result.x_ratio)
            << ",\"cylinder_ratio\":" << format_real(r.result.cylinder.ratio)
            << ",\"discrepancy\":" << format_real(r.result.discrepancy) << '}'
            << (i + 1 < rows.size() ? "," : "") << '\n';
      }
      out << "]\n";
      break;
    case OutputFormat::Table:
      out << fixed_width("name", 18) << fixed_width("n", 3) << fixed_width("alpha", 7)
          << fixed_width("k", 3) << fixed_width("x-space", 20) << fixed_width("cylinder", 20)
          << "rel. gap\n";
      for (const TransformRow& r : rows) {
        char gap[32];
        std::snprintf(gap, sizeof gap, "%.2e", r.result.discrepancy);
        out << fixed_width(r.name, 18) << fixed_width(std::to_string(r.n), 3)
            << fixed_width(short_real(r.alpha), 7) << fixed_width(std::to_string(r.mode), 3)
            << fixed_width(short_real(r.result.x_ratio), 20)
            << fixed_width(short_real(r.result.cylinder.ratio), 20) << gap << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace rellich
