// rellich: best constants of dilation-invariant Rellich inequalities.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "rellich/config.hpp"
#include "rellich/cylinder.hpp"
#include "rellich/errors.hpp"
#include "rellich/quad_verify.hpp"
#include "rellich/rational.hpp"
#include "rellich/report.hpp"
#include "rellich/scan.hpp"
#include "rellich/spectra.hpp"
#include "rellich/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

struct Overrides {
  std::optional<std::string> config_path;
  std::optional<double> L;
  std::optional<std::size_t> N;
  std::optional<int> k_max;
  std::optional<int> m_max;
  std::optional<std::size_t> cap_grid;
  std::optional<double> tol;
  std::optional<unsigned> threads;

  rellich::Config resolve() const {
    rellich::Config c = rellich::resolve_config(config_path);
    if (L) c.set("L", rellich::format_real(*L));
    if (N) c.set("N", std::to_string(*N));
    if (k_max) c.set("k_max", std::to_string(*k_max));
    if (m_max) c.set("m_max", std::to_string(*m_max));
    if (cap_grid) c.set("cap_grid", std::to_string(*cap_grid));
    if (tol) c.tol_bound = *tol;
    if (threads) c.threads = *threads;
    return c;
  }
};

rellich::CapOptions cap_options(const rellich::Config& c) {
  return rellich::CapOptions{c.cap_grid, c.m_max, c.cap_tol};
}

void print_checks(const std::vector<rellich::Check>& checks, rellich::OutputFormat format) {
  using rellich::json_string;
  if (format == rellich::OutputFormat::Json) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      std::cout << "  {\"criterion\":" << c.criterion << ",\"name\":" << json_string(c.name)
                << ",\"passed\":" << (c.passed ? "true" : "false")
                << ",\"detail\":" << json_string(c.detail) << '}' << (i + 1 < checks.size() ? "," : "")
                << '\n';
    }
    std::cout << "]\n";
    return;
  }
  for (const auto& c : checks) {
    std::cout << (c.passed ? "ok   " : "FAIL ") << '[' << c.criterion << "] " << c.name;
    if (!c.detail.empty()) std::cout << "  -- " << c.detail;
    std::cout << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best constants of dilation-invariant Rellich inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides ov;
  app.add_option("--config", ov.config_path,
                 std::string("Key-value config file (default: $") + rellich::kConfigEnv + ")");
  app.add_option("--L", ov.L, "Mode grid half-length");
  app.add_option("--N", ov.N, "Mode grid points");
  app.add_option("--k-max", ov.k_max, "Modes per alpha in numeric scans");
  app.add_option("--m-max", ov.m_max, "Cap azimuthal cutoff");
  app.add_option("--cap-grid", ov.cap_grid, "Cap finite-difference grid");
  app.add_option("--tol", ov.tol, "Bound comparison tolerance");
  app.add_option("--threads", ov.threads, "Worker threads (0 = all cores)");

  std::string format_text = "table";
  std::string domain_text = "sphere";
  int n = 0;
  std::string alpha_text;

  auto* constant = app.add_subcommand("constant", "Classify (n, alpha, domain) and report the constant");
  constant->add_option("--n", n, "Dimension")->required();
  constant->add_option("--alpha", alpha_text, "Weight exponent (decimal or p/q)")->required();
  constant->add_option("--domain", domain_text, "sphere | cap:THETA | arc:LEN | file:PATH");
  constant->add_option("--format", format_text, "table | csv | json");

  std::string from_text, to_text, step_text;
  bool with_numeric = false;
  std::string scan_format = "csv";
  auto* scan = app.add_subcommand("scan", "Sweep alpha and emit one row per value");
  scan->add_option("--n", n, "Dimension")->required();
  scan->add_option("--alpha-from", from_text, "First alpha")->required();
  scan->add_option("--alpha-to", to_text, "Last alpha (inclusive)")->required();
  scan->add_option("--step", step_text, "Alpha step (> 0)")->required();
  scan->add_option("--domain", domain_text, "sphere | cap:THETA | arc:LEN | file:PATH");
  scan->add_option("--format", scan_format, "table | csv | json");
  scan->add_flag("--with-numeric", with_numeric, "Add the discrete mode minimum column");

  std::size_t count = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Lowest Dirichlet eigenvalues of a domain");
  spectrum->add_option("--n", n, "Dimension")->required();
  spectrum->add_option("--domain", domain_text, "sphere | cap:THETA | arc:LEN | file:PATH");
  spectrum->add_option("--count", count, "Number of eigenvalues (default: spectrum_count)");
  spectrum->add_option("--format", format_text, "table | csv | json");

  std::string suite_text = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite_text,
                     "constants | modes | lemmas | equivalence | radial | witnesses | spectra | scan | all");
  verify->add_option("--format", format_text, "table | json");

  std::optional<std::string> corpus_path;
  std::size_t cells = 4000;
  auto* transform = app.add_subcommand("transform-check",
                                       "Compare x-space and cylinder quotients on a corpus");
  transform->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");
  transform->add_option("--cells", cells, "Cylinder grid cells");
  transform->add_option("--format", format_text, "table | csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    const rellich::Config config = ov.resolve();

    if (*constant) {
      const rellich::OutputFormat fmt = rellich::parse_format(format_text);
      const rellich::Rational alpha = rellich::parse_rational(alpha_text);
      const rellich::DomainSpec domain = rellich::parse_domain(domain_text);
      const rellich::Params p = rellich::derive(n, alpha);
      if (p.critical() && !domain.is_full_sphere()) {
        throw rellich::DegenerateDenominator(
            "alpha = 4-n on " + domain.describe() +
            ": the mode function is undefined at lambda = 0 and no closed form exists off the full sphere");
      }
      const rellich::Spectrum sp =
          rellich::make_spectrum(n, domain, config.spectrum_count, cap_options(config));
      std::cout << rellich::render_constant(
          rellich::summarize_constant(n, alpha, sp, config.tol_membership), fmt);
      return 0;
    }

    if (*scan) {
      const rellich::OutputFormat fmt = rellich::parse_format(scan_format);
      const auto alphas = rellich::alpha_grid(rellich::parse_rational(from_text),
                                              rellich::parse_rational(to_text),
                                              rellich::parse_rational(step_text));
      const rellich::Spectrum sp = rellich::make_spectrum(n, rellich::parse_domain(domain_text),
                                                          config.spectrum_count, cap_options(config));
      const rellich::ScanResult res = rellich::run_scan(n, alphas, sp, with_numeric, config);
      std::cout << rellich::render_scan(res.rows, fmt) << std::flush;
      if (res.error) {
        std::cerr << "error: row alpha = " << rellich::to_string(*res.failed_alpha)
                  << " failed: " << *res.error << '\n';
        return kExitFailure;
      }
      return 0;
    }

    if (*spectrum) {
      const rellich::OutputFormat fmt = rellich::parse_format(format_text);
      const std::size_t want = count != 0 ? count : config.spectrum_count;
      const rellich::Spectrum sp =
          rellich::make_spectrum(n, rellich::parse_domain(domain_text), want, cap_options(config));
      std::cout << rellich::render_spectrum(sp, want, fmt);
      return 0;
    }

    if (*verify) {
      const rellich::OutputFormat fmt = rellich::parse_format(format_text);
      if (fmt == rellich::OutputFormat::Csv) throw rellich::InvalidArgument("verify supports table | json");
      const auto checks = rellich::run_suite(rellich::parse_suite(suite_text), config);
      print_checks(checks, fmt);
      return rellich::all_passed(checks) ? 0 : kExitFailure;
    }

    if (*transform) {
      const rellich::OutputFormat fmt = rellich::parse_format(format_text);
      const auto corpus = corpus_path ? rellich::load_corpus(*corpus_path) : rellich::default_corpus();
      std::vector<rellich::TransformRow> rows;
      for (const auto& e : corpus) {
        const rellich::Params p = rellich::derive(e.function.n, e.alpha);
        rellich::TransformRow row;
        row.name = e.function.name;
        row.n = e.function.n;
        row.alpha = e.alpha;
        row.mode = e.function.mode;
        row.result = rellich::xspace_equivalence_check(
            e.function, p, rellich::full_sphere_spectrum(e.function.n, 4), cells);
        rows.push_back(row);
      }
      std::cout << rellich::render_transform(rows, fmt);
      return 0;
    }
  } catch (const rellich::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rellich::DegenerateDenominator& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
