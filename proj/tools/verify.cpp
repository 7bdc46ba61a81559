#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "congrlab/congrlab.hpp"

namespace {

using namespace congrlab;

struct PrimeRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

PrimeRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected LO..HI, got '" + text + "'");
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::InvalidArgument, "bad prime bound '" + s + "'");
    return std::stoull(s);
  };
  PrimeRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.lo < 3) throw Error(ErrorKind::InvalidArgument, "lower prime bound must be at least 3");
  if (r.lo > r.hi) throw Error(ErrorKind::InvalidArgument, "lower prime bound exceeds upper bound");
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CONGRLAB_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void list_checks(const Registry& reg, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : reg.congruences) width = std::max(width, c.id.size());
  for (const auto& c : reg.identities) width = std::max(width, c.id.size());
  for (const auto& c : reg.congruences) {
    out << c.id << std::string(width - c.id.size() + 2, ' ') << "mod p^" << c.target_exponent << "  p>=" << c.min_prime
        << (c.t_panel ? "  t-panel" : "") << "  [" << c.anchor << "]\n";
  }
  for (const auto& c : reg.identities) {
    out << c.id << std::string(width - c.id.size() + 2, ' ') << "exact  " << c.param_sets.size() << " cases  ["
        << c.anchor << "]\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sweep prime ranges and confirm congruences for central binomial sums"};
  std::string primes = "7..1000";
  std::string checks = "all";
  unsigned jobs = default_jobs();
  std::string format = "text";
  std::string output;
  std::string panel;
  bool fail_fast = false, list = false, no_cap = false, timing = false;
  app.add_option("--primes", primes, "Prime range LO..HI")->capture_default_str();
  app.add_option("--checks", checks, "Comma-separated check patterns (globs or id prefixes), or 'all'")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads (default: CONGRLAB_JOBS or hardware concurrency)")
      ->check(CLI::Range(1u, 4096u));
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_option("--t-panel", panel, "Override the parameter panel: a/b[,a/b...]");
  app.add_flag("--fail-fast", fail_fast, "Stop scheduling after the first non-passing result");
  app.add_flag("--list-checks", list, "List registered checks and exit");
  app.add_flag("--no-cap", no_cap, "Lift per-check prime caps");
  app.add_flag("--timing", timing, "Report per-check timings (makes output run-dependent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  const Registry registry = builtin_checks();
  if (list) {
    list_checks(registry, std::cout);
    return 0;
  }

  SuiteConfig config;
  try {
    auto range = parse_range(primes);
    config.prime_lo = range.lo;
    config.prime_hi = range.hi;
    config.patterns = split(checks, ',');
    if (config.patterns.empty()) throw Error(ErrorKind::InvalidArgument, "no check pattern given");
    if (!panel.empty()) {
      std::vector<Rational> ts;
      for (const auto& item : split(panel, ',')) {
        Rational t = Rational::parse(item);
        if (t.is_zero()) throw Error(ErrorKind::InvalidArgument, "t = 0 is not allowed");
        ts.push_back(t);
      }
      config.t_panel_override = std::move(ts);
    }
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  config.jobs = jobs;
  config.fail_fast = fail_fast;
  config.no_cap = no_cap;

  try {
    Report report = run_suite(registry, config);
    EmitOptions opt;
    opt.timing = timing;
    if (output.empty()) {
      emit_report(report, parse_format(format), std::cout, opt);
    } else {
      std::ofstream file(output);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + output + "' for writing");
      emit_report(report, parse_format(format), file, opt);
    }
    std::size_t pass = 0, fail = 0, error = 0;
    for (const auto& [id, s] : report.summary()) {
      pass += s.pass;
      fail += s.fail;
      error += s.error;
    }
    std::cerr << "verify: " << report.results.size() << " results, " << pass << " pass, " << fail << " fail, " << error
              << " error" << (report.interrupted ? " (stopped early)" : "") << "\n";
    switch (report.worst()) {
      case Status::Pass: return 0;
      case Status::Fail: return 1;
      case Status::Error: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
