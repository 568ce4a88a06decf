#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kminor/error.hpp"
#include "kminor/io.hpp"
#include "kminor/pipeline.hpp"
#include "kminor/verify.hpp"

namespace kminor {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid_certificate = 1,
  exit_input_error = 2,
  exit_pipeline_error = 3,
};

namespace detail {

inline unsigned parse_density(const std::string& text) {
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    fail(ErrorKind::invalid_argument, "--d must be a positive integer, got '" + text + "'");
  }
  return value;
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::parse:
    case ErrorKind::malformed_certificate:
    case ErrorKind::size_cap_exceeded:
      return exit_input_error;
    default:
      return exit_pipeline_error;
  }
}

}  // namespace detail

/// Entry point of the kminor tool; args excludes the program name.
inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extract, verify and search complete graph minors"};
  app.require_subcommand(1);

  std::string input;
  std::string cert_path;
  std::string out_path;
  std::string density;
  std::uint64_t seed = 0;
  std::string mode_word = "best-effort";
  std::size_t retries = 1000;
  std::optional<std::size_t> max_order;
  std::size_t gen_n = 0;
  double gen_p = 0.0;

  auto* extract = app.add_subcommand("extract", "Extract a complete minor and write a certificate");
  extract->add_option("--input", input, "Edge-list file")->required();
  extract->add_option("--d", density, "Integer density: the graph needs |E| >= d|V|")->required();
  extract->add_option("--seed", seed, "Random seed")->required();
  extract->add_option("--mode", mode_word, "best-effort or guarantee")
      ->check(CLI::IsMember({"best-effort", "guarantee"}));
  extract->add_option("--max-retries", retries, "Sampler rounds per branch set")
      ->check(CLI::PositiveNumber);
  extract->add_option("--out", out_path, "Certificate file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--input", input, "Edge-list file")->required();
  verify->add_option("--cert", cert_path, "Certificate file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact Hadwiger number (at most 12 vertices)");
  oracle->add_option("--input", input, "Edge-list file")->required();
  oracle->add_option("--max-order", max_order, "Stop searching above this order");

  auto* gen = app.add_subcommand("gen", "Write a seeded G(n, p) edge list");
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--out", out_path, "Output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (extract->parsed()) {
      PipelineConfig cfg;
      cfg.d = detail::parse_density(density);
      cfg.seed = seed;
      cfg.mode = *parse_mode(mode_word);
      cfg.retry_cap = retries;
      const Graph g = parse_edge_list(read_text_file(input));
      const auto result = run_pipeline(g, cfg);
      const std::string doc = emit_certificate(result.certificate);
      if (out_path.empty()) {
        out << doc;
        err << "order " << result.certificate.order() << '\n';
      } else {
        write_text_file(out_path, doc);
        out << "order " << result.certificate.order() << '\n';
      }
      return exit_ok;
    }
    if (verify->parsed()) {
      const Graph g = parse_edge_list(read_text_file(input));
      const auto cert = parse_certificate(read_text_file(cert_path));
      const auto report = verify_certificate(g, cert.branch_sets);
      if (report.valid) {
        out << "VALID\n";
        return exit_ok;
      }
      out << "INVALID\n";
      for (const auto& v : report.violations) {
        out << to_string(v.kind) << ':';
        for (auto i : v.indices) out << ' ' << i;
        out << '\n';
      }
      return exit_invalid_certificate;
    }
    if (oracle->parsed()) {
      const Graph g = parse_edge_list(read_text_file(input));
      out << hadwiger_number(g, max_order) << '\n';
      return exit_ok;
    }
    if (gen->parsed()) {
      write_text_file(out_path, emit_edge_list(gnp_generate(gen_n, gen_p, seed)));
      return exit_ok;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return detail::exit_code_for(e.kind());
  }
  return exit_input_error;
}

}  // namespace kminor
