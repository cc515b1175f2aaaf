// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "conicmod/conicmod.hpp"

namespace conicmod::cli {

namespace {

std::string format_terms(const std::vector<SeriesTerm>& terms) {
  std::string s;
  for (const SeriesTerm& t : terms) {
    if (!s.empty()) s += ';';
    s += std::to_string(t.n) + ':' + (t.coefficient > 0 ? "+1" : "-1");
  }
  return s;
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::vector<OutputRecord> cmd_symbol(std::int64_t a, std::int64_t n) {
  OutputRecord r{"symbol", {}, {}};
  r.input("a", a).input("n", n).output("value", std::int64_t{kronecker(a, n)});
  return {r};
}

std::vector<OutputRecord> cmd_count(std::int64_t a, std::uint64_t p) {
  const PrimeModulus modulus(p);
  OutputRecord r{"count", {}, {}};
  r.input("a", a).input("p", as_signed(p));
  if (!modulus.is_odd()) {
    r.output("N", kSolutionsOverF2).output("b", as_signed(p) - kSolutionsOverF2);
    return {r};
  }
  const CountResult count = count_formula(Curve(a, modulus));
  r.output("N", count.N).output("b", count.b);
  return {r};
}

std::vector<OutputRecord> cmd_scan(std::int64_t a, std::uint64_t p_max, unsigned jobs) {
  // Validates a once up front so errors do not depend on p_max.
  [[maybe_unused]] const Curve probe(a, PrimeModulus(3));

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p <= p_max; p += 2) {
    if (is_prime(p)) primes.push_back(p);
  }

  std::vector<std::optional<OutputRecord>> rows(primes.size());
  auto compute = [&](std::size_t i) {
    const PrimeModulus modulus(primes[i]);
    const CountResult count = count_formula(Curve(a, modulus));
    OutputRecord r{"scan", {}, {}};
    r.input("a", a).input("p", as_signed(primes[i]));
    r.output("N", count.N).output("b", count.b);
    r.output("kronecker", std::int64_t{kronecker(a, as_signed(primes[i]))});
    rows[i] = std::move(r);
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(primes.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) compute(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) compute(i);
      });
    }
  }

  std::vector<OutputRecord> records;
  records.reserve(rows.size());
  for (auto& row : rows) records.push_back(std::move(*row));
  return records;
}

std::vector<OutputRecord> cmd_solutions(std::int64_t a, std::uint64_t p) {
  const Curve curve(a, PrimeModulus(p));
  std::vector<OutputRecord> records;
  for (const Point& P : enumerate_solutions(curve)) {
    OutputRecord r{"solutions", {}, {}};
    r.input("a", a).input("p", as_signed(p));
    r.output("x", as_signed(P.x())).output("y", as_signed(P.y()));
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<OutputRecord> cmd_group(std::int64_t a, std::uint64_t p) {
  const Curve curve(a, PrimeModulus(p));
  const CyclicityCertificate cert = verify_cyclic(curve);
  const ZEmbedding emb(curve);

  std::vector<OutputRecord> records;
  for (std::size_t k = 0; k < cert.chain.size(); ++k) {
    const Point& P = cert.chain[k];
    const Fp2Elem z = z_embed(P, emb);
    OutputRecord r{"group", {}, {}};
    r.input("a", a).input("p", as_signed(p));
    r.output("N", as_signed(cert.order))
        .output("generator_x", as_signed(cert.generator.x()))
        .output("generator_y", as_signed(cert.generator.y()))
        .output("k", as_signed(k + 1))
        .output("x", as_signed(P.x()))
        .output("y", as_signed(P.y()))
        .output("z_u", as_signed(z.u()))
        .output("z_v", as_signed(z.v()))
        .output("z_basis", emb.residue_case() ? std::string("Fp") : std::string("Fp2"));
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<OutputRecord> cmd_gauss(std::uint64_t p) {
  const PrimeModulus modulus(p);
  OutputRecord r{"gauss", {}, {}};
  r.input("p", as_signed(p));
  r.output_complex("character", gauss_sum_character(modulus));
  r.output_complex("quadratic", gauss_sum_quadratic(modulus));
  r.output_complex("closed_form", closed_form_gp(modulus));
  return {r};
}

std::vector<OutputRecord> cmd_fbar(std::int64_t a) {
  const PeriodSumResult res = fbar(a);
  OutputRecord r{"fbar", {}, {}};
  r.input("a", a);
  r.output_complex("value", res.value);
  r.output("period", res.period).output("nome", std::string(to_string(res.nome)));
  r.output("terms", format_terms(res.terms));
  if (res.closed_form) r.output_complex("closed_form", *res.closed_form);
  return {r};
}

std::vector<OutputRecord> cmd_quadexp(std::int64_t a) {
  OutputRecord r{"quadexp", {}, {}};
  r.input("a", a);
  r.output_complex("value", quad_exp_sum(a));
  return {r};
}

std::vector<OutputRecord> cmd_theta(double tau_re, double tau_im, std::int64_t terms) {
  const ThetaPartial t = theta_series(tau_im, tau_re, terms);
  OutputRecord r{"theta", {}, {}};
  r.input("tau_re", tau_re).input("tau_im", tau_im).input("terms", terms);
  r.output_complex("gauss", t.gauss);
  r.output_complex("theta", t.theta);
  return {r};
}

std::vector<OutputRecord> cmd_indexmap(std::int64_t a) {
  std::vector<OutputRecord> records;
  for (const IndexTriple& t : index_table(a)) {
    OutputRecord r{"indexmap", {}, {}};
    r.input("a", a);
    r.output("m", t.m).output("ell", t.ell).output("n", t.n);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<OutputRecord> cmd_conductor(std::int64_t a) {
  OutputRecord r{"conductor", {}, {}};
  r.input("a", a);
  r.output("conductor", conductor(a));
  r.output("kronecker_period", kronecker_period(a));
  if (((a % 4) + 4) % 4 != 2) r.output("level", level(a));
  return {r};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic curves over F_p: counts, group law, Gaussian sums"};
  app.name("conicmod");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--output", output_path, "Write output to this file instead of stdout");

  std::function<std::vector<OutputRecord>()> action;

  std::int64_t a = 0, n = 0, terms = 0;
  std::uint64_t p = 0, p_max = 0;
  unsigned jobs = 1;
  double tau_re = 0.0, tau_im = 0.0;

  auto* symbol = app.add_subcommand("symbol", "Kronecker symbol (a/n)");
  symbol->add_option("--a", a)->required();
  symbol->add_option("--n", n)->required();
  symbol->callback([&] { action = [&] { return cmd_symbol(a, n); }; });

  auto* count = app.add_subcommand("count", "Solution count N(p) and b(p)");
  count->add_option("--a", a)->required();
  count->add_option("--p", p)->required();
  count->callback([&] { action = [&] { return cmd_count(a, p); }; });

  auto* scan = app.add_subcommand("scan", "N(p), b(p), (a/p) for odd primes p <= p-max");
  scan->add_option("--a", a)->required();
  scan->add_option("--p-max", p_max)->required();
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->callback([&] { action = [&] { return cmd_scan(a, p_max, jobs); }; });

  auto* solutions = app.add_subcommand("solutions", "List every solution (x, y)");
  solutions->add_option("--a", a)->required();
  solutions->add_option("--p", p)->required();
  solutions->callback([&] { action = [&] { return cmd_solutions(a, p); }; });

  auto* group = app.add_subcommand("group", "Generator, multiples and Z-embedding");
  group->add_option("--a", a)->required();
  group->add_option("--p", p)->required();
  group->callback([&] { action = [&] { return cmd_group(a, p); }; });

  auto* gauss = app.add_subcommand("gauss", "Both Gaussian sum expressions for p");
  gauss->add_option("--p", p)->required();
  gauss->callback([&] { action = [&] { return cmd_gauss(p); }; });

  auto* fbar_cmd = app.add_subcommand("fbar", "One period of the generalized Gaussian sum");
  fbar_cmd->add_option("--a", a)->required();
  fbar_cmd->callback([&] { action = [&] { return cmd_fbar(a); }; });

  auto* quadexp = app.add_subcommand("quadexp", "Quadratic exponential sum for a = 2 mod 4");
  quadexp->add_option("--a", a)->required();
  quadexp->callback([&] { action = [&] { return cmd_quadexp(a); }; });

  auto* theta = app.add_subcommand("theta", "Truncated theta-type series");
  theta->add_option("--tau-re", tau_re)->required();
  theta->add_option("--tau-im", tau_im)->required();
  theta->add_option("--terms", terms)->required();
  theta->callback([&] { action = [&] { return cmd_theta(tau_re, tau_im, terms); }; });

  auto* indexmap = app.add_subcommand("indexmap", "Table n = 4m - a(2 ell - 1)");
  indexmap->add_option("--a", a)->required();
  indexmap->callback([&] { action = [&] { return cmd_indexmap(a); }; });

  auto* conductor_cmd = app.add_subcommand("conductor", "Conductor and level of a");
  conductor_cmd->add_option("--a", a)->required();
  conductor_cmd->callback([&] { action = [&] { return cmd_conductor(a); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "conicmod: " << e.what() << '\n';
    return kExitDomain;
  }

  static const std::map<std::string, Format> kFormats = {
      {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

  try {
    const std::vector<OutputRecord> records = action();
    if (output_path.empty()) {
      write_records(out, records, kFormats.at(format_name));
    } else {
      std::ofstream file(output_path);
      if (!file) {
        err << "conicmod: cannot open " << output_path << '\n';
        return kExitInternal;
      }
      write_records(file, records, kFormats.at(format_name));
    }
  } catch (const DomainError& e) {
    err << "conicmod: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "conicmod: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitSuccess;
}

}  // namespace conicmod::cli
