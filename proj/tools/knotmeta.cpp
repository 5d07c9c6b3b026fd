#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "knotmeta/cli.hpp"

namespace kc = knotmeta::cli;

int main(int argc, char** argv) {
  CLI::App app{"knotmeta: metabelian characters, Riley polynomials and A-polynomial degree bounds"};
  app.require_subcommand(1);

  kc::RunConfig cfg;
  std::string format = "table";
  std::string input;
  long p = 0, q = 0, p_max = 0, det = 0;

  struct Subcommand {
    const char* name;
    const char* help;
  };
  const Subcommand subcommands[] = {
      {"det", "knot determinant |det(V + V^T)| (or p for S(p,q))"},
      {"meta-count", "number of irreducible metabelian characters, (det - 1)/2"},
      {"meta-enum", "list metabelian classes from a Seifert matrix"},
      {"meta-verify", "check the defining relation, irreducibility and trace(mu) = 0 for every class"},
      {"tb-riley", "Riley polynomial and its trace-free section phi(-1, u)"},
      {"tb-verify", "check the relator and longitude modulo phi(-1, u)"},
      {"tb-crosscheck", "compare deg phi(-1, u), its distinct roots and the metabelian census"},
      {"apoly-analyze", "degree bound and criteria for A-polynomials"},
      {"sweep", "run all two-bridge checks for p <= p_max"},
  };
  for (const auto& s : subcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    const std::string name = s.name;
    sub->add_option("--format,-f", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    if (name == "sweep") {
      sub->add_option("p_max,--p-max", p_max, "largest p (odd, >= 3)");
      continue;
    }
    sub->add_option("-i,--input", input, "JSON input file");
    if (name != "meta-enum" && name != "meta-verify" && name != "apoly-analyze") {
      sub->add_option("-p", p, "two-bridge parameter p");
      sub->add_option("-q", q, "two-bridge parameter q");
    }
    if (name == "tb-verify") sub->add_flag("--general-t", cfg.general_t, "also check the relator over Q(t)");
    if (name == "tb-riley") sub->add_flag("--roots", cfg.roots, "print approximate roots of phi(-1, u)");
    if (name == "apoly-analyze") {
      sub->add_flag("--small", cfg.small_flag, "assert the knot is small");
      sub->add_option("--det", det, "knot determinant for the multiplicity probe");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kc::kExitOk : kc::kExitInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = *kc::parse_command(sub->get_name());
  cfg.format = *kc::parse_format(format);
  auto given = [sub](const char* opt) {
    try {
      return sub->get_option(opt)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  if (given("--input")) cfg.input_path = input;
  if (given("-p")) cfg.p = p;
  if (given("-q")) cfg.q = q;
  if (given("--p-max")) cfg.p_max = p_max;
  if (given("--det")) cfg.det = det;

  return kc::run(cfg, std::cout, std::cerr);
}
