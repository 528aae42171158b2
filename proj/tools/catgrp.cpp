// catgrp: batch front end over object files.
//
// Exit status: 0 pass, 1 fail verdict, 2 usage/parse/validation error,
// 3 enumeration cap exceeded, 4 internal consistency failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catgrp/commands.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3, kInternal = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite crossed modules and group-groupoids"};
  std::vector<std::string> files;
  std::vector<std::string> command;
  bool as_json = false;
  std::size_t cap = catgrp::Config{}.max_order;
  catgrp::CommandOptions opt;

  app.add_option("-f,--file", files, "Object file to load (repeatable)")
      ->allow_extra_args(false);
  app.add_flag("--json", as_json, "One JSON record per line");
  app.add_option("--cap", cap, "Largest group order enumerated");
  app.add_option("--max", opt.max_steps, "Tower steps");
  app.add_flag("--include-identities", opt.include_identities,
               "Keep identity arrows in DOT output");
  app.add_option("--out", opt.out, "Write constructed objects in text format");
  app.add_option("command", command, "Command and its arguments")->required();
  app.footer(
      "Commands:\n"
      "  verify <name>\n"
      "  derivations <xmod>\n"
      "  actor <xmod|gpgd>\n"
      "  center <gpgd>\n"
      "  abelianization <gpgd>\n"
      "  bs to-xmod <gpgd> | bs to-gpgd <xmod> | bs roundtrip <name>\n"
      "  isoact <gpgd>\n"
      "  holomorph <gpgd>\n"
      "  tower <gpgd> [--max k]\n"
      "  characteristic <gpgd> <sub|derived|center|zero|whole>\n"
      "  semidirect actor <gpgd> | inner <gpgd> | trivial <H> <G>\n"
      "             | internal <gpgd> <N> <M>\n"
      "  export-dot <gpgd> <path> [--include-identities]\n"
      "  builtin <spec>\n"
      "Builtin specs: z4, s3, d4, klein4, z2*z3, pair:s3, discrete:z3, zero,\n"
      "  psi:<xmod>, actor:<gpgd>, incl:z4:2, inner:s3, identity:z3,\n"
      "  trivial:z3, phi:<gpgd>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    catgrp::Config cfg;
    cfg.max_order = cap;
    auto ws = catgrp::parse_workspace(files, cfg);
    auto result = catgrp::run_command(ws, command, opt);
    std::cout << catgrp::render(result, as_json);
    return result.pass ? kPass : kFail;
  } catch (const catgrp::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const catgrp::InternalError& e) {
    std::cerr << "bug: " << e.what() << "\n";
    return kInternal;
  } catch (const catgrp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
