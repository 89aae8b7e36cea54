#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "smoothred/io.hpp"

namespace {

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 3;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

int finish(const smoothred::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified smoothness certificates and noetherian reduction"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  std::optional<unsigned> max_degree;
  bool synth_first = false;

  auto add_common = [&](CLI::App* sub, bool with_json) {
    sub->add_option("file", file, "presentation file")->required();
    if (with_json) sub->add_flag("--json", json, "machine-readable report");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the certificate identities exactly");
  add_common(verify, true);

  CLI::App* synth = app.add_subcommand("synth", "synthesize a smoothness certificate");
  add_common(synth, true);
  synth->add_option("--max-degree", max_degree, "degree cap for the Jacobian solve");

  CLI::App* reduce = app.add_subcommand("reduce", "run the noetherian reduction");
  add_common(reduce, true);
  reduce->add_flag("--synth", synth_first, "synthesize a certificate first");
  reduce->add_option("--max-degree", max_degree, "degree cap when synthesizing");

  CLI::App* jac = app.add_subcommand("jacobian", "print the relator Jacobian");
  add_common(jac, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  std::string text;
  if (int rc = read_file(file, text)) return rc;

  if (verify->parsed()) return finish(smoothred::cmd_verify(text, json));
  if (synth->parsed()) return finish(smoothred::cmd_synth(text, max_degree, json));
  if (reduce->parsed())
    return finish(smoothred::cmd_reduce(text, synth_first, max_degree, json));
  if (jac->parsed()) return finish(smoothred::cmd_jacobian(text));
  return 3;
}
