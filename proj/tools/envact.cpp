#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "envact/cli/commands.hpp"
#include "envact/cli/document.hpp"

namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

int main(int argc, char** argv) {
  using namespace envact::cli;

  CLI::App app{"Globalize finite partial group actions and audit the result"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string dot_path;
  std::string base = "full";
  std::size_t n = 4;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    if (takes_input)
      sub->add_option("-i,--input", input, "Action document (default: stdin)");
    sub->add_flag("--json", as_json, "Emit the report as JSON");
  };

  add_common(app.add_subcommand("validate", "Check the partial action laws"),
             true);
  auto* glob = app.add_subcommand(
      "globalize", "Build X_G, mu and iota and check their properties");
  add_common(glob, true);
  glob->add_option("--dot", dot_path, "Also write the class graph as DOT");
  add_common(app.add_subcommand(
                 "diagnose", "Separation diagnostics for the enveloping space"),
             true);
  auto* emb = app.add_subcommand(
      "embed", "Embed into the shift on tuples of subsets of G");
  add_common(emb, true);
  emb->add_option("--base", base, "Base of X used for the embedding")
      ->check(CLI::IsMember({"full", "minimal"}));
  auto* shift = app.add_subcommand(
      "shift-demo", "Restricted Bernoulli shift on {0,1}^n under Z_n");
  add_common(shift, false);
  shift->add_option("-n,--n", n, "Word length")->check(CLI::Range(2, 10));
  auto* dot = app.add_subcommand(
      "export-dot", "Print the class graph of X_G in Graphviz DOT");
  add_common(dot, true);
  dot->add_option("--dot", dot_path, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Options options;
  options.n = n;
  options.base = base == "minimal" ? envact::BaseChoice::Minimal
                                   : envact::BaseChoice::Full;

  try {
    json document;
    if (command != "shift-demo") {
      std::string text;
      if (input.empty() || input == "-") {
        text = read_all(std::cin);
      } else {
        std::ifstream file(input);
        if (!file) {
          std::cerr << "envact: cannot open " << input << "\n";
          return 1;
        }
        text = read_all(file);
      }
      document = parse_text(text);
    }

    const Outcome outcome = run(command, document, options);

    if (command == "export-dot" && dot_path.empty()) {
      std::cout << *outcome.dot;
      return 0;
    }
    if (!dot_path.empty() && outcome.dot) {
      std::ofstream out(dot_path);
      if (!out) {
        std::cerr << "envact: cannot write " << dot_path << "\n";
        return 1;
      }
      out << *outcome.dot;
    }
    std::cout << (as_json ? format_json(outcome) : format_text(outcome));
    if (outcome.bug)
      std::cerr << "envact: an audit failed; please report this as a bug\n";
    return 0;
  } catch (const ParseError& err) {
    std::cerr << "envact: parse error: " << err.what() << "\n";
  } catch (const SchemaError& err) {
    std::cerr << "envact: invalid document: " << err.what() << "\n";
  } catch (const DomainError& err) {
    std::cerr << "envact: " << err.what() << "\n";
  }
  return 1;
}
