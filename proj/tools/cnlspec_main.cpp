// cnlspec: specification sentences and queries in controlled English,
// interactively or from a batch file.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cnl/errors.hpp"
#include "cnl/lexicon.hpp"
#include "cnl/paraphrase.hpp"
#include "cnl/session.hpp"

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiler and dialog for specifications in controlled English"};
  std::string lexicon_path;
  std::string kb_path;
  std::string batch_path;
  std::string script_io_path;
  std::string schemata_path;
  cnl::SessionConfig config;
  app.add_option("--lexicon", lexicon_path, "lexicon file replacing the built-in vocabulary");
  app.add_option("--kb", kb_path, "knowledge base to load on startup");
  app.add_option("--batch", batch_path, "process this file instead of an interactive prompt");
  app.add_option("--script-io", script_io_path, "file of replies consumed by scenario runs");
  app.add_option("--depth", config.depth, "proof depth bound")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", config.trace, "print clauses and proof goals");
  app.add_flag("--lenient", config.lenient, "exit 0 even after rejections");
  app.add_option("--schemata", schemata_path, "paraphrase schema file replacing the built-in set");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cnl::Lexicon lexicon;
    if (lexicon_path.empty())
      lexicon.load_lines(cnl::default_lexicon_lines());
    else
      lexicon.load_lines(read_lines(lexicon_path));

    cnl::SchemaSet schemata;
    if (schemata_path.empty())
      schemata = cnl::SchemaSet::parse_lines(cnl::default_schemata_lines());
    else
      schemata = cnl::SchemaSet::parse_lines(read_lines(schemata_path));

    config.interactive = batch_path.empty();
    std::ifstream batch;
    if (!batch_path.empty()) {
      batch.open(batch_path);
      if (!batch) throw std::runtime_error("cannot open " + batch_path);
    }
    std::istream& in = batch_path.empty() ? std::cin : batch;

    cnl::Session session(std::move(lexicon), std::move(schemata), config, in,
                         std::cout);
    if (!script_io_path.empty()) session.push_replies(read_lines(script_io_path));
    if (!kb_path.empty()) session.push_input(":load " + kb_path);
    return session.run();
  } catch (const cnl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
