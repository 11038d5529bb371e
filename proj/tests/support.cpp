#include "support.hpp"

#include <sstream>

#include "ifol/io.hpp"

namespace ifol::test {

std::vector<FormulaPtr> load_corpus(const Signature& sig) {
  std::istringstream in(read_file(data_path("corpus.txt")));
  std::vector<FormulaPtr> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line == "#" || line.rfind("# ", 0) == 0) continue;
    out.push_back(parse_formula(line, sig));
  }
  return out;
}

}  // namespace ifol::test
