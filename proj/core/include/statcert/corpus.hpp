#ifndef STATCERT_CORPUS_HPP
#define STATCERT_CORPUS_HPP

#include <string>
#include <vector>

#include "statcert/problem.hpp"

namespace statcert {

struct CorpusEntry {
  std::string name;
  std::string json_text;
};

/// The embedded fixture set, in a fixed order.
const std::vector<CorpusEntry>& corpus();

/// Parse one fixture by name; throws InputError for an unknown name.
Problem corpus_problem(const std::string& name);

}  // namespace statcert

#endif
