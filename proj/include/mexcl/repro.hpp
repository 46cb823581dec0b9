#pragma once

// Regenerates the worked examples and checks every asserted fact.

#include "mexcl/json_io.hpp"

#include <string>
#include <vector>

namespace mexcl {

struct Assertion {
  std::string name;
  bool pass;
  std::string detail;
};

struct ReproReport {
  std::string id;
  std::vector<Assertion> assertions;
  io::Json data = io::Json::object();

  bool ok() const;
  io::Json to_json() const;
};

const std::vector<std::string>& repro_ids();
/// Throws ParseError for an unknown id.
ReproReport run_repro(const std::string& id);

}  // namespace mexcl
