// Statement registry: every certified claim gets a stable id, a plain-language
// summary, and a runner producing a Report at a chosen ambient size.
#pragma once

#include "bases.hpp"
#include "fourier.hpp"

namespace arcspan {

struct StatementInfo {
  std::string id;
  std::string summary;
};

const std::vector<StatementInfo>& statement_registry();

// suite grammar: "all", a single id, or a comma-separated list; ids are
// case-insensitive, an optional "Thm" prefix is dropped, and a bare number
// like "2.4" selects every lettered part. Unknown tokens raise usage_error.
std::vector<std::string> expand_suite(const std::string& suite);

Report run_statement(const std::string& id, int n);
std::vector<Report> run_suite(const std::string& suite, int n);

}  // namespace arcspan
