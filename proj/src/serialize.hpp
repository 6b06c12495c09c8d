// JSON document builders behind the library verbs. Every document carries the
// fixed envelope (paper, n, kind, version) and is byte-stable for fixed inputs:
// keys are emitted in sorted order and no timing data is ever included.
#pragma once

#include <string>

#include "verify.hpp"

namespace arcspan {

// family: xn1 | xn2 | xn2-plus | xn2-minus | e | e-plus | e-minus
// stratum: "" | "t=K" | "prime" | "doubleprime" | "t=K,prime" | ...
std::string enumerate_json(int n, const std::string& family, const std::string& stratum);

// kind: c | cprime | cplus | cminus | A | Aprime | bar-plus-fourier
std::string matrix_json(int n, const std::string& kind);

std::string verify_json(int n, const std::string& suite, bool& all_pass);

std::string conjecture_json(int n);

}  // namespace arcspan
