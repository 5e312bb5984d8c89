#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "exclusivity/e_verifier.hpp"
#include "exclusivity/quantum.hpp"
#include "exclusivity/report.hpp"

namespace excl::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Entry point shared by main() and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Json = nlohmann::ordered_json;

/// Reals are written as "%.17g" strings so that a parse/dump cycle is
/// byte-identical; rationals as "p/q" strings.
std::string real_string(double x);

Json to_json(const BoundReport& r);
Json to_json(const VerificationTranscript& t);
Json to_json(const KcbsRealization& r);
Json to_json(const ChshRealization& r);
Json to_json(const ThetaResult& r, const PrimalCheck& check);

struct Check {
  std::string name;
  std::string value;
  std::string expected;
  bool pass = false;
};

/// Every reproduced number with its expected value.
std::vector<Check> reproduction_checks(double tol);

}  // namespace excl::cli
