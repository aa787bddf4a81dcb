#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "thetagrp/finabgrp.hpp"
#include "thetagrp/invariants.hpp"

namespace thetagrp::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

using Json = nlohmann::ordered_json;

/// Flat record with absent optionals omitted.
Json report_to_json(const inv::ThetaReport& r);

/// Pairing file: {"orders": [...], "matrix": [["num/den", ...], ...]}.
group::Pairing pairing_from_json(const Json& doc);
Json pairing_to_json(const group::Pairing& P);

/// Runs one command line (argv[0] excluded) against the given streams.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thetagrp::cli
