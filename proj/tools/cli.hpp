#pragma once

#include "g2spectra/measure.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace g2s::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Scatter of the distinct support points of every term, one colour per term.
std::string support_svg(const JointMeasure& mu);

}  // namespace g2s::cli
