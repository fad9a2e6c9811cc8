#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monosep/relation_ideal.hpp"

namespace monosep::cli {

/// Reads a presentation file: one polynomial per line, '#' starts a comment,
/// blank lines ignored.
std::vector<IntPoly> read_presentation_file(const std::string& path);

/// Entry point of the `monosep` tool. `args` excludes the program name.
/// Returns 0 after any successful computation, whatever the verdict; 2 on
/// usage or input errors; 1 if `verify` rejects a certificate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monosep::cli
