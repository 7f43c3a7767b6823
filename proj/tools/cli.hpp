#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace octodp::cli {

enum class Command { Build, Classify, Lines, Trees, Triangulations, Sample, Blowdown, Verify };
enum class Format { Json, Newick, Dot };

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> moduli;  // comma separated rationals, or a catalog name
  long prime = 5;
  std::uint64_t seed = 20240611;
  std::string output = "-";
  Format format = Format::Json;
  std::optional<std::string> delta_file;
  // sample
  std::string target = "smooth";
  std::uint64_t budget = 500;
  unsigned threads = 0;
  // verify
  std::vector<int> only;
};

/// Exit status: 0 success, 1 mathematical precondition failure (or a failing
/// verify criterion), 2 internal invariant violation.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors exit with status 1.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace octodp::cli
