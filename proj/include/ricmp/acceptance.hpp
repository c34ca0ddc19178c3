#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricmp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned seed = 0;
  bool verbose = true;  // print one line per criterion as it finishes
};

// Runs the full acceptance battery and returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(std::ostream& out,
                                            const AcceptanceOptions& opt = {});

bool acceptance_passed(const std::vector<CriterionResult>& results);

}  // namespace ricmp
