#pragma once
#include <cstdint>
#include <string>

namespace quartica {

// one batch invocation: the command plus every knob that affects its output
struct RunConfig {
  std::string command;           // verify-kummer | count | disc | wall | fixtures
  std::string field = "GF(2^3)";
  std::string family;            // "ordinary:a,b,c", "rank1:rand", "center:1,1", "rotation"
  std::string poly;              // explicit polynomial input
  std::string mode = "plane";    // count: "point" or "plane"
  std::string kind;              // wall: run the pinned fixture of this kind (I..IV)
  uint64_t seed = 1;
  unsigned samples = 20;
  unsigned degree = 4;           // disc
  unsigned k_max = 12;
  unsigned workers = 1;
};

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kNotStabilized = 3 };

// runs one command, serializes the JSON report (schema 1) into `report`, and
// returns the exit code.  The same config (seed included) yields the same
// report byte for byte; elapsed_ms is the only non-deterministic field.
int run_command(const RunConfig& cfg, std::string& report);

}  // namespace quartica
