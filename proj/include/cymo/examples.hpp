#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cymo {

// One named numeric check: pass iff the observed value met its bound.  The
// detail string says which comparison was made (<=, >=, in-range).
struct ExampleCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
  std::string detail;
};

struct ExampleResult {
  std::string name;
  std::vector<ExampleCheck> checks;
  bool pass() const;
};

// Built-in end-to-end reproductions, one per classical model; the CLI `example`
// subcommand and the acceptance suite run the same code.
std::vector<std::string> example_names();
ExampleResult run_example(const std::string& name, std::uint64_t seed = 42);

}  // namespace cymo
