// Command-line front end: sweeps over the exponent LPs, closed-form tables,
// and the Cantor experiments, emitting CSV or versioned JSON. run() is the
// whole program; main() only forwards argv, so tests can drive the exact
// user-visible surface in-process and assert on bytes.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "declab/cantor.hpp"
#include "declab/rational.hpp"

namespace declab::cli {

enum class OutputKind { Csv, Json };

struct SweepConfig {
  std::vector<Rat> alpha_list;
  std::vector<Rat> p_list;
  std::vector<int> K_list;
  std::vector<CantorSpec> cantor_specs;
  OutputKind output = OutputKind::Csv;
  int digits = 12;                 // >= 1; controls decimal rendering
  bool decimal_rationals = false;  // rationals print as "p/q" unless opted in
  std::string regime = "auto";     // auto sends alpha <= 1/2 to small
  std::int64_t grid = 0;           // 0 derives the grid from the frequencies
  std::int64_t size_limit = 1'000'000;
  bool emit_program = false;       // lp, json output only
};

// Exit code 0; 1 on bad input (usage errors name the offending flag and the
// admissible range); 2 on an internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace declab::cli
