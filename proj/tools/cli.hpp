#pragma once

// Command-line front end. `run` is the whole dispatch and never touches the
// process environment or files, so tests call it directly; `cli_main` adds
// argument parsing and I/O.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "char1/io.hpp"

namespace char1::cli {

struct Command {
  std::string verb;
  std::string suite;  // laws-run only
  Json input;         // request object for the value verbs
  std::uint64_t seed = 0;
  std::optional<std::size_t> cases;
  std::size_t samples = 11;  // paf-plot
  bool euclidean = false;
};

enum Status : int { kOk = 0, kSchema = 1, kPrecondition = 2, kLawsFailed = 3 };

struct Outcome {
  int status = kOk;
  std::string output;  // JSON (one line) or CSV, newline-terminated
  std::string error;
};

Outcome run(const Command& cmd);

int cli_main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace char1::cli
