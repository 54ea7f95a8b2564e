#pragma once
// Runs the recorded CLI cases in-process and reports mismatches.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "char1/io.hpp"
#include "cli.hpp"

namespace golden {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

inline Invocation invoke(std::vector<std::string> args, const std::string& stdin_text) {
  args.insert(args.begin(), "char1-cli");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int status = char1::cli::cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {status, out.str(), err.str()};
}

inline char1::Json load_cases() {
  std::ifstream file(CHAR1_GOLDEN_DIR "/cli_cases.json");
  std::stringstream buf;
  buf << file.rdbuf();
  return char1::parse_json(buf.str());
}

// Empty when the case matches; otherwise a description of the difference.
inline std::string check_case(const char1::Json& c) {
  std::vector<std::string> args{c["verb"].get<std::string>()};
  for (const auto& a : c["args"]) args.push_back(a.get<std::string>());
  const Invocation r = invoke(args, c["input"].dump());
  const int want_status = c["exit"].get<int>();
  const std::string want_out = c["stdout"].get<std::string>();
  if (r.status != want_status) return "exit " + std::to_string(r.status) + " != " + std::to_string(want_status);
  if (r.out != want_out) return "stdout " + r.out + " != " + want_out;
  if (want_status != 0 && r.err.empty()) return "no error message";
  return {};
}

}  // namespace golden
