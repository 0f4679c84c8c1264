#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "kmosaic/errors.hpp"
#include "kmosaic/invariants.hpp"
#include "kmosaic/io.hpp"
#include "kmosaic/pdcode.hpp"

namespace kmosaic {

namespace detail {

struct command_result {
  std::string output;
  int exit_code;
};

inline command_result run_shell(const std::string& command) {
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) throw oracle_error("failed to launch: " + command);
  std::string output;
  char buf[256];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = ::pclose(pipe);
  const int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {output, exit_code};
}

}  // namespace detail

// Wrap an external command as a rank oracle. Protocol: the planar diagram
// JSON is fed to the command on standard input; the command prints the total
// rank as a single integer and exits 0. Any other behavior raises
// oracle_error.
inline rank_oracle command_oracle(std::string command) {
  return [command = std::move(command)](const pd_code& code) -> long long {
    namespace fs = std::filesystem;
    const fs::path input =
        fs::temp_directory_path() /
        ("kmosaic_oracle_" + std::to_string(static_cast<unsigned long>(::getpid())) + ".json");
    {
      std::ofstream out(input);
      out << write_pd_json(code);
    }
    const detail::command_result res =
        detail::run_shell("( " + command + " ) < '" + input.string() + "'");
    std::error_code ignored;
    fs::remove(input, ignored);

    if (res.exit_code != 0)
      throw oracle_error("oracle command exited with status " + std::to_string(res.exit_code));
    try {
      std::size_t consumed = 0;
      const long long rank = std::stoll(res.output, &consumed);
      while (consumed < res.output.size() &&
             std::isspace(static_cast<unsigned char>(res.output[consumed])))
        ++consumed;
      if (consumed != res.output.size()) throw std::invalid_argument("trailing output");
      return rank;
    } catch (const std::exception&) {
      throw oracle_error("oracle output is not a single integer: '" + res.output + "'");
    }
  };
}

}  // namespace kmosaic
