#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phaserank/io.hpp"

namespace phaserank::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kSolverFailure = 2, kCapacity = 3, kInternal = 4 };

struct Command {
    std::string name;
    std::string input;   // path, "-" for stdin
    std::string matrix;  // inline grammar or JSON text
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t resolution = 512;
    bool resolution_set = false;
    std::vector<std::string> bounds;
    std::size_t restarts = 16;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t samples = 1000000;
    std::string template_text;
};

struct Output {
    std::string body;
    int code = kOk;
};

/// Runs one subcommand and returns its serialized output. Library errors propagate.
Output execute(const Command& cmd);

/// Full command-line entry point: parses argv, runs, writes to `out` or --out,
/// maps errors to exit codes (1 bad input, 2 solver failure, 3 capacity).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Rank-deficiency membership of a 3x3 template over a grid of its free angles
/// (grid points k * 2pi / resolution). value[k] is 1 when the filled matrix has
/// phase rank below 3; index k enumerates slot 1 fastest.
struct Slice {
    std::size_t slots = 0;
    std::size_t resolution = 0;
    std::vector<std::uint8_t> member;
};
Slice coamoeba_slice(const io::MatrixTemplate& t, std::size_t resolution);

}  // namespace phaserank::cli
