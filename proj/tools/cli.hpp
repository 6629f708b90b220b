#pragma once

#include "nichols/cartanweyl.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols::cli {

enum Exit { Ok = 0, ParseError = 1, NotFinite = 2, VerifyFailed = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputSpec {
    int theta = 0;
    int N = 1;
    std::vector<std::vector<int>> exps;
    Caps caps;
    bool has_max_degree = false;
};

/// Parses {theta, N, exps, caps?}; throws InputError (or a json parse error).
InputSpec parse_input(const std::string& text, int max_theta = 8);

/// Runs the command line; input is read from the named file or, for "-" or no
/// file, from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nichols::cli
