#pragma once

// Documented command lines and an in-process runner, shared by the CLI tests
// and the acceptance run.

#include <sstream>
#include <string>
#include <vector>

#include "fluxlim/cli.hpp"

namespace cli_examples {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

inline Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = fluxlim::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) out.push_back(w);
    return out;
}

struct Example {
    std::string command;
    int expected_exit;
};

// Every command line shown in the README, with its exit code.
inline const std::vector<Example>& documented() {
    static const std::vector<Example> list{
        {"solve --system zp --left 1,2 --right 4,0 --format json", 0},
        {"solve --system zp --left 1,2 --right 4,0 --format csv", 0},
        {"solve --system ise --left 1,1 --right 1,-1 --gamma 2 --eps1 0 --eps2 1", 2},
        {"solve --system pt --left 1,0 --right 4,1 --eps1 0.01", 0},
        {"solve --system ise --left 1,0 --right 1,0.6 --eps1 0.01 --eps2 0.01", 0},
        {"solve --system ise --left 1,2 --right 4,0 --eps1 1e-3 --eps2 1e-3", 0},
        {"sample --system zp --left 1,2 --right 4,0 --t 1 --x-min -1 --x-max 2 --n 10", 0},
        {"sample --system ise --left 1,2 --right 0.25,3 --eps1 1e-12 --eps2 1 --xi 1.3", 0},
        {"sample --system zp --left 1,2 --right 4,0 --x-min 5 --x-max 5 --n 1", 0},
        {"sweep --system ise --left 1,2 --right 4,0 --gamma 2 --schedule 1e-2,1e-3,1e-4,1e-5,1e-6", 0},
        {"sweep --system ise --left 1,2 --right 4,0 --schedule 1e-2,1e-3,1e-4 --path e2sq --tests default", 0},
        {"sweep --system ise --left 1,0 --right 1,0.6 --schedule 1e-3,1e-4,1e-5,1e-6,1e-7,1e-8 --xi 0.3", 0},
        {"sweep --system pt --left 1,2 --right 4,0 --schedule 1e-1,1e-2,1e-3,1e-4,1e-5,1e-6", 0},
        {"threshold --left 1,0 --right 1,0.6 --gamma 2", 0},
        {"residual --system zp --left 1,2 --right 4,0 --tests default", 0},
    };
    return list;
}

}  // namespace cli_examples
