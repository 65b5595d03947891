#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bookfold {

// Exit codes: 0 valid/feasible, 1 invalid/infeasible, 2 usage, format or
// budget errors. Subcommands:
//   validate <inst> <ord>
//   solve <inst> [--algorithm auto|exact|umpbe2] [--witness <out>]
//         [--node-budget N] [--time-budget S]
//   reduce upbe3|umpbe4 <betweenness-in> <inst-out> [--labels <out>]
//   witness upbe3|umpbe4 <betweenness> <phi-file> <ord-out>
//   fold <creases> [--cycle] [--layers <out>]
//   gen path|cycle|random --n N [--k K] [--seed S]
//   render <inst> [--order <ord>] -o <svg>
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace bookfold
