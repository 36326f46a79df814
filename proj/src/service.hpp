#pragma once

// Command layer shared by the C API and (through it) the CLI: runs one
// subcommand against a parsed matrix and assembles the RunReport JSON,
// the process exit code, and any matrix artifacts to be written to files.

#include <map>
#include <string>

#include <json.hpp>

#include "matrix_io.hpp"

namespace ginv {

struct CommandOptions {
    std::string goal;           // "sym" | "ah"
    std::string formulation;    // "p1" | "p1sym" | "p1p3"
    std::vector<int> indices;   // 0-based; empty means search
};

struct ServiceResult {
    nlohmann::json report; // RunReport: input_digest, command, results, timing_ms
    int exit_code = 0;     // 0 ok, 2 bad input, 3 degenerate, 4 witness, 5 not certified
    std::map<std::string, std::string> artifacts; // name -> formatted matrix text
};

int exit_code_for(errc code);

ServiceResult run_construct(const AnyMatrix& a, const std::string& digest,
                            const CommandOptions& opt);
ServiceResult run_minimize(const AnyMatrix& a, const std::string& digest,
                           const CommandOptions& opt);
ServiceResult run_certify(const AnyMatrix& a, const std::string& digest,
                          const CommandOptions& opt);
ServiceResult run_compare(const AnyMatrix& a, const std::string& digest);
ServiceResult run_check(const AnyMatrix& a, const AnyMatrix& h, const std::string& digest);

} // namespace ginv
