// Command-line front end. Links the shared C API only: reads a matrix file,
// runs one subcommand, prints the JSON report to stdout, writes matrix
// artifacts next to the input, and exits with the report's code.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ginv/ginv.h>

namespace {

struct MatrixHandle {
    ginv_matrix* m = nullptr;
    ~MatrixHandle() { ginv_matrix_free(m); }
};

struct ResultHandle {
    ginv_result* r = nullptr;
    ~ResultHandle() { ginv_result_free(r); }
};

std::string resolve_mode(bool force_float) {
    if (force_float) return "float";
    if (const char* env = std::getenv("GINV_NUMERIC_MODE")) {
        std::string v = env;
        if (v == "exact" || v == "float") return v;
        if (!v.empty()) {
            std::cerr << "warning: ignoring GINV_NUMERIC_MODE='" << v << "'\n";
        }
    }
    return "auto";
}

int load_matrix(const std::string& path, bool force_float, MatrixHandle& out) {
    ginv_status s = ginv_matrix_read_file(path.c_str(), resolve_mode(force_float).c_str(), &out.m);
    if (s != GINV_OK) {
        std::cerr << "error: " << ginv_last_error() << "\n";
        return 2;
    }
    return 0;
}

int emit(const ResultHandle& res, const std::string& input_path, const std::string& command,
         bool quiet) {
    std::cout << ginv_result_json(res.r) << "\n";
    if (!quiet) {
        if (const char* h = ginv_result_artifact(res.r, "H")) {
            std::string path = input_path + "." + command + ".out";
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << path << "'\n";
                return 2;
            }
            out << h;
        }
    }
    return ginv_result_exit_code(res.r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse structured generalized inverses of low-rank matrices"};
    app.require_subcommand(1);

    std::string file, goal = "sym", formulation = "p1";
    std::vector<int> indices;
    bool force_float = false, quiet = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "matrix file (dense text or Matrix Market)")
            ->required();
        cmd->add_flag("--float", force_float, "force binary64 arithmetic");
        cmd->add_flag("--quiet", quiet, "do not write matrix output files");
    };

    CLI::App* construct = app.add_subcommand(
        "construct", "build a block generalized inverse (search or given indices)");
    add_common(construct);
    construct->add_option("--goal", goal, "sym | ah")->check(CLI::IsMember({"sym", "ah"}));
    construct->add_option("--indices", indices,
                          "1-based block indices (default: search all blocks)")
        ->delimiter(',');

    CLI::App* minimize =
        app.add_subcommand("minimize", "solve a 1-norm minimization formulation");
    add_common(minimize);
    minimize->add_option("--formulation", formulation, "p1 | p1sym | p1p3")
        ->check(CLI::IsMember({"p1", "p1sym", "p1p3"}));

    CLI::App* certify =
        app.add_subcommand("certify", "certify or refute optimality of the best block");
    add_common(certify);
    certify->add_option("--goal", goal, "sym | ah")->check(CLI::IsMember({"sym", "ah"}));

    CLI::App* compare =
        app.add_subcommand("compare", "block solution norms versus LP optima");
    add_common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    MatrixHandle matrix;
    if (int rc = load_matrix(file, force_float, matrix)) return rc;

    ResultHandle res;
    ginv_status s = GINV_OK;
    std::string command;
    if (construct->parsed()) {
        command = "construct";
        s = ginv_construct(matrix.m, goal.c_str(), indices.empty() ? nullptr : indices.data(),
                           static_cast<int>(indices.size()), &res.r);
    } else if (minimize->parsed()) {
        command = "minimize";
        s = ginv_minimize(matrix.m, formulation.c_str(), &res.r);
    } else if (certify->parsed()) {
        command = "certify";
        s = ginv_certify(matrix.m, goal.c_str(), &res.r);
    } else {
        command = "compare";
        s = ginv_compare(matrix.m, &res.r);
    }
    if (s != GINV_OK) {
        std::cerr << "error: " << ginv_last_error() << "\n";
        return 2;
    }
    return emit(res, file, command, quiet);
}
