#pragma once

#include <iosfwd>
#include <string>

namespace hooklens::cli {

enum class Command { verify_han, equidist, asym, arcs, ineq, oracle };
enum class Format { csv, json };

struct RunConfig {
    Command command = Command::verify_han;
    int ell = 1;
    int modulus = 2;
    int residue = 0;
    int max_n = 40;
    int order = 400;
    double tolerance = 1e-10;
    int threads = 0;  // 0: HOOKLENS_THREADS, else available parallelism
    std::string output = "-";
    Format format = Format::csv;
    bool modulus_given = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& cfg);

/// Executes one workflow and writes its report to cfg.output ("-" is `out`).
/// Returns 0 when every assertion holds and 1 otherwise.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv, validates and runs. Usage errors print to `err` and return 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hooklens::cli
