// pcrank command-line front end.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcrank/priority_vector.hpp"
#include "pcrank/validation.hpp"

namespace pcrank::cli {

enum class Command { Rank, Validate, Complete, Compare };
enum class Method { Gm, Lls, Harker };
enum class OutputFormat { Plain, Structured };

struct CliConfig {
    Command command = Command::Rank;
    std::string input = "-";  // "-" reads standard input
    Method method = Method::Gm;
    Normalization normalization = Normalization::SumToOne;
    OutputFormat format = OutputFormat::Plain;
    double tolerance = kDefaultReciprocityTolerance;
    bool repair_reciprocal = false;
};

// Exit statuses, stable for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

int cmd_rank(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_validate(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_complete(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_compare(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pcrank::cli
