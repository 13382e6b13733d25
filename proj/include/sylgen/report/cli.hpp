#ifndef SYLGEN_REPORT_CLI_HPP
#define SYLGEN_REPORT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sylgen::report
{

enum ExitCode
{
  ExitOk = 0,
  ExitMismatch = 1,
  ExitUsage = 2,
  ExitBudget = 3,
  ExitInternal = 4,
};

// args excludes the program name
int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace sylgen::report

#endif // SYLGEN_REPORT_CLI_HPP
