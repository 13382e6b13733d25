#include <iostream>

#include "sylgen/report/cli.hpp"

int main(int argc, char **argv)
{
  return sylgen::report::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
