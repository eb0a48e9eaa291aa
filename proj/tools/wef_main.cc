#include <iostream>
#include <string>
#include <vector>

#include "wef/cli.h"

int main(int argc, char** argv) {
  return wef::RunCli(std::vector<std::string>(argv, argv + argc), std::cout,
                     std::cerr);
}
