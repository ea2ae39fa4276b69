#include <iostream>

#include "stepcount/cli.h"

int main(int argc, char** argv) {
  return stepcount::RunCli(argc, argv, std::cout, std::cerr);
}
