#include "oddspectra/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return oddspectra::run_cli({argv, argv + argc}, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
