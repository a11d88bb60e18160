#include <exception>
#include <iostream>

#include "coop/cli/app.hpp"

int main(int argc, char** argv) {
  try {
    const coop::cli::Result r = coop::cli::execute({argv + 1, argv + argc});
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
