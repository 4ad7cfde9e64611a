// Command-line front end.  Subcommands are registered by the runner; see
// core/include/singlab/runner.hpp for the catalog.

#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "singlab: no subcommands wired yet\n");
  return 1;
}
