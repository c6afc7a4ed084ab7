#include "sodflux_cli.hpp"

int main(int argc, char** argv)
{
  return sodflux::cli::parse_and_run(argc, argv);
}
