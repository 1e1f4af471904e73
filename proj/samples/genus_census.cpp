#include <cstdlib>
#include <iostream>

#include "trivalent/quotient.hpp"

int main(int argc, char **argv) {
  const std::size_t faces = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  const auto census = trivalent::genus_census(faces);
  std::cout << "# rooted\n";
  trivalent::write_census_tsv(std::cout, census.rooted);
  std::cout << "# unrooted\n";
  trivalent::write_census_tsv(std::cout, census.unrooted);
}
