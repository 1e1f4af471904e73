// Counts subgroups of PSL2(Z) by index, and their conjugacy classes.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "trivalent/trivalent.hpp"

int main(int argc, char **argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 10;
  std::vector<std::uint64_t> subgroups(n + 1), classes(n + 1);

  trivalent::generate(n, [&](const trivalent::DiagramView &d) {
    ++subgroups[d.n];
    if (trivalent::unrooted_representative(d))
      ++classes[d.n];
  });

  std::cout << "index\tsubgroups\tconjugacy_classes\n";
  for (std::size_t i = 1; i <= n; ++i)
    std::cout << i << '\t' << subgroups[i] << '\t' << classes[i] << '\n';
}
