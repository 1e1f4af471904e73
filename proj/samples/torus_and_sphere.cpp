// The two-face triangular maps: one torus and one sphere built by hand,
// compared through their canonical codes.

#include <iostream>

#include "trivalent/trivalent.hpp"

using namespace trivalent;

int main() {
  const Diagram torus = validate({2, 3, 1, 5, 6, 4}, {4, 5, 6, 1, 2, 3});
  const Diagram sphere = validate({2, 3, 1, 5, 6, 4}, {4, 6, 5, 1, 3, 2});

  for (const auto &[name, d] : {std::pair{"torus", &torus}, std::pair{"sphere", &sphere}}) {
    const MapStats st = map_stats(*d);
    const MinRootCode m = min_root_code(*d);
    std::cout << name << ": V=" << st.vertices << " E=" << st.edges << " F=" << st.faces
              << " genus=" << st.genus << " rootings=" << m.distinct_rootings << '\n'
              << "  code " << format_line(m.code);
  }
  std::cout << "conjugate: " << std::boolalpha << are_conjugate(torus, sphere) << '\n';
}
