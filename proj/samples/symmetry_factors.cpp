// Prints the connected two-leg classes with one loop and their symmetry
// factors, then checks each coefficient against 1/|Aut|.
#include <iostream>

#include "autgraph/autgraph.hpp"

int main() {
  autgraph::Generator gen;
  const auto& beta = gen.conn(3, 1, 2);
  autgraph::write_table(std::cout, beta);
  for (const auto& [key, term] : beta)
    if (term.coefficient * autgraph::aut_order(term.representative) != 1) return 1;
  std::cout << "total weight " << autgraph::to_fraction_string(beta.total()) << "\n";
}
