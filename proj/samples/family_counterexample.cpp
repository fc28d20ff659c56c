// Build a family member with a prescribed catenary degree, then let the
// falsifier knock down a constant formula.
#include "numoid.hpp"

#include <iostream>

int main() {
  using namespace numoid;

  const auto rec = comp3_generate(7, 2, {20});
  std::cout << "<" << rec.h1 << "," << rec.h2 << "," << rec.h3 << "> predicted c(H) = " << rec.predicted << "\n";

  const auto candidate = parse_formula("Y - 4", FormulaKind::Implicit);
  const auto result = falsify(candidate, InvariantName::Catenary);
  if (const auto* ce = std::get_if<Counterexample>(&result))
    std::cout << "Y - 4 fails on <" << ce->monoid.to_string() << ">, actual " << to_string(ce->actual) << "\n";
  else
    std::cout << "no counterexample within budget\n";
}
