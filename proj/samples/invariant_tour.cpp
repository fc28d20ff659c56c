// Factorization invariants of a small numerical monoid.
#include "numoid.hpp"

#include <iostream>

int main() {
  using namespace numoid;
  const auto m = new_monoid({3, 5, 7});

  std::cout << "atoms: " << m.to_string() << "\n";
  std::cout << "frobenius: " << m.frobenius() << "\n";

  for (const auto& z : factorizations(m, 12)) {
    std::cout << "12 = ";
    for (auto e : z.exponents()) std::cout << e << ' ';
    std::cout << "(length " << z.length() << ")\n";
  }

  std::cout << "betti:";
  for (auto b : betti_elements(m)) std::cout << ' ' << b << " (c=" << catenary_of_element(m, b) << ")";
  std::cout << "\n";

  std::cout << "catenary: " << catenary(m) << "\n";
  std::cout << "tame: " << tame(m) << "\n";
  std::cout << "elasticity: " << to_string(elasticity(m)) << "\n";
  std::cout << "closed form: " << cat3(m).value << "\n";
}
