// Eigenbasis for three coordinates and the chi-square distance from 0...01.
#include <iostream>

#include "burnside/burnside.hpp"

using namespace burnside;

int main() {
  std::cout << "eigenbasis, n = 3\n";
  for (const auto& e : full_basis(3)) {
    std::cout << "  m=" << e.m() << " l=" << e.ell() << " Q=" << render_compact(e.tableau())
              << " beta=" << to_string(e.eigenvalue()) << " |f|^2=" << to_string(e.sq_norm()) << "\n   ";
    for (Mask x = 0; x < 8; ++x) std::cout << " " << mask_string(3, x) << ":" << to_string(e.vector().coeff(x));
    std::cout << "\n";
  }

  std::cout << "\nchi-square from a single one\n";
  for (int n : {3, 10, 50}) {
    auto coef = chi_square_one_ones_coefficients(n);
    for (int s : {2, 4, 8})
      std::cout << "  n=" << n << " s=" << s << "  " << to_double(coef.at(s).chi_square) << "\n";
  }
  std::cout << "  exact n=3 s=4: " << to_string(chi_square_one_ones(3, 4).chi_square) << "\n";
}
