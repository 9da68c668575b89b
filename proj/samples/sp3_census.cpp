// Walks kW for sp(3,R) and prints each element with its diagram and weight.
#include <iostream>

#include "hhcw/hhcw.hpp"

int main() {
  using namespace hhcw;
  auto pair = pair_from_name("sp(3,R)");
  for (const auto& I : enumerate_kW(pair)) {
    WeylElement x = ideal_to_element(I);
    Weight lambda = weight_of(*pair, x);
    std::cout << "x = " << (I.empty() ? "e" : format_word(ideal_word(I)))
              << "   lambda = " << format_fundamental(pair->rs().fundamental_coordinates(lambda))
              << "   unitary " << is_unitary(pair, x).unitary
              << "   rationally smooth " << is_rationally_smooth(I) << "\n"
              << render_diagram(I).text << "\n";
  }
}
