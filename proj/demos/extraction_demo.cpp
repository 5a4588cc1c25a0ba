// Extracts subsequences from a prefix of the length-lexicographic
// concatenation sequence with each built-in strategy and prints the
// selected symbols and their relative frequency of ones.

#include <iostream>

#include "qcasino/qcasino.hpp"

int main() {
  constexpr long long horizon = 50;
  for (const qcasino::ClassicalStrategy& s : qcasino::builtin_strategies()) {
    qcasino::BitSource source = qcasino::champernowne_source();
    const qcasino::ExtractionResult r = qcasino::extract(s, source, horizon);
    std::cout << s.name << ": extracted \"" << r.extracted << "\"";
    if (!r.extracted.empty()) {
      std::cout << " freq(1) = " << qcasino::estimate_pvm(r.extracted, 1);
    }
    std::cout << "\n";
  }
  return 0;
}
