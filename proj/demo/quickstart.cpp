// Transforms two short series to SAX/TSAX and compares the distances.

#include <iostream>

#include "tsax/tsax.hpp"

int main() {
  const tsax::TimeSeries t({-7.1, -1.1, -1.3, -1.5, -1.4, -1.3, -1.0, 4.5, 9.2, 1.0, 1.2, 9.6, 6.1, 1.4, -6.4, -2.6});
  const tsax::TimeSeries u({-9.9, -1.4, -1.5, -1.6, -1.6, -1.3, -1.0, -3.5, 7.1, 1.2, 1.1, 1.0, 7.9, 4.6, 4.8, 5.6});

  const tsax::BreakpointTable table(4);
  const auto rt = tsax::tsax_transform(t, 4, table);
  const auto ru = tsax::tsax_transform(u, 4, table);

  std::cout << "T : " << rt.word().str() << ' ' << rt.trends().str() << '\n';
  std::cout << "T': " << ru.word().str() << ' ' << ru.trends().str() << '\n';

  const auto k = tsax::trend_match_counts(rt.trends(), ru.trends());
  std::cout << "k1=" << k.k1 << " k2=" << k.k2 << '\n';
  std::cout << "MINDIST   = " << tsax::sax_mindist(rt, ru, table) << '\n';
  std::cout << "TSAX_DIST = " << tsax::tsax_dist(rt, ru, table) << '\n';
}
