// Lists the graphs on n vertices (default 7) where a theorem's hypothesis is tight and its
// conclusion fails, tagged with the exceptional family that accounts for them.

#include <cstdlib>
#include <iostream>

#include "bhnlab/bhnlab.hpp"

int main(int argc, char** argv) {
  using namespace bhnlab;
  const int n = argc > 1 ? std::atoi(argv[1]) : 7;
  if (n < 3 || n > kEnumerateMaxOrder) {
    std::cerr << "order must be in 3.." << kEnumerateMaxOrder << '\n';
    return 2;
  }
  for (TheoremId id : kAllTheorems) {
    const auto census = equality_census(id, builtin_source(n, n, false));
    std::cout << to_string(id) << ": " << census.size() << " graph(s)\n";
    for (const auto& word : census) {
      const Graph g = parse_graph6(word);
      std::cout << "  " << word;
      if (recognize_exc_a(g)) std::cout << "  exc_a";
      if (recognize_exc_b(g)) std::cout << "  exc_b";
      if (recognize_trace_a(g)) std::cout << "  trace_a";
      if (recognize_trace_b(g)) std::cout << "  trace_b";
      std::cout << '\n';
    }
  }
}
