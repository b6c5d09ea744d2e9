// Prints the hole profile, bipartite-hole-number and hamiltonicity of a few named graphs.

#include <iostream>

#include "bhnlab/bhnlab.hpp"

int main() {
  using namespace bhnlab;
  const std::pair<const char*, Graph> named[] = {
      {"C5", cycle_graph(5)},
      {"K2,3", complete_bipartite(2, 3)},
      {"bowtie", build_exc_b(2)},
      {"Petersen", petersen_graph()},
  };
  for (const auto& [name, g] : named) {
    const auto profile = hole_profile(g);
    std::cout << name << " (" << emit_graph6(g) << ")\n  max t per s:";
    for (int s = 1; s <= g.order(); ++s) std::cout << ' ' << profile.max_t[s];
    std::cout << "\n  alpha~ = " << bipartite_hole_number(profile)
              << ", delta = " << min_degree(g) << ", sigma2 = " << sigma2(g).to_string()
              << ", hamiltonian = " << std::boolalpha << is_hamiltonian(g)
              << ", traceable = " << is_traceable(g) << '\n';
  }
}
