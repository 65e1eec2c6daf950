// Build a cyclic Sidon-type code, send a message through a deletion channel
// and decode it again.

#include <iostream>

#include <mscodes/mscodes.hpp>

int main() {
  using namespace mscodes;

  const auto code = at_best_residue(make_cyclic(6, 3, 2, 0));
  std::cout << "cyclic code n=6 q=3 t=2, residue " << code.residue() << ", " << code.size() << " codewords\n";

  const MultisetWord sent = code.encode(3);
  const DeletionPattern lost({1, 0, 1});
  const MultisetWord received = apply_deletions(sent, lost);

  const auto r = code.decode(received);
  std::cout << "sent " << to_json(sent).dump() << ", received " << to_json(received).dump() << ", decoded "
            << to_json(r.codeword).dump() << " with pattern " << to_json(r.pattern).dump() << "\n";

  const auto report = roundtrip_exhaustive(code, 2);
  std::cout << report.trials << " exhaustive trials, " << report.failures.size() << " failures\n";
  return report.clean() ? 0 : 1;
}
