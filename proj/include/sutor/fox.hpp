#pragma once

#include "sutor/abelian.hpp"
#include "sutor/error.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/words.hpp"

#include <cstddef>
#include <vector>

namespace sutor {

/// phi(dw/dx): the Fox derivative of `w` with respect to generator `x`,
/// pushed into Z[H] along the abelianization `phi` as it is computed.
///
/// A letter g^k contributes phi(prefix) * (1 + g + ... + g^(k-1)) for k > 0
/// and -phi(prefix) * (g^-1 + ... + g^-|k|) for k < 0 when g = x.
inline GroupRingElement fox_derivative(const Word& w, std::size_t x, const Abelianization& phi) {
  if (w.alphabet().size() != phi.images.size())
    throw Error(ErrorCode::AlphabetMismatch, "word alphabet does not match the abelianization");
  if (x >= phi.images.size()) throw Error(ErrorCode::AlphabetMismatch, "generator index outside alphabet");
  const AbelianGroup& h = phi.group;
  GroupRingElement result(h);
  AbElement prefix = zero_element(h);
  for (const auto& letter : w.letters()) {
    const AbElement& g = phi.images[letter.gen];
    if (letter.gen == x && !letter.exp.is_zero()) {
      if (letter.exp > 0) {
        AbElement m = prefix;
        for (Integer j = 0; j < letter.exp; ++j) {
          result.add_term(m, 1);
          m = add(h, m, g);
        }
      } else {
        AbElement ginv = negate(h, g);
        AbElement m = add(h, prefix, ginv);
        for (Integer j = 0; j < -letter.exp; ++j) {
          result.add_term(m, -1);
          m = add(h, m, ginv);
        }
      }
    }
    prefix = add(h, prefix, scale(h, g, letter.exp));
  }
  return result;
}

/// Columns are the relators followed by the R_- words; rows are generators.
inline GRMatrix fox_matrix(const std::vector<Word>& relators, const std::vector<Word>& rminus, const Abelianization& phi) {
  const std::size_t m = phi.images.size();
  GRMatrix a(phi.group, m, relators.size() + rminus.size());
  for (std::size_t j = 0; j < relators.size() + rminus.size(); ++j) {
    const Word& w = j < relators.size() ? relators[j] : rminus[j - relators.size()];
    for (std::size_t i = 0; i < m; ++i) a.set(i, j, fox_derivative(w, i, phi));
  }
  return a;
}

}  // namespace sutor
