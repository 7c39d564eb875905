#pragma once

#include "sutor/abelian.hpp"
#include "sutor/error.hpp"
#include "sutor/fox.hpp"
#include "sutor/group_ring.hpp"
#include "sutor/words.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sutor {

/// A presentation <a_1..a_m | b_1..b_n> of pi_1(M) together with the images
/// e_1..e_l of a free basis of pi_1(R_-). Irreducibility of M and
/// connectedness of R_+- are user assertions; nothing here can check them.
struct SuturedInput {
  AlphabetPtr alphabet;
  std::vector<Word> relators;
  std::vector<Word> rminus;
  std::string name;
  std::string notes;
  bool claimed_irreducible = true;

  std::size_t generator_count() const { return alphabet ? alphabet->size() : 0; }
};

enum class DiagnosticCode { Squareness, Reduction, EmptyRminus, DuplicateGenerator };

inline const char* diagnostic_name(DiagnosticCode c) {
  switch (c) {
    case DiagnosticCode::Squareness: return "SQUARENESS";
    case DiagnosticCode::Reduction: return "REDUCTION";
    case DiagnosticCode::EmptyRminus: return "EMPTY_RMINUS";
    case DiagnosticCode::DuplicateGenerator: return "DUPLICATE_GENERATOR";
  }
  return "UNKNOWN";
}

struct Diagnostic {
  DiagnosticCode code;
  bool blocking = false;
  std::string message;
};

struct Validation {
  std::vector<Diagnostic> diagnostics;
  SuturedInput reduced;  // the input with every word freely reduced

  bool blocking() const {
    for (const auto& d : diagnostics)
      if (d.blocking) return true;
    return false;
  }
  bool has(DiagnosticCode code) const {
    for (const auto& d : diagnostics)
      if (d.code == code) return true;
    return false;
  }
};

inline Validation validate(const SuturedInput& input) {
  Validation v{{}, input};
  const std::size_t m = input.generator_count(), n = input.relators.size(), l = input.rminus.size();
  if (input.alphabet)
    for (const auto& dup : input.alphabet->duplicates())
      v.diagnostics.push_back({DiagnosticCode::DuplicateGenerator, true, "generator name '" + dup + "' appears more than once"});
  if (l == 0) v.diagnostics.push_back({DiagnosticCode::EmptyRminus, true, "no R_- words given"});
  if (m != n + l)
    v.diagnostics.push_back({DiagnosticCode::Squareness, true,
                             std::to_string(m) + " generators but " + std::to_string(n) + " relators + " +
                                 std::to_string(l) + " R_- words; the Fox matrix would not be square"});
  auto reduce_all = [&](std::vector<Word>& words, const char* kind) {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!words[i].is_reduced()) {
        v.diagnostics.push_back({DiagnosticCode::Reduction, false,
                                 std::string(kind) + " " + std::to_string(i + 1) + " is not freely reduced; using " +
                                     render(words[i].reduced())});
        words[i] = words[i].reduced();
      }
  };
  reduce_all(v.reduced.relators, "relator");
  reduce_all(v.reduced.rminus, "R_- word");
  return v;
}

inline std::string blocking_summary(const Validation& v) {
  std::string out;
  for (const auto& d : v.diagnostics)
    if (d.blocking) out += (out.empty() ? "" : "; ") + std::string(diagnostic_name(d.code)) + ": " + d.message;
  return out;
}

struct TorsionResult {
  Abelianization abelianization;  // H = H_1(M) and the map phi on generators
  GroupRingElement raw_det;
  GroupRingElement tau;  // normalize(raw_det)

  const AbelianGroup& group() const { return abelianization.group; }
};

/// det of the abelianized Fox matrix, canonically normalized.
inline TorsionResult torsion(const SuturedInput& input) {
  Validation v = validate(input);
  if (v.blocking()) throw Error(ErrorCode::Validation, blocking_summary(v));
  const SuturedInput& in = v.reduced;
  Abelianization phi = abelianize(*in.alphabet, in.relators);
  GroupRingElement det = determinant(fox_matrix(in.relators, in.rminus, phi));
  GroupRingElement tau = normalize(det);
  return {std::move(phi), std::move(det), std::move(tau)};
}

struct EvaluationCheck {
  AbelianGroup group;  // H_1(M, R_-) = H / <phi(e_k)>
  GroupRingElement lhs;
  GroupRingElement rhs;
  bool pass = false;
};

/// Pushes det(A) into Z[H/<phi(e_k)>] and compares with +-I_G.
inline EvaluationCheck evaluation_check(const SuturedInput& input, const TorsionResult& result) {
  std::vector<AbElement> killed;
  for (const auto& e : input.rminus) killed.push_back(result.abelianization(e));
  Quotient q = quotient(result.group(), killed);
  GroupRingElement lhs = push_forward(result.raw_det, q.proj);
  GroupRingElement rhs = sum_of_all_elements(q.group);
  bool pass = sim_equal(lhs, rhs);
  return {q.group, std::move(lhs), std::move(rhs), pass};
}

struct AugmentationCheck {
  Integer aug;
  std::optional<Integer> ord;  // nullopt: infinite
  bool pass = false;
};

inline AugmentationCheck augmentation_order_check(const SuturedInput& input, const TorsionResult& result) {
  std::vector<AbElement> killed;
  for (const auto& e : input.rminus) killed.push_back(result.abelianization(e));
  Quotient q = quotient(result.group(), killed);
  Integer aug = sutor::abs(augmentation(result.raw_det));
  auto ord = order(q.group);
  bool pass = ord ? aug == *ord : aug.is_zero();
  return {aug, ord, pass};
}

/// Basis change of pi_1(R_-): e_k -> e_k^-1, or e_k -> e_k e_other.
/// Indices are 0-based.
struct NielsenMove {
  enum class Kind { Invert, Multiply };
  Kind kind = Kind::Invert;
  std::size_t k = 0;
  std::size_t other = 0;
};

inline SuturedInput nielsen_move(const SuturedInput& input, const NielsenMove& move) {
  const std::size_t l = input.rminus.size();
  if (move.k >= l) throw Error(ErrorCode::Index, "Nielsen move index out of range");
  SuturedInput out = input;
  if (move.kind == NielsenMove::Kind::Invert) {
    out.rminus[move.k] = invert(input.rminus[move.k]);
  } else {
    if (move.other >= l || move.other == move.k) throw Error(ErrorCode::Index, "Nielsen multiply needs two distinct indices");
    out.rminus[move.k] = concat(input.rminus[move.k], input.rminus[move.other]);
  }
  return out;
}

/// Adds a generator `name` together with the relator name * w^-1.
inline SuturedInput tietze_add_generator(const SuturedInput& input, const Word& w, const std::string& name) {
  if (input.alphabet->find(name)) throw Error(ErrorCode::NameCollision, "generator '" + name + "' already exists");
  if (!(w.alphabet() == *input.alphabet)) throw Error(ErrorCode::AlphabetMismatch, "Tietze word over a different alphabet");
  auto names = input.alphabet->names();
  names.push_back(name);
  AlphabetPtr extended = make_alphabet(std::move(names));
  SuturedInput out = input;
  out.alphabet = extended;
  for (auto& r : out.relators) r = rebase(r, extended);
  for (auto& e : out.rminus) e = rebase(e, extended);
  Word g = Word::letter(extended, extended->size() - 1);
  out.relators.push_back(concat(g, invert(rebase(w, extended))));
  return out;
}

/// The isomorphism H_1 of `before` -> H_1 of `after` that matches generators
/// of `before` with the same-index generators of `after` (valid for Tietze
/// extensions, where the old alphabet is a prefix of the new one).
inline AbelianMap identify_groups(const TorsionResult& before, const TorsionResult& after) {
  const std::size_t m = before.abelianization.images.size();
  std::vector<AbElement> images(after.abelianization.images.begin(), after.abelianization.images.begin() + m);
  return induced_map(before.abelianization, after.group(), images);
}

}  // namespace sutor
