#pragma once

// The cone of curves of X = Bl_k P^n in the range where it is known to be
// generated by the exceptional lines R_i and the strict transforms L_{i,j}
// of lines through two of the blown-up points, namely
//
//     k <= 2n,  or  n = 3 and k <= 8.
//
// Outside that range the same generator list is still produced, but tagged
// validity = false: positivity reports computed against it are heuristic and
// certification refuses to rely on them.
//
// decompose_curve expresses an integral effective curve class
// dL - sum m_i R_i (d > 0, m_i >= 0) as a nonnegative combination of
// generators drawn from {R_i, L_{i,j}, L_i, L}, by the greedy pairing of the
// two smallest multiplicities (k <= 2n), or, for n = 3 and k in {7, 8}, by
// inductively splitting off lines through the two largest multiplicities.

#include <string>
#include <vector>

#include "logfano/interval.hpp"
#include "logfano/lattice.hpp"

namespace logfano {

enum class GenKind { R, LPair, LSingle, LFree };

// Symbolic name of a decomposition/cone generator: R_i, L_{i,j}, L_i or L.
struct GeneratorRef {
  GenKind kind;
  int i = 0;  // first index (R_i, L_i, L_{i,j})
  int j = 0;  // second index (L_{i,j} only), i < j canonical

  // Wire names: "R_3", "L_1_2", "L_i_5", "L".
  std::string name() const;
  static GeneratorRef parse(const std::string& name);
  CurveClass to_class(int n, int k) const;
  bool operator==(const GeneratorRef&) const = default;
};

struct MoriGenerator {
  GeneratorRef ref;
  CurveClass cls;
};

struct MoriGenerators {
  int n = 0, k = 0;
  // All R_i followed by all L_{i,j} with i < j; k + C(k,2) entries.
  std::vector<MoriGenerator> generators;
  // True exactly when the list above is proven to generate the cone.
  bool validity = false;
};

MoriGenerators mori_generators(int n, int k);

struct PositivityReport {
  Rat min_value;                       // min of D.g over the generator list (D.L if k = 0)
  bool ample = false;                  // strict positivity on every generator
  bool nef = false;                    // nonnegativity on every generator
  std::vector<GeneratorRef> violating; // generators with D.g <= 0 (ampleness violations)
  bool cone_proven = false;            // copy of MoriGenerators::validity
};

PositivityReport positivity_report(const DivisorClass& d);

// The exact set { eps in Q : A - eps*D is ample }, solved from the strict
// linear inequalities (A - eps*D).g > 0 over the generator list (over L when
// k = 0).  Requires the cone description to be proven for (n, k).
EpsilonInterval epsilon_interval(const DivisorClass& a, const DivisorClass& d);

struct DecompositionTerm {
  GeneratorRef gen;
  Rat coeff;  // > 0; zero-coefficient terms are omitted
};

// Decomposition of c = dL - sum m_i R_i into nonnegative generator
// multiples.  Preconditions: d and all m_i integral, d > 0, m_i >= 0, and
// the cone description valid for (n, k).  For the inductive branch
// (n = 3, k in {7,8}) additionally m_i <= d and sum m_i <= 2d.
std::vector<DecompositionTerm> decompose_curve(const CurveClass& c);

// Sum of coeff * gen over the terms, as a curve class on X^n_k (test helper
// and CLI verification step).
CurveClass recombine(const std::vector<DecompositionTerm>& terms, int n, int k);

}  // namespace logfano
