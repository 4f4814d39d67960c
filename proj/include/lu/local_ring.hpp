#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lu/ideal.hpp"

namespace lu {

/// k[vars] / ideal.
struct PresentedRing {
  VarNames vars;
  Ideal ideal;
};

/// A presented ring localized at a prime `center` containing its ideal.
/// The localization is never built; local questions are answered by tests
/// against the center.
class LocalRing {
 public:
  LocalRing() = default;
  /// Checks that the ideal is proper, the center is prime and contains it.
  LocalRing(VarNames vars, Ideal ideal, Ideal center);
  /// Skips the checks; for rings produced by verified constructions.
  static LocalRing trusted(VarNames vars, Ideal ideal, Ideal center);

  const PresentedRing& ring() const { return ring_; }
  const VarNames& vars() const { return ring_.vars; }
  const Ideal& ideal() const { return ring_.ideal; }
  const Ideal& center() const { return center_; }
  std::size_t nvars() const { return ring_.vars.size(); }
  Field field() const { return ring_.ideal.field(); }

  Polynomial parse(const std::string& text) const;
  /// "Q[u,v,t]/(t^2)"-style summary; variables not occurring in a
  /// reduced presentation are eliminated when they occur linearly.
  std::string str() const;

 private:
  PresentedRing ring_;
  Ideal center_;
};

Ideal nilradical(const LocalRing& ring);
LocalRing reduced_ring(const LocalRing& ring);

struct Regularity {
  bool regular = false;
  int embdim = 0;
  int krulldim = 0;
};

/// Embedding dimension of the local ring at the center, computed from the
/// rank of the Jacobian matrix over the residue field of the center.
int embedding_dimension(const LocalRing& ring);
/// Krull dimension of the local ring at the center.
int local_dimension(const LocalRing& ring);
Regularity is_regular_local(const LocalRing& ring);

/// Rank over the fraction field of k[x]/prime of the matrix with the given
/// polynomial entries (rows of equal length).
std::size_t rank_mod_prime(std::vector<std::vector<Polynomial>> matrix,
                           const Ideal& prime);
/// Jacobian matrix of `gens`: one row per generator.
std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens);

/// I^n / I^(n+1) for the nilradical I, as a module over the reduced ring.
struct GradedPiecePresentation {
  unsigned n = 0;
  std::vector<Polynomial> generators;
  /// Relation columns; relations[j][i] is the coefficient of generator i.
  std::vector<std::vector<Polynomial>> relations;
};

/// Reduced basis elements of the nilradical, pruned by membership in
/// center * nilradical + ideal + (the other kept generators).
std::vector<Polynomial> minimal_nilradical_generators(const LocalRing& ring);

/// Least N with I^N contained in the defining ideal; throws
/// UnsupportedInstance beyond 8.
unsigned nilpotency_index(const LocalRing& ring);

GradedPiecePresentation graded_piece(const LocalRing& ring, unsigned n);

struct Freeness {
  bool free = false;
  std::size_t rank = 0;
  /// For NotFree: a relation column carrying a nonzero minor of size
  /// (rank of the matrix at the center) + 1.
  std::vector<Polynomial> witness;
};

/// True when `e` vanishes in the localization of R_red at the center.
bool vanishes_locally(const Polynomial& e, const Ideal& radical_ideal, const Ideal& center);

Freeness is_free_at_center(const GradedPiecePresentation& module, const LocalRing& ring);

struct NormalFlatness {
  bool yes = false;
  unsigned N = 0;
  unsigned first_bad_n = 0;
};

NormalFlatness is_normally_flat(const LocalRing& ring);

}  // namespace lu
