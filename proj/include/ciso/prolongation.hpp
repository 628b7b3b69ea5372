#pragma once

// Graded symbol algebra g_-2 + g_-1 + g_0 of a pointwise pair and its first
// prolongation, computed as an exact linear system.

#include <vector>

#include "ciso/frame.hpp"
#include "ciso/pencil.hpp"
#include "ciso/stabilizer.hpp"

namespace ciso {

struct SymbolAlgebra {
  std::size_t n = 0;
  FormPair pair;
  StabilizerBasis g0;

  /// 2n + 1 + dim g_0.
  std::size_t total_dimension() const { return 2 * n + 1 + g0.dimension(); }
};

/// Throws DEGENERATE_FORM through the pair's own validation.
SymbolAlgebra build_symbol(const FormPair& pair);

/// A degree-one element: v -> A(v) in g_0, together with v_A in g_-1.
struct ProlongationElement {
  std::vector<RationalMatrix> a_of_basis;  // A(e_i)
  RationalVector v_a;
};

struct ProlongationResult {
  std::size_t g1_dimension = 0;
  std::vector<ProlongationElement> g1_basis;
  bool trivial = true;
  /// Solution space of the g_-1 x g_-1 equations alone.
  std::size_t bracket_only_dimension = 0;
  /// Every solution of the g_-1 x g_-1 equations alone has v_A = 0. False for
  /// n = 1, where those equations leave v_A free.
  bool v_a_vanishes = true;
};

/// Degree-one derivations g_- -> g_- + g_0: the equations
/// A(e_i) e_j - A(e_j) e_i = omega(e_i, e_j) v_A for i < j with each A(e_i) in
/// g_0, together with omega(e_i, v_A) = 0 from brackets with g_-2.
ProlongationResult first_prolongation(const SymbolAlgebra& sym);

/// The same system with zero right-hand side and A(e_i) ranging over
/// so(l, 2n - l); true when only A = 0 solves it.
bool levi_civita_uniqueness(std::size_t index, std::size_t n);

/// dim M plus the least exact stabilizer dimension over the given points.
/// Propagates NOT_CONTACT.
std::size_t theorem6_bound(const FramedStructure& fs, const std::vector<Point>& points);

}  // namespace ciso
