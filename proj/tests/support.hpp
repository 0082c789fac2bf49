#pragma once

#include "homcalc/harness.hpp"

namespace t {

using namespace homcalc;

inline AlgebraPtr dual2() { static const AlgebraPtr a = corpus_algebra("DUAL2"); return a; }
inline AlgebraPtr nak3() { static const AlgebraPtr a = corpus_algebra("NAK3"); return a; }
inline AlgebraPtr a2path() { static const AlgebraPtr a = corpus_algebra("A2PATH"); return a; }
inline AlgebraPtr loc3() { static const AlgebraPtr a = corpus_algebra("LOC3"); return a; }

/// Cyclic quiver on three vertices with rad^2 = 0: every simple has infinite
/// pd and no periodicity shows up within two steps.
inline AlgebraPtr cyclic3() {
  static const AlgebraPtr a = [] {
    QuiverPresentation q;
    q.name = "CYC3";
    q.field_char = 2;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}};
    q.nilpotency_bound = 2;
    return algebra_from_quiver(q);
  }();
  return a;
}

inline bool iso(const Module& m, const Module& n) { return is_isomorphic(m, n).is_true(); }

inline Matrix mat(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols = 0) {
  return Matrix::from_rows(p, rows, cols);
}

}  // namespace t

namespace t {

/// [Omega^n M, P_{n-1}, ..., P_0, M] from the minimal resolution.
inline ExactSequence resolution_segment(const Module& m, std::size_t n) {
  Resolution r(m);
  r.extend_to(n);
  ExactSequence seq;
  seq.modules.push_back(r.syzygy(n));
  seq.maps.push_back(n == 0 ? Morphism::identity(m) : r.inclusion(n));
  for (std::size_t k = n; k-- > 0;) {
    seq.modules.push_back(r.term(k));
    seq.maps.push_back(k == 0 ? r.augmentation() : r.differential(k));
  }
  seq.modules.push_back(m);
  return seq;
}

/// Applies D termwise; the arrows reverse.
inline ExactSequence dual_sequence(const ExactSequence& seq) {
  ExactSequence out;
  for (std::size_t k = seq.modules.size(); k-- > 0;) out.modules.push_back(k_dual(seq.modules[k]));
  for (std::size_t k = seq.maps.size(); k-- > 0;) out.maps.push_back(k_dual(seq.maps[k]));
  return out;
}

/// [D N, D P_0, ..., D P_{n-1}, D Omega^n N] for a module N over the opposite.
inline ExactSequence injective_segment(const Module& n_op, std::size_t n) {
  return dual_sequence(resolution_segment(n_op, n));
}

}  // namespace t
