#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homcalc/homology.hpp"

namespace homcalc {

enum class OracleKind {
  Projectives,
  Injectives,
  GorensteinProjectives,
  GorensteinInjectives,
  PerpRegular,
  TorsionfreeInfty,
  CoresTildeProj,
};

const char* to_string(OracleKind k);
/// Throws UnsupportedKind for unrecognised names.
OracleKind parse_oracle_kind(const std::string& name);

enum class Tri { False, True, Unknown };

struct ClosureFlags {
  Tri closed_extensions = Tri::Unknown;
  Tri closed_kernels_of_epis = Tri::Unknown;
  Tri closed_cokernels_of_monos = Tri::Unknown;
  Tri closed_summands = Tri::Unknown;
};

/// Produces 0 -> T' -> C -> T -> 0 (generator) or 0 -> T -> C -> T' -> 0
/// (cogenerator) as a three-term ExactSequence.
using SequenceProvider = std::function<ExactSequence(const Module&)>;

struct SubcategoryOracle {
  std::string name;
  OracleKind kind = OracleKind::Projectives;
  AlgebraPtr algebra;
  std::size_t cutoff = kDefaultCutoff;
  std::function<Verdict(const Module&)> membership;
  ClosureFlags flags;
  std::optional<SequenceProvider> proper_generator_seq;
  std::optional<SequenceProvider> coproper_cogenerator_seq;
  std::string generator_class;  // "Projectives" or "Injectives"
  /// Resolution dimension by members (absent for the injective side).
  std::function<DimensionReport(const Module&)> dimension;
};

SubcategoryOracle oracle(OracleKind kind, const AlgebraPtr& a, std::size_t cutoff = kDefaultCutoff);

struct MembershipClaim {
  std::size_t index = 0;
  std::string oracle;
};

/// `name` is one of Hom(P,-), Hom(-,P), Hom(-,I), Hom(X<k>,-), Hom(-,X<k>)
/// where P = regular module, I = D(regular module of the opposite) and X<k>
/// is test_objects[k].
struct PropernessCheck {
  std::string name;
  bool verified = false;
};

struct ExactSequenceWitness {
  std::vector<Module> modules;
  std::vector<Morphism> maps;
  std::vector<PropernessCheck> properness_checks;
  std::vector<MembershipClaim> memberships;
  std::vector<Module> test_objects;
  std::size_t cutoff = kDefaultCutoff;
  std::vector<std::string> notes;

  ExactSequence sequence() const { return {modules, maps}; }
};

/// [M, T1, T0, A] -> [M, T, C, A] with T in the oracle and C in its
/// generator class.
ExactSequenceWitness prop33_replace(const ExactSequence& seq, const SubcategoryOracle& o,
                                    const std::vector<Module>& test_objects = {});

struct Ladder {
  ExactSequenceWitness main;
  ExactSequenceWitness side;
};

/// [M, T_{n-1}, ..., T_0, A] -> main [N, C_{n-1}, ..., C_0, A] and
/// side [T, N, M].
Ladder prop34_ladder(const ExactSequence& seq, const SubcategoryOracle& o);

/// [M, T0, T1, A] -> [M, C, T, A].
ExactSequenceWitness prop43_replace(const ExactSequence& seq, const SubcategoryOracle& o,
                                    const std::vector<Module>& test_objects = {});

/// [M, T^0, ..., T^{n-1}, A] -> main [M, C^0, ..., C^{n-1}, B] and
/// side [A, B, T].
Ladder prop44_ladder(const ExactSequence& seq, const SubcategoryOracle& o);

/// [K_n, P_{n-1}, ..., P_0, A] from the minimal resolution, n the oracle
/// dimension of A.
ExactSequenceWitness thm36_witness(const Module& a, const SubcategoryOracle& o);

/// [A, B, T] with the generator-class dimension of B at most n and T in
/// the oracle.
ExactSequenceWitness cor45_approximation(const Module& a, const SubcategoryOracle& o);

/// Replays exactness, memberships and properness from scratch. Oracles not
/// in the list are rebuilt from their names at the witness cutoff.
Verdict validate_witness(const ExactSequenceWitness& w, const std::vector<SubcategoryOracle>& oracles = {});

}  // namespace homcalc
