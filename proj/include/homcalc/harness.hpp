#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcalc/constructs.hpp"

namespace homcalc {

/// Quiver presentations of the built-in algebras: DUAL2, NAK3, A2PATH, LOC3.
std::vector<QuiverPresentation> corpus_presentations();
std::vector<AlgebraPtr> corpus();
/// Corpus algebra by name; throws ValidationError when absent.
AlgebraPtr corpus_algebra(const std::string& name);

/// A cokernel presentation: coker(P(s) -> P(t)) with P(m) the canonical
/// projective with m_i copies of P(i), and `matrix` the linear map.
struct Presentation {
  std::vector<std::size_t> target;
  std::vector<std::size_t> source;
  Matrix matrix;
};

Module projective_from_multiplicities(const AlgebraPtr& a, const std::vector<std::size_t>& mults);
/// Throws InvalidMorphism when the matrix does not intertwine.
Module presented_module(const AlgebraPtr& a, const Presentation& pres);

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of the k-th sample of a run seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t k);

/// Random map P(s) -> P(t): each generator goes to a random element of the
/// matching idempotent part of P(t).
Presentation random_presentation(const AlgebraPtr& a, const std::vector<std::size_t>& t_mults,
                                 const std::vector<std::size_t>& s_mults, std::uint64_t seed);
Module random_module(const AlgebraPtr& a, const std::vector<std::size_t>& t_mults,
                     const std::vector<std::size_t>& s_mults, std::uint64_t seed);

/// Multiplicities drawn from the seed (entries in 0..2, some t_i nonzero)
/// followed by random_presentation with a derived seed.
Presentation sample_presentation(const AlgebraPtr& a, std::uint64_t seed);

struct CheckConfig {
  std::size_t samples = 50;
  std::size_t cutoff = kDefaultCutoff;
  std::uint64_t seed = 0;
};

struct FailureRecord {
  std::uint64_t seed = 0;
  Presentation presentation;
  std::string detail;
};

/// drawn = samples + skipped; samples = passed + failed + unknown.
struct CheckReport {
  std::string property_id;
  std::string algebra;
  CheckConfig config;
  std::size_t drawn = 0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
  std::size_t passed = 0;
  std::vector<FailureRecord> failed;
  std::size_t unknown = 0;
  std::vector<std::string> findings;

  bool ok() const { return failed.empty(); }
};

const std::vector<std::string>& property_ids();

enum class Outcome { Skipped, Passed, Failed, Unknown };

struct SampleResult {
  Outcome outcome = Outcome::Skipped;
  std::string detail;
  std::optional<std::string> finding;
};

/// Evaluates one property on one sample; `seed` feeds any extra randomness.
SampleResult evaluate_property(const std::string& property_id, const Module& m, std::size_t cutoff,
                               std::uint64_t seed);

/// Draws `config.samples` modules; throws UnknownPropertyId.
CheckReport check(const std::string& property_id, const AlgebraPtr& a, const CheckConfig& config);

/// Re-evaluates a failure record in isolation.
SampleResult replay(const std::string& property_id, const AlgebraPtr& a, const FailureRecord& record,
                    std::size_t cutoff);

enum class ScanVerdict { Consistent, CandidateCounterexample, Undecided };
const char* to_string(ScanVerdict v);

struct ScanObservation {
  std::string subject;
  std::string detail;
};

struct ScanReport {
  std::string conjecture_id;
  std::string algebra;
  CheckConfig config;
  ScanVerdict verdict = ScanVerdict::Consistent;
  std::optional<FailureRecord> witness;
  std::optional<Module> witness_module;
  std::vector<std::string> reasons;
  std::vector<ScanObservation> observations;
  std::size_t examined = 0;
};

const std::vector<std::string>& conjecture_ids();

/// Throws UnknownConjectureId.
ScanReport scan(const std::string& conjecture_id, const AlgebraPtr& a, const CheckConfig& config);

}  // namespace homcalc
