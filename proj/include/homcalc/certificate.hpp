#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "homcalc/matrix.hpp"

namespace homcalc {

enum class VerdictKind { CertifiedTrue, CertifiedFalse, Unknown };

/// A nonzero Ext group found while testing a vanishing claim.
struct ExtWitness {
  std::size_t degree = 0;      // i in Ext^i(m, target)
  std::size_t dimension = 0;   // dim_k of that Ext group
  std::size_t target = 0;      // index into the target list
};

/// Three-valued answer with the data needed to replay it.
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;
  std::optional<std::size_t> cutoff;                      // Unknown
  std::optional<ExtWitness> ext;                          // CertifiedFalse on Ext claims
  std::optional<std::pair<std::size_t, std::size_t>> period;  // window closed by Omega^a ~ Omega^b
  std::optional<std::size_t> window;                      // last degree checked
  std::optional<Matrix> iso;                              // CertifiedTrue on iso claims
  std::optional<std::size_t> node;                        // failing position in a witness

  static Verdict make(VerdictKind k, std::string why) {
    Verdict v;
    v.kind = k;
    v.reason = std::move(why);
    return v;
  }
  static Verdict yes(std::string why) { return make(VerdictKind::CertifiedTrue, std::move(why)); }
  static Verdict no(std::string why) { return make(VerdictKind::CertifiedFalse, std::move(why)); }
  static Verdict unknown(std::size_t cutoff, std::string why) {
    Verdict v = make(VerdictKind::Unknown, std::move(why));
    v.cutoff = cutoff;
    return v;
  }

  bool is_true() const { return kind == VerdictKind::CertifiedTrue; }
  bool is_false() const { return kind == VerdictKind::CertifiedFalse; }
  bool is_unknown() const { return kind == VerdictKind::Unknown; }
};

/// False dominates; True and Unknown give Unknown.
inline Verdict conjunction(const Verdict& a, const Verdict& b) {
  if (a.is_false()) return a;
  if (b.is_false()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  Verdict v = a;
  v.reason = a.reason + "; " + b.reason;
  if (!v.period) v.period = b.period;
  if (!v.window) v.window = b.window;
  return v;
}

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::CertifiedTrue: return "CertifiedTrue";
    case VerdictKind::CertifiedFalse: return "CertifiedFalse";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace homcalc
