#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "homcalc/harness.hpp"

namespace homcalc {

using Json = nlohmann::json;

/// Parse failures raise ParseError, invariant failures ValidationError; the
/// location is a JSON pointer into the document.
Json read_json_file(const std::filesystem::path& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::uint32_t p, std::size_t rows, std::size_t cols,
                        const std::string& where);

Json algebra_to_json(const Algebra& a);
Json quiver_to_json(const QuiverPresentation& q);
QuiverPresentation quiver_from_json(const Json& j);
/// Either schema: explicit structure constants or a quiver presentation
/// (recognised by "vertices"). `basis_cap` applies to the quiver form; an
/// optional "name" field overrides `fallback_name`.
AlgebraPtr algebra_from_json(const Json& j, std::size_t basis_cap = kDefaultBasisCap,
                             const std::string& fallback_name = {});
/// Path-basis cap from HOMCALC_BASIS_CAP, or the default.
std::size_t basis_cap_from_env();

/// Action form only; the algebra is written inline.
Json module_to_json(const Module& m, bool with_algebra = true);
/// `algebra` may be absent when the document names or embeds one; a string
/// reference is resolved against `base_dir`, then against corpus names.
Module module_from_json(const Json& j, const std::optional<AlgebraPtr>& algebra,
                        const std::filesystem::path& base_dir = {});
Json presentation_to_json(const Presentation& p);

Json report_to_json(const DimensionReport& r);
Json verdict_to_json(const Verdict& v);

Json witness_to_json(const ExactSequenceWitness& w);
ExactSequenceWitness witness_from_json(const Json& j);

Json check_report_to_json(const CheckReport& r);
Json scan_report_to_json(const ScanReport& r);

/// Canonical serialisation: sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);

}  // namespace homcalc
