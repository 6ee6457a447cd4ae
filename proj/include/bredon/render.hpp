// SPDX-License-Identifier: Apache-2.0
//
// Text, JSON, CSV and DOT renderings of every pipeline stage. JSON documents
// carry a "schema" tag; the coefficient-system and decomposition documents
// parse back into equal values.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "bredon/configuration.hpp"
#include "bredon/homalg.hpp"
#include "bredon/pipeline.hpp"

namespace bredon {

enum class Format { Text, Json, Csv, Dot };

/// "text", "json", "csv" or "dot"; throws ErrorKind::Parse otherwise.
Format parse_format(const std::string& name);
const char* format_name(Format f);

namespace schema {
inline constexpr const char* kLattice = "bredon.lattice/1";
inline constexpr const char* kOrbitCategory = "bredon.orbitcat/1";
inline constexpr const char* kCoefficientSystem = "bredon.coeffsys/1";
inline constexpr const char* kResolution = "bredon.resolution/1";
inline constexpr const char* kHom = "bredon.hom/1";
inline constexpr const char* kExt = "bredon.ext/1";
inline constexpr const char* kBetti = "bredon.betti/1";
inline constexpr const char* kDecomposition = "bredon.decomposition/1";
inline constexpr const char* kE2Page = "bredon.e2page/1";
inline constexpr const char* kConstQ = "bredon.constq/1";
}  // namespace schema

std::string render_lattice(const SubgroupLattice& lat, Format f);
std::string render_orbit_category(const OrbitCategory& cat, Format f);

std::string coefficient_system_to_json(const CoefficientSystem& m);
/// Rebuilds a system over `cat`; checks shapes and functoriality.
CoefficientSystem coefficient_system_from_json(const CategoryPtr& cat, const std::string& text);
/// "constQ", "zero", "atom:<class>" or "json:<path>".
CoefficientSystem coefficient_system_from_descriptor(const CategoryPtr& cat, const std::string& descriptor);
std::string render_coefficient_system(const CoefficientSystem& m, Format f);

std::string render_resolution(const InjectiveResolution& r, Format f);

std::string render_hom(const std::string& source, const std::string& target, std::size_t dim, Format f);

struct ExtReport {
    std::string source;  // descriptor of the first argument
    std::string target;
    ExtResult dims;
};
std::string render_ext(const ExtReport& e, Format f);

std::string render_betti(const BettiTable& b, Format f);

/// "Q + 5*1_7" style row.
std::string decomposition_row_string(const DecompositionRow& row);
std::string render_decomposition(const DecompositionTable& t, Format f);
DecompositionTable decomposition_from_json(const std::string& text);

std::string render_e2_page(const E2Page& page, const DecompositionTable& t, Format f);
std::string render_constant_Q(const std::map<int, std::size_t>& dims, const DecompositionTable& t, Format f);

}  // namespace bredon
