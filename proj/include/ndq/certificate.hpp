#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ndq/solver.hpp"

namespace ndq {

/// Certificate JSON: {"n": int, "d": int, "queens": [[c1,...,cd], ...]},
/// coordinates 1-based. Queens are written sorted by square index.
std::string write_certificate(const Placement& p);

/// Parses certificate JSON. Propagates nlohmann parse errors (which carry
/// the byte position) for malformed input; throws std::invalid_argument
/// for structurally wrong or off-board content.
Placement read_certificate(std::string_view text);

Placement read_certificate_file(const std::filesystem::path& path);

void write_certificate_file(const Placement& p, const std::filesystem::path& path);

}  // namespace ndq
