#pragma once

#include <cstdint>
#include <string>

#include "fmra/cell_function.hpp"
#include "fmra/ifs_system.hpp"

namespace fmra {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Load a system from its JSON description: either {"maps": [...], "core":
/// [...]} for an explicit gap-filled list or {"core_maps": [...],
/// "auto_fill": true} to run gap filling.
IFSystem load_system_json(const std::string& text);
IFSystem load_system_file(const std::string& path);
std::string system_to_json(const IFSystem& sys);

/// CellFunction wire format: list of {"word": [...], "shift": m, "re": x,
/// "im": y} with collapsed coefficients.
std::string cell_function_to_json(const CellFunction& f, long p);
CellFunction cell_function_from_json(const std::string& text, long p);

/// FNV-1a over the raw bytes; embedded in reports for reproducibility.
std::uint64_t content_hash(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace fmra
