#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "isobound/geometry.hpp"

namespace isobound {

/// Parses a domain spec:
///
///   {"kind": "interval",    "dim": 1, "params": {"a": 0, "b": 1}}
///   {"kind": "box",         "dim": n, "params": {"lower": [...], "upper": [...]}}
///   {"kind": "ball",        "dim": n, "params": {"radius": r, "center": [...]}}
///   {"kind": "ellipse",     "dim": n, "params": {"half_axes": [...], "center": [...]}}
///   {"kind": "polygon",     "dim": 2, "params": {"vertices": [[x, y], ...]}}
///   {"kind": "raster-mask", "dim": n, "params": {"cell_size": c, "origin": [...],
///                                                "mask": [[0, 1, ...], ...]}}
///
/// "center" and "origin" are optional and default to the origin. A raster
/// mask is a nested 0/1 array whose first index runs along x. Throws
/// InputError naming the offending field.
Domain parse_domain_spec(std::string_view json_text);

/// Reads and parses a spec file.
Domain load_domain_spec(const std::filesystem::path& path);

/// Canonical spec (sorted keys, shortest round-trip numbers) that parses back
/// to an identical Domain.
std::string dump_domain_spec(const Domain& domain);

}  // namespace isobound
