#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chief/group.hpp"

namespace chief {

/// Textual description of a permutation group; the JSON group-file format
/// mirrors this struct field for field.
struct GroupSpec {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generators; // cycle notation, 1-based
};

Group group_from_spec(const GroupSpec& spec);

bool is_builtin(const std::string& name);

/// Builtin registry: C{n}; D{n} (dihedral of order n, n even >= 6);
/// S{n} and A{n} for n <= 6; E{p^k} (elementary abelian); Q8; Q16; SL23;
/// M16; C3:C4; C7:C3; and direct products written "XxY". The abstractly
/// defined entries carry explicitly listed permutation generators.
GroupSpec builtin_spec(const std::string& name);

/// Constructs a builtin and validates its order against the registry.
Group builtin_group(const std::string& name);

GroupSpec load_group_spec(const std::string& path);
Group load_group_file(const std::string& path);
void save_group_file(const Group& g, const std::string& name,
                     const std::string& path);

struct ManifestEntry {
  std::string name;
  std::string source; // "builtin" or "file"
  std::string path;   // file entries only; relative to the manifest
  std::optional<uint64_t> expected_order;
};

/// The pinned default catalogue: the registry instances of order <= 120
/// that the acceptance sweep runs over.
const std::vector<ManifestEntry>& default_manifest();

std::vector<ManifestEntry> load_manifest(const std::string& path);

/// Builds the group named by an entry and fails fast when expected_order
/// does not match the constructed order.
Group resolve_entry(const ManifestEntry& entry);

} // namespace chief
