#include "chief/catalogue.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "chief/arith.hpp"
#include "chief/error.hpp"

namespace chief {

namespace {

using nlohmann::json;

uint64_t factorial(uint64_t n) {
  uint64_t f = 1;
  for (uint64_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

struct FixedBuiltin {
  unsigned degree;
  std::vector<std::string> generators;
  uint64_t order;
};

// Abstractly defined groups, realized by explicit permutation generators.
// SL23 acts on the eight nonzero vectors of F3^2; M16 and C3:C4 act on
// cosets of core-free subgroups; Q8/Q16 are right regular representations.
const std::map<std::string, FixedBuiltin>& fixed_builtins() {
  static const std::map<std::string, FixedBuiltin> table = {
      {"Q8", {8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}, 8}},
      {"Q16",
       {16,
        {"(1 2 3 4 5 6 7 8)(9 16 15 14 13 12 11 10)",
         "(1 9 5 13)(2 10 6 14)(3 11 7 15)(4 12 8 16)"},
        16}},
      {"SL23", {8, {"(3 4 5)(6 8 7)", "(1 3 2 6)(4 5 8 7)"}, 24}},
      {"M16", {8, {"(1 2 3 4 5 6 7 8)", "(2 6)(4 8)"}, 16}},
      {"C3:C4", {7, {"(1 2 3)(4 5)(6 7)", "(2 3)(4 6 5 7)"}, 12}},
      {"C7:C3", {7, {"(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"}, 21}},
  };
  return table;
}

std::optional<uint64_t> family_number(const std::string& name, char letter) {
  if (name.size() < 2 || name[0] != letter)
    return std::nullopt;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      return std::nullopt;
  return std::stoull(name.substr(1));
}

std::string cycle_string(const std::vector<unsigned>& points) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < points.size(); ++i) {
    if (i)
      os << ' ';
    os << points[i];
  }
  os << ')';
  return os.str();
}

GroupSpec cyclic_spec(const std::string& name, uint64_t n) {
  GroupSpec spec{name, static_cast<unsigned>(n), {}};
  if (n >= 2) {
    std::vector<unsigned> cycle(n);
    for (uint64_t i = 0; i < n; ++i)
      cycle[i] = static_cast<unsigned>(i + 1);
    spec.generators.push_back(cycle_string(cycle));
  }
  return spec;
}

GroupSpec dihedral_spec(const std::string& name, uint64_t n) {
  if (n % 2 != 0 || n < 6)
    throw DomainError("dihedral builtin needs even order >= 6: " + name);
  const unsigned m = static_cast<unsigned>(n / 2);
  GroupSpec spec{name, m, {}};
  std::vector<unsigned> rotation(m);
  for (unsigned i = 0; i < m; ++i)
    rotation[i] = i + 1;
  spec.generators.push_back(cycle_string(rotation));
  std::string reflection;
  for (unsigned i = 1; i < m + 1 - i; ++i)
    reflection += cycle_string({i, m + 1 - i});
  spec.generators.push_back(reflection);
  return spec;
}

GroupSpec symmetric_spec(const std::string& name, uint64_t n) {
  if (n < 1 || n > 6)
    throw DomainError("symmetric builtin supports n <= 6: " + name);
  GroupSpec spec{name, static_cast<unsigned>(n), {}};
  if (n >= 2) {
    spec.generators.push_back("(1 2)");
    if (n >= 3) {
      std::vector<unsigned> cycle(n);
      for (uint64_t i = 0; i < n; ++i)
        cycle[i] = static_cast<unsigned>(i + 1);
      spec.generators.push_back(cycle_string(cycle));
    }
  }
  return spec;
}

GroupSpec alternating_spec(const std::string& name, uint64_t n) {
  if (n < 3 || n > 6)
    throw DomainError("alternating builtin supports 3 <= n <= 6: " + name);
  GroupSpec spec{name, static_cast<unsigned>(n), {"(1 2 3)"}};
  if (n > 3) {
    std::vector<unsigned> cycle;
    if (n % 2 == 1) {
      for (uint64_t i = 1; i <= n; ++i)
        cycle.push_back(static_cast<unsigned>(i));
    } else {
      for (uint64_t i = 2; i <= n; ++i)
        cycle.push_back(static_cast<unsigned>(i));
    }
    spec.generators.push_back(cycle_string(cycle));
  }
  return spec;
}

GroupSpec elementary_spec(const std::string& name, uint64_t q) {
  const auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1)
    throw DomainError("elementary abelian builtin needs a prime power: " + name);
  const uint64_t p = primes.front();
  unsigned k = 0;
  for (uint64_t v = q; v > 1; v /= p)
    ++k;
  GroupSpec spec{name, static_cast<unsigned>(k * p), {}};
  for (unsigned block = 0; block < k; ++block) {
    std::vector<unsigned> cycle;
    for (uint64_t i = 0; i < p; ++i)
      cycle.push_back(static_cast<unsigned>(block * p + i + 1));
    spec.generators.push_back(cycle_string(cycle));
  }
  return spec;
}

GroupSpec product_spec(const GroupSpec& left, const GroupSpec& right) {
  GroupSpec spec{left.name + "x" + right.name, left.degree + right.degree, {}};
  spec.generators = left.generators; // fixed points are omitted, so no rewrite
  for (const std::string& text : right.generators) {
    Perm p = Perm::parse(text, right.degree);
    std::vector<Point> images(spec.degree);
    for (unsigned i = 0; i < left.degree; ++i)
      images[i] = static_cast<Point>(i);
    for (unsigned i = 0; i < right.degree; ++i)
      images[left.degree + i] = static_cast<Point>(left.degree + p[i]);
    spec.generators.push_back(Perm(std::move(images)).str());
  }
  return spec;
}

uint64_t builtin_order(const std::string& name) {
  if (auto xpos = name.find('x'); xpos != std::string::npos)
    return builtin_order(name.substr(0, xpos)) * builtin_order(name.substr(xpos + 1));
  if (auto it = fixed_builtins().find(name); it != fixed_builtins().end())
    return it->second.order;
  if (auto n = family_number(name, 'C')) {
    if (*n < 1)
      throw DomainError("cyclic builtin needs n >= 1: " + name);
    return *n;
  }
  if (auto n = family_number(name, 'D')) {
    if (*n % 2 != 0 || *n < 6)
      throw DomainError("dihedral builtin needs even order >= 6: " + name);
    return *n;
  }
  if (auto n = family_number(name, 'S')) {
    if (*n < 1 || *n > 6)
      throw DomainError("symmetric builtin supports n <= 6: " + name);
    return factorial(*n);
  }
  if (auto n = family_number(name, 'A')) {
    if (*n < 3 || *n > 6)
      throw DomainError("alternating builtin supports 3 <= n <= 6: " + name);
    return factorial(*n) / 2;
  }
  if (auto n = family_number(name, 'E')) {
    if (*n < 2 || prime_divisors(*n).size() != 1)
      throw DomainError("elementary abelian builtin needs a prime power: " + name);
    return *n;
  }
  throw DomainError("unknown builtin group: " + name);
}

} // namespace

Group group_from_spec(const GroupSpec& spec) {
  if (spec.degree == 0)
    throw DomainError("group spec degree must be positive");
  std::vector<Perm> gens;
  for (const std::string& text : spec.generators)
    gens.push_back(Perm::parse(text, spec.degree));
  return Group::from_generators(spec.degree, std::move(gens));
}

bool is_builtin(const std::string& name) {
  try {
    builtin_order(name);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

GroupSpec builtin_spec(const std::string& name) {
  if (auto xpos = name.find('x'); xpos != std::string::npos) {
    GroupSpec left = builtin_spec(name.substr(0, xpos));
    GroupSpec right = builtin_spec(name.substr(xpos + 1));
    return product_spec(left, right);
  }
  if (auto it = fixed_builtins().find(name); it != fixed_builtins().end())
    return GroupSpec{name, it->second.degree, it->second.generators};
  if (auto n = family_number(name, 'C')) {
    if (*n < 1)
      throw DomainError("cyclic builtin needs n >= 1: " + name);
    return cyclic_spec(name, *n);
  }
  if (auto n = family_number(name, 'D'))
    return dihedral_spec(name, *n);
  if (auto n = family_number(name, 'S'))
    return symmetric_spec(name, *n);
  if (auto n = family_number(name, 'A'))
    return alternating_spec(name, *n);
  if (auto n = family_number(name, 'E'))
    return elementary_spec(name, *n);
  throw DomainError("unknown builtin group: " + name);
}

Group builtin_group(const std::string& name) {
  Group g = group_from_spec(builtin_spec(name));
  const uint64_t expected = builtin_order(name);
  if (g.order() != expected)
    throw Error("internal: builtin " + name + " has order " +
                std::to_string(g.order()) + ", registry says " +
                std::to_string(expected));
  return g;
}

namespace {

std::pair<size_t, size_t> line_column(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < text.size() && i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json_file(const std::string& path, std::string& content) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  content = buffer.str();
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(content, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + e.what());
  }
}

} // namespace

GroupSpec load_group_spec(const std::string& path) {
  std::string content;
  json doc = parse_json_file(path, content);
  GroupSpec spec;
  try {
    spec.name = doc.at("name").get<std::string>();
    spec.degree = doc.at("degree").get<unsigned>();
    for (const auto& g : doc.at("generators"))
      spec.generators.push_back(g.get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(path + ": bad group file: " + e.what());
  }
  return spec;
}

Group load_group_file(const std::string& path) {
  GroupSpec spec = load_group_spec(path);
  try {
    return group_from_spec(spec);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_group_file(const Group& g, const std::string& name,
                     const std::string& path) {
  json doc;
  doc["name"] = name;
  doc["degree"] = g.degree();
  json gens = json::array();
  for (const Perm& p : canonical_generators(g))
    gens.push_back(p.str());
  doc["generators"] = std::move(gens);
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write file: " + path);
  out << doc.dump(2) << '\n';
}

const std::vector<ManifestEntry>& default_manifest() {
  static const std::vector<ManifestEntry> entries = [] {
    const std::vector<std::string> names = {
        "C2",    "C3",    "C4",    "C5",     "C6",    "C7",    "C8",
        "C9",    "C10",   "C12",   "C15",    "C16",   "C30",   "E4",
        "E8",    "E9",    "E16",   "E25",    "E27",   "E49",   "C4xC2",
        "C4xC4", "C6xC2", "C9xC3", "C10xC2", "D6",    "D8",    "D10",
        "D12",   "D14",   "D16",   "D20",    "D24",   "Q8",    "Q16",
        "M16",   "C3:C4", "C7:C3", "S3",     "S4",    "S5",    "A4",
        "A5",    "SL23",  "C2xS3", "C3xS3",  "C2xS4", "C2xA4", "C3xA4",
        "C2xQ8", "C3xQ8", "C5xS3", "C2xD8",  "C4xS3", "C3xD8", "C2xSL23",
    };
    std::vector<ManifestEntry> out;
    for (const std::string& name : names)
      out.push_back({name, "builtin", "", builtin_order(name)});
    return out;
  }();
  return entries;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::string content;
  json doc = parse_json_file(path, content);
  std::vector<ManifestEntry> entries;
  const auto base = std::filesystem::path(path).parent_path();
  try {
    for (const auto& item : doc.at("entries")) {
      ManifestEntry entry;
      entry.name = item.at("name").get<std::string>();
      entry.source = item.value("source", std::string("builtin"));
      if (entry.source != "builtin" && entry.source != "file")
        throw ParseError(path + ": bad source for " + entry.name);
      if (entry.source == "file") {
        auto rel = std::filesystem::path(item.at("path").get<std::string>());
        entry.path = rel.is_absolute() ? rel.string() : (base / rel).string();
      }
      if (item.contains("expected_order"))
        entry.expected_order = item.at("expected_order").get<uint64_t>();
      entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw ParseError(path + ": bad manifest: " + e.what());
  }
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].name == entries[j].name)
        throw ParseError(path + ": duplicate catalogue name " + entries[i].name);
  return entries;
}

Group resolve_entry(const ManifestEntry& entry) {
  Group g = entry.source == "builtin" ? builtin_group(entry.name)
                                      : load_group_file(entry.path);
  if (entry.expected_order && g.order() != *entry.expected_order)
    throw DomainError("catalogue entry " + entry.name + " has order " +
                      std::to_string(g.order()) + ", manifest expects " +
                      std::to_string(*entry.expected_order));
  return g;
}

} // namespace chief
