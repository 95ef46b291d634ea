#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisetlab/group.hpp"

namespace bisetlab {

/// Parses a group descriptor: {"name", "order", "table"} or
/// {"name", "degree", "generators"}. Throws NotAGroup / OrderCapExceeded /
/// InvalidInput.
GroupPtr group_from_json(const nlohmann::json& descriptor, int order_cap = kDefaultOrderCap);
/// Table-form descriptor of g.
nlohmann::json group_to_json(const FiniteGroup& g);

/// Number of groups of order n up to isomorphism, for 1 <= n <= 64.
int groups_of_order(int n);

/// Named groups. The built-in part holds every group of order <= 12 up to
/// isomorphism; further groups come from a user catalog file holding a JSON
/// array of descriptors.
class Catalog {
 public:
  /// The process-wide built-in catalog. Its GroupPtrs are stable.
  static const Catalog& builtin();
  /// Built-ins plus the entries of `path` (missing file = no extra entries).
  static Catalog with_file(const std::string& path, int order_cap = kDefaultOrderCap);

  bool contains(const std::string& name) const { return by_name_.count(name) > 0; }
  /// Looks up a name; names of the form "AxB" that are not entries resolve
  /// to the (cached) direct product of the parts. Throws InvalidInput.
  GroupPtr get(const std::string& name) const;
  const std::vector<GroupPtr>& groups() const { return groups_; }
  std::vector<std::string> names() const;

  /// Adds a group; a name already present must carry an identical table.
  void add(const GroupPtr& g);
  /// FNV-1a over entry names and table fingerprints, in catalog order.
  std::uint64_t hash() const;
  std::string hash_hex() const;

  /// One entry per isomorphism class among the entries of order < n.
  /// Throws IncompleteCatalog when some order below n is under-represented.
  std::vector<GroupPtr> smaller_groups(int n) const;

 private:
  std::vector<GroupPtr> groups_;
  std::map<std::string, GroupPtr> by_name_;
};

/// Reads a descriptor file (one object or an array of objects).
std::vector<GroupPtr> load_descriptor_file(const std::string& path, int order_cap = kDefaultOrderCap);
/// Validates the descriptors in `source` and appends them to the catalog file
/// at `catalog_path`, creating it when absent. Returns the added names.
std::vector<std::string> append_to_catalog_file(const std::string& catalog_path,
                                                const std::string& source,
                                                int order_cap = kDefaultOrderCap);

/// Direct product memoized on factor identity, so repeated requests share one
/// object (and hence every per-group cache).
GroupPtr product_of(const std::vector<GroupPtr>& factors, int order_cap = kDefaultOrderCap);

}  // namespace bisetlab
