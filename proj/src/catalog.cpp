#include "bisetlab/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "bisetlab/errors.hpp"
#include "bisetlab/subgroup.hpp"

namespace bisetlab {

using nlohmann::json;

namespace {

// OEIS A000001, n = 1..64
constexpr int kGroupCounts[64] = {1, 1, 1,  2, 1, 2, 1, 5,  2, 2, 1, 5,  1, 2, 1, 14,
                                  1, 5, 1,  5, 2, 2, 1, 15, 2, 5, 2, 4,  1, 4, 1, 51,
                                  1, 2, 1,  14, 1, 2, 2, 14, 1, 6, 1, 4, 2, 2, 1, 52,
                                  2, 5, 1,  5, 1, 15, 2, 13, 2, 2, 1, 13, 1, 2, 4, 267};

GroupPtr dicyclic(int n, std::string name) {
  // order 4n: a^k x^j, x^2 = a^n, x a x^-1 = a^-1; index k + 2n j
  const int m = 2 * n;
  std::vector<std::vector<int>> table(2 * m, std::vector<int>(2 * m));
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < m; ++k)
      for (int jj = 0; jj < 2; ++jj)
        for (int l = 0; l < m; ++l) {
          int exp = j == 0 ? k + l : k - l;
          int xs = j + jj;
          if (xs == 2) {
            exp += n;
            xs = 0;
          }
          exp = ((exp % m) + m) % m;
          table[k + m * j][l + m * jj] = exp + m * xs;
        }
  return FiniteGroup::from_table(std::move(name), table);
}

std::vector<int> rotation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

std::vector<int> reflection(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

GroupPtr dihedral(int n, std::string name) {
  return FiniteGroup::from_permutations(std::move(name), n, {rotation(n), reflection(n)});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

std::vector<std::string> split_product_name(const std::string& name) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : name) {
    if (c == '(') {
      if (depth++ == 0) continue;
    } else if (c == ')') {
      if (--depth == 0) continue;
    } else if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

int groups_of_order(int n) {
  if (n < 1 || n > 64) throw InvalidInput("group count table covers orders 1..64");
  return kGroupCounts[n - 1];
}

GroupPtr group_from_json(const json& d, int order_cap) {
  if (!d.is_object() || !d.contains("name") || !d["name"].is_string()) {
    throw InvalidInput("group descriptor needs a string \"name\"");
  }
  const std::string name = d["name"];
  try {
    if (d.contains("table")) {
      auto table = d["table"].get<std::vector<std::vector<int>>>();
      if (d.contains("order") && d["order"].get<int>() != static_cast<int>(table.size())) {
        throw NotAGroup(name + ": order does not match the table");
      }
      return FiniteGroup::from_table(name, table, order_cap);
    }
    if (d.contains("generators")) {
      const int degree = d.at("degree").get<int>();
      auto gens = d["generators"].get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_permutations(name, degree, gens, order_cap);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(name + ": " + e.what());
  }
  throw InvalidInput(name + ": descriptor has neither \"table\" nor \"generators\"");
}

json group_to_json(const FiniteGroup& g) {
  std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) rows[a][b] = g.mul(a, b);
  return json{{"name", g.name()}, {"order", g.order()}, {"table", rows}};
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = [] {
    Catalog c;
    auto C = [](int n) { return FiniteGroup::cyclic(n); };
    auto c2 = C(2), c3 = C(3), c4 = C(4), c6 = C(6);
    c.add(C(1));
    c.add(c2);
    c.add(c3);
    c.add(c4);
    c.add(direct_product({c2, c2}, kDefaultOrderCap, "C2xC2"));
    c.add(C(5));
    c.add(c6);
    c.add(FiniteGroup::from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}}));
    c.add(C(7));
    c.add(C(8));
    c.add(direct_product({c4, c2}, kDefaultOrderCap, "C4xC2"));
    c.add(direct_product({c2, c2, c2}, kDefaultOrderCap, "C2xC2xC2"));
    c.add(dihedral(4, "D8"));
    c.add(dicyclic(2, "Q8"));
    c.add(C(9));
    c.add(direct_product({c3, c3}, kDefaultOrderCap, "C3xC3"));
    c.add(C(10));
    c.add(dihedral(5, "D10"));
    c.add(C(11));
    c.add(C(12));
    c.add(direct_product({c6, c2}, kDefaultOrderCap, "C6xC2"));
    c.add(dihedral(6, "D12"));
    c.add(FiniteGroup::from_permutations("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
    c.add(dicyclic(3, "Dic12"));
    return c;
  }();
  return cat;
}

Catalog Catalog::with_file(const std::string& path, int order_cap) {
  Catalog c = builtin();
  if (path.empty()) return c;
  std::ifstream probe(path);
  if (!probe) return c;
  for (const auto& g : load_descriptor_file(path, order_cap)) c.add(g);
  return c;
}

GroupPtr Catalog::get(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  auto parts = split_product_name(name);
  if (parts.size() > 1) {
    std::vector<GroupPtr> factors;
    for (const auto& p : parts) factors.push_back(get(p));
    return product_of(factors);
  }
  throw InvalidInput("unknown group \"" + name + "\"");
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& g : groups_) out.push_back(g->name());
  return out;
}

void Catalog::add(const GroupPtr& g) {
  auto it = by_name_.find(g->name());
  if (it != by_name_.end()) {
    const FiniteGroup& have = *it->second;
    const bool same = have.same_table(*g) || (have.order() == g->order() && have.order() <= 16 && isomorphic(have, *g));
    if (!same) throw InvalidInput("catalog already has a different group named " + g->name());
    return;
  }
  by_name_.emplace(g->name(), g);
  groups_.push_back(g);
}

std::uint64_t Catalog::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (const auto& g : groups_) {
    for (unsigned char c : g->name()) mix(c);
    mix(g->fingerprint());
  }
  return h;
}

std::string Catalog::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

std::vector<GroupPtr> Catalog::smaller_groups(int n) const {
  std::vector<GroupPtr> out;
  for (int order = 1; order < n; ++order) {
    std::vector<GroupPtr> reps;
    for (const auto& g : groups_) {
      if (g->order() != order) continue;
      bool seen = false;
      for (const auto& r : reps) {
        if (isomorphic(*r, *g)) {
          seen = true;
          break;
        }
      }
      if (!seen) reps.push_back(g);
    }
    const int want = groups_of_order(order);
    if (static_cast<int>(reps.size()) < want) {
      throw IncompleteCatalog("catalog has " + std::to_string(reps.size()) + " of the " +
                              std::to_string(want) + " groups of order " + std::to_string(order));
    }
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

std::vector<GroupPtr> load_descriptor_file(const std::string& path, int order_cap) {
  json doc = parse_json(read_file(path), path);
  std::vector<GroupPtr> out;
  if (doc.is_array()) {
    for (const auto& d : doc) out.push_back(group_from_json(d, order_cap));
  } else {
    out.push_back(group_from_json(doc, order_cap));
  }
  return out;
}

std::vector<std::string> append_to_catalog_file(const std::string& catalog_path,
                                                const std::string& source, int order_cap) {
  Catalog current = Catalog::with_file(catalog_path, order_cap);
  json entries = json::array();
  {
    std::ifstream in(catalog_path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      entries = parse_json(ss.str(), catalog_path);
      if (!entries.is_array()) throw InvalidInput(catalog_path + " is not a JSON array");
    }
  }
  json incoming = parse_json(read_file(source), source);
  if (!incoming.is_array()) incoming = json::array({incoming});
  std::vector<std::string> added;
  for (const auto& d : incoming) {
    GroupPtr g = group_from_json(d, order_cap);
    if (current.contains(g->name())) {
      current.add(g);  // throws on a conflicting table
      continue;
    }
    current.add(g);
    entries.push_back(d);
    added.push_back(g->name());
  }
  std::ofstream out(catalog_path);
  if (!out) throw InvalidInput("cannot write " + catalog_path);
  out << entries.dump(2) << "\n";
  return added;
}

GroupPtr product_of(const std::vector<GroupPtr>& factors, int order_cap) {
  static std::mutex mutex;
  static std::map<std::vector<const FiniteGroup*>, GroupPtr> cache;
  std::vector<const FiniteGroup*> key;
  for (const auto& f : factors) key.push_back(f.get());
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second->order() > order_cap) {
        throw OrderCapExceeded(it->second->name() + " has order " +
                               std::to_string(it->second->order()) + " > cap " +
                               std::to_string(order_cap));
      }
      return it->second;
    }
  }
  GroupPtr g = direct_product(factors, order_cap);
  std::lock_guard lock(mutex);
  // the cache keeps the factors alive through g
  return cache.emplace(key, g).first->second;
}

}  // namespace bisetlab
