// Acceptance criteria 1-10. One line per criterion:
//   acceptance [--criterion N] [path/to/bisetlab]
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "bisetlab/algebra.hpp"
#include "bisetlab/report.hpp"
#include "bisetlab/subgroup.hpp"

using namespace bisetlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const Catalog& cat() { return Catalog::builtin(); }
GroupPtr grp(const std::string& n) { return cat().get(n); }

const std::vector<std::string> kGroups{"C1", "C2", "C3", "C4", "C2xC2", "S3"};
const std::vector<std::string> kShifts{"C1", "C2", "C3"};
const std::vector<FieldMode> kModes{FieldMode::Split, FieldMode::Rational};

int order3(const std::string& a, const std::string& b, const std::string& t) {
  return grp(a)->order() * grp(b)->order() * grp(t)->order();
}

std::vector<RepMorphism> basis_of(const GroupPtr& target, const GroupPtr& source, const GroupPtr& t, FieldMode m,
                                  int cap) {
  SpacePtr s = MorphismSpace::get(target, source, t, m, cap);
  std::vector<RepMorphism> out;
  for (int b = 0; b < s->dim(); ++b) out.push_back(RepMorphism::basis_element(s, b));
  return out;
}

std::string tag(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ",") + p;
  return "(" + s + ")";
}

void fail(Outcome& o, const std::string& what) {
  if (o.pass) o.detail = what;
  o.pass = false;
}

// 1 and 2 share the grid H, L in kGroups, T in kShifts, |H x L x T| <= 144.
Outcome gram_grid(bool nondeg) {
  Outcome o;
  int cases = 0;
  for (const auto& h : kGroups)
    for (const auto& l : kGroups)
      for (const auto& t : kShifts) {
        if (order3(h, l, t) > 144) continue;
        for (FieldMode m : kModes) {
          ++cases;
          const std::string where = tag({h, l, t, field_name(m)});
          if (nondeg) {
            const auto r = check_pairing_nondegenerate(grp(h), grp(l), grp(t), m, 144);
            if (!r.pass) fail(o, "rank " + std::to_string(r.rank) + " < " + std::to_string(r.dim) + " at " + where);
          } else {
            const auto g = gram_matrix(grp(h), grp(l), grp(t), m, 144);
            if (!g.symmetric || !g.integer || !g.positive_definite) fail(o, "gram fails at " + where);
          }
        }
      }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int cases = 0;
  for (const auto& l : kGroups)
    for (const auto& t : kShifts)
      for (FieldMode m : kModes) {
        if (order3(l, l, t) > 144) continue;
        ++cases;
        const FiniteDimAlgebra a = build_endo_algebra(grp(l), grp(t), m, 144);
        if (auto err = a.check_axioms()) fail(o, *err);
        const int r = radical_via_trace_form(a).dimension;
        if (r != 0) fail(o, "radical " + std::to_string(r) + " at " + tag({l, t, field_name(m)}));
      }
  const int injected = radical_via_trace_form(fixture_algebra("endo-injected")).dimension;
  if (injected != 1) fail(o, "injected fixture radical " + std::to_string(injected));
  if (o.pass) o.detail = std::to_string(cases) + " algebras radical 0; injected fixture radical 1";
  return o;
}

// Associativity on (G, H, J, K) with every product of two of them and T at most 64;
// identity laws on every space of order <= 64.
Outcome criterion4() {
  Outcome o;
  long long triples = 0, pairs = 0;
  for (const auto& t : kShifts)
    for (FieldMode m : kModes) {
      for (const auto& g : kGroups)
        for (const auto& h : kGroups) {
          if (order3(g, h, t) > 64) continue;
          const auto xs = basis_of(grp(g), grp(h), grp(t), m, 64);
          const RepMorphism ig = identity(grp(g), grp(t), m), ih = identity(grp(h), grp(t), m);
          for (const auto& x : xs) {
            ++pairs;
            if (!(compose(ig, x) == x) || !(compose(x, ih) == x)) fail(o, "identity law at " + tag({g, h, t}));
          }
        }
      for (const auto& g : kGroups)
        for (const auto& h : kGroups)
          for (const auto& j : kGroups)
            for (const auto& k : kGroups) {
              const std::string quad[4] = {g, h, j, k};
              bool small = true;
              for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) small = small && order3(quad[a], quad[b], t) <= 64;
              if (!small) continue;
              const auto gs = basis_of(grp(g), grp(h), grp(t), m, 64);  // H -> G
              const auto bs = basis_of(grp(h), grp(j), grp(t), m, 64);  // J -> H
              const auto as = basis_of(grp(j), grp(k), grp(t), m, 64);  // K -> J
              std::vector<std::vector<RepMorphism>> gb(gs.size()), ba(bs.size());
              for (std::size_t x = 0; x < gs.size(); ++x)
                for (const auto& b : bs) gb[x].push_back(compose(gs[x], b));
              for (std::size_t y = 0; y < bs.size(); ++y)
                for (const auto& a : as) ba[y].push_back(compose(bs[y], a));
              for (std::size_t x = 0; x < gs.size(); ++x)
                for (std::size_t y = 0; y < bs.size(); ++y)
                  for (std::size_t z = 0; z < as.size(); ++z) {
                    ++triples;
                    if (!(compose_values(gb[x][y], as[z]) == compose_values(gs[x], ba[y][z]))) {
                      fail(o, "associativity at " + tag({g, h, j, k, t, field_name(m)}));
                    }
                  }
            }
    }
  if (o.pass) o.detail = std::to_string(triples) + " triples, " + std::to_string(pairs) + " identity checks";
  return o;
}

Outcome criterion5() {
  Outcome o;
  long long checks = 0;
  for (const auto& l : kGroups)
    for (const auto& t : kShifts)
      for (FieldMode m : kModes) {
        if (order3(l, l, t) > 64) continue;
        const auto bs = basis_of(grp(l), grp(l), grp(t), m, 64);
        const std::size_t n = bs.size();
        std::vector<RepMorphism> sh;
        for (const auto& b : bs) sh.push_back(sharp(b));
        std::vector<std::vector<RepMorphism>> prod(n), sprod(n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            prod[a].push_back(compose(bs[a], bs[b]));
            sprod[a].push_back(compose(sh[a], bs[b]));
            ++checks;
            if (!(sharp(prod[a][b]) == compose(sh[b], sh[a]))) fail(o, "sharp law at " + tag({l, t, field_name(m)}));
          }
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
              ++checks;
              if (pairing(prod[a][b], bs[c]) != pairing(bs[b], sprod[a][c])) {
                fail(o, "adjunction at " + tag({l, t, field_name(m)}));
              }
            }
      }
  if (o.pass) o.detail = std::to_string(checks) + " identities";
  return o;
}

// Linearization functoriality on (H, L, K, T) with each of the three products <= 64.
Outcome criterion6() {
  Outcome o;
  long long pairs = 0;
  int quads = 0;
  for (const auto& t : kShifts)
    for (const auto& h : kGroups)
      for (const auto& l : kGroups)
        for (const auto& k : kGroups) {
          if (order3(h, l, t) > 64 || order3(l, k, t) > 64 || order3(h, k, t) > 64) continue;
          ++quads;
          const OracleReport r = linearization_oracle(grp(h), grp(l), grp(k), grp(t), 64);
          pairs += r.pairs;
          if (!r.pass()) fail(o, std::to_string(r.mismatches) + " mismatches at " + tag({h, l, k, t}));
        }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs on " + std::to_string(quads) + " triples";
  return o;
}

bool contains(const Subgroup& big, const Subgroup& small) { return small.mask().subset_of(big.mask()); }

Outcome criterion7() {
  Outcome o;
  long long pairs = 0;
  for (const auto& t : kShifts)
    for (const auto& g : kGroups)
      for (const auto& h : kGroups)
        for (const auto& k : kGroups) {
          if (order3(g, h, t) > 64 || order3(h, k, t) > 64 || order3(g, k, t) > 64) continue;
          const GroupPtr ght = product_of({grp(g), grp(h), grp(t)}), hkt = product_of({grp(h), grp(k), grp(t)});
          const GroupPtr gkt = product_of({grp(g), grp(k), grp(t)});
          const auto es = all_subgroups(ght), ds = all_subgroups(hkt);
          for (const auto& e : es) {
            const auto [pe, ke] = projections_kernels(e, 0);
            for (const auto& d : ds) {
              ++pairs;
              const Subgroup ed = star_product(e, d, gkt);
              const auto [ped, ked] = projections_kernels(ed, 0);
              if (!contains(pe, ped) || !contains(ked, ke)) fail(o, "pyk fails at " + tag({g, h, k, t}));
            }
          }
        }
  // twisted diagonals compose multiplicatively
  for (int mod : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    const GroupPtr d = grp("C" + std::to_string(mod));
    for (int r = 1; r <= mod; ++r)
      for (int s = 1; s <= mod; ++s) {
        if (std::gcd(r, mod) != 1 || std::gcd(s, mod) != 1) continue;
        if (!(star_product(twisted_diagonal(d, r), twisted_diagonal(d, s)) == twisted_diagonal(d, 1LL * r * s % mod))) {
          fail(o, "Delta_" + std::to_string(r) + " * Delta_" + std::to_string(s) + " on C" + std::to_string(mod));
        }
      }
  }
  // (Delta_3(C4) x C3) * A = A for A = A0 x T0, A0 <= C4 x C2, T0 <= C3
  const GroupPtr c4 = grp("C4"), c2 = grp("C2"), c3 = grp("C3");
  const GroupPtr left = product_of({c4, c4, c3}), right = product_of({c4, c2, c3});
  const GroupPtr c4c2 = product_of({c4, c2});
  const Subgroup tw = twisted_diagonal(c4, 3);
  ElementSet mask(left->order());
  for (int x : tw.members())
    for (int z = 0; z < 3; ++z) {
      const int c[3] = {tw.parent()->coordinate(x, 0), tw.parent()->coordinate(x, 1), z};
      mask.set(left->element_at(c));
    }
  const Subgroup dt(left, mask.members());
  int invariant = 0;
  for (const auto& a0 : all_subgroups(c4c2))
    for (const auto& t0 : all_subgroups(c3)) {
      ElementSet am(right->order());
      for (int x : a0.members())
        for (int z : t0.members()) {
          const int c[3] = {c4c2->coordinate(x, 0), c4c2->coordinate(x, 1), z};
          am.set(right->element_at(c));
        }
      const Subgroup a(right, am.members());
      ++invariant;
      if (!(star_product(dt, a, right) == a)) fail(o, "coprime star invariance fails");
    }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " subgroup pairs; " + std::to_string(invariant) + " invariance cases";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::string got, want;
  const GroupPtr one = grp("C1");
  for (int n : {1, 2, 3, 4, 6}) {
    const int e = essential_algebra(grp("C" + std::to_string(n)), one, FieldMode::Rational, cat()).quotient_dim;
    int phi = 0;
    for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    got += (got.empty() ? "" : ",") + std::to_string(e);
    want += (want.empty() ? "" : ",") + std::to_string(phi);
    if (e != phi) o.pass = false;
  }
  std::string garcia = "ok";
  for (const auto& t : {"C2", "S3"})
    for (const auto& c : {"C1", "C2", "C3"}) {
      const int lhs = essential_algebra(grp(c), grp(t), FieldMode::Rational, cat()).quotient_dim;
      const int base = essential_algebra(grp(c), one, FieldMode::Rational, cat()).quotient_dim;
      const int cs = static_cast<int>(cyclic_subgroups_up_to_conjugacy(grp(t)).size());
      if (lhs != cs * base) {
        o.pass = false;
        garcia = std::string("fails at ") + c + "," + t;
      }
    }
  o.detail = "essential dims at C1,C2,C3,C4,C6: " + got + " (totients " + want + "); T-decomposition " + garcia;
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::string summary;
  for (const auto& l : {"C1", "C3"})
    for (const auto& c : {"C1", "C3"}) {
      const AutReport r = aut_multiplicities(grp(l), grp("C2"), grp(c));
      int total = 0;
      std::string dims;
      for (const auto& comp : r.components) {
        if (comp.isotypic_dim < 0) fail(o, "negative isotypic dimension");
        total += comp.isotypic_dim;
        dims += (dims.empty() ? "" : "+") + std::to_string(comp.isotypic_dim);
      }
      if (total != r.module_dim) fail(o, "isotypic dims do not sum to dim M(C)");
      if (!r.relations_hold) fail(o, "action relations fail at " + tag({l, c}));
      if (!r.projectors_ok) fail(o, "projectors fail at " + tag({l, c}));
      summary += std::string(summary.empty() ? "" : "; ") + "L=" + l + " C=" + c + ": " + std::to_string(r.module_dim) +
                 "=" + dims;
    }
  if (o.pass) o.detail = summary;
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome criterion10(const std::string& cli) {
  Outcome o;
  if (cli.empty()) return {false, "path to the bisetlab binary not given"};
  const auto dir = std::filesystem::temp_directory_path() / ("bisetlab_det_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string reports[2];
  for (int run = 0; run < 2; ++run) {
    const auto out = dir / ("certificate" + std::to_string(run) + ".json");
    const std::string cmd = "\"" + cli + "\" certify --L C2 --T C3 --field rational --probes C1,C2,C3,C4,S3 --catalog \"" +
                            (dir / "none.json").string() + "\" --threads " + std::to_string(run + 1) + " --out \"" +
                            out.string() + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) fail(o, "certify exited with status " + std::to_string(rc));
    reports[run] = slurp(out);
  }
  std::filesystem::remove_all(dir);
  if (reports[0].empty() || reports[0] != reports[1]) fail(o, "reports differ");
  if (o.pass) o.detail = std::to_string(reports[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    else cli = a;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gram positive definite", [] { return gram_grid(false); }},
      {"pairing nondegenerate", [] { return gram_grid(true); }},
      {"endomorphism algebras semisimple", criterion3},
      {"category laws", criterion4},
      {"sharp anti-automorphism and adjunction", criterion5},
      {"linearization oracle", criterion6},
      {"subgroup calculus", criterion7},
      {"essential algebra dimensions", criterion8},
      {"Aut(C) multiplicities", criterion9},
      {"determinism", [&cli] { return criterion10(cli); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << i + 1 << " " << (r.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
         << r.detail << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
