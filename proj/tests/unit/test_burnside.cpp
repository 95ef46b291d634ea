#include <catch_amalgamated.hpp>

#include "bisetlab/burnside.hpp"
#include "bisetlab/catalog.hpp"
#include "bisetlab/errors.hpp"

using namespace bisetlab;

namespace {
GroupPtr grp(const std::string& n) { return Catalog::builtin().get(n); }
}

TEST_CASE("biset bases") {
  const auto c1 = grp("C1"), c2 = grp("C2");
  CHECK(BisetSpace::get(c1, c1, c1)->dim() == 1);
  CHECK(BisetSpace::get(c2, c1, c1)->dim() == 2);
  CHECK(BisetSpace::get(c2, c2, c1)->dim() == 5);
  CHECK(BisetSpace::get(grp("S3"), c1, c1)->dim() == 4);
  // classes are stored as their minimal conjugates
  const auto sp = BisetSpace::get(grp("S3"), c2, c1);
  for (const auto& e : sp->classes()) CHECK(canonical_conjugate(e) == e);
}

TEST_CASE("identity bisets") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3");
  const auto e = identity_biset(c1, c3);
  REQUIRE(e.coeffs.size() == 1);
  CHECK(e.space->classes()[e.coeffs.begin()->first].order() == 3);
  for (const auto& g : {"C2", "C3", "S3", "C2xC2"}) {
    const auto id = identity_biset(grp(g), c2);
    CHECK(compose_bisets(id, id) == id);
    const auto sp = BisetSpace::get(grp(g), c2, c2);
    for (int x = 0; x < sp->dim(); ++x) {
      const auto b = BurnsideMorphism::basis_element(sp, x);
      CHECK(compose_bisets(id, b) == b);
      CHECK(compose_bisets(b, identity_biset(c2, c2)) == b);
    }
  }
  CHECK(beta_r(grp("C4"), 1, c2) == identity_biset(grp("C4"), c2));
}

TEST_CASE("diagonal star diagonal") {
  const auto c1 = grp("C1"), c2 = grp("C2");
  const auto d = identity_biset(c2, c1);
  REQUIRE(d.coeffs.size() == 1);
  const Subgroup& e = d.space->classes()[d.coeffs.begin()->first];
  CHECK(e.order() == 2);
  CHECK(projections_kernels(e, 0).second.order() == 1);
  CHECK(compose_bisets(d, d) == d);
}

TEST_CASE("trivial subgroup composes into p1 = 1") {
  const auto c2 = grp("C2"), s3 = grp("S3"), t = grp("C2");
  const auto left = BisetSpace::get(c2, s3, t);
  const auto one = BurnsideMorphism::basis_element(left, 0);
  REQUIRE(left->classes()[0].order() == 1);
  const auto right = BisetSpace::get(s3, c2, t);
  for (int x = 0; x < right->dim(); ++x) {
    const auto r = compose_bisets(one, BurnsideMorphism::basis_element(right, x));
    for (const auto& [cls, c] : r.coeffs) {
      CHECK(c > 0);
      CHECK(projections_kernels(r.space->classes()[cls], 0).first.order() == 1);
    }
  }
}

TEST_CASE("beta_r is multiplicative") {
  const auto t = grp("C2");
  for (int m : {5, 7, 8, 9}) {
    const auto d = grp("C" + std::to_string(m));
    for (int r = 1; r < m; ++r)
      for (int s = 1; s < m; ++s) {
        if (std::gcd(r, m) != 1 || std::gcd(s, m) != 1) continue;
        CHECK(compose_bisets(beta_r(d, r, t), beta_r(d, s, t)) == beta_r(d, (r * s) % m, t));
      }
  }
  CHECK_THROWS_AS(beta_r(grp("C4"), 2, t), NotAUnit);
  CHECK_THROWS_AS(beta_r(grp("C2xC2"), 1, t), NotCyclic);
}

TEST_CASE("twisted diagonal fixes the graph of C4 onto C2") {
  const auto c4 = grp("C4"), c2 = grp("C2"), t = grp("C3");
  const auto target = product_of({c4, c2, t});
  std::vector<int> members;
  for (int d = 0; d < 4; ++d)
    for (int s = 0; s < 3; ++s) members.push_back(target->element_at(std::vector<int>{d, d % 2, s}));
  std::sort(members.begin(), members.end());
  const Subgroup a(target, members);
  const auto dd = product_of({c4, c4, t});
  const Subgroup d3 = twisted_diagonal(c4, 3);
  std::vector<int> m;
  for (int x : d3.members()) {
    const auto c = d3.parent()->coordinates(x);
    for (int s = 0; s < 3; ++s) m.push_back(dd->element_at(std::vector<int>{c[0], c[1], s}));
  }
  std::sort(m.begin(), m.end());
  CHECK(star_product(Subgroup(dd, m), a, target) == a);
}

TEST_CASE("linearization") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3"), s3 = grp("S3");
  for (const auto& [g, t] : std::vector<std::pair<GroupPtr, GroupPtr>>{{c2, c3}, {s3, c2}, {grp("C4"), c1}})
    CHECK(linearize(identity_biset(g, t)) == identity(g, t, FieldMode::Rational));
  const auto sp = BisetSpace::get(s3, c2, c2);
  const auto reg = linearize_class(sp, 0);
  CHECK(reg.values()[0] == 24);
  for (std::size_t i = 1; i < reg.values().size(); ++i) CHECK(reg.values()[i].is_zero());
  CHECK(reg.mode() == FieldMode::Rational);

  const auto left = BisetSpace::get(c2, s3, c2), right = BisetSpace::get(s3, c3, c2);
  for (int x = 0; x < left->dim(); ++x)
    for (int y = 0; y < right->dim(); ++y) {
      const auto b = BurnsideMorphism::basis_element(left, x), a = BurnsideMorphism::basis_element(right, y);
      CHECK(linearize(compose_bisets(b, a)) == compose(linearize(b), linearize(a)));
    }
}
