#include <catch_amalgamated.hpp>

#include "bisetlab/catalog.hpp"
#include "bisetlab/errors.hpp"
#include "bisetlab/rep_category.hpp"

using namespace bisetlab;

namespace {
GroupPtr grp(const std::string& n) { return Catalog::builtin().get(n); }

RepMorphism regular(const SpacePtr& s) {
  std::vector<Cyclotomic> v(s->classes().size(), Cyclotomic(0));
  v[0] = Cyclotomic(s->classes().group_order());
  return RepMorphism(s, v);
}

RepMorphism constant_one(const SpacePtr& s) {
  return RepMorphism(s, std::vector<Cyclotomic>(s->classes().size(), Cyclotomic(1)));
}
}  // namespace

TEST_CASE("character tables") {
  const auto& s3 = character_table(grp("S3"));
  REQUIRE(s3.size() == 3);
  CHECK(s3.degrees == std::vector<int>{1, 1, 2});
  const auto& q8 = character_table(grp("Q8"));
  CHECK(q8.degrees == std::vector<int>{1, 1, 1, 1, 2});
  const auto& c3 = character_table(grp("C3"));
  CHECK(c3.dual[1] == 2);
  CHECK(c3.galois[2][1] == 2);
  CHECK(c3.galois[0][1] == -1);

  // Dixon agrees with the product shortcut up to row order
  for (const auto& name : {"C2xC2", "C6xC2", "C2xS3"}) {
    const auto g = grp(name);
    auto a = character_table(g).rows, b = dixon_table(g).rows;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  for (const auto& g : Catalog::builtin().groups()) {
    const auto& t = character_table(g);
    CHECK(t.size() == g->classes().count());
    int sum = 0;
    for (int d : t.degrees) sum += d * d;
    CHECK(sum == g->order());
  }
}

TEST_CASE("permutation characters and rational basis") {
  const auto s3 = grp("S3");
  const auto subs = subgroups_up_to_conjugacy(s3);
  const auto reg = permutation_character(s3, subs[0]);
  CHECK(decompose(reg) == RVec{1, 1, 2});
  const auto pi = permutation_character(s3, subs[1]);  // S3 / C2
  CHECK(decompose(pi) == RVec{1, 0, 1});
  CHECK(inner_product(pi, pi) == 2);
  CHECK(rational_basis(s3).orbits.size() == 3);
  CHECK(rational_basis(grp("C3")).orbits.size() == 2);
  CHECK(rational_basis(grp("C5")).orbits.size() == 2);
  CHECK(rational_basis(grp("C6")).orbits.size() == 4);
  CHECK(rational_basis(grp("Q8")).orbits.size() == 5);
  const auto z = irreducible(grp("C3"), 1);
  CHECK_THROWS_AS(decompose(VirtualCharacter{grp("C3"), {Cyclotomic::root_of_unity(3, 1), 0, 0}}), NotRational);
  CHECK(contragredient(z) == irreducible(grp("C3"), 2));
}

TEST_CASE("morphism spaces") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3");
  CHECK(MorphismSpace::get(c2, c2, c1, FieldMode::Rational)->dim() == 4);
  CHECK(MorphismSpace::get(c3, c1, c1, FieldMode::Rational)->dim() == 2);
  CHECK(MorphismSpace::get(c3, c1, c1, FieldMode::Split)->dim() == 3);
  CHECK(MorphismSpace::get(c2, c2, c3, FieldMode::Rational)->dim() == 8);
  CHECK(MorphismSpace::get(c2, c2, c3, FieldMode::Split)->dim() == 12);
  CHECK(MorphismSpace::get(c2, c2, c1, FieldMode::Split) == MorphismSpace::get(c2, c2, c1, FieldMode::Split));
  CHECK_THROWS_AS(MorphismSpace::get(grp("S3"), grp("S3"), c3, FieldMode::Split), OrderCapExceeded);
}

TEST_CASE("identity morphisms") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3"), s3 = grp("S3");
  const auto e1 = identity(c1, c3, FieldMode::Rational);
  for (const auto& v : e1.values()) CHECK(v == 1);
  const auto e2 = identity(c2, c1, FieldMode::Rational);
  CHECK(e2.values() == std::vector<Cyclotomic>{2, 0, 0, 2});

  for (auto mode : {FieldMode::Split, FieldMode::Rational}) {
    const auto e = identity(s3, c1, mode);
    CHECK(compose(e, e) == e);
    CHECK(op_swap(e) == e);
    CHECK(sharp(e) == e);
    CHECK(tau(e) == s3->classes().count());
    const auto shifted = identity(c3, c2, mode);
    CHECK(compose(shifted, shifted) == shifted);
    CHECK(tau(shifted) == 3);
    const auto sp = MorphismSpace::get(c2, s3, c1, mode);
    for (int b = 0; b < sp->dim(); ++b) {
      const auto a = RepMorphism::basis_element(sp, b);
      CHECK(compose(identity(c2, c1, mode), a) == a);
      CHECK(compose(a, e) == a);
      CHECK(compose(a, RepMorphism::zero(MorphismSpace::get(s3, s3, c1, mode))) ==
            RepMorphism::zero(sp));
    }
  }
}

TEST_CASE("composition of regular characters") {
  const auto c2 = grp("C2"), c3 = grp("C3"), s3 = grp("S3"), t = grp("C2");
  const auto b = regular(MorphismSpace::get(c2, s3, t, FieldMode::Rational));
  const auto a = regular(MorphismSpace::get(s3, c3, t, FieldMode::Rational));
  const auto r = regular(MorphismSpace::get(c2, c3, t, FieldMode::Rational));
  CHECK(compose(b, a) == r.scaled(6 * 2));
}

TEST_CASE("composition errors") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3");
  const auto a = identity(c2, c1, FieldMode::Rational);
  CHECK_THROWS_AS(compose(a, identity(c2, c3, FieldMode::Rational)), ShiftMismatch);
  CHECK_THROWS_AS(compose(a, identity(c2, c1, FieldMode::Split)), FieldMismatch);
  CHECK_THROWS_AS(compose(a, identity(c3, c1, FieldMode::Rational)), FactorMismatch);
  // a non-rational class function is outside the rational basis span
  const auto sp = MorphismSpace::get(c3, c1, c1, FieldMode::Rational);
  CHECK_THROWS_AS(RepMorphism(sp, irreducible(c3, 1).values).coefficients(), NotRational);
}

TEST_CASE("op, sharp and tau") {
  const auto c2 = grp("C2"), c3 = grp("C3"), c4 = grp("C4");
  const auto sp = MorphismSpace::get(c3, c4, c2, FieldMode::Split);
  for (int b = 0; b < sp->dim(); ++b) {
    const auto u = RepMorphism::basis_element(sp, b);
    CHECK(op_swap(op_swap(u)) == u);
    CHECK(op_swap(u).source() == u.target());
    CHECK(sharp(sharp(u)) == u);
    CHECK(sharp(u) == op_swap(contragredient(u)));
  }
  const auto ll = MorphismSpace::get(c3, c3, c2, FieldMode::Rational);
  CHECK(tau(constant_one(ll)) == 1);
  CHECK(tau(regular(ll)) == 3);
}

TEST_CASE("pairing") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3"), s3 = grp("S3");
  const auto one = MorphismSpace::get(c1, c1, c1, FieldMode::Rational);
  CHECK(pairing(constant_one(one), constant_one(one)) == 1);
  const auto sp = MorphismSpace::get(s3, c2, c3, FieldMode::Split);
  for (int i = 0; i < sp->dim(); ++i)
    for (int j = 0; j < sp->dim(); ++j) {
      const auto u = RepMorphism::basis_element(sp, i), v = RepMorphism::basis_element(sp, j);
      CHECK(pairing(u, v) == (i == j ? 1 : 0));
      CHECK(pairing(u, v) == pairing_direct(u, v));
    }
  const auto reg = regular(sp);
  CHECK(pairing(reg, reg) == 36);
  CHECK(pairing(constant_one(sp), constant_one(sp)) == 1);
}

TEST_CASE("gram matrices") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3");
  const auto g = gram_matrix(c3, c1, c1, FieldMode::Rational);
  CHECK(g.gram == Matrix::from_rows({{1, 0}, {0, 2}}, 2));
  CHECK(g.symmetric);
  CHECK(g.integer);
  CHECK(g.positive_definite);
  CHECK(g.minors == std::vector<Rational>{1, 2});
  const auto s = gram_matrix(c2, grp("S3"), c2, FieldMode::Split);
  CHECK(s.gram == Matrix::identity(s.gram.rows()));
  const auto r = gram_matrix(grp("C4"), c3, c2, FieldMode::Rational);
  CHECK(r.positive_definite);
  for (int i = 0; i < r.gram.rows(); ++i) CHECK(r.gram(i, i) >= 1);
}

TEST_CASE("pairing non-degeneracy") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3");
  auto n = check_pairing_nondegenerate(c1, c1, c1, FieldMode::Rational);
  CHECK(n.rank == 1);
  CHECK(n.dim == 1);
  CHECK(n.pass);
  n = check_pairing_nondegenerate(c2, c2, c3, FieldMode::Rational);
  CHECK(n.pass);
  CHECK(n.rank == n.dim);
  CHECK(n.dim == 8);
}

TEST_CASE("sharp reverses composition") {
  const auto c2 = grp("C2"), c3 = grp("C3"), t = grp("C2");
  for (auto mode : {FieldMode::Split, FieldMode::Rational}) {
    const auto su = MorphismSpace::get(c2, c3, t, mode), sv = MorphismSpace::get(c3, c2, t, mode);
    for (int i = 0; i < su->dim(); ++i)
      for (int j = 0; j < sv->dim(); ++j) {
        const auto u = RepMorphism::basis_element(su, i), v = RepMorphism::basis_element(sv, j);
        CHECK(sharp(compose(u, v)) == compose(sharp(v), sharp(u)));
      }
  }
}
