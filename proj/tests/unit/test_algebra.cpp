#include <catch_amalgamated.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <numeric>

#include "bisetlab/algebra.hpp"
#include "bisetlab/errors.hpp"
#include "bisetlab/report.hpp"

using namespace bisetlab;
using nlohmann::json;

namespace {
GroupPtr grp(const std::string& n) { return Catalog::builtin().get(n); }

// Element-level model of Q (x) R_Q on a product of cyclic groups. Functions
// live on all elements (the group is abelian, so classes are elements) and
// Q (x) R_Q is spanned by the permutation characters of X / <x>.
struct Abelian {
  std::vector<int> orders;
  int size() const { return std::accumulate(orders.begin(), orders.end(), 1, std::multiplies<>()); }
  std::vector<int> coords(int x) const {
    std::vector<int> c(orders.size());
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      c[i] = x % orders[i];
      x /= orders[i];
    }
    return c;
  }
  int index(const std::vector<int>& c) const {
    int x = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + c[i];
    return x;
  }
  std::vector<RVec> spanning_set() const {
    std::vector<RVec> out;
    const int n = size();
    for (int x = 0; x < n; ++x) {
      std::vector<bool> in(n, false);
      std::vector<int> c(orders.size(), 0), g = coords(x);
      int len = 0;
      do {
        in[index(c)] = true;
        ++len;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + g[i]) % orders[i];
      } while (index(c) != 0);
      RVec v(n);
      for (int y = 0; y < n; ++y) v[y] = in[y] ? Rational(n / len) : Rational(0);
      out.push_back(v);
    }
    return out;
  }
};

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b, const std::vector<int>& c) {
  a.insert(a.end(), b.begin(), b.end());
  a.insert(a.end(), c.begin(), c.end());
  return a;
}

// dim of Q R_Q(C_n x C_n x T) minus the span of a o b through the abelian
// groups `smaller`.
int essential_oracle(int n, const std::vector<int>& t, const std::vector<std::vector<int>>& smaller) {
  const Abelian whole{concat({n}, {n}, t)};
  SpanBuilder all(whole.size());
  for (auto& v : whole.spanning_set()) all.add(v);
  const Abelian tt{t};
  SpanBuilder ideal(whole.size());
  for (const auto& k : smaller) {
    const Abelian kk{k}, a{concat({n}, k, t)}, b{concat(k, {n}, t)};
    const int nk = kk.size();
    for (const auto& va : a.spanning_set())
      for (const auto& vb : b.spanning_set()) {
        RVec out(whole.size());
        for (int g = 0; g < n; ++g)
          for (int h = 0; h < n; ++h)
            for (int s = 0; s < tt.size(); ++s) {
              const auto sc = tt.coords(s);
              Rational acc = 0;
              for (int x = 0; x < nk; ++x) {
                const auto kc = kk.coords(x);
                acc += va[a.index(concat({g}, kc, sc))] * vb[b.index(concat(kc, {h}, sc))];
              }
              out[whole.index(concat({g}, {h}, sc))] = acc / nk;
            }
        ideal.add(out);
      }
  }
  return all.dim() - ideal.dim();
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}
}  // namespace

TEST_CASE("endomorphism algebras") {
  const auto one = build_endo_algebra(grp("C1"), grp("C1"), FieldMode::Rational);
  CHECK(one.dim() == 1);
  CHECK(one.unit == RVec{1});
  CHECK_FALSE(one.check_axioms());
  const auto c2 = build_endo_algebra(grp("C2"), grp("C1"), FieldMode::Rational);
  CHECK(c2.dim() == 4);
  CHECK_FALSE(c2.check_axioms());
  const auto c2c3 = build_endo_algebra(grp("C2"), grp("C3"), FieldMode::Split);
  CHECK(c2c3.dim() == 12);
  CHECK_FALSE(c2c3.check_axioms());
  CHECK(algebra_product(one, c2).dim() == 5);
  CHECK_FALSE(algebra_product(one, c2).check_axioms());
}

TEST_CASE("radical via trace form") {
  CHECK(radical_via_trace_form(fixture_algebra("Q")).dimension == 0);
  const auto nil = radical_via_trace_form(fixture_algebra("nilpotent2"));
  CHECK(nil.dimension == 1);
  CHECK(nil.basis == std::vector<RVec>{{0, 1}});
  CHECK(nil.consistent);
  CHECK(radical_via_trace_form(build_endo_algebra(grp("C2"), grp("C3"), FieldMode::Rational)).dimension == 0);
  CHECK(radical_via_trace_form(build_endo_algebra(grp("S3"), grp("C1"), FieldMode::Split)).dimension == 0);
  CHECK(radical_via_trace_form(fixture_algebra("endo-injected")).dimension == 1);

  // upper triangular 2x2 matrices: radical is the strictly upper part
  FiniteDimAlgebra t2{"T2", {"e11", "e12", "e22"}, {}, {1, 0, 1}};
  const RVec e11{1, 0, 0}, e12{0, 1, 0}, e22{0, 0, 1}, z{0, 0, 0};
  t2.structure = {{e11, e12, z}, {z, z, e12}, {z, z, e22}};
  REQUIRE_FALSE(t2.check_axioms());
  CHECK(radical_via_trace_form(t2).dimension == 1);
}

TEST_CASE("algebra axioms and json") {
  FiniteDimAlgebra bad{"bad", {"a", "b"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {0, 1}};
  CHECK(bad.check_axioms());
  CHECK_THROWS_AS(algebra_from_json(algebra_to_json(bad)), InvalidInput);

  const auto a = build_endo_algebra(grp("C3"), grp("C1"), FieldMode::Rational);
  const auto back = algebra_from_json(algebra_to_json(a));
  CHECK(back.labels == a.labels);
  CHECK(back.structure == a.structure);
  CHECK(back.unit == a.unit);
  CHECK(algebra_from_json(json::parse(read(FIXTURE_DIR "/nilpotent2.json"))).dim() == 2);
  CHECK_THROWS_AS(fixture_algebra("nope"), InvalidInput);
}

TEST_CASE("semisimplicity certificates") {
  const auto c1 = grp("C1");
  auto c = certify_semisimple(c1, c1, FieldMode::Rational, {c1});
  CHECK(c.pass);
  CHECK(c.radical_dim == 0);
  c = certify_semisimple(grp("C2"), grp("C3"), FieldMode::Rational,
                         {c1, grp("C2"), grp("C3"), grp("C4"), grp("S3")});
  CHECK(c.pass);
  CHECK(c.probes.size() == 5);
  for (const auto& p : c.probes) {
    CHECK(p.gram.positive_definite);
    CHECK(p.nondegenerate.pass);
  }
  const auto injected = fixture_algebra("endo-injected");
  c = certify_semisimple(grp("C2"), grp("C3"), FieldMode::Rational, {c1}, kDefaultOrderCap, &injected);
  CHECK_FALSE(c.pass);
  CHECK(c.radical_dim == 1);
}

TEST_CASE("essential algebras against an element-level oracle") {
  const Catalog& cat = Catalog::builtin();
  const std::vector<std::vector<int>> below{{1}, {2}, {3}, {4}, {2, 2}, {5}};
  const int expected[] = {0, 1, 0, 1, 1, 3, 0};
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<int>> smaller;
    for (const auto& k : below)
      if (std::accumulate(k.begin(), k.end(), 1, std::multiplies<>()) < n) smaller.push_back(k);
    const int oracle = essential_oracle(n, {1}, smaller);
    CHECK(oracle == expected[n]);
    const auto r = essential_algebra(grp("C" + std::to_string(n)), grp("C1"), FieldMode::Rational, cat);
    CHECK(r.quotient_dim == oracle);
    CHECK(r.algebra_dim - r.ideal_dim == r.quotient_dim);
  }
  // a shift by C2 doubles every cyclic answer
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> smaller(below.begin(), below.begin() + (n - 1));
    const int oracle = essential_oracle(n, {2}, smaller);
    CHECK(oracle == 2 * expected[n]);
    CHECK(essential_algebra(grp("C" + std::to_string(n)), grp("C2"), FieldMode::Rational, cat).quotient_dim ==
          oracle);
  }
  const auto whole = essential_algebra(grp("C1"), grp("C3"), FieldMode::Rational, cat);
  CHECK(whole.quotient_dim == whole.algebra_dim);
  CHECK_THROWS_AS(essential_algebra(grp("C2"), grp("C1"), FieldMode::Rational, Catalog()), IncompleteCatalog);
}

TEST_CASE("simple quotient evaluations") {
  const auto c1 = grp("C1"), c2 = grp("C2");
  const auto endo1 = MorphismSpace::get(c1, c1, c1, FieldMode::Rational);
  const ModuleData q = module_from_json(json{{"dim", 1}, {"action", {{endo1->basis().label(0), {{1}}}}}}, *endo1);
  auto e = eval_simple_quotient(c1, q, c1, c1, FieldMode::Rational);
  CHECK(e.dim_l == 1);
  CHECK(e.dim_j == 0);
  CHECK(e.dim_s == 1);

  // C = 1, V = Q, G = C2: L = A(C2 x 1) and J is the kernel of the matrix
  // (b o a) = (1/2) sum_g b(g) a(g) over the permutation characters
  // C2/1 = (2, 0) and C2/C2 = (1, 1).
  const Matrix pairing = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  const int brute_j = 2 - rank(pairing);
  e = eval_simple_quotient(c1, q, c2, c1, FieldMode::Rational);
  CHECK(e.dim_tensor == 2);
  CHECK(e.dim_l == 2);
  CHECK(e.dim_j == brute_j);
  CHECK(e.dim_s == 2 - brute_j);

  const auto reg = regular_module(c2, c1, FieldMode::Rational);
  e = eval_simple_quotient(c2, reg, grp("C3"), c1, FieldMode::Rational);
  CHECK(e.dim_l == MorphismSpace::get(grp("C3"), c2, c1, FieldMode::Rational)->dim());
  CHECK(e.dim_j <= e.dim_l);
  CHECK(e.dim_s == e.dim_l - e.dim_j);

  const auto endo2 = MorphismSpace::get(c2, c2, c1, FieldMode::Rational);
  const auto simple = module_from_json(json::parse(read(FIXTURE_DIR "/c2_simple_module.json")), *endo2);
  // every simple module of A(C2 x C2) comes from the trivial group
  e = eval_simple_quotient(c2, simple, c1, c1, FieldMode::Rational);
  CHECK(e.dim_s == 1);
  e = eval_simple_quotient(c2, simple, c2, c1, FieldMode::Rational);
  CHECK(e.dim_s == 2);

  ModuleData broken = q;
  broken.action[0] = Matrix::from_rows({{2}}, 1);
  CHECK_THROWS_AS(eval_simple_quotient(c1, broken, c2, c1, FieldMode::Rational), NotAModule);
  CHECK_THROWS_AS(module_from_json(json{{"dim", 1}, {"action", json::object()}}, *endo1), InvalidInput);
}

TEST_CASE("Aut(C) multiplicities") {
  const auto c1 = grp("C1"), c2 = grp("C2"), c3 = grp("C3");
  auto r = aut_multiplicities(c1, c2, c1);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].isotypic_dim == r.module_dim);
  r = aut_multiplicities(c1, c3, c2);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].isotypic_dim == r.module_dim);
  r = aut_multiplicities(c3, c2, c3);
  CHECK(r.units == std::vector<long long>{1, 2});
  CHECK(r.relations_hold);
  CHECK(r.projectors_ok);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0].isotypic_dim + r.components[1].isotypic_dim == r.module_dim);
  CHECK(r.module_dim == 10);
  CHECK_THROWS_AS(aut_multiplicities(c1, c3, c3), CoprimalityViolated);
  CHECK_THROWS_AS(aut_multiplicities(c1, c1, grp("S3")), NotCyclic);
}

TEST_CASE("reports render") {
  const RunContext ctx{"gram", Catalog::builtin().hash_hex(), 64, {}};
  const auto c1 = grp("C1"), c3 = grp("C3");
  const json g = gram_report(ctx, c3, c1, c1, FieldMode::Rational, gram_matrix(c3, c1, c1, FieldMode::Rational));
  CHECK(g.at("gram").at("matrix") == json::parse("[[1,0],[0,2]]"));
  CHECK(g.at("pd") == true);
  CHECK(render_report(g).find("positive definite: yes") != std::string::npos);
  CHECK(rational_to_json(Rational(3)) == 3);
  CHECK(rational_to_json(Rational(-1, 2)) == "-1/2");
  const auto cert = certify_semisimple(c1, c1, FieldMode::Rational, {});
  const RunContext cctx{"certify", ctx.catalog_hash, 64, {}};
  CHECK(render_report(certificate_report(cctx, cert)).find("no probes") != std::string::npos);
  CHECK_THROWS_AS(render_report(json{{"x", 1}}), InvalidInput);
  const auto o = linearization_oracle(grp("C2"), grp("S3"), grp("C2"), grp("C2"));
  CHECK(o.pass());
  CHECK(o.pairs > 0);
}
