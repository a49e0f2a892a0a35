#include <doctest.h>

#include <random>

#include "cmlocus/errors.hpp"
#include "cmlocus/modules.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cmlocus;
using namespace cmlocus::testing;

namespace {

FreeElement vec(const RingPtr& r, std::initializer_list<const char*> entries) {
  return FreeElement::from_entries(r, polys(r, entries));
}

PolyMatrix mat(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Polynomial>> out;
  for (auto row : rows) out.push_back(polys(r, row));
  return PolyMatrix(r, out);
}

void check_exact(const PolyMatrix& A, const PolyMatrix& K) {
  REQUIRE(K.rows() == A.cols());
  CHECK((A * K).is_zero());
  auto oracle = oracle::syzygies(A);
  auto cols = K.columns();
  CHECK(oracle::spans_contain(cols, oracle));
}

PolyMatrix random_matrix(const RingPtr& r, std::mt19937& rng, std::size_t rows, std::size_t cols, bool homogeneous) {
  PolyMatrix A(r, rows, cols);
  std::uniform_int_distribution<int> zero(0, 3), deg(1, 2);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (zero(rng) == 0) continue;
      int d = deg(rng);
      A.set(i, j, random_polynomial(r, rng, homogeneous ? 1 : d, 2, homogeneous ? 1 : 0));
    }
  }
  return A;
}

}  // namespace

TEST_CASE("module_buchberger examples") {
  auto r = qq({"x", "y"});
  std::vector<FreeElement> g1{vec(r, {"x", "0"}), vec(r, {"0", "y"})};
  auto b1 = module_buchberger(g1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == g1[0]);
  CHECK(b1[1] == g1[1]);

  std::vector<FreeElement> g2{vec(r, {"x", "y"}), vec(r, {"x", "y"})};
  CHECK(module_buchberger(g2).size() == 1);

  // Column space of the Koszul map R -> R^2, 1 |-> (y, -x).
  std::vector<FreeElement> g3{vec(r, {"y", "-x"})};
  auto b3 = module_buchberger(g3);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].to_string() == "(y, -x)");

  std::vector<FreeElement> bad{vec(r, {"x"}), vec(r, {"x", "y"})};
  CHECK_THROWS_AS(module_buchberger(bad), Error);
}

TEST_CASE("kernel examples") {
  auto r = qq({"x", "y"});
  auto k1 = kernel(mat(r, {{"x", "y"}}));
  REQUIRE(k1.cols() == 1);
  CHECK((k1.column(0) == vec(r, {"y", "-x"}) || k1.column(0) == vec(r, {"-y", "x"})));

  CHECK(kernel(PolyMatrix::identity(r, 3)).cols() == 0);

  auto A = mat(r, {{"x^2", "x*y"}});
  auto k3 = kernel(A);
  REQUIRE(k3.cols() == 1);
  CHECK((k3.column(0) == vec(r, {"y", "-x"}) || k3.column(0) == vec(r, {"-y", "x"})));
  check_exact(A, k3);

  auto z = kernel(mat(r, {{"0", "x"}}));
  REQUIRE(z.cols() == 1);
  CHECK(z.column(0) == vec(r, {"1", "0"}));
}

TEST_CASE("free_resolution examples") {
  auto r = qq({"x", "y"});
  auto koszul = free_resolution(PresentedModule::quotient(ideal(r, {"x", "y"})));
  REQUIRE(koszul.length() == 2);
  CHECK(koszul.maps[0].to_string() == "[[x, y]]");
  CHECK(koszul.maps[1].cols() == 1);
  CHECK((koszul.maps[0] * koszul.maps[1]).is_zero());

  CHECK(free_resolution(PresentedModule::free(r, 1)).length() == 0);
  CHECK(free_resolution(PresentedModule::quotient(Ideal(r, {}))).length() == 0);

  auto s = qq({"x", "y", "z", "w"});
  auto res = free_resolution(PresentedModule::quotient(ideal(s, {"xz", "xw", "yz", "yw"})));
  REQUIRE(res.length() == 3);
  for (std::size_t i = 0; i + 1 < res.length(); ++i) check_exact(res.maps[i], res.maps[i + 1]);
  CHECK(oracle::syzygies(res.maps[2]).empty());
  // Minimal Betti numbers of two planes meeting in a point: 1, 4, 4, 1.
  CHECK(res.rank(1) == 4);
  CHECK(res.rank(2) == 4);
  CHECK(res.rank(3) == 1);
}

TEST_CASE("is_zero_module examples") {
  auto r = qq({"x", "y"});
  CHECK(is_zero_module(PresentedModule(PolyMatrix::identity(r, 2))));
  CHECK(is_zero_module(PresentedModule::zero(r)));
  CHECK_FALSE(is_zero_module(PresentedModule(mat(r, {{"x"}}))));
  CHECK(is_zero_module(PresentedModule(mat(r, {{"1", "x"}, {"0", "1"}}))));
  CHECK_FALSE(is_zero_module(PresentedModule(mat(r, {{"x", "y"}, {"0", "x"}}))));
}

TEST_CASE("annihilator examples") {
  auto r = qq({"x", "y"});
  CHECK(ideal_equal(annihilator(PresentedModule(mat(r, {{"x"}}))), ideal(r, {"x"})));
  CHECK(annihilator(PresentedModule::zero(r)).is_unit());
  CHECK(annihilator(PresentedModule(PolyMatrix::identity(r, 2))).is_unit());
  CHECK(ideal_equal(annihilator(PresentedModule(mat(r, {{"x", "0"}, {"0", "y"}}))), ideal(r, {"x*y"})));
  CHECK(annihilator(PresentedModule::free(r, 2)).is_zero());
  // coker [[x, y], [0, x]]: e_2 is killed by x^2 only modulo the first row.
  auto ann = annihilator(PresentedModule(mat(r, {{"x", "y"}, {"0", "x"}})));
  CHECK(ideal_equal(ann, ideal(r, {"x^2"})));
}

TEST_CASE("subquotient_presentation examples") {
  auto r = qq({"x", "y"});
  auto m1 = subquotient_presentation(mat(r, {{"1"}}), mat(r, {{"x"}}));
  CHECK(m1.num_generators() == 1);
  CHECK(ideal_equal(annihilator(m1), ideal(r, {"x"})));

  auto m2 = subquotient_presentation(mat(r, {{"y"}, {"-x"}}), mat(r, {{"y"}, {"-x"}}));
  CHECK(is_zero_module(m2));

  auto m3 = subquotient_presentation(mat(r, {{"y"}, {"-x"}}), mat(r, {{"y^2"}, {"-x*y"}}));
  CHECK(m3.num_generators() == 1);
  CHECK(m3.presentation().to_string() == "[[y]]");

  CHECK_THROWS_AS(subquotient_presentation(mat(r, {{"x"}}), mat(r, {{"y"}})), Error);
  try {
    subquotient_presentation(mat(r, {{"x"}}), mat(r, {{"y"}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ImageNotContained);
  }
}

TEST_CASE("lift and minimize_presentation") {
  auto r = qq({"x", "y"});
  std::vector<FreeElement> gens{vec(r, {"x", "0"}), vec(r, {"y", "1"})};
  auto c = lift(vec(r, {"x*y", "x"}), gens);
  REQUIRE(c.has_value());
  auto back = PolyMatrix::from_columns(r, 2, gens) * PolyMatrix::from_columns(r, 2, std::vector<FreeElement>{*c});
  CHECK(back.column(0) == vec(r, {"x*y", "x"}));
  CHECK_FALSE(lift(vec(r, {"1", "0"}), gens).has_value());

  // coker [[1, 0], [x, y]] is R/(y).
  auto m = minimize_presentation(PresentedModule(mat(r, {{"1", "0"}, {"x", "y"}})));
  CHECK(m.presentation().to_string() == "[[y]]");
}

TEST_CASE("randomized resolutions: exactness and length bound") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    auto r = qq({"x", "y", "z"});
    bool homogeneous = trial % 2 == 0;
    std::size_t rows = 1 + trial % 2, cols = 1 + (trial / 2) % 3;
    auto A = random_matrix(r, rng, rows, cols, homogeneous);
    PresentedModule M(A);
    auto res = free_resolution(M, r->num_variables() + 1);
    CAPTURE(A.to_string());
    CHECK(res.length() <= r->num_variables());
    for (std::size_t i = 0; i + 1 < res.length(); ++i) check_exact(res.maps[i], res.maps[i + 1]);
    if (res.length() > 0) CHECK(oracle::syzygies(res.maps.back()).empty());

    auto ann = annihilator(M);
    for (const auto& a : ann.generators()) {
      for (std::size_t j = 0; j < rows; ++j) {
        auto v = FreeElement::unit(r, rows, j).times(a);
        CHECK(lift(v, A.columns()).has_value());
      }
    }
    CHECK(is_zero_module(M) == ann.is_unit());
  }
}

TEST_CASE("matrix helpers") {
  auto r = qq({"x", "y"});
  auto A = mat(r, {{"x", "y"}, {"0", "x"}});
  CHECK(A.to_string() == "[[x, y], [0, x]]");
  CHECK(A.transpose().to_string() == "[[x, 0], [y, x]]");
  CHECK(PolyMatrix(r, 2, 0).to_string() == "[](2x0)");
  CHECK((PolyMatrix::identity(r, 2) * A).to_string() == A.to_string());
  CHECK_THROWS_AS(A * PolyMatrix(r, 3, 1), Error);
}
