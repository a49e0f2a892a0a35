#include <doctest.h>

#include <algorithm>
#include <random>

#include "cmlocus/errors.hpp"
#include "cmlocus/locus.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cmlocus;
using namespace cmlocus::testing;

namespace {

struct TwoPlanes {
  RingPtr r = qq({"x", "y", "z", "w"});
  Ideal I = ideal(r, {"xz", "xw", "yz", "yw"});
  DeficiencyData D = deficiency_modules(PresentedModule::quotient(I));
  Ideal m = ideal(r, {"x", "y", "z", "w"});
};

PrimeIdeal prime(const RingPtr& r, std::initializer_list<const char*> gens, bool asserted = false) {
  return PrimeIdeal::make(ideal(r, gens), asserted);
}

std::vector<oracle::MonomialExample> suite() { return oracle::monomial_suite(); }

}  // namespace

TEST_CASE("PrimeIdeal") {
  auto r = qq({"x", "y", "z"});
  auto p = prime(r, {"x", "y"});
  CHECK(p.provenance() == PrimeIdeal::Provenance::MonomialVerified);
  CHECK(p.dimension() == 1);
  CHECK_THROWS_AS(prime(r, {"x^2"}), Error);
  CHECK_THROWS_AS(prime(r, {"x - 1"}, true), Error);
  CHECK_THROWS_AS(prime(r, {"1"}, true), Error);
  auto q = prime(r, {"x - y^2"}, true);
  CHECK(q.provenance() == PrimeIdeal::Provenance::UserAsserted);
  CHECK(q.dimension() == 2);
}

TEST_CASE("two planes: pseudo supports and loci") {
  TwoPlanes t;
  CHECK(radical_equal(psupp_ideal(t.D, 1), t.m));
  CHECK(radical_equal(psupp_ideal(t.D, 2), t.I));
  CHECK(psd(t.D, 0) == -1);
  CHECK(psd(t.D, 1) == 0);
  CHECK(psd(t.D, 2) == 2);
  CHECK_THROWS_AS(psd(t.D, 5), Error);
  CHECK_THROWS_AS(psd(t.D, -1), Error);

  auto at_xy = depth_dim_at_prime(t.D, prime(t.r, {"x", "y"}));
  CHECK(at_xy.depth == 0);
  CHECK(at_xy.dim == 0);
  CHECK(is_cm_at_prime(t.D, prime(t.r, {"x", "y"})));
  auto at_m = depth_dim_at_prime(t.D, prime(t.r, {"x", "y", "z", "w"}));
  CHECK(at_m.depth == 1);
  CHECK(at_m.dim == 2);
  CHECK_FALSE(is_cm_at_prime(t.D, prime(t.r, {"x", "y", "z", "w"})));
  try {
    depth_dim_at_prime(t.D, prime(t.r, {"x", "z"}));
    FAIL("expected NotInSupport");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInSupport);
  }

  CHECK(radical_equal(ncm_T_ideal(t.D), t.m));
  CHECK(radical_equal(ncm_a_ideal(t.D), t.m));
  CHECK(radical_equal(ncm_a_ideal(t.D), psupp_ideal(t.D, 1)));
  CHECK(radical_equal(shallow_locus_ideal(t.D, 1), t.m));
  CHECK(radical_equal(shallow_locus_ideal(t.D, 2), t.I));
  CHECK(shallow_locus_ideal(t.D, 0).is_unit());
  CHECK_THROWS_AS(shallow_locus_ideal(t.D, 3), Error);

  CHECK(serre_condition(t.D, 0));
  CHECK(serre_condition(t.D, 1));
  CHECK_FALSE(serre_condition(t.D, 2));

  CHECK(is_equidimensional(t.I) == Equidimensionality::True);
}

TEST_CASE("Cohen-Macaulay controls") {
  auto r = qq({"x", "y"});
  for (auto M : {PresentedModule::free(r, 1), PresentedModule::quotient(ideal(r, {"x"})),
                 PresentedModule::quotient(ideal(r, {"x", "y"}))}) {
    auto D = deficiency_modules(M);
    for (int i = 0; i < D.dim; ++i) {
      CHECK(psupp_ideal(D, i).is_unit());
      CHECK(psd(D, i) == -1);
    }
    CHECK(ncm_T_ideal(D).is_unit());
    CHECK(ncm_a_ideal(D).is_unit());
    for (int s = 0; s <= D.dim + 2; ++s) CHECK(serre_condition(D, s));
    CHECK(is_cm_at_prime(D, prime(r, {"x", "y"})));
  }
  auto D = deficiency_modules(PresentedModule::free(r, 1));
  auto at_m = depth_dim_at_prime(D, prime(r, {"x", "y"}));
  CHECK(at_m.depth == 2);
  CHECK(at_m.dim == 2);
  CHECK(is_equidimensional(PresentedModule::free(r, 1)) == Equidimensionality::True);
}

TEST_CASE("mixed module R/(x) + R/(x,y,z)") {
  auto r = qq({"x", "y", "z"});
  PresentedModule M(PolyMatrix(r, {polys(r, {"x", "0", "0", "0"}), polys(r, {"0", "x", "y", "z"})}));
  auto D = deficiency_modules(M);
  CHECK(D.depth == 0);
  CHECK(D.dim == 2);
  CHECK_FALSE(ncm_T_ideal(D).is_unit());
  auto at_m = depth_dim_at_prime(D, prime(r, {"x", "y", "z"}));
  CHECK(at_m.depth == 0);
  CHECK(at_m.dim == 2);
  CHECK(is_cm_at_prime(D, prime(r, {"x"})));
}

TEST_CASE("equidimensionality verdicts") {
  auto s = qq({"x", "y", "z", "w"});
  CHECK(is_equidimensional(ideal(s, {"xz", "xw"})) == Equidimensionality::False);
  CHECK(is_equidimensional(ideal(s, {"x*y - z*w"})) == Equidimensionality::Unknown);
  CHECK(is_equidimensional(PresentedModule::quotient(ideal(s, {"x^2", "x*y"}))) == Equidimensionality::True);
}

TEST_CASE("monomial_primes_oracle examples") {
  auto s = qq({"x", "y", "z", "w"});
  auto planes = monomial_primes_oracle(ideal(s, {"xz", "xw", "yz", "yw"}));
  std::vector<VariableSet> expected{{0, 1}, {2, 3}};
  auto sorted = [](std::vector<VariableSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(planes.minimal) == expected);
  CHECK(sorted(planes.associated) == expected);

  auto r = qq({"x", "y"});
  auto emb = monomial_primes_oracle(ideal(r, {"x^2", "x*y"}));
  CHECK(sorted(emb.minimal) == std::vector<VariableSet>{{0}});
  CHECK(sorted(emb.associated) == std::vector<VariableSet>{{0}, {0, 1}});

  auto line = monomial_primes_oracle(ideal(r, {"x"}));
  CHECK(line.minimal == std::vector<VariableSet>{{0}});
  CHECK(line.associated == std::vector<VariableSet>{{0}});

  CHECK_THROWS_AS(monomial_primes_oracle(ideal(r, {"x + y"})), Error);
}

TEST_CASE("locus_report") {
  TwoPlanes t;
  std::vector<std::pair<std::string, PrimeIdeal>> primes{{"P", prime(t.r, {"x", "y"})},
                                                         {"Q", prime(t.r, {"x", "z"})}};
  auto rep = locus_report(t.D, primes);
  CHECK(rep.depth == 1);
  CHECK(rep.dim == 2);
  CHECK(rep.psd == std::vector<int>{-1, 0, 2, -1, -1});
  CHECK(rep.serre == std::map<int, bool>{{1, true}, {2, false}});
  CHECK(rep.ncm_matches_a);
  REQUIRE(rep.primes.size() == 2);
  CHECK(rep.primes[0].in_support);
  CHECK(rep.primes[0].cm);
  CHECK_FALSE(rep.primes[1].in_support);
  CHECK(rep.equidimensional == Equidimensionality::True);
}

TEST_CASE("locus invariants on the monomial suite") {
  std::mt19937 rng(2024);
  for (const auto& ex : suite()) {
    CAPTURE(ex.label);
    auto r = qq(ex.vars);
    Ideal I(r, polys_of(r, ex.gens));
    const int n = static_cast<int>(ex.vars.size());
    auto D = deficiency_modules(PresentedModule::quotient(I), {.verify = true});
    const int d = D.dim;
    auto oracle_primes = monomial_primes_oracle(I);
    bool equidim = is_equidimensional(I) == Equidimensionality::True;

    for (int i = 0; i <= n; ++i) CHECK(psd(D, i) <= i);
    if (equidim) {
      CHECK(psd(D, d) == d);
      CHECK(radical_equal(psupp_ideal(D, d), I));
      CHECK(radical_equal(ncm_T_ideal(D), ncm_a_ideal(D)));
    }
    CHECK(radical_contains(ncm_T_ideal(D), ncm_a_ideal(D)));

    // Serre conditions: monotone, and (S_1) means no embedded primes.
    for (int rr = 1; rr <= d + 1; ++rr) {
      if (serre_condition(D, rr)) CHECK(serre_condition(D, rr - 1));
    }
    if (equidim) {
      CHECK(serre_condition(D, 1) == (oracle_primes.associated.size() == oracle_primes.minimal.size()));
    }
    auto T = ncm_T_ideal(D);
    if (equidim && !T.is_unit()) {
      auto tprimes = monomial_primes_oracle(Ideal(r, *T.basis()));
      for (int rr = 1; rr <= d; ++rr) {
        if (!serre_condition(D, rr)) continue;
        for (const auto& p : tprimes.minimal) CHECK(n - static_cast<int>(p.size()) <= d - rr - 1);
      }
    }

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VariableSet vars;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) vars.push_back(v);
      }
      auto p = PrimeIdeal::make(variable_ideal(r, vars));
      const int dim_p = n - static_cast<int>(vars.size());
      auto local = oracle::localize_monomial(I, vars, rng);
      CAPTURE(vars);

      // Depth and dimension at p.
      if (local) {
        auto dd = depth_dim_at_prime(D, p);
        CHECK(dd.depth == local->depth);
        CHECK(dd.dim == local->dim);
        CHECK(is_cm_at_prime(D, p) == (local->depth == local->dim));
      } else {
        CHECK_THROWS_AS(depth_dim_at_prime(D, p), Error);
      }
      // Level sets.
      for (int s = 0; s <= d; ++s) {
        bool in_v = ideal_contains(p.ideal(), shallow_locus_ideal(D, s));
        bool shallow = local && local->depth + dim_p <= s;
        CHECK(in_v == shallow);
      }
      // Outside every lower pseudo support the module is CM of dimension d - dim R/p.
      bool outside = true;
      for (int i = 0; i < d; ++i) outside = outside && !ideal_contains(p.ideal(), D.a[i]);
      if (outside && local && equidim) {
        CHECK(local->depth == d - dim_p);
        CHECK(local->dim == d - dim_p);
      }
    }

    // i-dimensional primes over a_i are the i-dimensional associated primes.
    for (int i = 0; i <= n; ++i) {
      std::vector<VariableSet> over, ass;
      for (const auto& p : oracle_primes.associated) {
        if (n - static_cast<int>(p.size()) == i) ass.push_back(p);
      }
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (n - std::popcount(mask) != i) continue;
        VariableSet vars;
        for (int v = 0; v < n; ++v) {
          if (mask >> v & 1u) vars.push_back(v);
        }
        if (ideal_contains(variable_ideal(r, vars), D.a[i])) over.push_back(vars);
      }
      std::sort(over.begin(), over.end());
      std::sort(ass.begin(), ass.end());
      CHECK(over == ass);
    }
  }
}
