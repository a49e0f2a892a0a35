#include "cmlocus/locus.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cmlocus/errors.hpp"

namespace cmlocus {

namespace {

void check_index(int i, int upper) {
  if (i < 0 || i > upper) {
    throw Error(ErrorCode::InvalidArgument,
                "index " + std::to_string(i) + " out of range 0.." + std::to_string(upper));
  }
}

// Minimal monomial generators of a monomial ideal.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> monomial_generators(const Ideal& I) {
  std::vector<Monomial> ms;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw Error(ErrorCode::InvalidArgument, "not a monomial ideal: " + g.to_string());
    ms.push_back(g.leading_monomial());
  }
  return minimal_monomials(std::move(ms));
}

}  // namespace

PrimeIdeal PrimeIdeal::make(const Ideal& ideal, bool asserted) {
  if (ideal.is_unit()) throw Error(ErrorCode::InvalidArgument, "a prime must be a proper ideal");
  if (!contained_in_origin(ideal)) {
    throw Error(ErrorCode::InvalidArgument, "prime " + ideal.to_string() + " is not contained in the origin ideal");
  }
  auto basis = ideal.basis();
  bool monomial = true;
  for (const auto& g : *basis) {
    const auto& m = g.leading_monomial();
    if (!g.is_monomial() || m.degree() != 1) {
      monomial = false;
      break;
    }
  }
  int dim = krull_dim(ideal);
  if (monomial) return PrimeIdeal(ideal.based(), Provenance::MonomialVerified, dim);
  if (!asserted) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot verify that " + ideal.to_string() + " is prime; assert it explicitly");
  }
  return PrimeIdeal(ideal.based(), Provenance::UserAsserted, dim);
}

const Ideal& psupp_ideal(const DeficiencyData& D, int i) {
  check_index(i, D.ambient_dim);
  return D.a[i];
}

int psd(const DeficiencyData& D, int i) {
  const auto& a = psupp_ideal(D, i);
  return a.is_unit() ? -1 : krull_dim(a);
}

LocalDepthDim depth_dim_at_prime(const DeficiencyData& D, const PrimeIdeal& p) {
  int k = -1, t = -1;
  for (int i = 0; i <= D.dim; ++i) {
    if (D.a[i].is_unit() || !ideal_contains(p.ideal(), D.a[i])) continue;
    if (k < 0) k = i;
    t = i;
  }
  if (k < 0) throw Error(ErrorCode::NotInSupport, p.ideal().to_string() + " is not in the support of the module");
  return {k - p.dimension(), t - p.dimension()};
}

bool is_cm_at_prime(const DeficiencyData& D, const PrimeIdeal& p) {
  auto r = depth_dim_at_prime(D, p);
  return r.depth == r.dim;
}

Ideal ncm_T_ideal(const DeficiencyData& D) {
  std::optional<Ideal> acc;
  for (int i = 0; i <= D.dim; ++i) {
    if (D.a[i].is_unit()) continue;
    for (int j = i + 1; j <= D.dim; ++j) {
      if (D.a[j].is_unit()) continue;
      auto sum = ideal_sum(D.a[i], D.a[j]);
      if (sum.is_unit()) continue;
      acc = acc ? ideal_intersection(*acc, sum) : sum;
    }
  }
  return acc ? *acc : Ideal::unit(D.ring);
}

Ideal ncm_a_ideal(const DeficiencyData& D) {
  Ideal acc = Ideal::unit(D.ring);
  for (int i = 0; i < D.dim; ++i) {
    if (!D.a[i].is_unit()) acc = acc.is_unit() ? D.a[i] : ideal_product(acc, D.a[i]);
  }
  return acc.based();
}

Ideal shallow_locus_ideal(const DeficiencyData& D, int s) {
  check_index(s, D.dim);
  Ideal acc = Ideal::unit(D.ring);
  for (int i = 0; i <= s; ++i) {
    if (!D.a[i].is_unit()) acc = acc.is_unit() ? D.a[i] : ideal_product(acc, D.a[i]);
  }
  return acc.based();
}

bool serre_condition(const DeficiencyData& D, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "Serre index must be nonnegative");
  // An empty pseudo support has dimension -infinity and never fails.
  for (int i = 0; i < D.dim; ++i) {
    if (!D.a[i].is_unit() && psd(D, i) > i - r) return false;
  }
  return true;
}

Ideal variable_ideal(const RingPtr& ring, const VariableSet& vars) {
  std::vector<Polynomial> gens;
  for (auto v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

MonomialPrimes monomial_primes_oracle(const Ideal& I) {
  const std::size_t n = I.ring()->num_variables();
  auto gens = monomial_generators(I);
  MonomialPrimes out;
  if (gens.empty()) {
    out.minimal.push_back({});
    out.associated.push_back({});
    return out;
  }
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); })) return out;

  // Vertex covers of the supports, by increasing size so minimality is a
  // subset test against the covers already found.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << n); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> covers;
  for (auto s : masks) {
    bool covers_all = std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t v = 0; v < n; ++v) {
        if (g[v] && (s >> v & 1u)) return true;
      }
      return false;
    });
    if (!covers_all) continue;
    if (std::any_of(covers.begin(), covers.end(), [&](std::uint32_t c) { return (c & s) == c; })) continue;
    covers.push_back(s);
  }

  auto to_set = [n](std::uint32_t s) {
    VariableSet vs;
    for (std::size_t v = 0; v < n; ++v) {
      if (s >> v & 1u) vs.push_back(v);
    }
    return vs;
  };
  for (auto c : covers) out.minimal.push_back(to_set(c));

  // Associated primes: (I : f) over the exponent box below the generators'
  // maxima; a witness f can always be chosen there.
  std::vector<int> top(n, 0);
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < n; ++v) top[v] = std::max<int>(top[v], g[v]);
  }
  std::set<std::uint32_t> found;
  Monomial f(n);
  for (;;) {
    bool in_ideal = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(f); });
    if (!in_ideal) {
      std::vector<Monomial> q;
      for (const auto& g : gens) q.push_back(g / gcd(g, f));
      auto qmin = minimal_monomials(std::move(q));
      bool prime = true;
      std::uint32_t mask = 0;
      for (const auto& m : qmin) {
        if (m.degree() != 1) {
          prime = false;
          break;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (m[v]) mask |= 1u << v;
        }
      }
      if (prime) found.insert(mask);
    }
    std::size_t v = 0;
    while (v < n && f[v] == top[v]) {
      f.set(v, 0);
      ++v;
    }
    if (v == n) break;
    f.set(v, f[v] + 1);
  }
  std::vector<std::uint32_t> ass(found.begin(), found.end());
  std::stable_sort(ass.begin(), ass.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (auto s : ass) out.associated.push_back(to_set(s));
  return out;
}

Equidimensionality is_equidimensional(const Ideal& annihilator) {
  if (annihilator.is_unit()) return Equidimensionality::True;
  auto basis = annihilator.basis();
  Ideal I(annihilator.ring(), *basis);
  if (!is_monomial_ideal(I)) return Equidimensionality::Unknown;
  auto primes = monomial_primes_oracle(I);
  for (const auto& p : primes.minimal) {
    if (p.size() != primes.minimal.front().size()) return Equidimensionality::False;
  }
  return Equidimensionality::True;
}

Equidimensionality is_equidimensional(const PresentedModule& M) { return is_equidimensional(annihilator(M)); }

LocusReport locus_report(const DeficiencyData& D, const std::vector<std::pair<std::string, PrimeIdeal>>& primes,
                         bool asserted_equidimensional) {
  LocusReport r{D.depth, D.dim, D.a, {}, ncm_T_ideal(D), ncm_a_ideal(D), false, {}, {}, {}, asserted_equidimensional};
  for (int i = 0; i <= D.ambient_dim; ++i) r.psd.push_back(psd(D, i));
  r.ncm_matches_a = radical_equal(r.ncm_T, r.ncm_a);
  for (int s = 1; s <= D.dim; ++s) r.serre[s] = serre_condition(D, s);
  for (const auto& [name, p] : primes) {
    PrimeReport pr{name};
    try {
      auto dd = depth_dim_at_prime(D, p);
      pr.in_support = true;
      pr.depth = dd.depth;
      pr.dim = dd.dim;
      pr.cm = dd.depth == dd.dim;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInSupport) throw;
    }
    r.primes.push_back(std::move(pr));
  }
  r.equidimensional = is_equidimensional(D.annihilator);
  return r;
}

}  // namespace cmlocus
