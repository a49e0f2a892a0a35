#include "cmlocus/duality.hpp"

#include <future>

#include "cmlocus/budget.hpp"
#include "cmlocus/errors.hpp"

namespace cmlocus {

PresentedModule ext_module(const Resolution& res, std::size_t j) {
  const auto& ring = res.ring;
  if (j > res.length()) return PresentedModule::zero(ring);
  const std::size_t rank = res.rank(j);
  if (rank == 0) return PresentedModule::zero(ring);

  // ker(A_{j+1}^T : F_j^* -> F_{j+1}^*), graded by the negated shifts.
  PolyMatrix cycles = PolyMatrix::identity(ring, rank);
  if (j < res.length()) {
    std::vector<int> dual_shifts;
    for (int s : res.shifts[j + 1]) dual_shifts.push_back(-s);
    cycles = kernel(res.maps[j].transpose(), dual_shifts);
  }
  if (cycles.cols() == 0) return PresentedModule::zero(ring);
  PolyMatrix boundaries(ring, rank, 0);
  if (j > 0) boundaries = res.maps[j - 1].transpose();
  return subquotient_presentation(cycles, boundaries);
}

PresentedModule ext_module(const PresentedModule& M, std::size_t j) {
  return ext_module(free_resolution(M, j + 1), j);
}

DeficiencyData deficiency_modules(const PresentedModule& M, const DeficiencyOptions& options) {
  const auto& ring = M.ring();
  const int n = static_cast<int>(ring->num_variables());
  auto ann = annihilator(M);
  if (!contained_in_origin(ann)) {
    throw Error(ErrorCode::ZeroModule, "module vanishes at the origin; depth and dimension are undefined");
  }
  // The global dimension bounds the local one, so K^i for larger i vanish.
  const int bound = krull_dim(ann);

  DeficiencyData D{ring, n, 0, 0, ann, {}, {}, {}};
  D.K.assign(n + 1, PresentedModule::zero(ring));
  D.a.assign(n + 1, Ideal::unit(ring));
  D.computed.assign(n + 1, false);

  auto res = free_resolution(M, static_cast<std::size_t>(n) + 1);

  std::vector<int> wanted;
  for (int i = 0; i <= n; ++i) {
    if (i <= bound || options.verify) wanted.push_back(i);
  }
  auto work = [&res, n](int i) {
    auto K = ext_module(res, static_cast<std::size_t>(n - i));
    auto a = annihilator(K);
    if (!contained_in_origin(a)) a = Ideal::unit(K.ring());
    return std::pair{std::move(K), std::move(a)};
  };

  if (options.parallel) {
    StepBudget* budget = BudgetScope::current();
    std::vector<std::future<std::pair<PresentedModule, Ideal>>> jobs;
    for (int i : wanted) {
      jobs.push_back(std::async(std::launch::async, [&work, budget, i] {
        BudgetScope scope(budget);
        return work(i);
      }));
    }
    for (std::size_t k = 0; k < wanted.size(); ++k) {
      auto [K, a] = jobs[k].get();
      D.K[wanted[k]] = std::move(K);
      D.a[wanted[k]] = std::move(a);
      D.computed[wanted[k]] = true;
    }
  } else {
    for (int i : wanted) {
      auto [K, a] = work(i);
      D.K[i] = std::move(K);
      D.a[i] = std::move(a);
      D.computed[i] = true;
    }
  }

  D.depth = -1;
  D.dim = -1;
  for (int i = 0; i <= n; ++i) {
    if (!D.nonzero(i)) continue;
    if (D.depth < 0) D.depth = i;
    D.dim = i;
  }
  if (D.dim < 0) throw Error(ErrorCode::ZeroModule, "all deficiency modules vanish at the origin");
  return D;
}

}  // namespace cmlocus
