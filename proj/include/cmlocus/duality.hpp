#pragma once

#include <vector>

#include "cmlocus/modules.hpp"

namespace cmlocus {

/// Ext^j_R(M, R) for the ambient polynomial ring R, as the homology at F_j^*
/// of the dualized free resolution. Zero for j beyond the resolution length.
PresentedModule ext_module(const PresentedModule& M, std::size_t j);
/// Same, reusing a resolution that reaches at least F_{j+1} (or stops).
PresentedModule ext_module(const Resolution& res, std::size_t j);

struct DeficiencyOptions {
  /// Also compute K^i for dim M < i <= d' (they must vanish).
  bool verify = false;
  /// Run the independent Ext computations on separate threads. The
  /// caller's step budget is shared with the workers.
  bool parallel = false;
};

/// Deficiency modules K^i = Ext^{d'-i}(M, R) with d' the number of ring
/// variables, and a_i = Ann K^i.
///
/// Everything is computed globally and read at the origin m: K^i counts as
/// nonzero iff a_i ⊆ m, and a_i is replaced by (1) otherwise. For graded
/// modules this is the same as working over the localization at m.
struct DeficiencyData {
  RingPtr ring;
  int ambient_dim = 0;
  int depth = 0;
  int dim = 0;
  Ideal annihilator;
  /// Indexed by i = 0..d'. Entries with computed[i] == false were skipped
  /// (i above the Krull dimension of Ann M) and are zero.
  std::vector<PresentedModule> K;
  std::vector<Ideal> a;
  std::vector<bool> computed;

  bool nonzero(std::size_t i) const { return !a[i].is_unit(); }
};

/// Throws ZeroModule when M vanishes at the origin (Ann M ⊄ m), where depth
/// and dimension are undefined.
DeficiencyData deficiency_modules(const PresentedModule& M, const DeficiencyOptions& options = {});

}  // namespace cmlocus
