#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmlocus/free_module.hpp"
#include "cmlocus/groebner.hpp"

namespace cmlocus {

/// Matrix of polynomials read as a map R^cols -> R^rows. Presentations use
/// the column convention: the columns are the relations.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  /// Row-major entries; every row must have the same length.
  PolyMatrix(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, std::span<const FreeElement> columns);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);

  FreeElement column(std::size_t j) const;
  std::vector<FreeElement> columns() const;
  PolyMatrix transpose() const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

  /// "[[x, y], [0, x]]"; an empty matrix prints its shape, "[](2x0)".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// A finitely generated module coker(A), one generator per row of A.
class PresentedModule {
 public:
  explicit PresentedModule(PolyMatrix presentation) : presentation_(std::move(presentation)) {}
  /// R/I, presented by the 1-row matrix of I's generators.
  static PresentedModule quotient(const Ideal& I);
  static PresentedModule free(RingPtr ring, std::size_t rank);
  /// The zero module (no generators).
  static PresentedModule zero(RingPtr ring) { return PresentedModule(PolyMatrix(std::move(ring), 0, 0)); }

  const RingPtr& ring() const { return presentation_.ring(); }
  const PolyMatrix& presentation() const { return presentation_; }
  std::size_t num_generators() const { return presentation_.rows(); }

 private:
  PolyMatrix presentation_;
};

/// F_0 <- F_1 <- ... <- F_L with maps[i] : F_{i+1} -> F_i, so maps[0] is
/// the presentation (with zero columns dropped). shifts[i] holds the degrees
/// of the basis of F_i, used to pick minimal generators of each kernel.
struct Resolution {
  RingPtr ring;
  std::size_t rank0 = 0;
  std::vector<PolyMatrix> maps;
  std::vector<std::vector<int>> shifts;

  std::size_t length() const { return maps.size(); }
  std::size_t rank(std::size_t i) const { return i == 0 ? rank0 : maps[i - 1].cols(); }
};

/// Reduced Gröbner basis of the submodule generated by `gens` (position over
/// term). Throws RankMismatch on inconsistent ranks.
std::vector<FreeElement> module_buchberger(std::span<const FreeElement> gens);

/// Generators of ker A as the columns of a (A.cols() x k) matrix, by
/// Schreyer's construction: syzygies of the Gröbner basis from its S-pairs,
/// pulled back through the tracked cofactors, plus the syzygies expressing
/// each original column in the basis. Redundant generators are pruned
/// degree by degree, so graded input yields a minimal generating set.
PolyMatrix kernel(const PolyMatrix& A);
/// As above with explicit degrees for the rows of A (the target basis).
PolyMatrix kernel(const PolyMatrix& A, std::span<const int> row_shifts);

/// Resolves M until a kernel vanishes or `max_length` maps exist.
Resolution free_resolution(const PresentedModule& M, std::size_t max_length);
/// Default length bound: the number of ring variables.
Resolution free_resolution(const PresentedModule& M);

bool is_zero_module(const PresentedModule& M);

/// Ann coker(A) = ∩_i (im A : e_i); the unit ideal for the zero module.
Ideal annihilator(const PresentedModule& M);

/// Coefficients c with gens·c = v, if v lies in the span of `gens`.
std::optional<FreeElement> lift(const FreeElement& v, std::span<const FreeElement> gens);

/// Presentation of ker/im for two generator sets of the same free module
/// (columns of `kernel_gens` and `image_gens`). The generators are the
/// kernel generators; relations are the image generators rewritten in them
/// together with the syzygies among the kernel generators. Throws
/// ImageNotContained if an image generator is not in the kernel submodule.
PresentedModule subquotient_presentation(const PolyMatrix& kernel_gens, const PolyMatrix& image_gens);

/// Same module with unit pivots eliminated (each constant entry removes one
/// generator and one relation) and redundant relations dropped.
PresentedModule minimize_presentation(const PresentedModule& M);

/// A subset of `gens` generating the same submodule; candidates are tried in
/// order of degree (with the given shifts), so for graded input the result
/// is a minimal generating set.
std::vector<FreeElement> prune_generators(std::span<const FreeElement> gens, std::span<const int> shifts = {});

}  // namespace cmlocus
