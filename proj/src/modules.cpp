#include "cmlocus/modules.hpp"

#include <algorithm>
#include <numeric>

#include "cmlocus/errors.hpp"

namespace cmlocus {

namespace {

// sum_k q_k * reps[k] for a quotient vector q in R^{reps.size()}.
FreeElement pull_back(const FreeElement& q, const std::vector<FreeElement>& reps, const RingPtr& ring,
                      std::size_t rank) {
  FreeElement acc(ring, rank);
  for (const auto& t : q.terms()) acc = acc.minus_term_times(-t.coeff, t.monomial, reps[t.component]);
  return acc;
}

std::vector<int> column_degrees(const PolyMatrix& A, std::span<const int> row_shifts) {
  std::vector<int> out(A.cols(), 0);
  for (std::size_t j = 0; j < A.cols(); ++j) {
    auto c = A.column(j);
    out[j] = c.is_zero() ? 0 : c.degree(row_shifts);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows)
    : PolyMatrix(ring, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix rows have different lengths");
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, rows[i][j]);
  }
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, std::span<const FreeElement> columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw Error(ErrorCode::RankMismatch, "column rank does not match row count");
    auto parts = columns[j].entries();
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, std::move(parts[i]));
  }
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  require_same_ring(ring_, p.ring());
  entries_[i * cols_ + j] = std::move(p);
}

FreeElement PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> col;
  col.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col.push_back((*this)(i, j));
  return FreeElement::from_entries(ring_, col);
}

std::vector<FreeElement> PolyMatrix::columns() const {
  std::vector<FreeElement> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  }
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::RankMismatch, "matrix shapes do not compose");
  PolyMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial acc(a.ring_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      }
      c.set(i, j, std::move(acc));
    }
  }
  return c;
}

std::string PolyMatrix::to_string() const {
  if (rows_ == 0 || cols_ == 0) return "[](" + std::to_string(rows_) + "x" + std::to_string(cols_) + ")";
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

PresentedModule PresentedModule::quotient(const Ideal& I) {
  const auto& gens = I.generators();
  PolyMatrix m(I.ring(), 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) m.set(0, j, gens[j]);
  return PresentedModule(std::move(m));
}

PresentedModule PresentedModule::free(RingPtr ring, std::size_t rank) {
  return PresentedModule(PolyMatrix(std::move(ring), rank, 0));
}

// ---------------------------------------------------------------------------

std::vector<FreeElement> module_buchberger(std::span<const FreeElement> gens) {
  if (gens.empty()) return {};
  const auto& ring = gens.front().ring();
  GroebnerEngine engine(ring, gens.front().rank());
  for (const auto& g : gens) {
    if (g.rank() != gens.front().rank()) throw Error(ErrorCode::RankMismatch, "generators live in different free modules");
    engine.insert(g);
  }
  return engine.reduced().elements;
}

std::vector<FreeElement> prune_generators(std::span<const FreeElement> gens, std::span<const int> shifts) {
  std::vector<std::size_t> order;
  std::vector<int> degree(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    degree[i] = gens[i].degree(shifts);
    order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    return gens[a].terms().size() < gens[b].terms().size();
  });
  std::vector<FreeElement> kept;
  if (order.empty()) return kept;
  GroebnerEngine engine(gens.front().ring(), gens.front().rank());
  for (auto i : order) {
    if (engine.normal_form(gens[i]).is_zero()) continue;
    kept.push_back(gens[i]);
    engine.insert(gens[i]);
    engine.complete();
  }
  return kept;
}

PolyMatrix kernel(const PolyMatrix& A) { return kernel(A, std::vector<int>(A.rows(), 0)); }

PolyMatrix kernel(const PolyMatrix& A, std::span<const int> row_shifts) {
  const auto& ring = A.ring();
  const std::size_t r = A.rows(), m = A.cols();
  if (m == 0) return PolyMatrix(ring, 0, 0);
  auto cols = A.columns();

  GroebnerEngine engine(ring, r, m);
  for (std::size_t l = 0; l < m; ++l) {
    if (!cols[l].is_zero()) engine.insert(cols[l], FreeElement::unit(ring, m, l));
  }
  auto basis = engine.reduced();
  const auto& G = basis.elements;
  const auto& reps = basis.representations;
  const auto one = FieldElement::one(ring->field());

  std::vector<FreeElement> candidates;
  // Each original column rewritten in the basis.
  for (std::size_t l = 0; l < m; ++l) {
    auto unit = FreeElement::unit(ring, m, l);
    if (cols[l].is_zero()) {
      candidates.push_back(unit);
      continue;
    }
    auto d = divide(cols[l], G);
    candidates.push_back(unit - pull_back(d.quotients, reps, ring, m));
  }
  // Schreyer syzygies of the basis. In the induced order the syzygy of the
  // pair (i, j), i < j, leads with (lcm_ij / lm_i) e_i, so for each i only
  // pairs whose lcm is minimal among the partners of i are needed.
  for (std::size_t i = 0; i < G.size(); ++i) {
    const auto& li = G[i].leading_term();
    std::vector<std::pair<std::size_t, Monomial>> partners;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const auto& lj = G[j].leading_term();
      if (lj.component == li.component) partners.emplace_back(j, lcm(li.monomial, lj.monomial));
    }
    for (std::size_t a = 0; a < partners.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < partners.size() && !redundant; ++b) {
        if (a == b || !partners[b].second.divides(partners[a].second)) continue;
        redundant = !(partners[b].second == partners[a].second) || b < a;
      }
      if (redundant) continue;
      auto j = partners[a].first;
      const auto& l = partners[a].second;
      auto mi = l / li.monomial;
      auto mj = l / G[j].leading_term().monomial;
      auto s = G[i].times_term(mi, one).minus_term_times(one, mj, G[j]);
      auto d = divide(s, G);
      auto syz = reps[i].times_term(mi, one).minus_term_times(one, mj, reps[j]);
      candidates.push_back(syz - pull_back(d.quotients, reps, ring, m));
    }
  }
  auto shifts = column_degrees(A, row_shifts);
  auto kept = prune_generators(candidates, shifts);
  return PolyMatrix::from_columns(ring, m, kept);
}

Resolution free_resolution(const PresentedModule& M, std::size_t max_length) {
  const auto& A = M.presentation();
  Resolution res{M.ring(), A.rows(), {}, {std::vector<int>(A.rows(), 0)}};
  std::vector<FreeElement> relations;
  for (auto& c : A.columns()) {
    if (!c.is_zero()) relations.push_back(std::move(c));
  }
  if (relations.empty() || max_length == 0) return res;
  res.maps.push_back(PolyMatrix::from_columns(M.ring(), A.rows(), relations));
  res.shifts.push_back(column_degrees(res.maps.back(), res.shifts.back()));
  while (res.maps.size() < max_length) {
    auto next = kernel(res.maps.back(), res.shifts.back());
    if (next.cols() == 0) break;
    res.shifts.push_back(column_degrees(next, res.shifts.back()));
    res.maps.push_back(std::move(next));
  }
  return res;
}

Resolution free_resolution(const PresentedModule& M) {
  return free_resolution(M, M.ring()->num_variables());
}

bool is_zero_module(const PresentedModule& M) {
  const std::size_t r = M.num_generators();
  if (r == 0) return true;
  auto basis = module_buchberger(M.presentation().columns());
  std::vector<bool> unit(r, false);
  for (const auto& g : basis) {
    const auto& lt = g.leading_term();
    if (lt.monomial.is_one()) unit[lt.component] = true;
  }
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

Ideal annihilator(const PresentedModule& M) {
  const auto& ring = M.ring();
  const auto& A = M.presentation();
  const std::size_t r = A.rows();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < r; ++i) {
    // Move row i to the last (lowest) position: basis elements led by that
    // component then generate im A ∩ R·e_i.
    PolyMatrix permuted(ring, r, A.cols());
    for (std::size_t row = 0, dst = 0; row < r; ++row) {
      if (row == i) continue;
      for (std::size_t j = 0; j < A.cols(); ++j) permuted.set(dst, j, A(row, j));
      ++dst;
    }
    for (std::size_t j = 0; j < A.cols(); ++j) permuted.set(r - 1, j, A(i, j));
    std::vector<Polynomial> gens;
    for (const auto& g : module_buchberger(permuted.columns())) {
      if (g.leading_term().component == r - 1) gens.push_back(g.entry(r - 1));
    }
    auto quotient = buchberger(ring, gens);
    acc = acc ? ideal_intersection(*acc, quotient) : quotient;
    if (acc->is_zero()) break;
  }
  return acc ? *acc : Ideal::unit(ring);
}

std::optional<FreeElement> lift(const FreeElement& v, std::span<const FreeElement> gens) {
  const auto& ring = v.ring();
  GroebnerEngine engine(ring, v.rank(), gens.size());
  for (std::size_t l = 0; l < gens.size(); ++l) {
    if (!gens[l].is_zero()) engine.insert(gens[l], FreeElement::unit(ring, gens.size(), l));
  }
  auto basis = engine.reduced();
  auto d = divide(v, basis.elements);
  if (!d.remainder.is_zero()) return std::nullopt;
  return pull_back(d.quotients, basis.representations, ring, gens.size());
}

PresentedModule subquotient_presentation(const PolyMatrix& kernel_gens, const PolyMatrix& image_gens) {
  require_same_ring(kernel_gens.ring(), image_gens.ring());
  if (kernel_gens.rows() != image_gens.rows()) {
    throw Error(ErrorCode::RankMismatch, "kernel and image generators live in different free modules");
  }
  const auto& ring = kernel_gens.ring();
  const std::size_t k = kernel_gens.cols();
  auto kcols = kernel_gens.columns();

  GroebnerEngine engine(ring, kernel_gens.rows(), k);
  for (std::size_t l = 0; l < k; ++l) {
    if (!kcols[l].is_zero()) engine.insert(kcols[l], FreeElement::unit(ring, k, l));
  }
  auto basis = engine.reduced();

  std::vector<FreeElement> relations;
  for (std::size_t j = 0; j < image_gens.cols(); ++j) {
    auto d = divide(image_gens.column(j), basis.elements);
    if (!d.remainder.is_zero()) {
      throw Error(ErrorCode::ImageNotContained,
                  "image generator " + std::to_string(j) + " is not in the kernel submodule");
    }
    relations.push_back(pull_back(d.quotients, basis.representations, ring, k));
  }
  auto syz = kernel(kernel_gens);
  for (std::size_t j = 0; j < syz.cols(); ++j) relations.push_back(syz.column(j));
  return minimize_presentation(PresentedModule(PolyMatrix::from_columns(ring, k, relations)));
}

PresentedModule minimize_presentation(const PresentedModule& M) {
  const auto& ring = M.ring();
  std::size_t rows = M.num_generators();
  auto cols = M.presentation().columns();
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& c : cols) entries.push_back(c.entries());

  for (;;) {
    std::size_t pivot_col = entries.size(), pivot_row = rows;
    for (std::size_t j = 0; j < entries.size() && pivot_col == entries.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) {
        const auto& e = entries[j][i];
        if (!e.is_zero() && e.is_constant()) {
          pivot_col = j;
          pivot_row = i;
          break;
        }
      }
    }
    if (pivot_col == entries.size()) break;
    auto pivot = entries[pivot_col];
    auto inv = pivot[pivot_row].leading_coeff().inverse();
    std::vector<std::vector<Polynomial>> next;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j == pivot_col) continue;
      auto col = entries[j];
      if (!col[pivot_row].is_zero()) {
        auto factor = col[pivot_row].scaled(inv);
        for (std::size_t i = 0; i < rows; ++i) {
          if (!pivot[i].is_zero()) col[i] -= factor * pivot[i];
        }
      }
      col.erase(col.begin() + static_cast<std::ptrdiff_t>(pivot_row));
      next.push_back(std::move(col));
    }
    entries = std::move(next);
    --rows;
  }

  std::vector<FreeElement> relations;
  for (const auto& e : entries) relations.push_back(FreeElement::from_entries(ring, e));
  if (rows == 0) return PresentedModule::zero(ring);
  auto kept = prune_generators(relations);
  return PresentedModule(PolyMatrix::from_columns(ring, rows, kept));
}

}  // namespace cmlocus
