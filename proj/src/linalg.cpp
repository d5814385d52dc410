#include "dcmv/linalg.hpp"

namespace dcmv {

std::optional<IntSolution> solve_integer_full(const IntMat& m, const std::vector<Int>& b) {
  assert(static_cast<long>(b.size()) == m.rows);
  SnfResult f = smith_normal_form(m);
  std::vector<Int> c = mul(f.U, b);
  std::vector<Int> z(m.cols, Int(0));
  for (long i = 0; i < m.rows; ++i) {
    Int d = f.diag(i);
    if (d != 0) {
      if (c[i] % d != 0) return std::nullopt;
      z[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntSolution sol;
  sol.x = mul(f.V, z);
  std::vector<long> free_cols;
  for (long j = f.rank; j < m.cols; ++j) free_cols.push_back(j);
  sol.kernel = submatrix_cols(f.V, free_cols);
  return sol;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b) {
  auto s = solve_integer_full(m, b);
  if (!s) return std::nullopt;
  return std::move(s->x);
}

IntMat integer_kernel_basis(const IntMat& m) {
  SnfResult f = smith_normal_form(m);
  std::vector<long> free_cols;
  for (long j = f.rank; j < m.cols; ++j) free_cols.push_back(j);
  return submatrix_cols(f.V, free_cols);
}

IntMat lattice_basis(const IntMat& gens) {
  // im(M) = U^{-1} im(S); im(S) has basis { d_i e_i : i < rank }
  SnfResult f = smith_normal_form(gens);
  IntMat basis(gens.rows, f.rank);
  for (long j = 0; j < f.rank; ++j)
    for (long i = 0; i < gens.rows; ++i) basis(i, j) = f.diag(j) * f.Uinv(i, j);
  return basis;
}

bool lattice_contains(const IntMat& basis, const std::vector<Int>& v) {
  return solve_integer(basis, v).has_value();
}

IntMat stacked_kernel_x(const IntMat& a, const IntMat& b) {
  IntMat k = integer_kernel_basis(hstack(a, b));
  std::vector<long> xrows;
  for (long i = 0; i < a.cols; ++i) xrows.push_back(i);
  return lattice_basis(submatrix_rows(k, xrows));
}

Rref rref(const RatMat& m) {
  Rref out;
  out.r = m;
  RatMat& r = out.r;
  long lead = 0;
  for (long col = 0; col < r.cols && lead < r.rows; ++col) {
    long piv = -1;
    for (long i = lead; i < r.rows; ++i)
      if (r(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    r.swap_rows(lead, piv);
    Rat f = r(lead, col);
    for (long j = 0; j < r.cols; ++j) r(lead, j) /= f;
    for (long i = 0; i < r.rows; ++i) {
      if (i == lead || r(i, col) == 0) continue;
      Rat g = r(i, col);
      for (long j = 0; j < r.cols; ++j) r(i, j) -= g * r(lead, j);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<long>(out.pivot_cols.size());
  return out;
}

long rank_rat(const RatMat& m) { return rref(m).rank; }

std::optional<std::vector<Rat>> solve_rational(const RatMat& a, const std::vector<Rat>& b) {
  assert(static_cast<long>(b.size()) == a.rows);
  Rref f = rref(hstack(a, from_col(b)));
  std::vector<Rat> x(a.cols, Rat(0));
  for (long i = 0; i < f.rank; ++i) {
    long p = f.pivot_cols[i];
    if (p == a.cols) return std::nullopt;  // pivot in the rhs column: inconsistent
    x[p] = f.r(i, a.cols);
  }
  return x;
}

RatMat rational_kernel_basis(const RatMat& a) {
  Rref f = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (long p : f.pivot_cols) is_pivot[p] = true;
  std::vector<long> free_cols;
  for (long j = 0; j < a.cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMat k(a.cols, static_cast<long>(free_cols.size()));
  for (long jj = 0; jj < k.cols; ++jj) {
    long fc = free_cols[jj];
    k(fc, jj) = Rat(1);
    for (long i = 0; i < f.rank; ++i) k(f.pivot_cols[i], jj) = -f.r(i, fc);
  }
  return k;
}

RatMat column_space_basis(const RatMat& a) {
  Rref f = rref(a);
  return submatrix_cols(a, f.pivot_cols);
}

RatMat left_nullspace(const RatMat& a) {
  return transpose(rational_kernel_basis(transpose(a)));
}

Int abs_det(const IntMat& m) {
  assert(m.rows == m.cols);
  RatMat r = to_rat(m);
  Rat det(1);
  for (long col = 0; col < r.cols; ++col) {
    long piv = -1;
    for (long i = col; i < r.rows; ++i)
      if (r(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != col) r.swap_rows(col, piv);
    det *= r(col, col);
    for (long i = col + 1; i < r.rows; ++i) {
      if (r(i, col) == 0) continue;
      Rat g = r(i, col) / r(col, col);
      for (long j = col; j < r.cols; ++j) r(i, j) -= g * r(col, j);
    }
  }
  assert(is_integer(det));  // integer matrix: elimination pivots multiply to det
  return abs(num(det));
}

namespace {

// clear denominators rowwise: integer matrix rows spanning the same constraints
void integer_constraints(const RatMat& p, const RatMat& a, const std::vector<Rat>& c,
                         IntMat* pa_out, std::vector<Int>* pc_out) {
  RatMat pa = mul(p, a);
  std::vector<Rat> pc = mul(p, c);
  IntMat m(pa.rows, pa.cols);
  std::vector<Int> v(pa.rows);
  for (long i = 0; i < pa.rows; ++i) {
    Int l(1);
    for (long j = 0; j < pa.cols; ++j) l = lcm_int(l, den(pa(i, j)));
    l = lcm_int(l, den(pc[i]));
    if (l == 0) l = 1;
    for (long j = 0; j < pa.cols; ++j) m(i, j) = num(pa(i, j) * Rat(l));
    v[i] = num(pc[i] * Rat(l));
  }
  *pa_out = std::move(m);
  *pc_out = std::move(v);
}

}  // namespace

std::optional<MixedSolution> solve_mixed(const RatMat& a, const RatMat& b, const std::vector<Rat>& c) {
  assert(a.rows == static_cast<long>(c.size()));
  assert(b.cols == 0 || b.rows == a.rows);
  // x integral solves the projection of the system along functionals killing im(B)
  RatMat p = b.cols == 0 ? RatMat::identity(a.rows) : left_nullspace(b);
  IntMat pa;
  std::vector<Int> pc;
  integer_constraints(p, a, c, &pa, &pc);
  auto s = solve_integer_full(pa, pc);
  if (!s) return std::nullopt;
  MixedSolution out;
  out.x = std::move(s->x);
  out.x_kernel = std::move(s->kernel);
  out.y = mixed_rational_part(a, b, c, out.x);
  return out;
}

std::vector<Rat> mixed_rational_part(const RatMat& a, const RatMat& b, const std::vector<Rat>& c,
                                     const std::vector<Int>& x) {
  std::vector<Rat> rhs = vec_sub(c, mul(a, to_rat(x)));
  if (b.cols == 0) {
    assert(vec_is_zero(rhs));
    return {};
  }
  auto y = solve_rational(b, rhs);
  assert(y.has_value());
  return *y;
}

}  // namespace dcmv
