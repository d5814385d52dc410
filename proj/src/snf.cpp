#include "dcmv/snf.hpp"

namespace dcmv {

namespace {

// Tracks S = U*M*V under elementary operations.  Row ops multiply on the
// left (update U, and Uinv by the inverse column op); column ops multiply on
// the right (update V, and Vinv by the inverse row op).
struct Work {
  IntMat S, U, Uinv, V, Vinv;

  explicit Work(const IntMat& m)
      : S(m),
        U(IntMat::identity(m.rows)),
        Uinv(IntMat::identity(m.rows)),
        V(IntMat::identity(m.cols)),
        Vinv(IntMat::identity(m.cols)) {}

  void swap_rows(long i, long j) {
    if (i == j) return;
    S.swap_rows(i, j);
    U.swap_rows(i, j);
    Uinv.swap_cols(i, j);
  }
  void swap_cols(long i, long j) {
    if (i == j) return;
    S.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
  // row i += f * row j
  void add_row(long i, long j, const Int& f) {
    S.add_row(i, j, f);
    U.add_row(i, j, f);
    Uinv.add_col(j, i, -f);
  }
  // col i += f * col j
  void add_col(long i, long j, const Int& f) {
    S.add_col(i, j, f);
    V.add_col(i, j, f);
    Vinv.add_row(j, i, -f);
  }
  void negate_row(long i) {
    S.negate_row(i);
    U.negate_row(i);
    Uinv.negate_col(i);
  }
};

// Smallest nonzero |entry| in S[t.., t..]; ties to lowest row, then column.
bool find_pivot(const IntMat& s, long t, long* pi, long* pj) {
  bool found = false;
  Int best;
  for (long i = t; i < s.rows; ++i)
    for (long j = t; j < s.cols; ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        *pi = i;
        *pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
  Work w(m);
  long n = std::min(m.rows, m.cols);
  long t = 0;
  while (t < n) {
    long pi = 0, pj = 0;
    if (!find_pivot(w.S, t, &pi, &pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool dirty = false;
    for (long r = t + 1; r < w.S.rows; ++r) {
      if (w.S(r, t) == 0) continue;
      Int q = w.S(r, t) / w.S(t, t);  // truncated: |remainder| < |pivot|
      if (q != 0) w.add_row(r, t, -q);
      if (w.S(r, t) != 0) dirty = true;
    }
    for (long c = t + 1; c < w.S.cols; ++c) {
      if (w.S(t, c) == 0) continue;
      Int q = w.S(t, c) / w.S(t, t);
      if (q != 0) w.add_col(c, t, -q);
      if (w.S(t, c) != 0) dirty = true;
    }
    if (dirty) continue;  // a smaller pivot now exists in the block

    // pivot row/col clean; enforce divisibility over the rest of the block
    bool fixed = false;
    for (long r = t + 1; r < w.S.rows && !fixed; ++r)
      for (long c = t + 1; c < w.S.cols && !fixed; ++c)
        if (w.S(r, c) % w.S(t, t) != 0) {
          w.add_row(t, r, Int(1));  // reintroduces a row to reduce; pivot shrinks
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  for (long i = 0; i < n; ++i)
    if (w.S(i, i) < 0) w.negate_row(i);

  SnfResult r{std::move(w.S), std::move(w.U), std::move(w.Uinv),
              std::move(w.V), std::move(w.Vinv), 0};
  for (long i = 0; i < n; ++i)
    if (r.S(i, i) != 0) ++r.rank;
  return r;
}

bool snf_consistent(const IntMat& m, const SnfResult& r) {
  if (!(mul(mul(r.U, m), r.V) == r.S)) return false;
  if (!(mul(r.U, r.Uinv) == IntMat::identity(m.rows))) return false;
  if (!(mul(r.V, r.Vinv) == IntMat::identity(m.cols))) return false;
  for (long i = 0; i < std::min(m.rows, m.cols); ++i) {
    if (r.S(i, i) < 0) return false;
    if (i + 1 < std::min(m.rows, m.cols) && r.S(i, i) != 0 &&
        r.S(i + 1, i + 1) % r.S(i, i) != 0)
      return false;
  }
  for (long i = 0; i < r.S.rows; ++i)
    for (long j = 0; j < r.S.cols; ++j)
      if (i != j && r.S(i, j) != 0) return false;
  return true;
}

}  // namespace dcmv
