#pragma once

// Bounded chain complexes with named bases and exact coefficient fields.
// A complex stores dims and differentials on a degree window [lo, hi];
// everything outside the window is zero.  d_n maps degree n to degree n-1;
// the constructor validates d . d = 0.

#include "matrix.hpp"

namespace neckcat {

template <class K>
struct ChainComplex {
  FieldOf<K> field;
  int lo = 0;
  std::vector<int> dims;                        // dims[i] = dim C_{lo+i}
  std::vector<Mat<K>> d;                        // d[i-1]: C_{lo+i} -> C_{lo+i-1}, i >= 1
  std::vector<std::vector<std::string>> labels; // optional, per degree

  ChainComplex() = default;
  ChainComplex(FieldOf<K> f, int lo_, std::vector<int> dims_, std::vector<Mat<K>> d_,
               std::vector<std::vector<std::string>> labels_ = {})
      : field(f), lo(lo_), dims(std::move(dims_)), d(std::move(d_)), labels(std::move(labels_)) {
    if (labels.empty()) {
      labels.resize(dims.size());
      for (size_t i = 0; i < dims.size(); ++i)
        for (int j = 0; j < dims[i]; ++j) labels[i].push_back("e" + std::to_string(j));
    }
    validate();
  }

  int hi() const { return lo + int(dims.size()) - 1; }
  bool in_window(int n) const { return n >= lo && n <= hi(); }
  int dim_at(int n) const { return in_window(n) ? dims[size_t(n - lo)] : 0; }
  int total_dim() const {
    int s = 0;
    for (int x : dims) s += x;
    return s;
  }
  const std::vector<std::string>& labels_at(int n) const {
    static const std::vector<std::string> empty;
    return in_window(n) ? labels[size_t(n - lo)] : empty;
  }
  Mat<K> diff(int n) const {  // d_n: C_n -> C_{n-1}
    if (!in_window(n) || n == lo) return Mat<K>(dim_at(n - 1), dim_at(n), field);
    return d[size_t(n - lo - 1)];
  }

  void validate() const {
    if (int(d.size()) + 1 != int(dims.size()) && !dims.empty())
      throw invalid_input("differential count mismatch");
    for (size_t i = 0; i < d.size(); ++i) {
      if (d[i].cols != dims[i + 1] || d[i].rows != dims[i])
        throw invalid_input("differential shape mismatch");
      if (i > 0 && !mat_mul(d[i - 1], d[i], field).is_zero())
        throw invalid_input("d . d != 0");
    }
  }

  static ChainComplex concentrated(FieldOf<K> f, int deg, int dim,
                                   std::vector<std::string> names = {}) {
    std::vector<std::vector<std::string>> lb;
    if (!names.empty()) lb.push_back(std::move(names));
    return ChainComplex(f, deg, {dim}, {}, std::move(lb));
  }
  static ChainComplex zero(FieldOf<K> f) { return ChainComplex(f, 0, {0}, {}, {{}}); }
};

template <class K>
struct ChainMap {
  ChainComplex<K> src, dst;
  std::vector<Mat<K>> comps;  // comps[i]: src degree (src.lo + i)

  ChainMap() = default;
  ChainMap(ChainComplex<K> s, ChainComplex<K> t, std::vector<Mat<K>> c)
      : src(std::move(s)), dst(std::move(t)), comps(std::move(c)) {
    validate();
  }

  Mat<K> at(int n) const {  // component in degree n
    if (!src.in_window(n)) return Mat<K>(dst.dim_at(n), 0, src.field);
    const Mat<K>& m = comps[size_t(n - src.lo)];
    return m;
  }
  void validate() const {
    if (comps.size() != src.dims.size()) throw invalid_input("chain map component count");
    for (int n = src.lo; n <= src.hi(); ++n) {
      const Mat<K>& m = comps[size_t(n - src.lo)];
      if (m.cols != src.dim_at(n) || m.rows != dst.dim_at(n))
        throw invalid_input("chain map shape mismatch in degree " + std::to_string(n));
    }
    for (int n = src.lo; n <= src.hi(); ++n) {
      // dst.d_n . f_n = f_{n-1} . src.d_n
      Mat<K> lhs = mat_mul(dst.diff(n), at(n), src.field);
      Mat<K> rhs = mat_mul(at(n - 1), src.diff(n), src.field);
      // align shapes: rhs has rows dst.dim(n-1)
      if (!(lhs == rhs)) throw invalid_input("not a chain map in degree " + std::to_string(n));
    }
  }
  static ChainMap identity(const ChainComplex<K>& c) {
    std::vector<Mat<K>> comps;
    for (int n = c.lo; n <= c.hi(); ++n) comps.push_back(Mat<K>::identity(c.dim_at(n), c.field));
    return ChainMap(c, c, std::move(comps));
  }
  static ChainMap zero_map(const ChainComplex<K>& s, const ChainComplex<K>& t) {
    std::vector<Mat<K>> comps;
    for (int n = s.lo; n <= s.hi(); ++n) comps.push_back(Mat<K>(t.dim_at(n), s.dim_at(n), s.field));
    return ChainMap(s, t, std::move(comps));
  }
  bool operator==(const ChainMap& o) const {
    if (src.lo != o.src.lo || src.dims != o.src.dims) return false;
    for (size_t i = 0; i < comps.size(); ++i)
      if (!(comps[i] == o.comps[i])) return false;
    return true;
  }
};

template <class K>
ChainMap<K> chain_compose(const ChainMap<K>& f, const ChainMap<K>& g) {  // g after f
  std::vector<Mat<K>> comps;
  for (int n = f.src.lo; n <= f.src.hi(); ++n) comps.push_back(mat_mul(g.at(n), f.at(n), f.src.field));
  return ChainMap<K>(f.src, g.dst, std::move(comps));
}

// ---------------------------------------------------------------------------
// Tensor product with Koszul signs.  Basis of (C (x) D)_n is the
// concatenation over i+j = n (i ascending) of pairs (x, y), x in C_i,
// y in D_j, ordered x-major.

template <class K>
ChainComplex<K> tensor(const ChainComplex<K>& C, const ChainComplex<K>& D) {
  const FieldOf<K>& f = C.field;
  if (C.field.characteristic() != D.field.characteristic())
    throw invalid_input("field mismatch in tensor");
  int lo = C.lo + D.lo, hi = C.hi() + D.hi();
  auto block_index = [&](int n, int i, int xi, int yi) {
    // offset of (x,y) with x in degree i within the degree-n basis
    int off = 0;
    for (int ii = std::max(C.lo, n - D.hi()); ii < i; ++ii)
      off += C.dim_at(ii) * D.dim_at(n - ii);
    return off + xi * D.dim_at(n - i) + yi;
  };
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int n = lo; n <= hi; ++n) {
    int dim = 0;
    std::vector<std::string> lab;
    for (int i = std::max(C.lo, n - D.hi()); i <= std::min(C.hi(), n - D.lo); ++i) {
      dim += C.dim_at(i) * D.dim_at(n - i);
      for (int xi = 0; xi < C.dim_at(i); ++xi)
        for (int yi = 0; yi < D.dim_at(n - i); ++yi)
          lab.push_back(C.labels_at(i)[size_t(xi)] + "(x)" + D.labels_at(n - i)[size_t(yi)]);
    }
    dims.push_back(dim);
    labels.push_back(std::move(lab));
  }
  std::vector<Mat<K>> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Mat<K> m(dims[size_t(n - 1 - lo)], dims[size_t(n - lo)], f);
    for (int i = std::max(C.lo, n - D.hi()); i <= std::min(C.hi(), n - D.lo); ++i) {
      int j = n - i;
      Mat<K> dc = C.diff(i), dd = D.diff(j);
      K sign = (i % 2 == 0) ? f.one() : -f.one();
      for (int xi = 0; xi < C.dim_at(i); ++xi)
        for (int yi = 0; yi < D.dim_at(j); ++yi) {
          int col = block_index(n, i, xi, yi);
          // d x (x) y
          for (int xr = 0; xr < C.dim_at(i - 1); ++xr)
            if (!dc.at(xr, xi).is_zero())
              m.at(block_index(n - 1, i - 1, xr, yi), col) =
                  m.at(block_index(n - 1, i - 1, xr, yi), col) + dc.at(xr, xi);
          // (-1)^i x (x) d y
          for (int yr = 0; yr < D.dim_at(j - 1); ++yr)
            if (!dd.at(yr, yi).is_zero())
              m.at(block_index(n - 1, i, xi, yr), col) =
                  m.at(block_index(n - 1, i, xi, yr), col) + sign * dd.at(yr, yi);
        }
    }
    diffs.push_back(std::move(m));
  }
  return ChainComplex<K>(f, lo, std::move(dims), std::move(diffs), std::move(labels));
}

// Index helper matching the tensor basis layout above.
template <class K>
int tensor_index(const ChainComplex<K>& C, const ChainComplex<K>& D, int n, int i, int xi, int yi) {
  int off = 0;
  for (int ii = std::max(C.lo, n - D.hi()); ii < i; ++ii) off += C.dim_at(ii) * D.dim_at(n - ii);
  return off + xi * D.dim_at(n - i) + yi;
}

// Tensor of two degree-preserving chain maps (no Koszul signs arise).
template <class K>
ChainMap<K> tensor_chain_map(const ChainMap<K>& f, const ChainMap<K>& g) {
  const FieldOf<K>& fl = f.src.field;
  ChainComplex<K> src = tensor(f.src, g.src);
  ChainComplex<K> dst = tensor(f.dst, g.dst);
  std::vector<Mat<K>> comps;
  for (int n = src.lo; n <= src.hi(); ++n) comps.push_back(Mat<K>(dst.dim_at(n), src.dim_at(n), fl));
  for (int i = f.src.lo; i <= f.src.hi(); ++i)
    for (int j = g.src.lo; j <= g.src.hi(); ++j) {
      Mat<K> fi = f.at(i), gj = g.at(j);
      for (int xi = 0; xi < f.src.dim_at(i); ++xi)
        for (int yi = 0; yi < g.src.dim_at(j); ++yi) {
          int col = tensor_index(f.src, g.src, i + j, i, xi, yi);
          for (int r = 0; r < fi.rows; ++r) {
            if (fi.at(r, xi).is_zero()) continue;
            for (int s = 0; s < gj.rows; ++s) {
              if (gj.at(s, yi).is_zero()) continue;
              int row = tensor_index(f.dst, g.dst, i + j, i, r, s);
              comps[size_t(i + j - src.lo)].at(row, col) = fi.at(r, xi) * gj.at(s, yi);
            }
          }
        }
    }
  return ChainMap<K>(src, dst, std::move(comps));
}

template <class K>
ChainComplex<K> direct_sum(const ChainComplex<K>& A, const ChainComplex<K>& B) {
  const FieldOf<K>& f = A.field;
  int lo = std::min(A.lo, B.lo), hi = std::max(A.hi(), B.hi());
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(A.dim_at(n) + B.dim_at(n));
    std::vector<std::string> lab;
    for (auto& s : A.labels_at(n)) lab.push_back("l." + s);
    for (auto& s : B.labels_at(n)) lab.push_back("r." + s);
    labels.push_back(std::move(lab));
  }
  std::vector<Mat<K>> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Mat<K> m(dims[size_t(n - 1 - lo)], dims[size_t(n - lo)], f);
    Mat<K> da = A.diff(n), db = B.diff(n);
    for (int r = 0; r < da.rows; ++r)
      for (int c = 0; c < da.cols; ++c) m.at(r, c) = da.at(r, c);
    for (int r = 0; r < db.rows; ++r)
      for (int c = 0; c < db.cols; ++c) m.at(A.dim_at(n - 1) + r, A.dim_at(n) + c) = db.at(r, c);
    diffs.push_back(std::move(m));
  }
  return ChainComplex<K>(f, lo, std::move(dims), std::move(diffs), std::move(labels));
}

// ---------------------------------------------------------------------------
// Spaces of chain maps, lifting problems, homology

// Basis of the vector space of chain maps C -> D.
template <class K>
std::vector<ChainMap<K>> hom_chain_maps(const ChainComplex<K>& C, const ChainComplex<K>& D) {
  const FieldOf<K>& f = C.field;
  // unknowns: entries of phi_n for n in the overlap window
  int lo = std::max(C.lo, D.lo), hi = std::min(C.hi(), D.hi());
  std::vector<int> offset;
  int total = 0;
  for (int n = lo; n <= hi; ++n) {
    offset.push_back(total);
    total += C.dim_at(n) * D.dim_at(n);
  }
  auto var = [&](int n, int r, int c) { return offset[size_t(n - lo)] + r * C.dim_at(n) + c; };
  // constraints: for each n, D.d_n phi_n - phi_{n-1} C.d_n = 0
  std::vector<std::vector<K>> rows;
  for (int n = lo; n <= hi + 1; ++n) {
    Mat<K> dd = D.diff(n), dc = C.diff(n);
    int nr = D.dim_at(n - 1), nc = C.dim_at(n);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) {
        std::vector<K> row(size_t(total), f.zero());
        bool nonzero = false;
        if (n <= hi && n >= lo)
          for (int k = 0; k < D.dim_at(n); ++k)
            if (!dd.at(r, k).is_zero()) {
              row[size_t(var(n, k, c))] = row[size_t(var(n, k, c))] + dd.at(r, k);
              nonzero = true;
            }
        if (n - 1 >= lo && n - 1 <= hi)
          for (int k = 0; k < C.dim_at(n - 1); ++k)
            if (!dc.at(k, c).is_zero()) {
              row[size_t(var(n - 1, r, k))] = row[size_t(var(n - 1, r, k))] - dc.at(k, c);
              nonzero = true;
            }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  Mat<K> A(int(rows.size()), total, f);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < total; ++c) A.at(int(r), c) = rows[r][size_t(c)];
  Mat<K> null = nullspace(A, f);
  std::vector<ChainMap<K>> out;
  for (int k = 0; k < null.cols; ++k) {
    std::vector<Mat<K>> comps;
    for (int n = C.lo; n <= C.hi(); ++n) {
      Mat<K> m(D.dim_at(n), C.dim_at(n), f);
      if (n >= lo && n <= hi)
        for (int r = 0; r < D.dim_at(n); ++r)
          for (int c = 0; c < C.dim_at(n); ++c) m.at(r, c) = null.at(var(n, r, c), k);
      comps.push_back(std::move(m));
    }
    out.push_back(ChainMap<K>(C, D, std::move(comps)));
  }
  return out;
}

// g: B -> X with g . i = f, if one exists.
template <class K>
std::optional<ChainMap<K>> solve_lift(const ChainMap<K>& i, const ChainMap<K>& f) {
  const ChainComplex<K>& A = i.src;
  const ChainComplex<K>& B = i.dst;
  const ChainComplex<K>& X = f.dst;
  const FieldOf<K>& fl = A.field;
  int lo = B.lo, hi = B.hi();
  std::vector<int> offset;
  int total = 0;
  for (int n = lo; n <= hi; ++n) {
    offset.push_back(total);
    total += B.dim_at(n) * X.dim_at(n);
  }
  auto var = [&](int n, int r, int c) { return offset[size_t(n - lo)] + r * B.dim_at(n) + c; };
  std::vector<std::vector<K>> rows;
  std::vector<K> rhs;
  // chain map: X.d_n g_n - g_{n-1} B.d_n = 0
  for (int n = lo; n <= hi + 1; ++n) {
    Mat<K> dx = X.diff(n), db = B.diff(n);
    for (int r = 0; r < X.dim_at(n - 1); ++r)
      for (int c = 0; c < B.dim_at(n); ++c) {
        std::vector<K> row(size_t(total), fl.zero());
        bool nz = false;
        if (n >= lo && n <= hi)
          for (int k = 0; k < X.dim_at(n); ++k)
            if (!dx.at(r, k).is_zero()) {
              row[size_t(var(n, k, c))] = row[size_t(var(n, k, c))] + dx.at(r, k);
              nz = true;
            }
        if (n - 1 >= lo && n - 1 <= hi)
          for (int k = 0; k < B.dim_at(n - 1); ++k)
            if (!db.at(k, c).is_zero()) {
              row[size_t(var(n - 1, r, k))] = row[size_t(var(n - 1, r, k))] - db.at(k, c);
              nz = true;
            }
        if (nz) {
          rows.push_back(std::move(row));
          rhs.push_back(fl.zero());
        }
      }
  }
  // restriction: g_n i_n = f_n
  for (int n = A.lo; n <= A.hi(); ++n) {
    Mat<K> in = i.at(n), fn = f.at(n);
    for (int r = 0; r < X.dim_at(n); ++r)
      for (int c = 0; c < A.dim_at(n); ++c) {
        std::vector<K> row(size_t(total), fl.zero());
        if (n >= lo && n <= hi)
          for (int k = 0; k < B.dim_at(n); ++k)
            if (!in.at(k, c).is_zero()) row[size_t(var(n, r, k))] = row[size_t(var(n, r, k))] + in.at(k, c);
        rows.push_back(std::move(row));
        rhs.push_back(fn.at(r, c));
      }
  }
  Mat<K> M(int(rows.size()), total, fl);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < total; ++c) M.at(int(r), c) = rows[r][size_t(c)];
  auto sol = solve(M, rhs, fl);
  if (!sol) return std::nullopt;
  std::vector<Mat<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Mat<K> m(X.dim_at(n), B.dim_at(n), fl);
    for (int r = 0; r < X.dim_at(n); ++r)
      for (int c = 0; c < B.dim_at(n); ++c) m.at(r, c) = (*sol)[size_t(var(n, r, c))];
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(B, X, std::move(comps));
}

template <class K>
std::vector<std::pair<int, int>> homology_dims(const ChainComplex<K>& C) {
  std::vector<std::pair<int, int>> out;
  for (int n = C.lo; n <= C.hi(); ++n) {
    int rk_n = rank(C.diff(n), C.field);
    int rk_n1 = rank(C.diff(n + 1), C.field);
    out.push_back({n, C.dim_at(n) - rk_n - rk_n1});
  }
  return out;
}

template <class K>
bool is_acyclic(const ChainComplex<K>& C) {
  for (auto [n, h] : homology_dims(C))
    if (h != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Kernel, cokernel, pullback, pushout (with structure maps)

template <class K>
std::pair<ChainComplex<K>, ChainMap<K>> kernel(const ChainMap<K>& phi) {
  const FieldOf<K>& f = phi.src.field;
  const ChainComplex<K>& C = phi.src;
  std::vector<Mat<K>> bases;
  std::vector<int> dims;
  for (int n = C.lo; n <= C.hi(); ++n) {
    bases.push_back(nullspace(phi.at(n), f));
    dims.push_back(bases.back().cols);
  }
  std::vector<Mat<K>> diffs;
  for (int n = C.lo + 1; n <= C.hi(); ++n) {
    const Mat<K>& Bn = bases[size_t(n - C.lo)];
    const Mat<K>& Bn1 = bases[size_t(n - 1 - C.lo)];
    Mat<K> img = mat_mul(C.diff(n), Bn, f);
    Mat<K> dk(Bn1.cols, Bn.cols, f);
    for (int c = 0; c < Bn.cols; ++c) {
      std::vector<K> v(size_t(img.rows));
      for (int r = 0; r < img.rows; ++r) v[size_t(r)] = img.at(r, c);
      auto coords = solve(Bn1, v, f);
      if (!coords) throw std::logic_error("kernel not closed under differential");
      for (int r = 0; r < Bn1.cols; ++r) dk.at(r, c) = (*coords)[size_t(r)];
    }
    diffs.push_back(std::move(dk));
  }
  ChainComplex<K> ker(f, C.lo, dims, std::move(diffs));
  std::vector<Mat<K>> incl;
  for (size_t i = 0; i < bases.size(); ++i) incl.push_back(bases[i]);
  return {ker, ChainMap<K>(ker, C, std::move(incl))};
}

template <class K>
std::pair<ChainComplex<K>, ChainMap<K>> cokernel(const ChainMap<K>& phi) {
  const FieldOf<K>& f = phi.src.field;
  const ChainComplex<K>& D = phi.dst;
  std::vector<Mat<K>> projs;
  std::vector<Mat<K>> secs;
  std::vector<int> dims;
  for (int n = D.lo; n <= D.hi(); ++n) {
    Mat<K> img = phi.at(n);
    // complement of the image inside D_n, greedily from standard vectors
    Mat<K> cur = img;
    std::vector<int> comp_cols;
    int rk = rank(cur, f);
    for (int e = 0; e < D.dim_at(n); ++e) {
      Mat<K> ext(cur.rows, cur.cols + 1, f);
      for (int r = 0; r < cur.rows; ++r)
        for (int c = 0; c < cur.cols; ++c) ext.at(r, c) = cur.at(r, c);
      ext.at(e, cur.cols) = f.one();
      int rk2 = rank(ext, f);
      if (rk2 > rk) {
        comp_cols.push_back(e);
        cur = ext;
        rk = rk2;
      }
    }
    dims.push_back(int(comp_cols.size()));
    // section Q_n -> D_n
    Mat<K> sec(D.dim_at(n), int(comp_cols.size()), f);
    for (size_t k = 0; k < comp_cols.size(); ++k) sec.at(comp_cols[k], int(k)) = f.one();
    secs.push_back(sec);
    // projection D_n -> Q_n: solve [img | sec] z = v, take the sec part
    Mat<K> full = mat_hstack(img, sec, f);
    Mat<K> proj(int(comp_cols.size()), D.dim_at(n), f);
    for (int e = 0; e < D.dim_at(n); ++e) {
      std::vector<K> v(size_t(D.dim_at(n)), f.zero());
      v[size_t(e)] = f.one();
      auto z = solve(full, v, f);
      if (!z) throw std::logic_error("cokernel complement not spanning");
      for (size_t k = 0; k < comp_cols.size(); ++k)
        proj.at(int(k), e) = (*z)[size_t(img.cols + int(k))];
    }
    projs.push_back(std::move(proj));
  }
  std::vector<Mat<K>> diffs;
  for (int n = D.lo + 1; n <= D.hi(); ++n) {
    Mat<K> dq = mat_mul(projs[size_t(n - 1 - D.lo)],
                        mat_mul(D.diff(n), secs[size_t(n - D.lo)], f), f);
    diffs.push_back(std::move(dq));
  }
  ChainComplex<K> Q(f, D.lo, dims, std::move(diffs));
  return {Q, ChainMap<K>(D, Q, std::move(projs))};
}

template <class K>
struct PullbackResult {
  ChainComplex<K> P;
  ChainMap<K> p1, p2;
};

template <class K>
PullbackResult<K> pullback(const ChainMap<K>& f, const ChainMap<K>& g) {
  // f: A -> C, g: B -> C
  const FieldOf<K>& fl = f.src.field;
  ChainComplex<K> AB = direct_sum(f.src, g.src);
  std::vector<Mat<K>> comps;
  for (int n = AB.lo; n <= AB.hi(); ++n) {
    Mat<K> m(f.dst.dim_at(n), AB.dim_at(n), fl);
    Mat<K> fn = f.at(n), gn = g.at(n);
    for (int r = 0; r < fn.rows; ++r)
      for (int c = 0; c < fn.cols; ++c) m.at(r, c) = fn.at(r, c);
    for (int r = 0; r < gn.rows; ++r)
      for (int c = 0; c < gn.cols; ++c) m.at(r, f.src.dim_at(n) + c) = -gn.at(r, c);
    comps.push_back(std::move(m));
  }
  ChainMap<K> h(AB, f.dst, std::move(comps));
  auto [P, incl] = kernel(h);
  std::vector<Mat<K>> c1, c2;
  for (int n = P.lo; n <= P.hi(); ++n) {
    Mat<K> in = incl.at(n);
    Mat<K> m1(f.src.dim_at(n), P.dim_at(n), fl), m2(g.src.dim_at(n), P.dim_at(n), fl);
    for (int r = 0; r < f.src.dim_at(n); ++r)
      for (int c = 0; c < P.dim_at(n); ++c) m1.at(r, c) = in.at(r, c);
    for (int r = 0; r < g.src.dim_at(n); ++r)
      for (int c = 0; c < P.dim_at(n); ++c) m2.at(r, c) = in.at(f.src.dim_at(n) + r, c);
    c1.push_back(std::move(m1));
    c2.push_back(std::move(m2));
  }
  return {P, ChainMap<K>(P, f.src, std::move(c1)), ChainMap<K>(P, g.src, std::move(c2))};
}

template <class K>
struct PushoutResult {
  ChainComplex<K> P;
  ChainMap<K> i1, i2;  // from f.dst and g.dst
};

template <class K>
PushoutResult<K> pushout(const ChainMap<K>& f, const ChainMap<K>& g) {
  // f: A -> B, g: A -> C; P = coker(A -> B (+) C)
  const FieldOf<K>& fl = f.src.field;
  ChainComplex<K> BC = direct_sum(f.dst, g.dst);
  std::vector<Mat<K>> comps;
  for (int n = f.src.lo; n <= f.src.hi(); ++n) {
    Mat<K> m(BC.dim_at(n), f.src.dim_at(n), fl);
    Mat<K> fn = f.at(n), gn = g.at(n);
    for (int r = 0; r < fn.rows; ++r)
      for (int c = 0; c < fn.cols; ++c) m.at(r, c) = fn.at(r, c);
    for (int r = 0; r < gn.rows; ++r)
      for (int c = 0; c < gn.cols; ++c) m.at(f.dst.dim_at(n) + r, c) = -gn.at(r, c);
    comps.push_back(std::move(m));
  }
  // the map A -> B(+)C may not cover BC's window; extend by zero
  std::vector<Mat<K>> full;
  for (int n = BC.lo; n <= BC.hi(); ++n) {
    if (n >= f.src.lo && n <= f.src.hi())
      full.push_back(comps[size_t(n - f.src.lo)]);
    else
      full.push_back(Mat<K>(BC.dim_at(n), 0, fl));
  }
  ChainComplex<K> Asrc = f.src;
  // reshape source to BC window
  std::vector<int> adims;
  std::vector<Mat<K>> adiffs;
  for (int n = BC.lo; n <= BC.hi(); ++n) adims.push_back(Asrc.dim_at(n));
  for (int n = BC.lo + 1; n <= BC.hi(); ++n) adiffs.push_back(Asrc.diff(n));
  ChainComplex<K> Awide(fl, BC.lo, adims, adiffs);
  ChainMap<K> h(Awide, BC, std::move(full));
  auto [P, proj] = cokernel(h);
  std::vector<Mat<K>> c1, c2;
  for (int n = P.lo; n <= P.hi(); ++n) {
    Mat<K> pr = proj.at(n);
    Mat<K> m1(P.dim_at(n), f.dst.dim_at(n), fl), m2(P.dim_at(n), g.dst.dim_at(n), fl);
    for (int r = 0; r < P.dim_at(n); ++r)
      for (int c = 0; c < f.dst.dim_at(n); ++c) m1.at(r, c) = pr.at(r, c);
    for (int r = 0; r < P.dim_at(n); ++r)
      for (int c = 0; c < g.dst.dim_at(n); ++c) m2.at(r, c) = pr.at(r, f.dst.dim_at(n) + c);
    c1.push_back(std::move(m1));
    c2.push_back(std::move(m2));
  }
  // i1 has source f.dst, which may have a smaller window than P
  auto restrict_map = [&](const ChainComplex<K>& S, std::vector<Mat<K>>& cs) {
    std::vector<Mat<K>> out;
    for (int n = S.lo; n <= S.hi(); ++n) {
      if (n >= P.lo && n <= P.hi())
        out.push_back(cs[size_t(n - P.lo)]);
      else
        out.push_back(Mat<K>(0, S.dim_at(n), fl));
    }
    return out;
  };
  auto cc1 = restrict_map(f.dst, c1);
  auto cc2 = restrict_map(g.dst, c2);
  return {P, ChainMap<K>(f.dst, P, std::move(cc1)), ChainMap<K>(g.dst, P, std::move(cc2))};
}

// Subcomplex spanned by a subset of basis indices per degree; throws if the
// span is not closed under the differential.
template <class K>
std::pair<ChainComplex<K>, ChainMap<K>> subcomplex_spanned(const ChainComplex<K>& C,
                                                           const std::vector<std::vector<int>>& keep) {
  const FieldOf<K>& f = C.field;
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (size_t i = 0; i < C.dims.size(); ++i) {
    dims.push_back(int(keep[i].size()));
    std::vector<std::string> lab;
    for (int k : keep[i]) lab.push_back(C.labels[i][size_t(k)]);
    labels.push_back(std::move(lab));
  }
  std::vector<Mat<K>> diffs;
  for (int n = C.lo + 1; n <= C.hi(); ++n) {
    const auto& src_keep = keep[size_t(n - C.lo)];
    const auto& dst_keep = keep[size_t(n - 1 - C.lo)];
    std::vector<int> where(size_t(C.dim_at(n - 1)), -1);
    for (size_t k = 0; k < dst_keep.size(); ++k) where[size_t(dst_keep[k])] = int(k);
    Mat<K> dn = C.diff(n);
    Mat<K> m(int(dst_keep.size()), int(src_keep.size()), f);
    for (size_t c = 0; c < src_keep.size(); ++c)
      for (int r = 0; r < C.dim_at(n - 1); ++r) {
        const K& x = dn.at(r, src_keep[c]);
        if (x.is_zero()) continue;
        if (where[size_t(r)] < 0) throw invalid_input("span is not a subcomplex");
        m.at(where[size_t(r)], int(c)) = x;
      }
    diffs.push_back(std::move(m));
  }
  ChainComplex<K> S(f, C.lo, dims, std::move(diffs), std::move(labels));
  std::vector<Mat<K>> incl;
  for (int n = C.lo; n <= C.hi(); ++n) {
    Mat<K> m(C.dim_at(n), S.dim_at(n), f);
    const auto& kp = keep[size_t(n - C.lo)];
    for (size_t k = 0; k < kp.size(); ++k) m.at(kp[k], int(k)) = f.one();
    incl.push_back(std::move(m));
  }
  return {S, ChainMap<K>(S, C, std::move(incl))};
}

}  // namespace neckcat
