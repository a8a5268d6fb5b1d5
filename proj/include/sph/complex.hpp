#pragma once

// Bounded chain complexes over an exact field and the homotopy-theoretic
// primitives: shift, cone, fiber, homology, null-homotopy solving and
// homotopy inverses.  Sign conventions (shared by every module):
//   - [1] raises homological degree by one and negates the differential;
//     [k] multiplies the differential by (-1)^k.
//   - cone(f)_n = target_n (+) source_{n-1} with differential
//     [[d_target, f], [0, -d_source]].
//   - fiber(f) = cone(f)[-1].

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sph/matrix.hpp"

namespace sph {

template <class K>
class ChainComplex {
 public:
  // Zero complex, empty support.
  ChainComplex() : lo_(0), hi_(-1) {}

  // dims[i] is the dimension in degree lo + i; diffs[i] is
  // d_{lo+1+i} : C_{lo+1+i} -> C_{lo+i}.
  ChainComplex(int lo, std::vector<int> dims, std::vector<Mat<K>> diffs)
      : lo_(lo), hi_(lo + static_cast<int>(dims.size()) - 1),
        dims_(std::move(dims)), d_(std::move(diffs)) {
    if (d_.size() + 1 != dims_.size() && !(dims_.empty() && d_.empty()))
      throw std::invalid_argument("differential count mismatch");
    for (size_t i = 0; i < d_.size(); ++i)
      if (d_[i].rows() != dims_[i] || d_[i].cols() != dims_[i + 1])
        throw std::invalid_argument("differential shape mismatch");
    for (size_t i = 0; i + 1 < d_.size(); ++i)
      if (!(d_[i] * d_[i + 1]).is_zero())
        throw std::invalid_argument("d o d != 0");
  }

  static ChainComplex zero() { return ChainComplex(); }

  // One-dimensional complex: the field in a single degree.
  static ChainComplex point(int degree) {
    return ChainComplex(degree, {1}, {});
  }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool empty_support() const { return dims_.empty(); }

  int dim(int n) const {
    if (n < lo_ || n > hi_) return 0;
    return dims_[n - lo_];
  }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }

  // d_n : C_n -> C_{n-1}; a zero matrix of the right shape off support.
  Mat<K> diff(int n) const {
    if (n > lo_ && n <= hi_) return d_[n - 1 - lo_];
    return Mat<K>::zero(dim(n - 1), dim(n));
  }

  ChainComplex shift(int k) const {
    std::vector<Mat<K>> diffs = d_;
    if (k % 2 != 0)
      for (auto& m : diffs) m = -m;
    ChainComplex c;
    c.lo_ = lo_ + k;
    c.hi_ = hi_ + k;
    c.dims_ = dims_;
    c.d_ = std::move(diffs);
    return c;
  }

  // Drop zero-dimensional degrees at the boundary of the support.
  ChainComplex trimmed() const {
    int a = 0, b = static_cast<int>(dims_.size());
    while (a < b && dims_[a] == 0) ++a;
    while (b > a && dims_[b - 1] == 0) --b;
    ChainComplex c;
    c.lo_ = lo_ + a;
    c.hi_ = lo_ + b - 1;
    c.dims_.assign(dims_.begin() + a, dims_.begin() + b);
    if (b - a > 1) c.d_.assign(d_.begin() + a, d_.begin() + (b - 1));
    return c;
  }

  bool operator==(const ChainComplex& o) const {
    ChainComplex a = trimmed(), b = o.trimmed();
    return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.d_ == b.d_;
  }

  std::map<int, int> homology() const {
    std::map<int, int> h;
    for (int n = lo_; n <= hi_; ++n) {
      int z = dim(n) - rank(diff(n));
      int b = rank(diff(n + 1));
      if (z - b != 0) h[n] = z - b;
    }
    return h;
  }
  bool is_acyclic() const { return homology().empty(); }

  long euler_char() const {
    long chi = 0;
    for (int n = lo_; n <= hi_; ++n)
      chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dim(n));
    return chi;
  }

 private:
  int lo_, hi_;
  std::vector<int> dims_;
  std::vector<Mat<K>> d_;
};

template <class K>
ChainComplex<K> direct_sum(const ChainComplex<K>& a, const ChainComplex<K>& b) {
  if (a.empty_support()) return b;
  if (b.empty_support()) return a;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<int> dims;
  std::vector<Mat<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n) + b.dim(n));
  for (int n = lo + 1; n <= hi; ++n)
    diffs.push_back(Mat<K>::dsum(a.diff(n), b.diff(n)));
  return ChainComplex<K>(lo, std::move(dims), std::move(diffs));
}

template <class K>
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex<K> src, ChainComplex<K> tgt,
           std::map<int, Mat<K>> comps, bool check = true)
      : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
    for (auto it = comps_.begin(); it != comps_.end();) {
      auto& [n, m] = *it;
      if (m.rows() != tgt_.dim(n) || m.cols() != src_.dim(n))
        throw std::invalid_argument("chain map component shape mismatch");
      it = m.is_zero() ? comps_.erase(it) : std::next(it);
    }
    if (check && !commutes())
      throw std::invalid_argument("chain map does not commute with d");
  }

  static ChainMap identity(const ChainComplex<K>& c) {
    std::map<int, Mat<K>> comps;
    for (int n = c.lo(); n <= c.hi(); ++n)
      if (c.dim(n) > 0) comps[n] = Mat<K>::identity(c.dim(n));
    return ChainMap(c, c, std::move(comps), false);
  }
  static ChainMap zero(const ChainComplex<K>& src, const ChainComplex<K>& tgt) {
    return ChainMap(src, tgt, {}, false);
  }

  const ChainComplex<K>& src() const { return src_; }
  const ChainComplex<K>& tgt() const { return tgt_; }

  Mat<K> at(int n) const {
    auto it = comps_.find(n);
    if (it != comps_.end()) return it->second;
    return Mat<K>::zero(tgt_.dim(n), src_.dim(n));
  }

  bool commutes() const {
    int lo = std::min(src_.lo(), tgt_.lo());
    int hi = std::max(src_.hi(), tgt_.hi());
    for (int n = lo; n <= hi + 1; ++n)
      if (tgt_.diff(n) * at(n) != at(n - 1) * src_.diff(n)) return false;
    return true;
  }

  bool is_zero_map() const { return comps_.empty(); }

  ChainMap compose_after(const ChainMap& g) const {  // this o g
    std::map<int, Mat<K>> comps;
    int lo = std::min(g.src_.lo(), src_.lo());
    int hi = std::max(g.src_.hi(), src_.hi());
    for (int n = lo; n <= hi; ++n) {
      Mat<K> m = at(n) * g.at(n);
      if (!m.is_zero()) comps[n] = m;
    }
    return ChainMap(g.src_, tgt_, std::move(comps), false);
  }

  ChainMap operator+(const ChainMap& o) const { return add_sub(o, false); }
  ChainMap operator-(const ChainMap& o) const { return add_sub(o, true); }
  ChainMap operator-() const {
    std::map<int, Mat<K>> comps = comps_;
    for (auto& [n, m] : comps) m = -m;
    return ChainMap(src_, tgt_, std::move(comps), false);
  }

  ChainMap shift(int k) const {
    std::map<int, Mat<K>> comps;
    for (const auto& [n, m] : comps_) comps[n + k] = m;
    return ChainMap(src_.shift(k), tgt_.shift(k), std::move(comps), false);
  }

  bool operator==(const ChainMap& o) const {
    int lo = std::min(src_.lo(), o.src_.lo());
    int hi = std::max(src_.hi(), o.src_.hi());
    for (int n = lo; n <= hi; ++n)
      if (at(n) != o.at(n)) return false;
    return true;
  }

 private:
  ChainMap add_sub(const ChainMap& o, bool sub) const {
    std::map<int, Mat<K>> comps;
    int lo = std::min(src_.lo(), tgt_.lo());
    int hi = std::max(src_.hi(), tgt_.hi());
    for (int n = lo; n <= hi; ++n) {
      Mat<K> m = sub ? at(n) - o.at(n) : at(n) + o.at(n);
      if (!m.is_zero()) comps[n] = m;
    }
    return ChainMap(src_, tgt_, std::move(comps), false);
  }

  ChainComplex<K> src_, tgt_;
  std::map<int, Mat<K>> comps_;  // zero components omitted
};

// Degree +1 collection of matrices between two complexes; validity is
// asserted by whichever operation produced it.
template <class K>
struct Homotopy {
  std::map<int, Mat<K>> comps;  // comps[n] : src_n -> tgt_{n+1}

  Mat<K> at(int n, const ChainComplex<K>& src,
            const ChainComplex<K>& tgt) const {
    auto it = comps.find(n);
    if (it != comps.end()) return it->second;
    return Mat<K>::zero(tgt.dim(n + 1), src.dim(n));
  }
};

// Checks d h + h d == g exactly.
template <class K>
bool homotopy_witnesses(const Homotopy<K>& h, const ChainMap<K>& g) {
  const auto& src = g.src();
  const auto& tgt = g.tgt();
  int lo = std::min(src.lo(), tgt.lo()) - 1;
  int hi = std::max(src.hi(), tgt.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    Mat<K> lhs = tgt.diff(n + 1) * h.at(n, src, tgt) +
                 h.at(n - 1, src, tgt) * src.diff(n);
    if (lhs != g.at(n)) return false;
  }
  return true;
}

template <class K>
struct ConeData {
  ChainComplex<K> complex;
  ChainMap<K> from_target;  // target -> cone
  ChainMap<K> to_shifted_source;  // cone -> source[1]
};

template <class K>
ConeData<K> cone(const ChainMap<K>& f) {
  const auto& a = f.src();
  const auto& b = f.tgt();
  int lo = std::min(b.lo(), a.lo() + 1);
  int hi = std::max(b.hi(), a.hi() + 1);
  if (a.empty_support() && b.empty_support()) lo = 0, hi = -1;
  std::vector<int> dims;
  std::vector<Mat<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(b.dim(n) + a.dim(n - 1));
  for (int n = lo + 1; n <= hi; ++n) {
    diffs.push_back(Mat<K>::block2x2(
        b.diff(n), f.at(n - 1),
        Mat<K>::zero(a.dim(n - 2), b.dim(n)), -a.diff(n - 1)));
  }
  ChainComplex<K> c(lo, std::move(dims), std::move(diffs));

  std::map<int, Mat<K>> incl, proj;
  for (int n = lo; n <= hi; ++n) {
    Mat<K> in(c.dim(n), b.dim(n));
    in.place(Mat<K>::identity(b.dim(n)), 0, 0);
    if (!in.is_zero()) incl[n] = in;
    Mat<K> pr(a.dim(n - 1), c.dim(n));
    pr.place(Mat<K>::identity(a.dim(n - 1)), 0, b.dim(n));
    if (!pr.is_zero()) proj[n] = pr;
  }
  ChainMap<K> from_target(b, c, std::move(incl), false);
  ChainMap<K> to_src1(c, a.shift(1), std::move(proj), false);
  return {std::move(c), std::move(from_target), std::move(to_src1)};
}

template <class K>
struct FiberData {
  ChainComplex<K> complex;
  ChainMap<K> to_source;      // fiber -> source of f
  ChainMap<K> from_shifted_target;  // target[-1] -> fiber
};

// fiber(f) = cone(f)[-1]; fiber_n = target_{n+1} (+) source_n, and the
// projection to the source block is the canonical map fiber -> src.
template <class K>
FiberData<K> fiber(const ChainMap<K>& f) {
  ConeData<K> c = cone(f);
  ChainComplex<K> fib = c.complex.shift(-1);
  const auto& a = f.src();
  const auto& b = f.tgt();
  std::map<int, Mat<K>> proj, incl;
  for (int n = fib.lo(); n <= fib.hi(); ++n) {
    Mat<K> pr(a.dim(n), fib.dim(n));
    pr.place(Mat<K>::identity(a.dim(n)), 0, b.dim(n + 1));
    if (!pr.is_zero()) proj[n] = pr;
    Mat<K> in(fib.dim(n), b.dim(n + 1));
    in.place(Mat<K>::identity(b.dim(n + 1)), 0, 0);
    if (!in.is_zero()) incl[n] = in;
  }
  ChainMap<K> to_source(fib, a, std::move(proj), false);
  ChainMap<K> from_tgt(b.shift(-1), fib, std::move(incl), false);
  return {std::move(fib), std::move(to_source), std::move(from_tgt)};
}

template <class K>
bool is_quasi_iso(const ChainMap<K>& f) {
  return cone(f).complex.is_acyclic();
}

// Independent oracle: the induced map on homology is an isomorphism in
// every degree.  Computed directly from kernel/image bases.
template <class K>
bool homology_iso_oracle(const ChainMap<K>& f) {
  const auto& c = f.src();
  const auto& d = f.tgt();
  int lo = std::min(c.lo(), d.lo());
  int hi = std::max(c.hi(), d.hi());
  for (int n = lo; n <= hi; ++n) {
    Mat<K> zc = kernel_basis(c.diff(n));
    int hc = zc.cols() - rank(c.diff(n + 1));
    int hd = d.dim(n) - rank(d.diff(n)) - rank(d.diff(n + 1));
    if (hc != hd) return false;
    if (hc == 0) continue;
    // Injectivity of [f]: rank([im d_{n+1}^D | f Z_C]) must grow by the
    // full homology dimension of the source.
    Mat<K> bd = d.diff(n + 1);
    Mat<K> fz = f.at(n) * zc;
    Mat<K> juxt(d.dim(n), bd.cols() + fz.cols());
    juxt.place(bd, 0, 0);
    juxt.place(fz, 0, bd.cols());
    // rank([B | fZ]) - rank(B) counts the part of f(ker) independent of
    // boundaries; [f] injective iff it equals dim ker - dim(ker cap ...).
    // Equivalent formulation: rank([B | fZ]) - rank(B) == hc requires the
    // classes of f(Z) to be independent; Z includes boundary directions,
    // so compare against hc + overlap of f(boundaries) with B.
    Mat<K> bc = c.diff(n + 1);
    Mat<K> fb = f.at(n) * bc;
    Mat<K> juxt0(d.dim(n), bd.cols() + fb.cols());
    juxt0.place(bd, 0, 0);
    juxt0.place(fb, 0, bd.cols());
    int base = rank(juxt0);  // f(boundaries) land in boundaries: == rank(bd)
    if (rank(juxt) - base != hc) return false;
  }
  return true;
}

namespace detail {

// Small builder for the global linear systems behind null_homotopy and
// homotopy_inverse.  Variables are entries of unknown matrices.
template <class K>
class LinSys {
 public:
  // Registers a block of rows*cols unknowns; returns the block handle.
  int add_block(int rows, int cols) {
    blocks_.push_back({next_, rows, cols});
    next_ += rows * cols;
    return static_cast<int>(blocks_.size()) - 1;
  }
  int var(int block, int r, int c) const {
    const auto& b = blocks_[block];
    return b.offset + r * b.cols + c;
  }

  void begin_equation() { eq_.emplace_back(); rhs_.push_back(K::zero()); }
  void add_term(int var_index, const K& coef) {
    if (!coef.is_zero()) eq_.back().push_back({var_index, coef});
  }
  void set_rhs(const K& v) { rhs_.back() = v; }

  std::optional<std::vector<K>> solve_system() const {
    int nv = next_, ne = static_cast<int>(eq_.size());
    std::vector<typename Mat<K>::Entry> entries;
    std::map<std::pair<int, int>, K> acc;
    for (int i = 0; i < ne; ++i)
      for (const auto& [j, c] : eq_[i]) {
        auto key = std::make_pair(i, j);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, c);
        else
          it->second = it->second + c;
      }
    for (const auto& [key, v] : acc)
      if (!v.is_zero()) entries.push_back({key.first, key.second, v});
    Mat<K> a = Mat<K>::from_entries(ne, nv, std::move(entries));
    Mat<K> b(ne, 1);
    for (int i = 0; i < ne; ++i) b.set(i, 0, rhs_[i]);
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    std::vector<K> out(nv, K::zero());
    for (const auto& e : x->entries()) out[e.row] = e.value;
    return out;
  }

  Mat<K> extract(const std::vector<K>& sol, int block) const {
    const auto& b = blocks_[block];
    Mat<K> m(b.rows, b.cols);
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) {
        const K& v = sol[b.offset + r * b.cols + c];
        if (!v.is_zero()) m.set(r, c, v);
      }
    return m;
  }

 private:
  struct Block {
    int offset, rows, cols;
  };
  std::vector<Block> blocks_;
  int next_ = 0;
  std::vector<std::vector<std::pair<int, K>>> eq_;
  std::vector<K> rhs_;
};

}  // namespace detail

// Solve d h + h d = g exactly; returns nothing when unsolvable.
template <class K>
std::optional<Homotopy<K>> null_homotopy(const ChainMap<K>& g) {
  const auto& src = g.src();
  const auto& tgt = g.tgt();
  int lo = std::min(src.lo(), tgt.lo() - 1);
  int hi = std::max(src.hi(), tgt.hi());
  detail::LinSys<K> sys;
  std::map<int, int> hblock;
  for (int n = lo; n <= hi; ++n)
    hblock[n] = sys.add_block(tgt.dim(n + 1), src.dim(n));
  for (int n = lo; n <= hi + 1; ++n) {
    // d_{n+1} h_n + h_{n-1} d_n = g_n
    int rows = tgt.dim(n), cols = src.dim(n);
    if (rows == 0 || cols == 0) continue;
    Mat<K> dh = tgt.diff(n + 1);
    Mat<K> dn = src.diff(n);
    std::vector<std::vector<std::pair<int, K>>> drows(dh.rows());
    for (const auto& e : dh.entries()) drows[e.row].push_back({e.col, e.value});
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        sys.begin_equation();
        if (hblock.count(n))
          for (const auto& [k, v] : drows[i])
            sys.add_term(sys.var(hblock[n], k, j), v);
        if (hblock.count(n - 1))
          for (const auto& e : dn.entries())
            if (e.col == j)
              sys.add_term(sys.var(hblock[n - 1], i, e.row), e.value);
        sys.set_rhs(g.at(n).get(i, j));
      }
  }
  auto sol = sys.solve_system();
  if (!sol) return std::nullopt;
  Homotopy<K> h;
  for (auto& [n, blk] : hblock) {
    Mat<K> m = sys.extract(*sol, blk);
    if (!m.is_zero()) h.comps[n] = m;
  }
  return h;
}

template <class K>
struct HomotopyInverse {
  ChainMap<K> inverse;      // g : tgt -> src
  Homotopy<K> fg_witness;   // d h + h d = f o g - id
  Homotopy<K> gf_witness;   // d h + h d = g o f - id
};

// Produces g with f o g ~ id and g o f ~ id, witnesses verified exactly.
// Requires f to be a quasi-isomorphism.
template <class K>
HomotopyInverse<K> homotopy_inverse(const ChainMap<K>& f) {
  if (!is_quasi_iso(f))
    throw std::invalid_argument("homotopy_inverse: not a quasi-isomorphism");
  const auto& c = f.src();
  const auto& d = f.tgt();
  int lo = std::min(c.lo(), d.lo()) - 1;
  int hi = std::max(c.hi(), d.hi()) + 1;
  detail::LinSys<K> sys;
  std::map<int, int> gb, h1b, h2b;
  for (int n = lo; n <= hi; ++n) {
    gb[n] = sys.add_block(c.dim(n), d.dim(n));
    h1b[n] = sys.add_block(d.dim(n + 1), d.dim(n));
    h2b[n] = sys.add_block(c.dim(n + 1), c.dim(n));
  }
  for (int n = lo; n <= hi; ++n) {
    // (1) chain map: d^C_n g_n - g_{n-1} d^D_n = 0
    {
      Mat<K> dc = c.diff(n);
      Mat<K> dd = d.diff(n);
      int rows = c.dim(n - 1), cols = d.dim(n);
      std::vector<std::vector<std::pair<int, K>>> dcrows(dc.rows());
      for (const auto& e : dc.entries())
        dcrows[e.row].push_back({e.col, e.value});
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          sys.begin_equation();
          for (const auto& [k, v] : dcrows[i])
            sys.add_term(sys.var(gb[n], k, j), v);
          for (const auto& e : dd.entries())
            if (e.col == j) sys.add_term(sys.var(gb[n - 1], i, e.row), -e.value);
        }
    }
    // (2) f g - id = d h1 + h1 d   (maps D -> D in degree n)
    {
      Mat<K> fn = f.at(n);
      Mat<K> dd1 = d.diff(n + 1);
      Mat<K> ddn = d.diff(n);
      int rows = d.dim(n), cols = d.dim(n);
      std::vector<std::vector<std::pair<int, K>>> frows(fn.rows());
      for (const auto& e : fn.entries()) frows[e.row].push_back({e.col, e.value});
      std::vector<std::vector<std::pair<int, K>>> d1rows(dd1.rows());
      for (const auto& e : dd1.entries())
        d1rows[e.row].push_back({e.col, e.value});
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          sys.begin_equation();
          for (const auto& [k, v] : frows[i])
            sys.add_term(sys.var(gb[n], k, j), v);
          for (const auto& [k, v] : d1rows[i])
            sys.add_term(sys.var(h1b[n], k, j), -v);
          for (const auto& e : ddn.entries())
            if (e.col == j) sys.add_term(sys.var(h1b[n - 1], i, e.row), -e.value);
          sys.set_rhs(i == j ? K::one() : K::zero());
        }
    }
    // (3) g f - id = d h2 + h2 d   (maps C -> C in degree n)
    {
      Mat<K> fn = f.at(n);
      Mat<K> dc1 = c.diff(n + 1);
      Mat<K> dcn = c.diff(n);
      int rows = c.dim(n), cols = c.dim(n);
      std::vector<std::vector<std::pair<int, K>>> d1rows(dc1.rows());
      for (const auto& e : dc1.entries())
        d1rows[e.row].push_back({e.col, e.value});
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          sys.begin_equation();
          for (const auto& e : fn.entries())
            if (e.col == j) sys.add_term(sys.var(gb[n], i, e.row), e.value);
          for (const auto& [k, v] : d1rows[i])
            sys.add_term(sys.var(h2b[n], k, j), -v);
          for (const auto& e : dcn.entries())
            if (e.col == j) sys.add_term(sys.var(h2b[n - 1], i, e.row), -e.value);
          sys.set_rhs(i == j ? K::one() : K::zero());
        }
    }
  }
  auto sol = sys.solve_system();
  if (!sol)
    throw std::logic_error(
        "homotopy_inverse: no chain-level inverse (should not happen over a "
        "field)");
  std::map<int, Mat<K>> gcomps;
  Homotopy<K> h1, h2;
  for (int n = lo; n <= hi; ++n) {
    Mat<K> gm = sys.extract(*sol, gb[n]);
    if (!gm.is_zero()) gcomps[n] = gm;
    Mat<K> m1 = sys.extract(*sol, h1b[n]);
    if (!m1.is_zero()) h1.comps[n] = m1;
    Mat<K> m2 = sys.extract(*sol, h2b[n]);
    if (!m2.is_zero()) h2.comps[n] = m2;
  }
  ChainMap<K> g(d, c, std::move(gcomps));
  // Re-verify the witnesses independently.
  ChainMap<K> fg = f.compose_after(g) - ChainMap<K>::identity(d);
  ChainMap<K> gf = g.compose_after(f) - ChainMap<K>::identity(c);
  if (!homotopy_witnesses(h1, fg) || !homotopy_witnesses(h2, gf))
    throw std::logic_error("homotopy_inverse: witness verification failed");
  return {std::move(g), std::move(h1), std::move(h2)};
}

}  // namespace sph
