#pragma once

// Sparse matrices over an exact field, dense-capable at desk scale.
// Entries are kept sorted by (row, col) with no stored zeros.  The
// elimination routines pivot by row sparsity with a deterministic
// (row, col)-lexicographic tie-break so results are reproducible.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace sph {

template <class K>
class Mat {
 public:
  struct Entry {
    int row, col;
    K value;
  };

  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative size");
  }

  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, K::one()});
    return m;
  }
  static Mat scalar(int n, const K& c) {
    Mat m(n, n);
    if (!c.is_zero())
      for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, c});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  bool is_zero() const { return entries_.empty(); }

  void set(int r, int c, const K& v) {
    check_index(r, c);
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::make_pair(r, c), entry_less);
    if (it != entries_.end() && it->row == r && it->col == c) {
      if (v.is_zero())
        entries_.erase(it);
      else
        it->value = v;
    } else if (!v.is_zero()) {
      entries_.insert(it, {r, c, v});
    }
  }

  K get(int r, int c) const {
    check_index(r, c);
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::make_pair(r, c), entry_less);
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return K::zero();
  }

  Mat operator+(const Mat& o) const { return combined(o, false); }
  Mat operator-(const Mat& o) const { return combined(o, true); }
  Mat operator-() const {
    Mat m(rows_, cols_);
    m.entries_ = entries_;
    for (auto& e : m.entries_) e.value = -e.value;
    return m;
  }
  Mat scaled(const K& c) const {
    Mat m(rows_, cols_);
    if (c.is_zero()) return m;
    m.entries_ = entries_;
    for (auto& e : m.entries_) e.value = e.value * c;
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
    // Row-major accumulate: group our entries by row, walk o's rows.
    std::vector<std::vector<std::pair<int, K>>> orows(o.rows_);
    for (const auto& e : o.entries_) orows[e.row].push_back({e.col, e.value});
    Mat m(rows_, o.cols_);
    std::map<std::pair<int, int>, K> acc;
    for (const auto& e : entries_)
      for (const auto& [c, v] : orows[e.col]) {
        auto key = std::make_pair(e.row, c);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, e.value * v);
        else
          it->second = it->second + e.value * v;
      }
    for (auto& [key, v] : acc)
      if (!v.is_zero()) m.entries_.push_back({key.first, key.second, v});
    return m;
  }

  Mat transpose() const {
    Mat m(cols_, rows_);
    m.entries_ = entries_;
    for (auto& e : m.entries_) std::swap(e.row, e.col);
    std::sort(m.entries_.begin(), m.entries_.end(), entry_order);
    return m;
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (entries_.size() != o.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i) {
      const auto& a = entries_[i];
      const auto& b = o.entries_[i];
      if (a.row != b.row || a.col != b.col || !(a.value == b.value))
        return false;
    }
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Block placement: copy o into this at offset (r0, c0).
  void place(const Mat& o, int r0, int c0) {
    for (const auto& e : o.entries_) set(r0 + e.row, c0 + e.col, e.value);
  }

  static Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
    if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ ||
        b.cols_ != d.cols_)
      throw std::invalid_argument("block shape mismatch");
    Mat m(a.rows_ + c.rows_, a.cols_ + b.cols_);
    m.place(a, 0, 0);
    m.place(b, 0, a.cols_);
    m.place(c, a.rows_, 0);
    m.place(d, a.rows_, a.cols_);
    return m;
  }

  static Mat dsum(const Mat& a, const Mat& b) {
    Mat m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.place(a, 0, 0);
    m.place(b, a.rows_, a.cols_);
    return m;
  }

  static Mat from_entries(int rows, int cols, std::vector<Entry> es) {
    Mat m(rows, cols);
    std::sort(es.begin(), es.end(), entry_order);
    for (size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      m.check_index(e.row, e.col);
      if (i > 0 && es[i - 1].row == e.row && es[i - 1].col == e.col)
        throw std::invalid_argument("duplicate matrix entry");
      if (e.value.is_zero()) throw std::invalid_argument("stored zero entry");
    }
    m.entries_ = std::move(es);
    return m;
  }

 private:
  static bool entry_less(const Entry& e, const std::pair<int, int>& key) {
    return std::make_pair(e.row, e.col) < key;
  }
  static bool entry_order(const Entry& a, const Entry& b) {
    return std::make_pair(a.row, a.col) < std::make_pair(b.row, b.col);
  }
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix index out of range");
  }

  Mat combined(const Mat& o, bool subtract) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch in add");
    Mat m(rows_, cols_);
    size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
      if (j == o.entries_.size() ||
          (i < entries_.size() &&
           std::make_pair(entries_[i].row, entries_[i].col) <
               std::make_pair(o.entries_[j].row, o.entries_[j].col))) {
        m.entries_.push_back(entries_[i++]);
      } else if (i == entries_.size() ||
                 std::make_pair(o.entries_[j].row, o.entries_[j].col) <
                     std::make_pair(entries_[i].row, entries_[i].col)) {
        Entry e = o.entries_[j++];
        if (subtract) e.value = -e.value;
        m.entries_.push_back(e);
      } else {
        K v = subtract ? entries_[i].value - o.entries_[j].value
                       : entries_[i].value + o.entries_[j].value;
        if (!v.is_zero())
          m.entries_.push_back({entries_[i].row, entries_[i].col, v});
        ++i, ++j;
      }
    }
    return m;
  }

  int rows_, cols_;
  std::vector<Entry> entries_;  // sorted by (row, col)
};

// Row-echelon working form.  Rows are sorted sparse vectors.
template <class K>
struct Echelon {
  std::vector<std::vector<std::pair<int, K>>> rows;
  std::vector<int> pivot_col;  // per eliminated row, in elimination order
};

// q - factor * p on sorted sparse rows.
template <class K>
std::vector<std::pair<int, K>> sparse_axpy(
    const std::vector<std::pair<int, K>>& q,
    const std::vector<std::pair<int, K>>& p, const K& factor) {
  std::vector<std::pair<int, K>> merged;
  size_t i = 0, j = 0;
  while (i < q.size() || j < p.size()) {
    if (j == p.size() || (i < q.size() && q[i].first < p[j].first)) {
      merged.push_back(q[i++]);
    } else if (i == q.size() || p[j].first < q[i].first) {
      merged.push_back({p[j].first, -(factor * p[j].second)});
      ++j;
    } else {
      K v = q[i].second - factor * p[j].second;
      if (!v.is_zero()) merged.push_back({q[i].first, v});
      ++i, ++j;
    }
  }
  return merged;
}

// Forward elimination.  Column order is left to right; the pivot row for
// a column is the candidate with fewest nonzeros, ties broken by the
// smallest original (row, col) position.
template <class K>
Echelon<K> echelon_form(const Mat<K>& a) {
  int n = a.rows(), m = a.cols();
  std::vector<std::vector<std::pair<int, K>>> rows(n);
  for (const auto& e : a.entries()) rows[e.row].push_back({e.col, e.value});

  Echelon<K> out;
  std::vector<bool> used(n, false);
  for (int col = 0; col < m; ++col) {
    int best = -1;
    for (int r = 0; r < n; ++r) {
      if (used[r] || rows[r].empty() || rows[r].front().first != col) continue;
      if (best == -1 || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == -1) continue;
    used[best] = true;
    K lead = rows[best].front().second;
    if (!(lead == K::one())) {
      K inv = lead.inv();
      for (auto& [c, v] : rows[best]) v = v * inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == best || rows[r].empty() || rows[r].front().first != col)
        continue;
      K factor = rows[r].front().second;
      rows[r] = sparse_axpy(rows[r], rows[best], factor);
    }
    out.rows.push_back(rows[best]);
    out.pivot_col.push_back(col);
    rows[best].clear();
  }
  // Back-substitution so pivot rows are fully reduced against each other.
  std::vector<int> pivot_of_col(m, -1);
  for (size_t i = 0; i < out.pivot_col.size(); ++i)
    pivot_of_col[out.pivot_col[i]] = static_cast<int>(i);
  for (int i = static_cast<int>(out.rows.size()) - 2; i >= 0; --i) {
    bool again = true;
    while (again) {
      again = false;
      for (size_t t = 1; t < out.rows[i].size(); ++t) {
        int c = out.rows[i][t].first;
        int j = (c < m) ? pivot_of_col[c] : -1;
        if (j > i) {
          K factor = out.rows[i][t].second;
          out.rows[i] = sparse_axpy(out.rows[i], out.rows[j], factor);
          again = true;
          break;
        }
      }
    }
  }
  return out;
}

template <class K>
int rank(const Mat<K>& a) {
  return static_cast<int>(echelon_form(a).pivot_col.size());
}

// Basis of ker(a) as the columns of the returned matrix.
template <class K>
Mat<K> kernel_basis(const Mat<K>& a) {
  Echelon<K> e = echelon_form(a);
  int m = a.cols();
  std::vector<int> pivot_of_col(m, -1);
  for (size_t i = 0; i < e.pivot_col.size(); ++i)
    pivot_of_col[e.pivot_col[i]] = static_cast<int>(i);

  std::vector<int> free_cols;
  for (int c = 0; c < m; ++c)
    if (pivot_of_col[c] == -1) free_cols.push_back(c);

  Mat<K> basis(m, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.set(fc, static_cast<int>(k), K::one());
    // Back-substitute: pivot rows are fully reduced against each other.
    for (size_t i = 0; i < e.rows.size(); ++i) {
      for (const auto& [c, v] : e.rows[i]) {
        if (c == fc) {
          basis.set(e.pivot_col[i], static_cast<int>(k), -v);
          break;
        }
      }
    }
  }
  return basis;
}

// Solve a * x = b columnwise; returns std::nullopt if inconsistent.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape");
  int m = a.cols();
  Mat<K> aug(a.rows(), m + b.cols());
  aug.place(a, 0, 0);
  aug.place(b, 0, m);
  Echelon<K> e = echelon_form(aug);
  Mat<K> x(m, b.cols());
  for (size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivot_col[i] >= m) return std::nullopt;  // pivot in rhs block
    for (const auto& [c, v] : e.rows[i])
      if (c >= m) x.set(e.pivot_col[i], c - m, v);
  }
  return x;
}

}  // namespace sph
