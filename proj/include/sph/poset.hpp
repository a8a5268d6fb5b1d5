#pragma once

// Finite posets with an explicit order matrix, monotone maps between them,
// and the combinatorial helpers the diagram machinery needs: products,
// opposites, induced subposets and strict-chain enumeration.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sph {

class FinPoset {
 public:
  FinPoset() = default;
  FinPoset(std::vector<std::vector<bool>> le, std::vector<std::string> labels = {})
      : le_(std::move(le)), labels_(std::move(labels)) {
    int n = size();
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
      throw std::invalid_argument("label count mismatch");
    for (const auto& row : le_)
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("order matrix not square");
    for (int a = 0; a < n; ++a) {
      if (!le_[a][a]) throw std::invalid_argument("order not reflexive");
      for (int b = 0; b < n; ++b) {
        if (a != b && le_[a][b] && le_[b][a])
          throw std::invalid_argument("order not antisymmetric");
        for (int c = 0; c < n; ++c)
          if (le_[a][b] && le_[b][c] && !le_[a][c])
            throw std::invalid_argument("order not transitive");
      }
    }
  }

  int size() const { return static_cast<int>(le_.size()); }
  const std::vector<std::vector<bool>>& leq_matrix() const { return le_; }
  bool leq(int a, int b) const { return le_[a][b]; }
  bool lt(int a, int b) const { return a != b && le_[a][b]; }
  const std::string& label(int a) const { return labels_[a]; }
  bool has_labels() const { return !labels_.empty(); }

  static FinPoset chain(int m) {
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) le[a][b] = true;
    return FinPoset(std::move(le));
  }

  static FinPoset antichain(int m) {
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a) le[a][a] = true;
    return FinPoset(std::move(le));
  }

  FinPoset opposite() const {
    int n = size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) le[a][b] = le_[b][a];
    return FinPoset(std::move(le), labels_);
  }

  // Index of (a, b) is a * q.size() + b.
  static FinPoset product(const FinPoset& p, const FinPoset& q) {
    int n = p.size() * q.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int a1 = 0; a1 < p.size(); ++a1)
      for (int b1 = 0; b1 < q.size(); ++b1)
        for (int a2 = 0; a2 < p.size(); ++a2)
          for (int b2 = 0; b2 < q.size(); ++b2)
            le[a1 * q.size() + b1][a2 * q.size() + b2] =
                p.leq(a1, a2) && q.leq(b1, b2);
    return FinPoset(std::move(le));
  }

  // Subposet on the listed elements (result index = position in keep).
  FinPoset induced(const std::vector<int>& keep) const {
    int n = static_cast<int>(keep.size());
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) le[a][b] = le_[keep[a]][keep[b]];
    std::vector<std::string> labels;
    if (has_labels())
      for (int k : keep) labels.push_back(labels_[k]);
    return FinPoset(std::move(le), std::move(labels));
  }

  // Unique greatest element, if present.
  std::optional<int> terminal() const {
    for (int t = 0; t < size(); ++t) {
      bool all = true;
      for (int a = 0; a < size(); ++a) all = all && le_[a][t];
      if (all) return t;
    }
    return std::nullopt;
  }
  std::optional<int> initial() const { return opposite().terminal(); }

  // All nonempty strictly increasing chains x_0 < ... < x_s.
  std::vector<std::vector<int>> strict_chains() const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int last) -> void {
      for (int x = 0; x < size(); ++x) {
        if (last >= 0 && !lt(last, x)) continue;
        cur.push_back(x);
        out.push_back(cur);
        self(self, x);
        cur.pop_back();
      }
    };
    rec(rec, -1);
    return out;
  }

  bool operator==(const FinPoset& o) const { return le_ == o.le_; }

 private:
  std::vector<std::vector<bool>> le_;
  std::vector<std::string> labels_;
};

struct PosetMap {
  std::vector<int> map;  // element-wise image

  int operator()(int a) const { return map[a]; }

  bool monotone(const FinPoset& src, const FinPoset& tgt) const {
    if (static_cast<int>(map.size()) != src.size()) return false;
    for (int a = 0; a < src.size(); ++a) {
      if (map[a] < 0 || map[a] >= tgt.size()) return false;
      for (int b = 0; b < src.size(); ++b)
        if (src.leq(a, b) && !tgt.leq(map[a], map[b])) return false;
    }
    return true;
  }
};

// Verifies that the explicit bijection f : p -> q is an order isomorphism.
inline bool is_order_iso(const FinPoset& p, const FinPoset& q,
                         const std::vector<int>& f) {
  if (p.size() != q.size() || static_cast<int>(f.size()) != p.size())
    return false;
  std::vector<bool> hit(q.size(), false);
  for (int v : f) {
    if (v < 0 || v >= q.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(f[a], f[b])) return false;
  return true;
}

}  // namespace sph
