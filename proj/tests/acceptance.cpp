// Acceptance gate: one pass/fail line per criterion, exact arithmetic
// throughout.  Each criterion also carries a wall-clock budget; exceeding
// it fails the criterion.

#include "sph/builtin_adjunctions.hpp"
#include "sph/doldkan.hpp"
#include "sph/field.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace sph;

namespace {

int g_failures = 0;

template <class F>
void criterion(int num, const std::string& what, long budget_ms, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string why;
  try {
    ok = body(why);
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                .count();
  if (ms > budget_ms) {
    ok = false;
    why = "exceeded " + std::to_string(budget_ms) + "ms budget";
  }
  std::printf("%s criterion %d: %s (%ldms)%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), ms, why.empty() ? "" : " -- ", why.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------- corpora

template <class K>
std::vector<Diagram<K>> filtered_corpus(const Window& w, int randoms,
                                        std::uint64_t seed) {
  std::vector<Diagram<K>> xs = filtered_family<K>(w);
  Rng rng(seed);
  for (int t = 0; t < randoms; ++t)
    xs.push_back(random_filtered<K>(rng, w, 0, 1, 1));
  return xs;
}

template <class K>
std::vector<Diagram<K>> graded_corpus(const Window& w, int randoms,
                                      std::uint64_t seed) {
  std::vector<Diagram<K>> ys = graded_family<K>(w);
  Rng rng(seed);
  for (int t = 0; t < randoms; ++t)
    ys.push_back(random_graded<K>(rng, w, 0, 1, 1));
  return ys;
}

// Interior-supported filtered objects: the shift adjunction's composite is
// only claimed away from the window boundary.
template <class K>
std::vector<Diagram<K>> interior_filtered_corpus(const Window& w, int randoms,
                                                 std::uint64_t seed) {
  int n = w.size(), m = w.margin;
  std::vector<Diagram<K>> xs;
  for (int p = m; p <= n - 1 - m; ++p) {
    xs.push_back(filtered_skyscraper(n, p, ChainComplex<K>::point(0)));
    if (p + 2 <= n - 1 - m)
      xs.push_back(filtered_interval(n, p, p + 2, ChainComplex<K>::point(1)));
  }
  Rng rng(seed);
  for (int t = 0; t < randoms; ++t) {
    int p = (int)rng.range(m, n - 3 - m);
    xs.push_back(
        filtered_interval(n, p, p + 2, random_complex<K>(rng, 0, 1, 1)));
  }
  return xs;
}

template <class K>
std::vector<OpFunctor<K>> truncated_corpus(int n, std::uint64_t seed,
                                           int count) {
  std::vector<OpFunctor<K>> out;
  out.push_back(constant_functor(delta_plus(n), ChainComplex<K>::point(0)));
  out.push_back(
      linearized_shape<K>(n, std::min(n, 2), SimplicialShape::Simplex));
  out.push_back(
      linearized_shape<K>(n, std::min(n, 2), SimplicialShape::Boundary));
  if (n >= 2)
    out.push_back(linearized_shape<K>(n, 2, SimplicialShape::Horn, 1));
  Rng rng(seed);
  int cf = std::min(n, 2);  // keep cofree values small at high truncation
  while (static_cast<int>(out.size()) < count) {
    OpFunctor<K> f = cofree_functor<K>(rng, cf, 0, 1, 1, 2);
    if (cf < n)
      out.push_back(constant_functor(delta_plus(n), f.vals[0]));
    else
      out.push_back(std::move(f));
  }
  return out;
}

// ------------------------------------------------------------- criteria

// With `full_map` the check runs the projection comparison map itself;
// otherwise it compares exact levelwise homology of cone(unit) against the
// shift, which determines the quasi-isomorphism type over a field.
template <class K>
bool twist_identification(const Window& w, bool full_map, std::string& why) {
  Adjunction<K> gt = grtriv_adjunction<K>(w);
  std::vector<Diagram<K>> xs = filtered_corpus<K>(w, 50, 2026);
  if (filtered_family<K>(w).size() < 17) {
    why = "generating family too small";
    return false;
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    bool ok;
    if (full_map) {
      ok = levelwise_quasi_iso_interior(gt.twist_comp(xs[i]), w);
    } else {
      Diagram<K> cone = cone_lmap(gt.unit(xs[i])).complex;
      Diagram<K> tgt =
          diagram_index_shift(diagram_degree_shift(xs[i], 1), -1);
      ok = true;
      for (int p = 0; p < w.size(); ++p)
        if (w.interior(w.level(p)) &&
            cone.value(p).homology() != tgt.value(p).homology())
          ok = false;
    }
    if (!ok) {
      why = "twist comparison fails on object " + std::to_string(i);
      return false;
    }
  }
  return true;
}

template <class K>
bool intertwiners(const Window& w, std::string& why) {
  Adjunction<K> gt = grtriv_adjunction<K>(w);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(w);
  TwistData<K> tg = twist_cotwist(gt);
  TwistData<K> tt = twist_cotwist(ts);
  std::vector<Diagram<K>> xs = filtered_corpus<K>(w, 50, 2026);
  std::vector<Diagram<K>> ys = graded_corpus<K>(w, 50, 2027);
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!levelwise_quasi_iso_interior(alpha(gt, tg, xs[i]), w) ||
        !levelwise_quasi_iso_interior(beta(ts, tt, xs[i]), w)) {
      why = "filtered object " + std::to_string(i);
      return false;
    }
  }
  for (size_t i = 0; i < ys.size(); ++i) {
    if (!levelwise_quasi_iso_interior(beta(gt, tg, ys[i]), w) ||
        !levelwise_quasi_iso_interior(alpha(ts, tt, ys[i]), w)) {
      why = "graded object " + std::to_string(i);
      return false;
    }
  }
  int ki = 0;
  for (auto& a : kan_corpus<K>()) {
    Rng krng(100 + ki);
    Diagram<K> x = random_diagram<K>(krng, a.L.q, 0, 1, 1);
    Diagram<K> y = random_diagram<K>(krng, a.L.p, 0, 1, 1);
    TwistData<K> tk = twist_cotwist(a);
    if (!levelwise_quasi_iso(alpha(a, tk, x)) ||
        !levelwise_quasi_iso(beta(a, tk, y))) {
      why = a.name;
      return false;
    }
    ++ki;
  }
  return true;
}

template <class K>
bool adjointability(const Window& w, std::string& why) {
  Adjunction<K> gt = grtriv_adjunction<K>(w);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(w);
  std::vector<Diagram<K>> ys = graded_corpus<K>(w, 10, 2028);
  std::vector<Diagram<K>> xs = interior_filtered_corpus<K>(w, 10, 2029);
  for (size_t i = 0; i < ys.size(); ++i)
    if (!tmorphadjs_composite(gt, ys[i]).pass) {
      why = "graded object " + std::to_string(i);
      return false;
    }
  for (size_t i = 0; i < xs.size(); ++i)
    if (!tmorphadjs_composite(ts, xs[i]).pass) {
      why = "filtered object " + std::to_string(i);
      return false;
    }
  int ki = 0;
  for (auto& a : kan_corpus<K>()) {
    if (a.L.q.size() > 5) {
      ++ki;  // composite cost is prohibitive on this shape
      continue;
    }
    Rng krng(200 + ki);
    Diagram<K> y = random_diagram<K>(krng, a.L.p, 0, 1, 1);
    if (!tmorphadjs_composite(a, y).pass) {
      why = a.name;
      return false;
    }
    ++ki;
  }
  // non-vacuity: sabotaged structure maps must break the composite
  Adjunction<K> bad_u = mutate_unit(gt);
  Adjunction<K> bad_c = mutate_counit(gt);
  bool u_broke = false, c_broke = false;
  for (size_t i = 0; i < ys.size() && !(u_broke && c_broke); ++i) {
    if (!tmorphadjs_composite(bad_u, ys[i]).pass) u_broke = true;
    if (!tmorphadjs_composite(bad_c, ys[i]).pass) c_broke = true;
  }
  if (!u_broke || !c_broke) {
    why = "mutation did not break the composite";
    return false;
  }
  return true;
}

template <class K>
bool stabilization(std::string& why) {
  Window half{0, 8, 1};
  Adjunction<K> gt = grtriv_adjunction<K>(half);
  std::vector<Diagram<K>> ys{
      graded_skyscraper(half.size(), 3, ChainComplex<K>::point(0))};
  for (int k = 1; k <= 3; ++k) {
    SphericalizeStage<K> st = sphericalize_stage(gt, k, ys);
    for (bool ok : st.connecting_adjointable)
      if (!ok) {
        why = "connecting square fails at stage " + std::to_string(k);
        return false;
      }
    Diagram<K> x =
        filtered_skyscraper(half.size(), 3, ChainComplex<K>::point(0));
    LMap<K> cmp = st.comparison(x);
    Diagram<K> lhs = st.stage_L_ob(x);
    Diagram<K> rhs = gr_ob(shift_ob(x, -k, k));
    Window safe{half.lo + k + half.margin, half.hi - half.margin, 0};
    for (int i = 0; i < half.size(); ++i) {
      int lvl = half.level(i);
      if (lvl < safe.lo || lvl > safe.hi) continue;
      if (!is_quasi_iso(cmp.comps[i]) ||
          lhs.value(i).homology() != rhs.value(i).homology()) {
        why = "stage " + std::to_string(k) + " differs at level " +
              std::to_string(lvl);
        return false;
      }
    }
  }
  return true;
}

template <class K>
bool fourier_transform(const Window& w, std::string& why) {
  Adjunction<K> gt = grtriv_adjunction<K>(w);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(w);
  std::vector<Diagram<K>> xs = filtered_family<K>(w);
  std::vector<Diagram<K>> ys = graded_family<K>(w);
  auto cert = certify_spherical(gt, xs, ys);
  auto cert2 = certify_spherical(ts, ys, xs);
  if (!cert.pass || !cert2.pass) {
    why = "sphericality certificate failed";
    return false;
  }
  FourierData<K> f = fourier(gt, cert);
  FourierData<K> f2 = fourier(ts, cert2);
  if (!fourier_triangles_ok(f, ys[0], xs[0], w) ||
      !fourier_triangles_ok(f, ys[2], xs[1], w) ||
      !fourier_triangles_ok(f2, xs[0], ys[0], w)) {
    why = "triangle homotopy missing";
    return false;
  }
  for (size_t i = 0; i < xs.size(); ++i)
    if (!fourier_round_trip(gt, cert, xs[i], ys[i % ys.size()])) {
      why = "round trip fails on family object " + std::to_string(i);
      return false;
    }
  if (!fourier_round_trip(ts, cert2, ys[0], xs[0])) {
    why = "round trip fails for the shift adjunction";
    return false;
  }
  return true;
}

template <class K>
bool model_comparison(std::string& why) {
  int done = 0;
  for (int n = 1; n <= 4; ++n) {
    int count = n <= 2 ? 8 : 7;
    for (auto& x : truncated_corpus<K>(n, 300 + n, count)) {
      FilteredTotal<K> lt = ldk_tilde(x, n);
      FilteredMoore<K> lp = ldk_plus(x, n);
      if (!ldk_models_agree(lp, lt)) {
        why = "models disagree at truncation " + std::to_string(n);
        return false;
      }
      ++done;
    }
  }
  if (done < 30) {
    why = "corpus smaller than 30 inputs";
    return false;
  }
  Rng rng(400);
  for (int t = 0; t < 100; ++t) {
    int m = rng.range(1, 4);
    Diagram<K> d = random_diagram<K>(rng, cube_index(m), 0, 1, 1);
    TotcofData<K> tc = totcof(d, cube_cone(m));
    ChainComplex<K> oracle = totcof_cube_oracle(d, m);
    if (tc.complex.homology() != oracle.homology() ||
        tc.complex.euler_char() != oracle.euler_char()) {
      why = "total cofiber disagrees with the cube oracle on trial " +
            std::to_string(t);
      return false;
    }
  }
  return true;
}

template <class K>
bool definitional_oracle(std::string& why) {
  int j = 2;
  for (auto& x : truncated_corpus<K>(j, 500, 10)) {
    FilteredTotal<K> lt = ldk_tilde(x, j);
    auto levels = definitional_filtered_levels(x, j);
    for (size_t i = 0; i < levels.size(); ++i)
      if (levels[i].homology() !=
          lt.filt.value(static_cast<int>(i)).homology()) {
        why = "filtered level " + std::to_string(i) + " differs";
        return false;
      }
    OpFunctor<K> y = restrict_infty(x, j);
    GradedTotal<K> dk = dk_infty(y, j);
    auto glevels = definitional_graded_levels(y, j);
    for (size_t i = 0; i < glevels.size(); ++i)
      if (glevels[i].homology() !=
          dk.graded.value(static_cast<int>(i)).homology()) {
        why = "graded level " + std::to_string(i) + " differs";
        return false;
      }
  }
  return true;
}

template <class K>
bool square_and_mate(std::string& why) {
  int n = 3;
  for (auto& x : truncated_corpus<K>(n, 600, 10)) {
    if (!verify_tdkldk(x, n).ok()) {
      why = "comparison or mate composite fails";
      return false;
    }
    DkMinusReport rep = verify_dk_minus(x, n);
    if (!rep.ok()) {
      why = rep.involution_ok ? "a dual comparison fails"
                              : "duality is not an involution";
      return false;
    }
  }
  return true;
}

template <class K>
bool foundations(std::string& why) {
  Rng rng(700);
  for (int t = 0; t < 50; ++t) {
    ChainComplex<K> x = random_complex<K>(rng, -2, 3, 3);
    for (int n = x.lo(); n <= x.hi(); ++n)
      if (!(x.diff(n) * x.diff(n + 1)).is_zero()) {
        why = "a differential does not square to zero";
        return false;
      }
    ChainComplex<K> a = random_complex<K>(rng, 0, 2, 2);
    ChainComplex<K> b = random_complex<K>(rng, 0, 2, 2);
    auto f = random_chain_map(rng, a, b);
    if (cone(f).complex.euler_char() != b.euler_char() - a.euler_char()) {
      why = "cone Euler characteristic identity fails";
      return false;
    }
  }
  TIotaAdjunction adj{5};
  for (int k = -1; k <= 4; ++k) {
    Fn lhs = compose_fn(adj.counit(k + 1), adj.t_mor(adj.unit(k), k + 1));
    Fn id(k + 2);
    for (int i = 0; i <= k + 1; ++i) id[i] = i;
    if (lhs != id) {
      why = "a triangle identity fails";
      return false;
    }
  }
  for (int l = 0; l <= 4; ++l) {
    Fn lhs = compose_fn(adj.counit(l), adj.unit(l));
    Fn id(l + 1);
    for (int i = 0; i <= l; ++i) id[i] = i;
    if (lhs != id) {
      why = "a triangle identity fails";
      return false;
    }
  }
  for (int n = 0; n <= 4; ++n) {
    FinPoset j = j_poset(n);
    int m = 1 << (n + 1);
    if (j.size() != m) {
      why = "face index poset has the wrong size";
      return false;
    }
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        if (j.leq(s, t) != ((s & t) == t)) {
          why = "face index poset order differs from inclusion";
          return false;
        }
  }
  return true;
}

}  // namespace

int main() {
  Fp::set_modulus(101);
  const Window w{-8, 8, 3};

  criterion(1,
            "cone of the unit is the shift <-1>[1] on the window interior, "
            "over F_101 and over the rationals",
            10000, [&](std::string& why) {
              return twist_identification<Fp>(w, true, why) &&
                     twist_identification<Rat>(w, false, why);
            });
  criterion(2,
            "alpha and beta intertwiners are quasi-isos on the corpus and "
            "on five poset-map adjunctions",
            30000, [&](std::string& why) { return intertwiners<Fp>(w, why); });
  criterion(3,
            "the adjointability composite is a quasi-iso on the corpus and "
            "mutating a structure map breaks it",
            60000, [&](std::string& why) { return adjointability<Fp>(w, why); });
  criterion(4,
            "stagewise construction agrees with the full adjunction on the "
            "k-shifted safe window for k = 1, 2, 3",
            60000, [&](std::string& why) { return stabilization<Fp>(why); });
  criterion(5,
            "transformed adjunctions satisfy the triangle identities and "
            "the round trip recovers the adjoint",
            60000,
            [&](std::string& why) { return fourier_transform<Fp>(w, why); });
  criterion(6,
            "cube-colimit and normalized filtered totalizations agree on 30 "
            "inputs; total cofiber matches the cube oracle on 100 cubes",
            120000,
            [&](std::string& why) { return model_comparison<Fp>(why); });
  criterion(7,
            "counit cofibers over the glued index poset match the direct "
            "levels on 10 inputs",
            120000,
            [&](std::string& why) { return definitional_oracle<Fp>(why); });
  criterion(8,
            "graded comparison and mate composites pass on 10 inputs and "
            "survive the op-involution",
            120000, [&](std::string& why) { return square_and_mate<Fp>(why); });
  criterion(9,
            "differentials square to zero, cone Euler identity, top-element "
            "adjunction triangles, Boolean face posets",
            10000, [&](std::string& why) { return foundations<Fp>(why); });

  std::printf("%s\n", g_failures == 0 ? "acceptance: PASS"
                                      : "acceptance: FAIL");
  return g_failures == 0 ? 0 : 1;
}
