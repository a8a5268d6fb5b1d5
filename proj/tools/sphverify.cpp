// Command-line verification runner.
//
// Binds every suite to a single deterministic entry point: seeded
// randomness, flat key=value config files, environment overrides, and
// JSON certificates with a schema version.  Exit status: 0 when all
// selected checks pass, 1 when any check fails (the certificate records
// the counterexample), 2 on configuration errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sph/builtin_adjunctions.hpp"
#include "sph/doldkan.hpp"
#include "sph/field.hpp"

namespace sph {
namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "sphverify 1.0.0";
constexpr int kSchemaVersion = 1;

const std::vector<std::string> kSuiteNames = {
    "twist-lemma",  "counitsquares", "tmorphadjs",
    "sphericalize-stages", "sphadj",  "fourier",
    "dk-equivalence-compare", "tdkldk", "dk-minus", "oracles"};

struct Config {
  std::vector<std::string> suites;
  std::uint64_t field = 101;  // 0 = rationals
  Window window{-8, 8, 3};
  int trunc = 2;
  int trials = 10;
  std::uint64_t seed = 1;
  std::string out;
  std::string mutate = "none";
};

struct CheckRecord {
  std::string name;
  std::string statement;
  std::string inputs_digest;
  json homology = json::object();
  std::string witness_digest;
  bool skipped = false;
  std::string reason;  // failure detail or skip reason
  bool pass = false;
};

struct SuiteResult {
  std::string id;
  std::vector<CheckRecord> checks;
};

// ---------------------------------------------------------------------
// Digests: FNV-1a over a canonical string, for compact input/witness
// identification inside certificates.

class Digest {
 public:
  Digest& feed(const std::string& s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  Digest& feed(long v) { return feed(std::to_string(v)); }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h_));
    return std::string(buf);
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

template <class K>
void feed_complex(Digest& d, const ChainComplex<K>& c) {
  d.feed(c.lo());
  for (int n = c.lo(); n <= c.hi(); ++n) {
    d.feed(c.dim(n));
    d.feed(rank(c.diff(n)));
  }
}

template <class K>
void feed_diagram(Digest& d, const Diagram<K>& x) {
  d.feed(x.index().size());
  for (int i = 0; i < x.index().size(); ++i) feed_complex(d, x.value(i));
}

json homology_table(const std::map<int, int>& h) {
  json t = json::object();
  for (auto [deg, r] : h) t[std::to_string(deg)] = r;
  return t;
}

template <class K>
json diagram_homology(const Diagram<K>& x) {
  json t = json::array();
  for (int i = 0; i < x.index().size(); ++i)
    t.push_back(homology_table(x.value(i).homology()));
  return t;
}

// ---------------------------------------------------------------------
// Suite implementations.  Each returns records in declaration order.

template <class K>
SuiteResult suite_twist_lemma(const Config& cfg) {
  SuiteResult r{"twist-lemma", {}};
  Adjunction<K> gt = grtriv_adjunction<K>(cfg.window);
  if (cfg.mutate == "unit")
    gt = mutate_unit(gt);
  else if (cfg.mutate == "counit")
    gt = mutate_counit(gt);
  std::vector<Diagram<K>> xs = filtered_family<K>(cfg.window);
  std::vector<Diagram<K>> ys = graded_family<K>(cfg.window);
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    xs.push_back(random_filtered<K>(rng, cfg.window, 0, 1, 1));
    ys.push_back(random_graded<K>(rng, cfg.window, 0, 1, 1));
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    CheckRecord c;
    c.name = "twist/object-" + std::to_string(i);
    c.statement = "cone of the unit is the shift <-1>[1] on the interior";
    Digest d;
    feed_diagram(d, xs[i]);
    c.inputs_digest = d.hex();
    LMap<K> cmp = gt.twist_comp(xs[i]);
    c.homology["cone"] = diagram_homology(cmp.src);
    c.homology["shift"] = diagram_homology(cmp.tgt);
    Digest wd;
    feed_diagram(wd, cmp.src);
    feed_diagram(wd, cmp.tgt);
    c.witness_digest = wd.hex();
    // rebuild the cone from the unit itself so a sabotaged unit is seen
    Diagram<K> cone = cone_lmap(gt.unit(xs[i])).complex;
    bool hom_ok = true;
    for (int p = 0; p < cfg.window.size(); ++p)
      if (cfg.window.interior(cfg.window.level(p)))
        hom_ok = hom_ok &&
                 cone.value(p).homology() == cmp.tgt.value(p).homology();
    c.pass = hom_ok && levelwise_quasi_iso_interior(cmp, cfg.window);
    if (!c.pass) c.reason = "comparison is not an interior quasi-iso";
    r.checks.push_back(std::move(c));
  }
  for (size_t i = 0; i < ys.size(); ++i) {
    CheckRecord c;
    c.name = "cotwist/object-" + std::to_string(i);
    c.statement = "fiber of the counit is the shift <1>[-1] on the interior";
    Digest d;
    feed_diagram(d, ys[i]);
    c.inputs_digest = d.hex();
    LMap<K> cmp = gt.cotwist_comp(ys[i]);
    c.homology["fiber"] = diagram_homology(cmp.src);
    c.homology["shift"] = diagram_homology(cmp.tgt);
    Digest wd;
    feed_diagram(wd, cmp.src);
    c.witness_digest = wd.hex();
    // rebuild the fiber from the counit itself so a sabotaged counit is seen
    Diagram<K> fib = fiber_lmap(gt.counit(ys[i])).complex;
    bool hom_ok = true;
    for (int p = 0; p < cfg.window.size(); ++p)
      if (cfg.window.interior(cfg.window.level(p)))
        hom_ok = hom_ok &&
                 fib.value(p).homology() == cmp.tgt.value(p).homology();
    c.pass = hom_ok && levelwise_quasi_iso_interior(cmp, cfg.window);
    if (!c.pass) c.reason = "comparison is not an interior quasi-iso";
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_counitsquares(const Config& cfg) {
  SuiteResult r{"counitsquares", {}};
  Adjunction<K> gt = grtriv_adjunction<K>(cfg.window);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(cfg.window);
  if (cfg.mutate == "unit") {
    gt = mutate_unit(gt);
    ts = mutate_unit(ts);
  } else if (cfg.mutate == "counit") {
    gt = mutate_counit(gt);
    ts = mutate_counit(ts);
  }
  TwistData<K> tg = twist_cotwist(gt);
  TwistData<K> tt = twist_cotwist(ts);
  std::vector<Diagram<K>> xs = filtered_family<K>(cfg.window);
  std::vector<Diagram<K>> ys = graded_family<K>(cfg.window);
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    xs.push_back(random_filtered<K>(rng, cfg.window, 0, 1, 1));
    ys.push_back(random_graded<K>(rng, cfg.window, 0, 1, 1));
  }
  auto record = [&](const std::string& name, const Diagram<K>& in,
                    LMap<K> cmp, bool interior) {
    CheckRecord c;
    c.name = name;
    c.statement = "intertwiner between twisted values is a quasi-iso";
    Digest d;
    feed_diagram(d, in);
    c.inputs_digest = d.hex();
    Digest wd;
    feed_diagram(wd, cmp.src);
    feed_diagram(wd, cmp.tgt);
    c.witness_digest = wd.hex();
    c.pass = interior ? levelwise_quasi_iso_interior(cmp, cfg.window)
                      : levelwise_quasi_iso(cmp);
    if (!c.pass) c.reason = "intertwiner is not a quasi-iso";
    r.checks.push_back(std::move(c));
  };
  for (size_t i = 0; i < xs.size(); ++i) {
    record("alpha/grtriv-" + std::to_string(i), xs[i], alpha(gt, tg, xs[i]),
           true);
    record("beta/trivshiftgr-" + std::to_string(i), xs[i],
           beta(ts, tt, xs[i]), true);
  }
  for (size_t i = 0; i < ys.size(); ++i) {
    record("beta/grtriv-" + std::to_string(i), ys[i], beta(gt, tg, ys[i]),
           true);
    record("alpha/trivshiftgr-" + std::to_string(i), ys[i],
           alpha(ts, tt, ys[i]), true);
  }
  int ki = 0;
  for (auto& a : kan_corpus<K>()) {
    Rng krng(cfg.seed + 100 + ki);
    Diagram<K> x = random_diagram<K>(krng, a.L.q, 0, 1, 1);
    Diagram<K> y = random_diagram<K>(krng, a.L.p, 0, 1, 1);
    TwistData<K> tk = twist_cotwist(a);
    record("alpha/" + a.name, x, alpha(a, tk, x), false);
    record("beta/" + a.name, y, beta(a, tk, y), false);
    ++ki;
  }
  return r;
}

template <class K>
SuiteResult suite_tmorphadjs(const Config& cfg) {
  SuiteResult r{"tmorphadjs", {}};
  Adjunction<K> gt = grtriv_adjunction<K>(cfg.window);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(cfg.window);
  if (cfg.mutate == "unit") {
    gt = mutate_unit(gt);
    ts = mutate_unit(ts);
  } else if (cfg.mutate == "counit") {
    gt = mutate_counit(gt);
    ts = mutate_counit(ts);
  }
  std::vector<Diagram<K>> ys = graded_family<K>(cfg.window);
  // the shift adjunction pushes content toward the window edge, so its
  // composite is only claimed for objects supported away from the boundary
  int n = cfg.window.size();
  int m = cfg.window.margin;
  std::vector<Diagram<K>> xs;
  for (int p = m; p <= n - 1 - m; ++p) {
    xs.push_back(filtered_skyscraper(n, p, ChainComplex<K>::point(0)));
    if (p + 2 <= n - 1 - m)
      xs.push_back(filtered_interval(n, p, p + 2, ChainComplex<K>::point(1)));
  }
  Rng rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    ys.push_back(random_graded<K>(rng, cfg.window, 0, 1, 1));
    int p = (int)rng.range(m, n - 3 - m);
    xs.push_back(filtered_interval(n, p, p + 2, random_complex<K>(rng, 0, 1, 1)));
  }
  auto record = [&](const std::string& name, const Adjunction<K>& a,
                    const Diagram<K>& y) {
    CheckRecord c;
    c.name = name;
    c.statement =
        "the adjointability composite of twisted structure maps is a "
        "quasi-iso";
    Digest d;
    feed_diagram(d, y);
    c.inputs_digest = d.hex();
    AdjointabilityResult<K> res = tmorphadjs_composite(a, y);
    c.pass = res.pass;
    c.reason = res.detail;
    Digest wd;
    wd.feed(res.pass ? "pass" : res.detail);
    c.witness_digest = wd.hex();
    r.checks.push_back(std::move(c));
  };
  for (size_t i = 0; i < ys.size(); ++i)
    record("composite/grtriv-" + std::to_string(i), gt, ys[i]);
  for (size_t i = 0; i < xs.size(); ++i)
    record("composite/trivshiftgr-" + std::to_string(i), ts, xs[i]);
  int ki = 0;
  for (auto& a : kan_corpus<K>()) {
    if (a.L.q.size() > 5) {
      // the composite on this shape needs cone-functorial solves whose
      // cost grows super-exponentially with the target chain length
      CheckRecord c;
      c.name = "composite/" + a.name;
      c.statement =
          "the adjointability composite of twisted structure maps is a "
          "quasi-iso";
      c.skipped = true;
      c.reason = "composite cost is prohibitive on this shape";
      r.checks.push_back(std::move(c));
      ++ki;
      continue;
    }
    Rng krng(cfg.seed + 200 + ki);
    Diagram<K> y = random_diagram<K>(krng, a.L.p, 0, 1, 1);
    record("composite/" + a.name, a, y);
    ++ki;
  }
  return r;
}

template <class K>
SuiteResult suite_sphericalize_stages(const Config& cfg) {
  SuiteResult r{"sphericalize-stages", {}};
  Window half{0, 8, 1};
  Adjunction<K> gt = grtriv_adjunction<K>(half);
  std::vector<Diagram<K>> ys{
      graded_skyscraper(half.size(), 3, ChainComplex<K>::point(0))};
  for (int k = 1; k <= 3; ++k) {
    SphericalizeStage<K> st = sphericalize_stage(gt, k, ys);
    CheckRecord adjrec;
    adjrec.name = "stage-" + std::to_string(k) + "/connecting";
    adjrec.statement = "connecting squares of the stage tower are adjointable";
    adjrec.pass = true;
    for (bool ok : st.connecting_adjointable)
      if (!ok) {
        adjrec.pass = false;
        adjrec.reason = "a connecting square fails";
      }
    r.checks.push_back(std::move(adjrec));

    Diagram<K> x =
        filtered_skyscraper(half.size(), 3, ChainComplex<K>::point(0));
    LMap<K> cmp = st.comparison(x);
    Window safe{half.lo + k + half.margin, half.hi - half.margin, 0};
    CheckRecord c;
    c.name = "stage-" + std::to_string(k) + "/comparison";
    c.statement =
        "the stage left adjoint agrees with the shifted-window functor on "
        "safe positions";
    Digest d;
    feed_diagram(d, x);
    c.inputs_digest = d.hex();
    c.pass = true;
    Diagram<K> lhs = st.stage_L_ob(x);
    Diagram<K> rhs = gr_ob(shift_ob(x, -k, k));
    for (int i = 0; i < half.size(); ++i) {
      int lvl = half.level(i);
      if (lvl < safe.lo || lvl > safe.hi) continue;
      if (!is_quasi_iso(cmp.comps[i])) {
        c.pass = false;
        c.reason = "comparison fails at level " + std::to_string(lvl);
      }
      if (lhs.value(i).homology() != rhs.value(i).homology()) {
        c.pass = false;
        c.reason = "stage value differs at level " + std::to_string(lvl);
      }
    }
    c.homology["stage"] = diagram_homology(lhs);
    c.homology["shifted"] = diagram_homology(rhs);
    Digest wd;
    feed_diagram(wd, lhs);
    feed_diagram(wd, rhs);
    c.witness_digest = wd.hex();
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_sphadj(const Config& cfg) {
  SuiteResult r{"sphadj", {}};
  Adjunction<K> gt = grtriv_adjunction<K>(cfg.window);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(cfg.window);
  std::vector<Diagram<K>> xs = filtered_family<K>(cfg.window);
  std::vector<Diagram<K>> ys = graded_family<K>(cfg.window);
  {
    CheckRecord c;
    c.name = "spherical/grtriv";
    c.statement = "twist and cotwist are invertible shifts";
    auto cert = certify_spherical(gt, xs, ys);
    c.pass = cert.pass;
    c.reason = cert.detail;
    c.homology["candidate"] = {{"tc_is", cert.tc_inv_is},
                               {"tc_ds", cert.tc_inv_ds},
                               {"td_is", cert.td_inv_is},
                               {"td_ds", cert.td_inv_ds}};
    r.checks.push_back(std::move(c));
  }
  {
    CheckRecord c;
    c.name = "spherical/trivshiftgr";
    c.statement = "twist and cotwist are invertible shifts";
    auto cert = certify_spherical(ts, ys, xs);
    c.pass = cert.pass;
    c.reason = cert.detail;
    r.checks.push_back(std::move(c));
  }
  {
    CheckRecord c;
    c.name = "spherical/kan-rejected";
    c.statement = "an adjunction without shift candidates is not certified";
    auto cert = certify_spherical(kan_corpus<K>()[0], {}, {});
    c.pass = !cert.pass;
    if (!c.pass) c.reason = "certificate unexpectedly granted";
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_fourier(const Config& cfg) {
  SuiteResult r{"fourier", {}};
  Adjunction<K> gt = grtriv_adjunction<K>(cfg.window);
  Adjunction<K> ts = trivshiftgr_adjunction<K>(cfg.window);
  std::vector<Diagram<K>> xs = filtered_family<K>(cfg.window);
  std::vector<Diagram<K>> ys = graded_family<K>(cfg.window);
  auto cert = certify_spherical(gt, xs, ys);
  auto cert2 = certify_spherical(ts, ys, xs);
  auto record = [&](const std::string& name, bool ok,
                    const std::string& why) {
    CheckRecord c;
    c.name = name;
    c.statement = "transformed adjunction satisfies the triangle identities";
    c.pass = ok;
    if (!ok) c.reason = why;
    r.checks.push_back(std::move(c));
  };
  if (!cert.pass || !cert2.pass) {
    record("fourier/certificates", false, "sphericality certificate failed");
    return r;
  }
  FourierData<K> f = fourier(gt, cert);
  record("triangles/grtriv-sky", fourier_triangles_ok(f, ys[0], xs[0], cfg.window),
         "triangle homotopy missing");
  record("triangles/grtriv-interval",
         fourier_triangles_ok(f, ys[2], xs[1], cfg.window),
         "triangle homotopy missing");
  FourierData<K> f2 = fourier(ts, cert2);
  record("triangles/trivshiftgr",
         fourier_triangles_ok(f2, xs[0], ys[0], cfg.window),
         "triangle homotopy missing");
  record("roundtrip/grtriv", fourier_round_trip(gt, cert, xs[0], ys[0]),
         "round trip does not recover the adjoint");
  record("roundtrip/trivshiftgr", fourier_round_trip(ts, cert2, ys[0], xs[0]),
         "round trip does not recover the adjoint");
  return r;
}

// Shared corpus of truncated simplicial data, sized by truncation level.
template <class K>
std::vector<std::pair<std::string, OpFunctor<K>>> dk_corpus(int n,
                                                            std::uint64_t seed,
                                                            int count) {
  std::vector<std::pair<std::string, OpFunctor<K>>> out;
  out.push_back({"constant-point",
                 constant_functor(delta_plus(n), ChainComplex<K>::point(0))});
  out.push_back({"simplex", linearized_shape<K>(n, std::min(n, 2),
                                                SimplicialShape::Simplex)});
  out.push_back({"boundary", linearized_shape<K>(n, std::min(n, 2),
                                                 SimplicialShape::Boundary)});
  if (n >= 2)
    out.push_back({"horn", linearized_shape<K>(n, 2, SimplicialShape::Horn, 1)});
  Rng rng(seed);
  int cf = std::min(n, 2);  // keep cofree values small at high truncation
  int i = 0;
  while (static_cast<int>(out.size()) < count) {
    OpFunctor<K> f = cofree_functor<K>(rng, cf, 0, 1, 1, 2);
    if (cf < n) {
      // pad with constants so every truncation level exists
      OpFunctor<K> g = constant_functor(delta_plus(n), f.vals[0]);
      out.push_back({"cofree-const-" + std::to_string(i), std::move(g)});
    } else {
      out.push_back({"cofree-" + std::to_string(i), std::move(f)});
    }
    ++i;
  }
  return out;
}

template <class K>
SuiteResult suite_dk_equivalence_compare(const Config& cfg) {
  SuiteResult r{"dk-equivalence-compare", {}};
  int n = std::min(cfg.trunc, 4);
  for (auto& [name, x] : dk_corpus<K>(n, cfg.seed, std::max(cfg.trials, 4))) {
    CheckRecord c;
    c.name = "models/" + name;
    c.statement =
        "cube-colimit and normalized filtered totalizations agree levelwise";
    Digest d;
    for (const auto& v : x.vals) feed_complex(d, v);
    c.inputs_digest = d.hex();
    FilteredTotal<K> lt = ldk_tilde(x, n);
    FilteredMoore<K> lp = ldk_plus(x, n);
    c.pass = ldk_models_agree(lp, lt);
    if (!c.pass) c.reason = "levelwise homology or structure ranks differ";
    c.homology["levels"] = diagram_homology(lt.filt);
    Digest wd;
    feed_diagram(wd, lt.filt);
    feed_diagram(wd, lp.filt);
    c.witness_digest = wd.hex();
    r.checks.push_back(std::move(c));
  }
  Rng rng(cfg.seed + 17);
  for (int t = 0; t < cfg.trials; ++t) {
    int m = rng.range(1, 4);
    Diagram<K> d = random_diagram<K>(rng, cube_index(m), 0, 1, 1);
    CheckRecord c;
    c.name = "totcof/cube-" + std::to_string(t);
    c.statement =
        "total cofiber agrees with the iterated direction-wise cofiber";
    Digest dg;
    feed_diagram(dg, d);
    c.inputs_digest = dg.hex();
    TotcofData<K> tc = totcof(d, cube_cone(m));
    ChainComplex<K> oracle = totcof_cube_oracle(d, m);
    c.pass = tc.complex.homology() == oracle.homology() &&
             tc.complex.euler_char() == oracle.euler_char();
    if (!c.pass) c.reason = "total cofiber disagrees with the oracle";
    c.homology["totcof"] = homology_table(tc.complex.homology());
    Digest wd;
    feed_complex(wd, tc.complex);
    feed_complex(wd, oracle);
    c.witness_digest = wd.hex();
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_tdkldk(const Config& cfg) {
  SuiteResult r{"tdkldk", {}};
  int n = std::min(cfg.trunc, 3);
  for (auto& [name, x] : dk_corpus<K>(n, cfg.seed, std::max(cfg.trials, 4))) {
    CheckRecord c;
    c.name = "square/" + name;
    c.statement =
        "graded comparison is a quasi-iso and the mate composite is the "
        "identity";
    Digest d;
    for (const auto& v : x.vals) feed_complex(d, v);
    c.inputs_digest = d.hex();
    if (n < 1) {
      c.skipped = true;
      c.reason = "truncation too small for mate composites";
      r.checks.push_back(std::move(c));
      continue;
    }
    TdkldkReport rep = verify_tdkldk(x, n);
    c.pass = rep.ok();
    if (!c.pass) c.reason = "a comparison or mate check failed";
    json cmp = json::array(), mate = json::array();
    for (bool b : rep.comparison_ok) cmp.push_back(b);
    for (bool b : rep.mate_ok) mate.push_back(b);
    c.homology["comparison_ok"] = cmp;
    c.homology["mate_ok"] = mate;
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_dk_minus(const Config& cfg) {
  SuiteResult r{"dk-minus", {}};
  int n = std::min(cfg.trunc, 3);
  for (auto& [name, x] : dk_corpus<K>(n, cfg.seed, std::max(cfg.trials, 4))) {
    CheckRecord c;
    c.name = "dual/" + name;
    c.statement =
        "linear duality is an involution on the cube diagrams and the "
        "dualized comparisons stay quasi-isos";
    Digest d;
    for (const auto& v : x.vals) feed_complex(d, v);
    c.inputs_digest = d.hex();
    DkMinusReport rep = verify_dk_minus(x, n);
    c.pass = rep.ok();
    if (!c.pass)
      c.reason = rep.involution_ok ? "a dual comparison fails"
                                   : "duality is not an involution";
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_definitional_oracle(const Config& cfg, SuiteResult r) {
  // appended to the oracles suite when the scalar type allows it
  int j = std::min(cfg.trunc, 2);
  for (auto& [name, x] : dk_corpus<K>(std::max(j, 1), cfg.seed, 4)) {
    CheckRecord c;
    c.name = "definitional/" + name;
    c.statement =
        "counit cofibers over the glued index poset match the direct levels";
    Digest d;
    for (const auto& v : x.vals) feed_complex(d, v);
    c.inputs_digest = d.hex();
    FilteredTotal<K> lt = ldk_tilde(x, j);
    auto levels = definitional_filtered_levels(x, j);
    OpFunctor<K> y = restrict_infty(x, j);
    GradedTotal<K> dk = dk_infty(y, j);
    auto glevels = definitional_graded_levels(y, j);
    c.pass = true;
    for (size_t i = 0; i < levels.size(); ++i)
      if (levels[i].homology() !=
          lt.filt.value(static_cast<int>(i)).homology()) {
        c.pass = false;
        c.reason = "filtered level " + std::to_string(i) + " differs";
      }
    for (size_t i = 0; i < glevels.size(); ++i)
      if (glevels[i].homology() !=
          dk.graded.value(static_cast<int>(i)).homology()) {
        c.pass = false;
        c.reason = "graded level " + std::to_string(i) + " differs";
      }
    r.checks.push_back(std::move(c));
  }
  return r;
}

template <class K>
SuiteResult suite_oracles(const Config& cfg) {
  SuiteResult r{"oracles", {}};
  {
    CheckRecord c;
    c.name = "foundations/d-squared";
    c.statement = "differentials square to zero on random complexes";
    Rng rng(cfg.seed);
    c.pass = true;
    for (int t = 0; t < std::max(cfg.trials, 10); ++t) {
      ChainComplex<K> x = random_complex<K>(rng, -2, 3, 3);
      for (int n = x.lo(); n <= x.hi(); ++n)
        if (!(x.diff(n) * x.diff(n + 1)).is_zero()) c.pass = false;
    }
    if (!c.pass) c.reason = "a differential does not square to zero";
    r.checks.push_back(std::move(c));
  }
  {
    CheckRecord c;
    c.name = "foundations/cone-euler";
    c.statement = "Euler characteristic of a cone is the difference";
    Rng rng(cfg.seed + 1);
    c.pass = true;
    for (int t = 0; t < std::max(cfg.trials, 10); ++t) {
      ChainComplex<K> a = random_complex<K>(rng, 0, 2, 2);
      ChainComplex<K> b = random_complex<K>(rng, 0, 2, 2);
      auto f = random_chain_map(rng, a, b);
      if (cone(f).complex.euler_char() != b.euler_char() - a.euler_char())
        c.pass = false;
    }
    if (!c.pass) c.reason = "Euler characteristic identity fails";
    r.checks.push_back(std::move(c));
  }
  {
    CheckRecord c;
    c.name = "foundations/top-adjunction-triangles";
    c.statement = "triangle identities of the top-element adjunction";
    c.pass = true;
    TIotaAdjunction adj{5};
    for (int k = -1; k <= 4; ++k) {
      Fn lhs = compose_fn(adj.counit(k + 1), adj.t_mor(adj.unit(k), k + 1));
      Fn id(k + 2);
      for (int i = 0; i <= k + 1; ++i) id[i] = i;
      if (lhs != id) c.pass = false;
    }
    for (int l = 0; l <= 4; ++l) {
      Fn lhs = compose_fn(adj.counit(l), adj.unit(l));
      Fn id(l + 1);
      for (int i = 0; i <= l; ++i) id[i] = i;
      if (lhs != id) c.pass = false;
    }
    if (!c.pass) c.reason = "a triangle identity fails";
    r.checks.push_back(std::move(c));
  }
  {
    CheckRecord c;
    c.name = "foundations/face-poset-boolean";
    c.statement = "the face index poset is the Boolean lattice";
    c.pass = true;
    for (int n = 0; n <= 4; ++n) {
      FinPoset j = j_poset(n);
      int m = 1 << (n + 1);
      if (j.size() != m) c.pass = false;
      for (int s = 0; s < m && c.pass; ++s)
        for (int t = 0; t < m; ++t)
          if (j.leq(s, t) != (((static_cast<unsigned>(t) &
                                static_cast<unsigned>(s)) ==
                               static_cast<unsigned>(t))))
            c.pass = false;
    }
    if (!c.pass) c.reason = "face poset is not the Boolean lattice";
    r.checks.push_back(std::move(c));
  }
  return suite_definitional_oracle<K>(cfg, std::move(r));
}

// ---------------------------------------------------------------------
// Driver.

template <class K>
SuiteResult run_suite(const std::string& id, const Config& cfg) {
  if (id == "twist-lemma") return suite_twist_lemma<K>(cfg);
  if (id == "counitsquares") return suite_counitsquares<K>(cfg);
  if (id == "tmorphadjs") return suite_tmorphadjs<K>(cfg);
  if (id == "sphericalize-stages") return suite_sphericalize_stages<K>(cfg);
  if (id == "sphadj") return suite_sphadj<K>(cfg);
  if (id == "fourier") return suite_fourier<K>(cfg);
  if (id == "dk-equivalence-compare")
    return suite_dk_equivalence_compare<K>(cfg);
  if (id == "tdkldk") return suite_tdkldk<K>(cfg);
  if (id == "dk-minus") return suite_dk_minus<K>(cfg);
  if (id == "oracles") return suite_oracles<K>(cfg);
  throw std::invalid_argument("unknown suite: " + id);
}

template <class K>
int run_all(const Config& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  // worker pool: suites are independent; results merged in declaration
  // order regardless of completion order
  std::vector<std::future<SuiteResult>> futs;
  for (const auto& id : cfg.suites)
    futs.push_back(std::async(std::launch::async,
                              [&cfg, id] { return run_suite<K>(id, cfg); }));
  std::vector<SuiteResult> results;
  for (auto& f : futs) results.push_back(f.get());
  auto t1 = std::chrono::steady_clock::now();

  bool all_pass = true;
  json suites = json::array();
  for (const auto& sr : results) {
    json checks = json::array();
    bool suite_pass = true;
    for (const auto& c : sr.checks) {
      json jc;
      jc["name"] = c.name;
      jc["statement"] = c.statement;
      jc["inputs_digest"] = c.inputs_digest;
      jc["homology"] = c.homology;
      jc["witness_digest"] = c.witness_digest;
      jc["verdict"] = c.skipped ? "SKIPPED" : (c.pass ? "PASS" : "FAIL");
      if (!c.reason.empty()) jc["reason"] = c.reason;
      checks.push_back(std::move(jc));
      if (!c.skipped && !c.pass) suite_pass = false;
    }
    json js;
    js["id"] = sr.id;
    js["checks"] = std::move(checks);
    js["verdict"] = suite_pass ? "PASS" : "FAIL";
    suites.push_back(std::move(js));
    if (!suite_pass) all_pass = false;
    std::cout << (suite_pass ? "PASS " : "FAIL ") << sr.id << " ("
              << sr.checks.size() << " checks)\n";
  }

  json cert;
  cert["schema_version"] = kSchemaVersion;
  cert["tool"] = kToolVersion;
  json jcfg;
  jcfg["suites"] = cfg.suites;
  jcfg["field"] = cfg.field;
  jcfg["window"] = {{"lo", cfg.window.lo},
                    {"hi", cfg.window.hi},
                    {"margin", cfg.window.margin}};
  jcfg["trunc"] = cfg.trunc;
  jcfg["trials"] = cfg.trials;
  jcfg["seed"] = cfg.seed;
  jcfg["mutate"] = cfg.mutate;
  cert["config"] = std::move(jcfg);
  cert["suites"] = std::move(suites);
  cert["verdict"] = all_pass ? "PASS" : "FAIL";
  cert["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) {
      std::cerr << "cannot write certificate to " << cfg.out << "\n";
      return 2;
    }
    os << cert.dump(2) << "\n";
  } else {
    std::cout << cert.dump(2) << "\n";
  }
  std::cout << (all_pass ? "overall: PASS" : "overall: FAIL") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace
}  // namespace sph

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites with JSON certificates"};

  sph::Config cfg;
  std::string window_spec = "-8:8:3";
  app.set_config("--config", "",
                 "key=value config file; keys live in a [verify] section");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suites, "suites to run")
      ->envname("SPHVERIFY_SUITE")
      ->delimiter(',');
  verify->add_option("--field", cfg.field, "prime modulus, or 0 for rationals")
      ->envname("SPHVERIFY_FIELD");
  verify->add_option("--window", window_spec, "window as LO:HI:MARGIN")
      ->envname("SPHVERIFY_WINDOW");
  verify->add_option("--trunc", cfg.trunc, "truncation level")
      ->envname("SPHVERIFY_TRUNC");
  verify->add_option("--trials", cfg.trials, "random trials per suite")
      ->envname("SPHVERIFY_TRIALS");
  verify->add_option("--seed", cfg.seed, "PRNG seed")
      ->envname("SPHVERIFY_SEED");
  verify->add_option("--out", cfg.out, "certificate output path")
      ->envname("SPHVERIFY_OUT");
  verify
      ->add_option("--mutate", cfg.mutate,
                   "sabotage unit or counit for non-vacuity (unit|counit|none)")
      ->envname("SPHVERIFY_MUTATE")
      ->check(CLI::IsMember({"unit", "counit", "none"}));
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (!*verify) {
    std::cerr << "nothing to do: use the `verify` subcommand\n";
    return 2;
  }
  if (cfg.suites.empty()) {
    std::cerr << "config error: empty suite list\n";
    return 2;
  }
  for (const auto& s : cfg.suites)
    if (std::find(sph::kSuiteNames.begin(), sph::kSuiteNames.end(), s) ==
        sph::kSuiteNames.end()) {
      std::cerr << "config error: unknown suite " << s << "\n";
      return 2;
    }
  int lo, hi, margin;
  if (std::sscanf(window_spec.c_str(), "%d:%d:%d", &lo, &hi, &margin) != 3 ||
      margin < 0 || lo + margin > hi - margin) {
    std::cerr << "config error: bad window " << window_spec << "\n";
    return 2;
  }
  cfg.window = sph::Window{lo, hi, margin};
  if (cfg.trunc < 0 || cfg.trials < 0) {
    std::cerr << "config error: negative truncation or trials\n";
    return 2;
  }

  try {
    if (cfg.field == 0) return sph::run_all<sph::Rat>(cfg);
    sph::Fp::set_modulus(cfg.field);
    return sph::run_all<sph::Fp>(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
