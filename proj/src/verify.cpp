#include "topo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "topo/enumerate.hpp"
#include "topo/normal.hpp"
#include "topo/util.hpp"

namespace topo {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string flat(const NormalVector& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.c.size(); ++i) {
    if (i) out << (i % 7 == 0 ? " / " : " ");
    out << v.c[i];
  }
  return out.str();
}

void fail(VerificationReport& r, const std::string& line) {
  r.pass = false;
  r.payload.push_back(line);
}

}  // namespace

std::string VerificationReport::to_string(bool with_timing) const {
  std::ostringstream out;
  out << "scenario: " << scenario << "\n";
  out << "params: " << params << "\n";
  out << "pass: " << (pass ? "yes" : "no") << "\n";
  for (const auto& line : payload) out << line << "\n";
  if (with_timing) out << "time_ms: " << millis << "\n";
  return out.str();
}

VerificationReport verify_theorem1(const Triangulation& t,
                                   const ScalingFunction& f, int64_t max_w1) {
  Timer timer;
  VerificationReport r;
  r.scenario = "theorem1";
  {
    std::string scale = serialize_scaling(f);
    while (!scale.empty() && scale.back() == '\n') scale.pop_back();
    std::ostringstream p;
    p << "tets=" << t.tet_count << " scale=" << scale << " max_w1=" << max_w1;
    r.params = p.str();
  }
  r.pass = true;

  auto [refined, map] = refine_scaled(t, f);

  EnumerationQuery coarse_q;
  coarse_q.tri = t;
  coarse_q.max_w1 = max_w1;
  auto coarse = enumerate_admissible(coarse_q);
  size_t pushed_ok = 0;
  for (const auto& v : coarse) {
    NormalVector fwd = push_forward(map, v);
    if (!is_admissible(refined, fwd)) {
      fail(r, "push-forward not admissible for: " + flat(v));
      continue;
    }
    PullbackResult back = classify_pullback(map, fwd);
    if (!back.ok) {
      fail(r, "push-forward fails to classify for: " + flat(v) + " (" +
                  back.diagnostic + ")");
      continue;
    }
    if (back.source != v || back.total_e_spheres() != 0) {
      fail(r, "round trip differs for: " + flat(v));
      continue;
    }
    ++pushed_ok;
  }

  EnumerationQuery fine_q;
  fine_q.tri = refined;
  fine_q.max_w1 = max_w1;
  auto fine = enumerate_admissible(fine_q);
  size_t pulled_ok = 0;
  for (const auto& v : fine) {
    PullbackResult back = classify_pullback(map, v);
    if (!back.ok) {
      fail(r, "classification failed for refined vector: " + flat(v) + " (" +
                  back.diagnostic + ")");
      continue;
    }
    if (!is_admissible(t, back.source)) {
      fail(r, "classified source not admissible for: " + flat(v));
      continue;
    }
    if (!back.source.is_zero()) {
      // The coarse part must itself survive a round trip.
      PullbackResult again =
          classify_pullback(map, push_forward(map, back.source));
      if (!again.ok || again.source != back.source ||
          again.total_e_spheres() != 0) {
        fail(r, "source round trip differs for: " + flat(v));
        continue;
      }
    }
    ++pulled_ok;
  }

  {
    std::ostringstream s;
    s << "checked: " << pushed_ok << "/" << coarse.size()
      << " coarse vectors, " << pulled_ok << "/" << fine.size()
      << " refined vectors";
    r.payload.push_back(s.str());
  }
  r.millis = timer.millis();
  return r;
}

VerificationReport verify_lemma_weights(int n) {
  Timer timer;
  VerificationReport r;
  r.scenario = "lemma-weights";
  r.params = "depth=" + std::to_string(n);
  r.pass = true;
  if (n < 1) throw Error("depth must be at least 1");
  static const char* kKinds[7] = {"t0", "t1", "t2", "t3", "q1", "q2", "q3"};
  for (int kind = 0; kind < 7; ++kind) {
    WeightGrowth g;
    try {
      g = weight_growth(kind, n);
    } catch (const Error& e) {
      fail(r, std::string("growth check failed for ") + kKinds[kind] + ": " +
                  e.what());
      continue;
    }
    if (g.w[0] < 3) {
      fail(r, std::string("initial weight below 3 for ") + kKinds[kind]);
      continue;
    }
    std::ostringstream line;
    line << kKinds[kind] << ": w =";
    for (int64_t w : g.w) line << " " << w;
    line << ", d =";
    for (int64_t d : g.d) line << " " << d;
    r.payload.push_back(line.str());
  }
  r.millis = timer.millis();
  return r;
}

VerificationReport verify_prism(const SurfaceTriangulation& s,
                                int64_t max_w1) {
  Timer timer;
  VerificationReport r;
  r.scenario = "prism";
  {
    std::ostringstream p;
    p << "triangles=" << s.triangle_count << " max_w1=" << max_w1;
    r.params = p.str();
  }
  r.pass = true;

  PrismComplex p = build_prism(s);
  EnumerationQuery q;
  q.tri = p.tri;
  q.max_w1 = max_w1;
  q.closed_only = true;
  auto found = enumerate_connected(q);
  for (const auto& c : found) {
    if (c.vector != p.canonical)
      fail(r, "closed connected vector differs from the canonical surface: " +
                  flat(c.vector));
  }
  {
    std::ostringstream s2;
    s2 << "closed connected vectors found: " << found.size()
       << ", canonical weight w1=" << weight(p.tri, p.canonical).w1;
    r.payload.push_back(s2.str());
  }
  r.millis = timer.millis();
  return r;
}

VerificationReport verify_outside(const PrismComplex& p, int n,
                                  int64_t max_w1) {
  Timer timer;
  VerificationReport r;
  r.scenario = "outside";
  r.pass = true;
  if (n < 1) throw Error("scale must be at least 1");

  HeavyExterior h = build_heavy_exterior(p, n);
  {
    std::ostringstream s;
    s << "prism_tets=" << p.tri.tet_count << " exterior_tets="
      << h.tri.tet_count << " scale=" << n << " max_w1=" << max_w1;
    r.params = s.str();
  }

  int64_t cap = std::min<int64_t>(max_w1, n);
  EnumerationQuery eq;
  eq.tri = h.tri;
  eq.max_w1 = cap;
  auto found = enumerate_admissible(eq);
  size_t inside = 0;
  for (const auto& v : found) {
    if (!supported_in(h.tri, v, h.prism_tets))
      fail(r, "vector of weight <= " + std::to_string(cap) +
                  " escapes the prism: " + flat(v));
    else
      ++inside;
  }
  {
    std::ostringstream s;
    s << "vectors within cap " << cap << ": " << found.size() << ", "
      << inside << " supported in the prism";
    r.payload.push_back(s.str());
  }
  r.millis = timer.millis();
  return r;
}

}  // namespace topo
