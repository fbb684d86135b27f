#include "wassign/decision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wassign {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kClusterAngleTol = 1e-9;

struct CircleEvent {
  double angle = 0.0;
  int other = 0;          // point whose circle crosses here
  int value_bucket = 0;   // index into the distinct bucket values
  Point where;
  bool tangent = false;   // snapped tangency: no side change
};

struct SweepContext {
  int anchor;                 // point p
  double anchor_weight;       // w
  double r;
  Circle circle;              // C_{p,w}(r)
  std::vector<int> others;    // all point indices != p
  std::vector<double> vals;   // distinct bucket values of W1 minus one w
  std::vector<int> first_index;  // 1-based first position per bucket
  int t() const { return static_cast<int>(vals.size()); }
};

SweepContext make_context(const PointWeightPair& pair, double r,
                          const Instance& inst) {
  SweepContext ctx;
  ctx.anchor = pair.point_index;
  ctx.anchor_weight = pair.weight;
  ctx.r = r;
  ctx.circle = {inst.points[pair.point_index], pair.weight * r};

  std::vector<double> rest = sorted_w1(inst);
  auto it = std::lower_bound(rest.begin(), rest.end(), pair.weight);
  if (it == rest.end() || *it != pair.weight)
    throw std::invalid_argument("pair weight not in W1");
  rest.erase(it);

  ctx.vals = distinct_values(rest);
  ctx.first_index.resize(ctx.vals.size());
  for (size_t b = 0, pos = 0; b < ctx.vals.size(); ++b) {
    while (rest[pos] != ctx.vals[b]) ++pos;
    ctx.first_index[b] = static_cast<int>(pos) + 1;
  }
  for (int q = 0; q < inst.n(); ++q)
    if (q != ctx.anchor) ctx.others.push_back(q);
  return ctx;
}

double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

std::vector<CircleEvent> circle_events(const SweepContext& ctx,
                                       const Instance& inst) {
  std::vector<CircleEvent> ev;
  for (int q : ctx.others) {
    for (int b = 0; b < ctx.t(); ++b) {
      const Circle other{inst.points[q], ctx.vals[b] * ctx.r};
      std::vector<Point> xs;
      try {
        xs = circle_intersections(ctx.circle, other);
      } catch (const std::invalid_argument&) {
        continue;  // identical circles: no subdivision of C
      }
      const bool tangent = xs.size() == 1;
      for (const Point& x : xs) {
        const double a = normalize_angle(
            std::atan2(x.y - ctx.circle.center.y, x.x - ctx.circle.center.x));
        ev.push_back({a, q, b, x, tangent});
      }
    }
  }
  std::sort(ev.begin(), ev.end(), [](const CircleEvent& a, const CircleEvent& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    if (a.other != b.other) return a.other < b.other;
    return a.value_bucket < b.value_bucket;
  });
  return ev;
}

Point point_at(const Circle& c, double angle) {
  return {c.center.x + c.radius * std::cos(angle),
          c.center.y + c.radius * std::sin(angle)};
}

int bucket_of_distance(const SweepContext& ctx, double d) {
  for (int b = 0; b < ctx.t(); ++b)
    if (d <= ctx.vals[b] * ctx.r) return b;
  return ctx.t();  // sentinel: no weight fits
}

// pi index of a bucket (1-based position in the sorted rest-of-W1 list);
// the sentinel gets n, which always violates pi(q_l) <= l.
int pi_of_bucket(const SweepContext& ctx, int b, int n) {
  return b == ctx.t() ? n : ctx.first_index[b];
}

class SweepEngine {
 public:
  SweepEngine(const SweepContext& ctx, const Instance& inst)
      : ctx_(ctx), inst_(inst), m_(static_cast<int>(ctx.others.size())) {}

  void init(Point rep) {
    st_.bucket_values = ctx_.vals;
    st_.first_index = ctx_.first_index;
    st_.bucket.assign(inst_.n(), 0);
    for (int q : ctx_.others)
      st_.bucket[q] = bucket_of_distance(ctx_, dist(inst_.points[q], rep));
    st_.order = ctx_.others;
    std::stable_sort(st_.order.begin(), st_.order.end(), [&](int a, int b) {
      if (st_.bucket[a] != st_.bucket[b]) return st_.bucket[a] < st_.bucket[b];
      return a < b;
    });
    st_.pos.assign(inst_.n(), -1);
    for (int i = 0; i < m_; ++i) st_.pos[st_.order[i]] = i;
    // cumulative form: up_ptr[b] = #elements with bucket <= b, minus one
    st_.up_ptr.assign(ctx_.t() + 1, -1);
    int run = -1;
    std::vector<int> cnt(ctx_.t() + 1, 0);
    for (int q : ctx_.others) ++cnt[st_.bucket[q]];
    for (int b = 0; b <= ctx_.t(); ++b) {
      run += cnt[b];
      st_.up_ptr[b] = run;
    }
    st_.violations = 0;
    for (int i = 0; i < m_; ++i)
      if (violates(i)) ++st_.violations;
  }

  bool feasible() const { return st_.violations == 0; }

  // Apply one transversal crossing of the circle (q, bucket value be).
  // Tangencies and fp grazes leave the state unchanged.
  void apply_crossing(const CircleEvent& e, bool strict) {
    if (e.tangent) return;
    const int q = e.other;
    const int be = e.value_bucket;
    const int b = st_.bucket[q];
    if (b == be) {
      move_up(q);  // leaving the disk: pi increases to the next bucket
    } else if (b == be + 1) {
      move_down(q);  // entering the disk: pi decreases to the crossed value
    } else if (strict) {
      throw std::logic_error("sweep: non-adjacent pi transition");
    }
  }

  // Feasibility at an event point: the base state with each event's point
  // relaxed to at most the crossed bucket (distance equals the radius there).
  bool feasible_at_cluster(const std::vector<CircleEvent>& cluster) const {
    std::vector<int> cnt(ctx_.t() + 1, 0);
    for (int b = 0; b <= ctx_.t(); ++b)
      cnt[b] = st_.up_ptr[b] - (b == 0 ? -1 : st_.up_ptr[b - 1]);
    // Effective buckets for the handful of points involved in the cluster;
    // kept as a flat list so the check stays O(cluster), not O(n).
    std::vector<std::pair<int, int>> eff;  // (point, bucket)
    for (const CircleEvent& e : cluster) {
      int cur = st_.bucket[e.other];
      std::pair<int, int>* slot = nullptr;
      for (auto& kv : eff)
        if (kv.first == e.other) {
          slot = &kv;
          cur = kv.second;
        }
      const int nb = std::min(cur, e.value_bucket);
      if (nb != cur) {
        --cnt[cur];
        ++cnt[nb];
      }
      if (slot)
        slot->second = nb;
      else
        eff.push_back({e.other, nb});
    }
    if (cnt[ctx_.t()] > 0) return false;
    int prefix = 0;
    for (int b = 0; b < ctx_.t(); ++b) {
      if (cnt[b] > 0 && ctx_.first_index[b] > prefix + 1) return false;
      prefix += cnt[b];
    }
    return true;
  }

  void verify_against(Point rep) const {
    int viol = 0;
    std::vector<int> fresh(inst_.n(), 0);
    for (int q : ctx_.others)
      fresh[q] = bucket_of_distance(ctx_, dist(inst_.points[q], rep));
    std::vector<int> sorted = ctx_.others;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](int a, int b) { return fresh[a] < fresh[b]; });
    for (int i = 0; i < m_; ++i)
      if (pi_of_bucket(ctx_, fresh[sorted[i]], inst_.n()) > i + 1) ++viol;
    if ((viol == 0) != (st_.violations == 0))
      throw std::logic_error("sweep: incremental verdict diverged");
  }

  const CircleSweepState& state() const { return st_; }

 private:
  bool violates(int i) const {
    return pi_of_bucket(ctx_, st_.bucket[st_.order[i]], inst_.n()) > i + 1;
  }

  void update_position(int i, int delta) {
    if (violates(i)) st_.violations += delta;
  }

  void swap_positions(int i, int j) {
    std::swap(st_.order[i], st_.order[j]);
    st_.pos[st_.order[i]] = i;
    st_.pos[st_.order[j]] = j;
  }

  void move_up(int q) {
    const int b = st_.bucket[q];
    const int u = st_.up_ptr[b];
    const int pq = st_.pos[q];
    update_position(pq, -1);
    if (u != pq) update_position(u, -1);
    swap_positions(pq, u);
    st_.bucket[q] = b + 1;
    st_.up_ptr[b] -= 1;
    update_position(pq, +1);
    if (u != pq) update_position(u, +1);
  }

  void move_down(int q) {
    const int b = st_.bucket[q];
    const int l = (b == 0 ? 0 : st_.up_ptr[b - 1] + 1);
    const int pq = st_.pos[q];
    update_position(pq, -1);
    if (l != pq) update_position(l, -1);
    swap_positions(pq, l);
    st_.bucket[q] = b - 1;
    st_.up_ptr[b - 1] += 1;
    update_position(pq, +1);
    if (l != pq) update_position(l, +1);
  }

  const SweepContext& ctx_;
  const Instance& inst_;
  int m_;
  CircleSweepState st_;
};

std::optional<DecisionWitness> make_witness(Point c, double r,
                                            const Instance& inst,
                                            const PointWeightPair& pair) {
  auto a = validate_candidate(c, r, inst, {{pair.point_index, pair.weight}});
  if (!a) return std::nullopt;
  return DecisionWitness{c, *a, pair};
}

}  // namespace

std::vector<IntervalOnCircle> circle_intervals(const PointWeightPair& pair,
                                               double r, const Instance& inst) {
  if (!(r > 0.0)) throw std::invalid_argument("circle_intervals requires r > 0");
  const SweepContext ctx = make_context(pair, r, inst);
  const auto ev = circle_events(ctx, inst);
  std::vector<IntervalOnCircle> out;
  if (ev.empty()) {
    out.push_back({ctx.circle, 0.0, kTwoPi, point_at(ctx.circle, 0.0)});
    return out;
  }
  const int E = static_cast<int>(ev.size());
  for (int i = 0; i < E; ++i) {
    const double a0 = ev[i].angle;
    double a1 = ev[(i + 1) % E].angle;
    if (i + 1 == E) a1 += kTwoPi;
    IntervalOnCircle iv{ctx.circle, a0, a1, {}};
    iv.representative = a1 - a0 <= 1e-12 ? ev[i].where
                                         : point_at(ctx.circle, (a0 + a1) / 2.0);
    out.push_back(iv);
  }
  return out;
}

SweepOutcome sweep_circle_full(const PointWeightPair& pair, double r,
                               const Instance& inst, bool full_verify,
                               bool early_exit) {
  if (!(r > 0.0)) throw std::invalid_argument("sweep_circle requires r > 0");
  const SweepContext ctx = make_context(pair, r, inst);
  const auto ev = circle_events(ctx, inst);
  SweepOutcome out;
  SweepEngine engine(ctx, inst);

  auto record = [&](double a0, double a1, Point rep, bool ok) {
    out.intervals.push_back({ctx.circle, a0, a1, rep});
    out.feasible.push_back(ok ? 1 : 0);
    if (ok && !out.witness) out.witness = make_witness(rep, r, inst, pair);
  };

  if (ev.empty()) {
    const Point rep = point_at(ctx.circle, 0.0);
    engine.init(rep);
    record(0.0, kTwoPi, rep, engine.feasible());
    return out;
  }

  const int E = static_cast<int>(ev.size());
  // Start at the widest gap so the initial representative is well separated
  // from every event.
  int start = 0;
  double best_gap = -1.0;
  for (int i = 0; i < E; ++i) {
    double gap = ev[(i + 1) % E].angle - ev[i].angle;
    if (i + 1 == E) gap += kTwoPi;
    if (gap > best_gap) {
      best_gap = gap;
      start = i;
    }
  }

  auto arc = [&](int i) {  // arc following event i (cyclic)
    const double a0 = ev[i % E].angle + (i >= E ? kTwoPi : 0.0);
    double a1 = ev[(i + 1) % E].angle;
    while (a1 < a0) a1 += kTwoPi;
    return std::pair<double, double>{a0, a1};
  };

  auto [s0, s1] = arc(start);
  const Point first_rep =
      s1 - s0 <= 1e-12 ? ev[start].where : point_at(ctx.circle, (s0 + s1) / 2.0);
  engine.init(first_rep);
  record(s0, s1, first_rep, engine.feasible());
  if (early_exit && out.witness) return out;

  int i = start + 1;
  while (i <= start + E) {
    // Gather the event cluster at this angle (degenerate radii put several
    // crossings in numerically the same position; handle them together).
    std::vector<CircleEvent> cluster;
    int j = i;
    auto circ_dist = [](double a, double b) {
      const double d = normalize_angle(a - b);
      return std::min(d, kTwoPi - d);
    };
    while (j <= start + E &&
           circ_dist(ev[j % E].angle, ev[i % E].angle) <= kClusterAngleTol) {
      cluster.push_back(ev[j % E]);
      ++j;
    }
    const bool at_ok = engine.feasible_at_cluster(cluster);
    const double ca = ev[i % E].angle;
    record(ca, ca, cluster.front().where, at_ok);
    if (early_exit && out.witness) return out;

    for (const CircleEvent& e : cluster) engine.apply_crossing(e, full_verify);

    if (j <= start + E) {
      auto [a0, a1] = arc(j - 1);
      const Point rep =
          a1 - a0 <= 1e-12 ? ev[(j - 1) % E].where
                           : point_at(ctx.circle, (a0 + a1) / 2.0);
      if (full_verify) engine.verify_against(rep);
      record(a0, a1, rep, engine.feasible());
      if (early_exit && out.witness) return out;
    }
    i = j;
  }
  return out;
}

std::optional<DecisionWitness> sweep_circle(const PointWeightPair& pair,
                                            double r, const Instance& inst) {
  return sweep_circle_full(pair, r, inst, false, true).witness;
}

std::optional<DecisionWitness> decide(const Instance& inst, double r) {
  validate_instance(inst);
  if (!(r > 0.0)) {
    if (r < 0.0) return std::nullopt;
    // r == 0: feasible only when all points coincide.
    for (const Point& p : inst.points)
      if (p.x != inst.points[0].x || p.y != inst.points[0].y)
        return std::nullopt;
    const auto w1 = sorted_w1(inst);
    const PointWeightPair pair{0, w1[0]};
    auto a = validate_candidate(inst.points[0], 0.0, inst, {{0, w1[0]}});
    if (!a) return std::nullopt;
    return DecisionWitness{inst.points[0], *a, pair};
  }
  std::vector<double> vals = distinct_values(sorted_w1(inst));
  std::reverse(vals.begin(), vals.end());  // weight descending
  for (int p = 0; p < inst.n(); ++p) {
    for (double w : vals) {
      if (auto wit = sweep_circle({p, w}, r, inst)) return wit;
    }
  }
  return std::nullopt;
}

}  // namespace wassign
