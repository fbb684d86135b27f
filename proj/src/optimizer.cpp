#include "wassign/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wassign {

std::vector<double> pair_event_rvalues(const PointWeightPair& a,
                                       const PointWeightPair& b,
                                       const Instance& inst) {
  const double d = dist(inst.points[a.point_index], inst.points[b.point_index]);
  if (d == 0.0) return {};
  std::vector<double> out;
  out.push_back(d / (a.weight + b.weight));
  if (std::abs(a.weight - b.weight) > 1e-12 * (a.weight + b.weight))
    out.push_back(d / std::abs(a.weight - b.weight));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> triple_event_rvalues(const PointWeightPair& a,
                                         const PointWeightPair& b,
                                         const PointWeightPair& c,
                                         const Instance& inst) {
  const WeightedPoint wa{inst.points[a.point_index], a.weight};
  const WeightedPoint wb{inst.points[b.point_index], b.weight};
  const WeightedPoint wc{inst.points[c.point_index], c.weight};
  std::vector<double> out;
  for (const auto& e : equidistant_points_of_triple(wa, wb, wc))
    if (e.radius > 0.0) out.push_back(e.radius);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CandidateEvent> candidate_radii(const Instance& inst) {
  const int n = inst.n();
  const auto vals = distinct_values(sorted_w1(inst));
  const int m = static_cast<int>(vals.size());

  std::vector<CandidateEvent> events;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
          const PointWeightPair pa{i, vals[a]}, pb{j, vals[b]};
          for (double r : pair_event_rvalues(pa, pb, inst))
            events.push_back({r, CandidateEvent::Kind::PairTangency, {pa, pb}});
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) {
            for (int c = 0; c < m; ++c) {
              const PointWeightPair pa{i, vals[a]}, pb{j, vals[b]},
                  pc{l, vals[c]};
              for (double r : triple_event_rvalues(pa, pb, pc, inst))
                events.push_back(
                    {r, CandidateEvent::Kind::TripleConcurrency, {pa, pb, pc}});
            }
          }
        }
      }
    }
  }
  std::sort(events.begin(), events.end(),
            [](const CandidateEvent& x, const CandidateEvent& y) {
              return x.r_value < y.r_value;
            });
  std::vector<CandidateEvent> dedup;
  for (auto& e : events) {
    if (!dedup.empty() &&
        e.r_value - dedup.back().r_value <= 1e-12 * (1.0 + e.r_value))
      continue;
    dedup.push_back(std::move(e));
  }
  return dedup;
}

RInterval multilist_interval_search(
    const std::vector<std::function<std::vector<double>()>>& lists,
    const std::function<bool(double)>& oracle, MultilistStats* stats) {
  struct List {
    std::vector<double> values;  // sorted
    int lo = 0, hi = 0;          // active half-open range [lo, hi)
  };
  std::vector<List> ls;
  for (const auto& gen : lists) {
    List l;
    l.values = gen();
    std::sort(l.values.begin(), l.values.end());
    l.hi = static_cast<int>(l.values.size());
    ls.push_back(std::move(l));
  }

  const double inf = std::numeric_limits<double>::infinity();
  RInterval out{-inf, inf, false, true};
  MultilistStats st;

  auto ask = [&](double r) {
    ++st.oracle_calls;
    const bool f = oracle(r);
    if (f) {
      if (r >= out.hi) throw std::runtime_error("oracle not monotone");
      out.hi = r;
      out.hi_feasible = true;
    } else {
      if (r <= out.lo) throw std::runtime_error("oracle not monotone");
      out.lo = r;
      out.lo_feasible = false;
    }
    if (out.lo >= out.hi) throw std::runtime_error("oracle not monotone");
  };

  for (;;) {
    // Shrink active ranges to the open bracket and pick per-list medians.
    struct Med {
      double value;
      long weight;
    };
    std::vector<Med> meds;
    long total = 0;
    for (auto& l : ls) {
      l.lo = static_cast<int>(std::upper_bound(l.values.begin(), l.values.end(),
                                               out.lo) -
                              l.values.begin());
      l.hi = static_cast<int>(std::lower_bound(l.values.begin(), l.values.end(),
                                               out.hi) -
                              l.values.begin());
      if (l.lo >= l.hi) continue;
      const long w = l.hi - l.lo;
      meds.push_back({l.values[l.lo + (l.hi - l.lo) / 2], w});
      total += w;
    }
    if (total == 0) break;
    ++st.iterations;

    // Weighted median of the per-list medians.
    std::sort(meds.begin(), meds.end(),
              [](const Med& a, const Med& b) { return a.value < b.value; });
    long acc = 0;
    double pivot = meds.back().value;
    for (const auto& m : meds) {
      acc += m.weight;
      if (2 * acc >= total) {
        pivot = m.value;
        break;
      }
    }
    ask(pivot);
  }

  if (stats) *stats = st;
  return out;
}

namespace {

std::vector<Anchor> event_anchors(const CandidateEvent& e) {
  std::vector<Anchor> out;
  for (const auto& pw : e.defining) out.push_back({pw.point_index, pw.weight});
  return out;
}

// Candidate centers with covering radius exactly e.r_value, derived from the
// defining pairs/triple of the event.
std::vector<Point> event_centers(const CandidateEvent& e, const Instance& inst) {
  std::vector<Point> out;
  if (e.kind == CandidateEvent::Kind::PairTangency) {
    const auto& a = e.defining[0];
    const auto& b = e.defining[1];
    const Point pa = inst.points[a.point_index], pb = inst.points[b.point_index];
    const double d = dist(pa, pb);
    if (d == 0.0) return out;
    const Point u = (pb - pa) / d;
    // External tangency: the two circles meet between the points.
    out.push_back(pa + u * (a.weight * e.r_value));
    // Internal tangency: one circle inside the other; the touch point lies
    // beyond the smaller-weight point.
    if (std::abs(a.weight - b.weight) > 1e-12 * (a.weight + b.weight)) {
      if (a.weight > b.weight)
        out.push_back(pa + u * (a.weight * e.r_value));
      else
        out.push_back(pa - u * (a.weight * e.r_value));
    }
  } else {
    const WeightedPoint wa{inst.points[e.defining[0].point_index],
                           e.defining[0].weight};
    const WeightedPoint wb{inst.points[e.defining[1].point_index],
                           e.defining[1].weight};
    const WeightedPoint wc{inst.points[e.defining[2].point_index],
                           e.defining[2].weight};
    for (const auto& eq : equidistant_points_of_triple(wa, wb, wc))
      if (std::abs(eq.radius - e.r_value) <= 1e-6 * (1.0 + e.r_value))
        out.push_back(eq.center);
  }
  return out;
}

SolveResult result_at(Point c, const Instance& inst, const Assignment& a) {
  SolveResult res;
  res.assignment = a;
  res.center = c;
  res.radius = covering_radius(c, inst, a);
  res.determinators = determinator_indices(c, inst, a, res.radius);
  return res;
}

bool all_points_coincide(const Instance& inst) {
  for (const Point& p : inst.points)
    if (dist(p, inst.points[0]) > 0.0) return false;
  return true;
}

SolveResult trivial_result(const Instance& inst) {
  Assignment a;
  a.values = sorted_w1(inst);
  std::sort(a.values.begin(), a.values.end());
  return result_at(inst.points[0], inst, a);
}

// Best valid solution among the given events, ranked by recomputed covering
// radius with near-ties broken lexicographically. Pair events carry an
// unordered weight pair (both orderings share the same tangency radius), so
// the swapped orientation is evaluated as well.
std::optional<SolveResult> best_over_events(
    const std::vector<CandidateEvent>& events, const Instance& inst) {
  std::optional<SolveResult> best;
  auto consider = [&](const CandidateEvent& e) {
    const auto anchors = event_anchors(e);
    if (!anchors_form_submultiset(inst, anchors)) return;
    for (Point c : event_centers(e, inst)) {
      const auto a = validate_candidate(c, e.r_value, inst, anchors);
      if (!a) continue;
      SolveResult res = result_at(c, inst, *a);
      if (!best ||
          better_solution(res.radius, res.assignment.values, best->radius,
                          best->assignment.values))
        best = std::move(res);
    }
  };
  for (const auto& e : events) {
    consider(e);
    if (e.kind == CandidateEvent::Kind::PairTangency &&
        e.defining[0].weight != e.defining[1].weight) {
      CandidateEvent swapped = e;
      std::swap(swapped.defining[0].weight, swapped.defining[1].weight);
      consider(swapped);
    }
  }
  return best;
}

}  // namespace

SolveResult solve_exact(const Instance& inst) {
  validate_instance(inst);
  if (inst.n() == 1 || all_points_coincide(inst)) return trivial_result(inst);
  const auto events = candidate_radii(inst);
  auto best = best_over_events(events, inst);
  if (!best) throw std::logic_error("no candidate event validated");
  return *best;
}

SolveResult solve_parametric(const Instance& inst) {
  validate_instance(inst);
  if (inst.n() == 1 || all_points_coincide(inst)) return trivial_result(inst);

  const int n = inst.n();
  const auto vals = distinct_values(sorted_w1(inst));

  // One lazily produced event-radius list per (point, distinct weight): every
  // pair and triple event has a lexicographically first defining pair, which
  // is the list it is charged to.
  std::vector<std::function<std::vector<double>()>> lists;
  for (int i = 0; i < n; ++i) {
    for (double w : vals) {
      lists.push_back([i, w, &inst, &vals]() {
        std::vector<double> out;
        const PointWeightPair pa{i, w};
        const int m = static_cast<int>(vals.size());
        const int ai = static_cast<int>(std::lower_bound(vals.begin(),
                                                         vals.end(), w) -
                                        vals.begin());
        for (int j = i + 1; j < inst.n(); ++j) {
          for (int b = ai; b < m; ++b) {
            for (double r : pair_event_rvalues(pa, {j, vals[b]}, inst))
              out.push_back(r);
          }
          for (int l = j + 1; l < inst.n(); ++l) {
            for (int b = 0; b < m; ++b) {
              for (int c = 0; c < m; ++c) {
                for (double r : triple_event_rvalues(pa, {j, vals[b]},
                                                     {l, vals[c]}, inst))
                  out.push_back(r);
              }
            }
          }
        }
        return out;
      });
    }
  }

  auto oracle = [&](double r) { return decide(inst, r).has_value(); };
  const RInterval bracket = multilist_interval_search(lists, oracle);
  if (!std::isfinite(bracket.hi))
    throw std::logic_error("no feasible candidate radius");
  const double rstar = bracket.hi;

  auto witness = decide(inst, rstar);
  if (!witness) witness = decide(inst, rstar * (1.0 + 1e-9));
  if (!witness) throw std::logic_error("optimum radius not feasible");
  return result_at(witness->center, inst, witness->assignment);
}

}  // namespace wassign
