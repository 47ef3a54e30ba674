#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "siegel/siegel_klein.hpp"
#include "siegel/siegel_upper.hpp"

namespace siegel {

/// Smallest-enclosing-ball approximation by the farthest-point walk
/// c <- c #_{t_l} p_far with the harmonic step schedule t_l = 1/(l+1),
/// instantiated on the positive-definite cone and on both readings of the
/// bounded matrix disk. The disk variant recenters the whole cloud at every
/// iteration; the Hilbert variant walks straight segments and never touches a
/// matrix square root.

enum class Model { Spd, PoincareDisk, KleinDisk };

inline const char* model_name(Model m) {
  switch (m) {
    case Model::Spd: return "spd";
    case Model::PoincareDisk: return "poincare";
    case Model::KleinDisk: return "klein";
  }
  return "?";
}

template <typename Scalar>
struct PointCloud {
  Model model = Model::KleinDisk;
  std::vector<ComplexMatrix<Scalar>> points;
};

template <typename Scalar>
struct TraceRecord {
  int iteration = 0;
  int farthest_index = 0;
  Scalar radius_estimate = Scalar(0);
  CallCounters::Snapshot counters;
};

template <typename Scalar>
struct EnclosingBall {
  Model model = Model::KleinDisk;
  ComplexMatrix<Scalar> center;
  Scalar radius = Scalar(0);  // recomputed from the final center, not the loop
  int iterations_run = 0;
  std::vector<TraceRecord<Scalar>> trace;
  CallCounters::Snapshot loop_counters;   // counted inside the iteration only
  CallCounters::Snapshot total_counters;  // includes map-back and radius recompute
};

template <typename Scalar>
struct SebConfig {
  int iterations = 100;          // L
  Scalar klein_eps = Scalar(1e-8);
  bool record_trace = false;
  bool early_stop = false;       // optional: stop when the step displacement
  Scalar early_stop_displacement = Scalar(1e-12);  // falls below this
  std::optional<ComplexMatrix<Scalar>> initial_center;
};

/// Index and distance of the farthest cloud point; ties break to the lowest
/// index.
template <typename Scalar, typename DistanceFn>
std::pair<int, Scalar> farthest_point(const std::vector<ComplexMatrix<Scalar>>& points,
                                      DistanceFn&& distance) {
  if (points.empty()) {
    throw ContractViolation("farthest_point: empty cloud");
  }
  int best_index = 0;
  Scalar best_distance = distance(points[0]);
  for (int i = 1; i < static_cast<int>(points.size()); ++i) {
    const Scalar value = distance(points[static_cast<std::size_t>(i)]);
    if (value > best_distance) {
      best_distance = value;
      best_index = i;
    }
  }
  return {best_index, best_distance};
}

/// Exact covering radius of a center over a cloud, in the cloud's own metric.
template <typename Scalar>
Scalar enclosing_radius(const ComplexMatrix<Scalar>& center,
                        const PointCloud<Scalar>& cloud,
                        CallCounters* counters = nullptr,
                        Scalar klein_eps = Scalar(1e-10)) {
  Scalar radius = Scalar(0);
  for (const auto& p : cloud.points) {
    Scalar value = Scalar(0);
    switch (cloud.model) {
      case Model::Spd:
        value = spd_dist<Scalar>(center.real(), p.real());
        break;
      case Model::PoincareDisk:
        value = dist_kobayashi(center, p, counters);
        break;
      case Model::KleinDisk:
        value = dist_klein_bounds(center, p, klein_eps, counters).midpoint();
        break;
    }
    radius = std::max(radius, value);
  }
  return radius;
}

/// Farthest-point walk on the positive-definite cone, starting at the first
/// point.
template <typename Scalar>
EnclosingBall<Scalar> seb_spd(const std::vector<RealMatrix<Scalar>>& points,
                              const SebConfig<Scalar>& cfg) {
  if (points.empty()) throw ContractViolation("seb_spd: empty cloud");
  EnclosingBall<Scalar> ball;
  ball.model = Model::Spd;

  RealMatrix<Scalar> center =
      cfg.initial_center ? cfg.initial_center->real() : points.front();
  for (int l = 1; l <= cfg.iterations && points.size() > 1; ++l) {
    int farthest = 0;
    Scalar farthest_distance = Scalar(-1);
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      const Scalar value = spd_dist(center, points[static_cast<std::size_t>(i)]);
      if (value > farthest_distance) {
        farthest_distance = value;
        farthest = i;
      }
    }
    const Scalar t = Scalar(1) / Scalar(l + 1);
    if (cfg.early_stop && t * farthest_distance < cfg.early_stop_displacement) {
      ball.iterations_run = l - 1;
      break;
    }
    center = spd_geodesic_cut(center, points[static_cast<std::size_t>(farthest)], t);
    ball.iterations_run = l;
    if (cfg.record_trace) {
      ball.trace.push_back({l, farthest, farthest_distance, {}});
    }
  }

  ball.center = center.template cast<std::complex<Scalar>>();
  for (const auto& p : points) {
    ball.radius = std::max(ball.radius, spd_dist(center, p));
  }
  return ball;
}

/// Farthest-point walk in the disk with per-iteration recentering: translate
/// the whole cloud so the current center is the origin, cut the straight
/// origin geodesic toward the farthest point, repeat; compose the inverse
/// translations at the end to express the center in the original frame.
/// Every recentering spends one Hermitian square-root pair per point.
template <typename Scalar>
EnclosingBall<Scalar> seb_siegel_poincare(const std::vector<ComplexMatrix<Scalar>>& points,
                                          const SebConfig<Scalar>& cfg) {
  if (points.empty()) throw ContractViolation("seb_siegel_poincare: empty cloud");
  EnclosingBall<Scalar> ball;
  ball.model = Model::PoincareDisk;
  if (points.size() == 1) {
    ball.center = points.front();
    return ball;
  }
  const Index d = points.front().rows();

  CallCounters counters;
  std::vector<ComplexMatrix<Scalar>> translated = points;
  std::vector<ComplexMatrix<Scalar>> cuts;

  if (cfg.initial_center && cfg.initial_center->norm() > Scalar(0)) {
    for (auto& w : translated) w = translate_phi(*cfg.initial_center, w, &counters);
    cuts.push_back(*cfg.initial_center);
  }

  if (points.size() > 1) {
    for (int l = 1; l <= cfg.iterations; ++l) {
      int farthest = 0;
      Scalar farthest_norm = Scalar(-1);
      for (int i = 0; i < static_cast<int>(translated.size()); ++i) {
        const Scalar value = operator_norm(translated[static_cast<std::size_t>(i)],
                                           Scalar(kDefaultPowerTolerance), &counters);
        if (value > farthest_norm) {
          farthest_norm = value;
          farthest = i;
        }
      }
      const Scalar farthest_distance =
          std::log((Scalar(1) + farthest_norm) / (Scalar(1) - farthest_norm));
      const Scalar t = Scalar(1) / Scalar(l + 1);
      const ComplexMatrix<Scalar> cut =
          geodesic_origin(translated[static_cast<std::size_t>(farthest)], t, &counters);
      if (cfg.early_stop &&
          dist_disk_origin(cut, &counters) < cfg.early_stop_displacement) {
        ball.iterations_run = l - 1;
        break;
      }
      for (auto& w : translated) w = translate_phi(cut, w, &counters);
      cuts.push_back(cut);
      ball.iterations_run = l;
      if (cfg.record_trace) {
        ball.trace.push_back({l, farthest, farthest_distance, counters.snapshot()});
      }
    }
  }
  ball.loop_counters = counters.snapshot();

  // Map the origin of the final frame back through the inverse translations.
  ComplexMatrix<Scalar> center = ComplexMatrix<Scalar>::Zero(d, d);
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    center = phi_inverse(*it, center, &counters);
  }
  ball.center = center;
  for (const auto& p : points) {
    ball.radius = std::max(ball.radius, dist_kobayashi(center, p, &counters));
  }
  ball.total_counters = counters.snapshot();
  return ball;
}

namespace detail {

/// Certified farthest-point selection in the Hilbert disk. Every candidate
/// carries two-sided distance bounds; between iterations the bounds survive
/// inflated by the center displacement (the distance is a metric), which
/// prunes most points without touching an operator norm. Only candidates
/// whose intervals overlap the current best run or refine a boundary search.
/// On a persistent tie the lowest index wins.
template <typename Scalar>
struct KleinCandidate {
  std::unique_ptr<BoundarySearch<Scalar>> search;
  Scalar lower = Scalar(0);
  Scalar upper = Scalar(0);
  Scalar bracket_eps = Scalar(0);
  bool coincident = false;  // point equals the center exactly
};

template <typename Scalar>
struct KleinFarthest {
  int index = 0;
  Scalar distance = Scalar(0);
  BoundarySearch<Scalar>* search = nullptr;  // null when the cloud collapsed
};

template <typename Scalar>
class KleinFarthestTracker {
 public:
  KleinFarthestTracker(const std::vector<ComplexMatrix<Scalar>>& points,
                       CallCounters* counters)
      : points_(points), counters_(counters),
        candidates_(points.size()) {}

  /// Inflate all stored bounds by an upper bound on the center displacement.
  void center_moved(Scalar displacement) {
    for (auto& c : candidates_) {
      if (!c.search && !c.coincident) continue;
      c.lower = std::max(Scalar(0), c.lower - displacement);
      c.upper += displacement;
      c.search.reset();  // the old line search no longer applies
      c.coincident = false;
    }
  }

  KleinFarthest<Scalar> select(const ComplexMatrix<Scalar>& center, Scalar eps) {
    const int n = static_cast<int>(points_.size());
    constexpr Scalar kInitialEps = Scalar(1) / Scalar(16);
    const Scalar eps_floor = Scalar(1e-13);

    auto measure = [&](int i, Scalar bracket_eps) {
      auto& c = candidates_[static_cast<std::size_t>(i)];
      if (!c.search) {
        if ((points_[static_cast<std::size_t>(i)] - center).norm() == Scalar(0)) {
          c.coincident = true;
          c.lower = c.upper = Scalar(0);
          return;
        }
        c.search = std::make_unique<BoundarySearch<Scalar>>(
            center, points_[static_cast<std::size_t>(i)], counters_);
        c.bracket_eps = bracket_eps;
      } else {
        c.bracket_eps = std::min(c.bracket_eps, bracket_eps);
      }
      c.search->refine(c.bracket_eps);
      const DistanceBounds<Scalar> b = c.search->bounds();
      c.lower = b.lower;
      c.upper = b.upper;
    };

    // First pass: every candidate needs at least inflated prior bounds; any
    // point seen for the first time gets a coarse search.
    for (int i = 0; i < n; ++i) {
      auto& c = candidates_[static_cast<std::size_t>(i)];
      if (!c.search && !c.coincident && c.upper == Scalar(0) && c.lower == Scalar(0)) {
        measure(i, kInitialEps);
      }
    }

    while (true) {
      int best = 0;
      for (int i = 1; i < n; ++i) {
        if (candidates_[static_cast<std::size_t>(i)].lower >
            candidates_[static_cast<std::size_t>(best)].lower) {
          best = i;
        }
      }
      const Scalar best_lower = candidates_[static_cast<std::size_t>(best)].lower;

      bool separated = true;
      bool can_tighten = false;
      auto consider = [&](int i) {
        auto& c = candidates_[static_cast<std::size_t>(i)];
        if (c.coincident) return;
        if (!c.search) {
          measure(i, kInitialEps);  // prior bounds overlap: needs a real search
          can_tighten = true;
          return;
        }
        if (c.bracket_eps > eps_floor) {
          measure(i, std::max(c.bracket_eps / Scalar(16), eps_floor));
          can_tighten = true;
        }
      };

      for (int i = 0; i < n; ++i) {
        if (i == best) continue;
        if (candidates_[static_cast<std::size_t>(i)].upper > best_lower) {
          separated = false;
          consider(i);
        }
      }
      if (!separated) consider(best);
      if (separated || !can_tighten) {
        int winner = best;
        if (!separated) {
          for (int i = 0; i < winner; ++i) {
            if (candidates_[static_cast<std::size_t>(i)].upper >= best_lower) {
              winner = i;
              break;
            }
          }
        }
        auto& w = candidates_[static_cast<std::size_t>(winner)];
        if (!w.search) measure(winner, kInitialEps);
        KleinFarthest<Scalar> out;
        out.index = winner;
        if (w.search) {
          w.search->refine(std::min(w.bracket_eps, eps));
          const DistanceBounds<Scalar> b = w.search->bounds();
          w.lower = b.lower;
          w.upper = b.upper;
          out.distance = b.midpoint();
          out.search = w.search.get();
        }
        return out;
      }
    }
  }

 private:
  const std::vector<ComplexMatrix<Scalar>>& points_;
  CallCounters* counters_;
  std::vector<KleinCandidate<Scalar>> candidates_;
};

}  // namespace detail

/// Farthest-point walk in Hilbert coordinates: straight segments, no
/// recentering, no matrix square roots inside the loop. The farthest point's
/// own boundary search is refined once more and reused for the geodesic cut.
template <typename Scalar>
EnclosingBall<Scalar> seb_siegel_klein(const std::vector<ComplexMatrix<Scalar>>& points,
                                       const SebConfig<Scalar>& cfg) {
  if (points.empty()) throw ContractViolation("seb_siegel_klein: empty cloud");
  EnclosingBall<Scalar> ball;
  ball.model = Model::KleinDisk;

  CallCounters counters;
  ComplexMatrix<Scalar> center =
      cfg.initial_center ? *cfg.initial_center : points.front();

  if (points.size() > 1) {
    detail::KleinFarthestTracker<Scalar> tracker(points, &counters);
    for (int l = 1; l <= cfg.iterations; ++l) {
      detail::KleinFarthest<Scalar> far = tracker.select(center, cfg.klein_eps);
      if (!far.search) break;  // every point coincides with the center
      const Scalar t = Scalar(1) / Scalar(l + 1);
      if (cfg.early_stop && t * far.distance < cfg.early_stop_displacement) {
        ball.iterations_run = l - 1;
        break;
      }
      far.search->refine(cfg.klein_eps / Scalar(4));
      center = klein_geodesic_cut_on_bracket(
          center, points[static_cast<std::size_t>(far.index)], t,
          far.search->alpha_minus(), far.search->alpha_plus());
      // The cut lies at fraction t of the way to the farthest point, so the
      // center displacement is at most t times the (certified upper) distance
      // plus the bracket slack.
      const Scalar step_bound =
          t * far.search->bounds().upper + Scalar(16) * cfg.klein_eps;
      tracker.center_moved(step_bound);
      ball.iterations_run = l;
      if (cfg.record_trace) {
        ball.trace.push_back({l, far.index, far.distance, counters.snapshot()});
      }
    }
  }
  ball.loop_counters = counters.snapshot();

  ball.center = center;
  PointCloud<Scalar> cloud{Model::KleinDisk, points};
  ball.radius = enclosing_radius(center, cloud, &counters, Scalar(1e-10));
  ball.total_counters = counters.snapshot();
  return ball;
}

}  // namespace siegel
