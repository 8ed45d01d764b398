#pragma once

// Numerical monodromy of a Belyi form pair: track the n points of the fibre
// h1(x,1) - t h2(x,1) = 0 along circular loops around 0 and 1 based at
// t* = 1/2, read off the two permutations, and set sinf = (s0 s1)^(-1).
// Points live on the projective line: each tracked point carries either the
// affine coordinate or its reciprocal, matching is done in the chordal
// metric, and a nearest-neighbour ambiguity triggers step halving. The two
// loops are independent and run on separate threads.

#include "adecover/belyi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace adecover::mono {

using C = std::complex<double>;

struct TrackerConfig {
    double t_star = 0.5;
    double radius_fraction = 0.5;  // loop radius = fraction * 1/2
    int seed_steps = 64;           // initial subdivisions of each loop
    int max_depth = 18;            // step-halving floor = seed step / 2^depth
    double eps_match = 1e-6;
    double eps_root = 1e-12;
};

struct TrackingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NearCriticalValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Projective point: (num : 1) in the affine chart, (1 : num) in the
// reciprocal chart.
struct PPoint {
    C num;
    bool inv = false;

    static double chordal(const PPoint& p, const PPoint& q) {
        C a = p.inv ? C(1) : p.num, b = p.inv ? p.num : C(1);
        C c = q.inv ? C(1) : q.num, d = q.inv ? q.num : C(1);
        double na = std::sqrt(std::norm(a) + std::norm(b));
        double nb = std::sqrt(std::norm(c) + std::norm(d));
        return std::abs(a * d - b * c) / (na * nb);
    }
};

namespace detail {

inline std::vector<C> complex_coeffs(const Poly1<Rat>& p, int pad_to) {
    std::vector<C> c(pad_to + 1, C(0));
    for (int i = 0; i <= p.degree(); ++i) c[i] = C(p.c[i].get_d());
    return c;
}

inline C horner(const std::vector<C>& c, const C& x) {
    C r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

// Durand-Kerner on an exact-degree coefficient vector (c.back() != 0).
inline std::vector<C> all_roots(std::vector<C> c) {
    int d = (int)c.size() - 1;
    for (auto& x : c) x /= c.back();
    std::vector<C> r(d);
    // deterministic starting points on a circle avoiding symmetry
    double radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / (d - i)));
    radius = 1.0 + 2.0 * radius;
    for (int i = 0; i < d; ++i)
        r[i] = radius * std::exp(C(0, 1) * (2.0 * M_PI * i / d + 0.4));
    for (int iter = 0; iter < 500; ++iter) {
        double delta = 0;
        for (int i = 0; i < d; ++i) {
            C num = horner(c, r[i]);
            C den(1);
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (r[i] - r[j]);
            C step = num / den;
            r[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14 * radius) break;
    }
    return r;
}

}  // namespace detail

class FiberTracker {
  public:
    FiberTracker(const FormPair& f, TrackerConfig cfg) : cfg_(cfg), n_(f.degree()) {
        a_ = detail::complex_coeffs(f.h1.dehom(), n_);
        b_ = detail::complex_coeffs(f.h2.dehom(), n_);
    }

    // the n projective roots of h1 - t h2 at a regular value t
    std::vector<PPoint> fiber(C t) const {
        std::vector<C> c(n_ + 1);
        for (int i = 0; i <= n_; ++i) c[i] = a_[i] - t * b_[i];
        double top = std::abs(c[n_]), bottom = std::abs(c[0]);
        double scale = 0;
        for (auto& x : c) scale = std::max(scale, std::abs(x));
        if (scale == 0) throw TrackingError("zero fibre polynomial");
        if (std::max(top, bottom) < 1e-9 * scale)
            throw NearCriticalValue("fibre polynomial degenerates at both chart ends; try another radius");
        std::vector<PPoint> out;
        if (top >= bottom) {
            // affine chart
            for (C r : detail::all_roots(c)) out.push_back(chart_normalize({r, false}));
        } else {
            std::vector<C> rev(c.rbegin(), c.rend());
            for (C r : detail::all_roots(rev)) out.push_back(chart_normalize({r, true}));
        }
        for (auto& p : out) polish(p, t);
        return out;
    }

    // checks simplicity at t and the config invariant on the tolerances
    std::vector<PPoint> fiber_checked(C t) const {
        auto pts = fiber(t);
        double gap = min_gap(pts);
        if (gap <= cfg_.eps_match)
            throw NearCriticalValue("fibre points collide: pairwise gap " + std::to_string(gap));
        if (!(0 < cfg_.eps_root && cfg_.eps_root < cfg_.eps_match && cfg_.eps_match < gap))
            throw TrackingError("tolerances must satisfy 0 < eps_root < eps_match < fibre gap");
        return pts;
    }

    // track the fibre along t(s), s in [0,1]; returns the permutation of the
    // starting fibre induced by the loop (path must be closed)
    template <class Path>
    Permutation track_loop(Path path) const {
        std::vector<PPoint> start = fiber_checked(path(0.0));
        std::vector<PPoint> cur = start;
        double s = 0;
        double step = 1.0 / cfg_.seed_steps;
        double min_step = step / std::pow(2.0, cfg_.max_depth);
        while (s < 1.0 - 1e-12) {
            double next = std::min(1.0, s + step);
            auto moved = advance(cur, path(s), path(next));
            if (!moved) {
                step /= 2;
                if (step < min_step)
                    throw TrackingError("step floor reached near s = " + std::to_string(s));
                continue;
            }
            cur = *moved;
            s = next;
            if (step < 1.0 / cfg_.seed_steps) step *= 2;
        }
        // close the loop against the starting fibre
        std::vector<int> img(n_, 0);
        std::vector<char> used(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int best = -1;
            double bd = 1e9, second = 1e9;
            for (int j = 0; j < n_; ++j) {
                double d = PPoint::chordal(cur[i], start[j]);
                if (d < bd) {
                    second = bd;
                    bd = d;
                    best = j;
                } else
                    second = std::min(second, d);
            }
            if (best < 0 || used[best] || bd > cfg_.eps_match || second < cfg_.eps_match)
                throw TrackingError("ambiguous matching when closing the loop");
            used[best] = 1;
            img[i] = best + 1;
        }
        return Permutation(img);
    }

    int degree() const { return n_; }

  private:
    TrackerConfig cfg_;
    int n_;
    std::vector<C> a_, b_;

    static double min_gap(const std::vector<PPoint>& pts) {
        double gap = 1e9;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j)
                gap = std::min(gap, PPoint::chordal(pts[i], pts[j]));
        return gap;
    }

    static PPoint chart_normalize(PPoint p) {
        if (std::abs(p.num) > 1.0) return {C(1) / p.num, !p.inv};
        return p;
    }

    void polish(PPoint& p, C t) const {
        for (int iter = 0; iter < 40; ++iter) {
            C val(0), der(0);
            if (!p.inv) {
                for (int k = n_; k >= 0; --k) {
                    der = der * p.num + val;
                    val = val * p.num + (a_[k] - t * b_[k]);
                }
            } else {
                // reversed polynomial q(y) = sum c_{n-k} y^k
                for (int k = 0; k <= n_; ++k) {
                    der = der * p.num + val;
                    val = val * p.num + (a_[k] - t * b_[k]);
                }
            }
            if (std::abs(der) == 0) break;
            C step = val / der;
            p.num -= step;
            if (std::abs(step) < cfg_.eps_root) break;
        }
        p = chart_normalize(p);
    }

    // one predictor-corrector move of the whole fibre: previous positions
    // seed the Newton polish at the new parameter. Refuses the step when a
    // strand moved a large fraction of the strand separation or two strands
    // landed within matching distance of each other.
    std::optional<std::vector<PPoint>> advance(const std::vector<PPoint>& from, C /*t0*/,
                                               C t1) const {
        double gap = min_gap(from);
        std::vector<PPoint> pred = from;
        for (auto& p : pred) polish(p, t1);
        for (int i = 0; i < n_; ++i)
            if (PPoint::chordal(pred[i], from[i]) > 0.3 * gap) return std::nullopt;
        if (min_gap(pred) < std::max(cfg_.eps_match, 0.25 * gap)) return std::nullopt;
        return pred;
    }
};

struct MonodromyResult {
    PermTriple triple;
    bool verified_cycle_types = false;
};

inline MonodromyResult monodromy_triple(const FormPair& f, TrackerConfig cfg = {}) {
    Passport expected = passport_of_forms(f);  // also enforces the Belyi property
    FiberTracker tracker(f, cfg);
    double rho = cfg.radius_fraction * 0.5;
    C tstar(cfg.t_star, 0);

    auto loop_around = [&](C center) {
        return [=](double s) -> C {
            // segment to the circle, counterclockwise circle, segment back
            C dir = (tstar - center) / std::abs(tstar - center);
            C entry = center + rho * dir;
            if (s < 0.25) return tstar + (entry - tstar) * (s / 0.25);
            if (s < 0.75) {
                double th = 2.0 * M_PI * ((s - 0.25) / 0.5);
                return center + (entry - center) * std::exp(C(0, 1) * th);
            }
            return entry + (tstar - entry) * ((s - 0.75) / 0.25);
        };
    };

    Permutation s0 = Permutation::identity(f.degree());
    Permutation s1 = Permutation::identity(f.degree());
    std::exception_ptr e0, e1;
    std::thread th0([&] {
        try {
            s0 = tracker.track_loop(loop_around(C(0, 0)));
        } catch (...) {
            e0 = std::current_exception();
        }
    });
    std::thread th1([&] {
        try {
            s1 = tracker.track_loop(loop_around(C(1, 0)));
        } catch (...) {
            e1 = std::current_exception();
        }
    });
    th0.join();
    th1.join();
    if (e0) std::rethrow_exception(e0);
    if (e1) std::rethrow_exception(e1);

    MonodromyResult out{PermTriple::from_two(s0, s1), false};
    Passport got = passport_of_triple(out.triple);
    out.verified_cycle_types =
        got.c0 == expected.c0 && got.c1 == expected.c1 && got.cinf == expected.cinf;
    return out;
}

}  // namespace adecover::mono
