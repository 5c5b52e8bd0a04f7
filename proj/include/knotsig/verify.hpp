// Copyright 2026 The Knotsig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KNOTSIG_VERIFY_HPP
#define KNOTSIG_VERIFY_HPP

#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "knotsig/l2.hpp"
#include "knotsig/slice.hpp"

namespace knotsig {

struct VerifyOptions {
  long max = 12;          // sweep bound on q (and scaled bounds below)
  int jobs = 1;           // worker threads; results are merged by task order
  bool inject_fault = false;  // testing hook: corrupt one jump comparison
  PrecisionOptions precision;
};

struct CheckOutcome {
  std::string check;
  long units = 0;       // (p,q) pairs or windows processed
  long identities = 0;  // atomic equalities verified
  bool pass = true;
  std::string counterexample;  // first failure, in deterministic task order
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  long identities = 0;
  bool pass = true;
  std::string first_counterexample;
};

namespace detail {

struct TaskResult {
  long identities = 0;
  std::string counterexample;  // empty means pass
};

struct Task {
  std::size_t check_index;
  std::function<TaskResult()> run;
};

inline std::vector<TorusKnotParams> coprime_pairs(long lo_p, long max_q) {
  std::vector<TorusKnotParams> pairs;
  for (long q = lo_p + 1; q <= max_q; ++q)
    for (long p = lo_p; p < q; ++p)
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
  return pairs;
}

template <typename... Parts>
std::string counterexample(const Parts&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

}  // namespace detail

// Runs every cross-route invariant sweep up to the bound. Matrix-backed
// sweeps are clamped to smaller families (their cost grows quickly and the
// acceptance suite pins them at the spec bounds); purely combinatorial
// sweeps run to the full bound.
inline VerifyReport run_verify(const VerifyOptions& options) {
  using detail::Task;
  using detail::TaskResult;

  std::vector<CheckOutcome> checks;
  std::vector<Task> tasks;
  auto add_check = [&checks](const std::string& name) {
    checks.push_back({name, 0, 0, true, ""});
    return checks.size() - 1;
  };
  auto add_task = [&tasks](std::size_t check, std::function<TaskResult()> fn) {
    tasks.push_back({check, std::move(fn)});
  };

  const auto pairs = detail::coprime_pairs(2, options.max);
  const bool fault = options.inject_fault;

  {
    const auto c = add_check("jump-route-agreement");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const TorusKnotParams params = pairs[i];
      const bool corrupt = fault && i == 0;
      add_task(c, [params, corrupt]() {
        TaskResult r;
        for (long n = 1; n < params.pq(); ++n) {
          long lith = lattice_count(params, n) - lattice_count(params, params.pq() + n);
          if (corrupt && n == 1) lith += 2;  // injected fault (test mode)
          const long jump = jump_torus(params, n);
          if (jump != lith) {
            r.counterexample = detail::counterexample(
                "p=", params.p, " q=", params.q, " n=", n, " case-split=", jump,
                " litherland=", lith);
            return r;
          }
          ++r.identities;
        }
        return r;
      });
    }
  }

  {
    const auto c = add_check("jump-antisymmetry");
    for (const TorusKnotParams& params : pairs)
      add_task(c, [params]() {
        TaskResult r;
        for (long n = 1; n < params.pq(); ++n) {
          if (jump_torus(params, n) != -jump_torus(params, params.pq() - n)) {
            r.counterexample =
                detail::counterexample("p=", params.p, " q=", params.q, " n=", n);
            return r;
          }
          ++r.identities;
        }
        return r;
      });
  }

  {
    const auto c = add_check("lattice-complement");
    for (const TorusKnotParams& params : pairs)
      add_task(c, [params]() {
        TaskResult r;
        for (long n = 1; n < params.pq(); ++n) {
          if (n % params.p == 0 || n % params.q == 0) continue;
          const long ln = lattice_count(params, n);
          const long lc = lattice_count(params, params.pq() + n);
          if (ln > 1 || ln + lc != 1) {
            r.counterexample = detail::counterexample(
                "p=", params.p, " q=", params.q, " n=", n, " |L(n)|=", ln,
                " |L(pq+n)|=", lc);
            return r;
          }
          ++r.identities;
        }
        return r;
      });
  }

  {
    const auto c = add_check("intro-sign-agreement");
    for (const TorusKnotParams& params : pairs)
      add_task(c, [params]() {
        TaskResult r;
        for (long n = 1; n < params.pq(); ++n) {
          if (n % params.p == 0 || n % params.q == 0) continue;
          const IntroDecomposition d = intro_decompose(params, n);
          const bool consistent = d.a > 0 && d.a < params.q &&
                                  d.a * params.p + d.b * params.q == n &&
                                  d.sign == jump_torus(params, n);
          if (!consistent) {
            r.counterexample = detail::counterexample(
                "p=", params.p, " q=", params.q, " n=", n, " a=", d.a, " b=", d.b);
            return r;
          }
          ++r.identities;
        }
        return r;
      });
  }

  {
    const auto c = add_check("breakpoint-symmetry");
    for (const TorusKnotParams& params : pairs)
      add_task(c, [params]() {
        TaskResult r;
        const auto points = circle_breakpoints(params);
        if (static_cast<long>(points.size()) != (params.p - 1) * (params.q - 1)) {
          r.counterexample = detail::counterexample(
              "p=", params.p, " q=", params.q, " count=", points.size());
          return r;
        }
        ++r.identities;
        for (std::size_t k = 0; k < points.size(); ++k) {
          const UnitCirclePoint& mirror = points[points.size() - 1 - k];
          if (points[k].is_zero() || !(points[k].reflected() == mirror)) {
            r.counterexample = detail::counterexample(
                "p=", params.p, " q=", params.q, " x=", fraction_string(points[k].value()));
            return r;
          }
          ++r.identities;
        }
        return r;
      });
  }

  {
    const auto c = add_check("mordell-closed-form");
    for (const TorusKnotParams& params : pairs)
      add_task(c, [params]() {
        TaskResult r;
        const auto members = set_S_members(params);
        if (2 * static_cast<long>(members.size()) != (params.p - 1) * (params.q - 1)) {
          r.counterexample = detail::counterexample(
              "p=", params.p, " q=", params.q, " |S|=", members.size());
          return r;
        }
        ++r.identities;
        Int direct(0);
        for (long n : members) direct += n;
        if (mordell_sum(params) != Rational(direct)) {
          r.counterexample = detail::counterexample(
              "p=", params.p, " q=", params.q, " direct=", direct.get_str(),
              " closed=", fraction_string(mordell_sum(params)));
          return r;
        }
        ++r.identities;
        return r;
      });
  }

  {
    const auto c = add_check("l2-triple-route");
    for (const TorusKnotParams& params : pairs)
      add_task(c, [params]() {
        TaskResult r;
        const Rational closed = l2_torus(params, L2Route::closed);
        const Rational weighted = l2_torus(params, L2Route::weighted);
        const Rational profiled = l2_torus(params, L2Route::profile);
        if (closed != weighted || closed != profiled) {
          r.counterexample = detail::counterexample(
              "p=", params.p, " q=", params.q, " closed=", fraction_string(closed),
              " weighted=", fraction_string(weighted), " profile=", fraction_string(profiled));
          return r;
        }
        r.identities = 2;
        return r;
      });
  }

  {
    const auto c = add_check("alexander-two-routes");
    for (const TorusKnotParams& params : detail::coprime_pairs(2, std::min(options.max, 8L)))
      add_task(c, [params]() {
        TaskResult r;
        const IntPoly via_det = alexander_polynomial(torus_seifert_matrix(params));
        const IntPoly closed = torus_alexander_closed(params);
        if (!associate_equal(via_det, closed)) {
          r.counterexample = detail::counterexample(
              "p=", params.p, " q=", params.q, " det-route=", via_det.to_string(),
              " closed=", closed.to_string());
          return r;
        }
        r.identities = 1;
        return r;
      });
  }

  {
    const auto c = add_check("seifert-unimodular");
    add_task(c, [max = options.max]() {
      TaskResult r;
      for (long n = -max; n <= max; ++n) {
        const SeifertMatrix v = twist_seifert_matrix(n);  // ctor checks V - V^T
        const Int d = determinant(v.matrix() - v.matrix().transpose());
        if (d != 1 && d != -1) {
          r.counterexample = detail::counterexample("twist n=", n, " det=", d.get_str());
          return r;
        }
        ++r.identities;
      }
      return r;
    });
    for (const TorusKnotParams& params : detail::coprime_pairs(2, std::min(options.max, 8L)))
      add_task(c, [params]() {
        TaskResult r;
        const SeifertMatrix v = torus_seifert_matrix(params);
        const Int d = determinant(v.matrix() - v.matrix().transpose());
        if (d != 1 && d != -1) {
          r.counterexample = detail::counterexample(
              "p=", params.p, " q=", params.q, " det=", d.get_str());
          return r;
        }
        ++r.identities;
        return r;
      });
  }

  {
    const auto c = add_check("matrix-vs-combinatorial-signature");
    for (const TorusKnotParams& params : detail::coprime_pairs(2, std::min(options.max, 6L)))
      add_task(c, [params, precision = options.precision]() {
        TaskResult r;
        const SignatureEngine engine(torus_seifert_matrix(params), precision);
        const SignatureProfile matrix_route = engine.profile(circle_breakpoints(params));
        const SignatureProfile jump_route = torus_jump_profile(params);
        for (std::size_t k = 0; k < jump_route.size(); ++k) {
          if (matrix_route.jumps[k] != jump_route.jumps[k]) {
            r.counterexample = detail::counterexample(
                "p=", params.p, " q=", params.q,
                " x=", fraction_string(jump_route.breakpoints[k].value()),
                " matrix-jump=", matrix_route.jumps[k], " jump=", jump_route.jumps[k]);
            return r;
          }
          ++r.identities;
        }
        return r;
      });
  }

  {
    const auto c = add_check("hirzebruch-sigma");
    for (const TorusKnotParams& params : detail::coprime_pairs(3, std::min(options.max, 11L)))
      if (params.p % 2 == 1 && params.q % 2 == 1)
        add_task(c, [params, precision = options.precision]() {
          TaskResult r;
          SignatureEngine engine(torus_seifert_matrix(params), precision);
          engine.set_known_roots(circle_breakpoints(params));
          const long formula = hirzebruch_sigma_minus1(params);
          const long matrix = engine.signature_at(UnitCirclePoint(1, 2));
          if (formula != matrix) {
            r.counterexample = detail::counterexample(
                "p=", params.p, " q=", params.q, " hirzebruch=", formula,
                " inertia=", matrix);
            return r;
          }
          r.identities = 1;
          return r;
        });
  }

  {
    const auto c = add_check("twist-verdict-window");
    const long window = 4 * options.max;
    add_task(c, [window, precision = options.precision]() {
      TaskResult r;
      for (long n = -window; n <= window; ++n) {
        const SliceVerdict v = twist_verdict(n, precision);
        bool ok;
        if (n == 0 || n == 2) {
          ok = v.verdict == SliceObstruction::NoObstruction;
        } else if (n < 0) {
          ok = v.verdict == SliceObstruction::ObstructedSignature &&
               v.signature_witness && v.signature_witness->second != 0;
        } else if (!exact_sqrt(Int(4) * n + 1)) {
          ok = v.verdict == SliceObstruction::ObstructedFoxMilnor;
        } else {
          ok = v.verdict == SliceObstruction::ObstructedLTwo && v.l2_witness &&
               sgn(v.l2_witness->second) != 0 &&
               v.l2_witness->first * (v.l2_witness->first + 1) == n;
        }
        if (!ok) {
          r.counterexample =
              detail::counterexample("twist n=", n, " verdict=", obstruction_name(v.verdict));
          return r;
        }
        ++r.identities;
      }
      return r;
    });
  }

  {
    const auto c = add_check("double-candidate-uniqueness");
    add_task(c, []() {
      TaskResult r;
      if (double_candidates(Rational(0)) != std::vector<Int>{Int(2)}) {
        r.counterexample = "double_candidates(0) != [2]";
        return r;
      }
      ++r.identities;
      std::mt19937 rng(20260810);
      std::uniform_int_distribution<long> num(-400, 400);
      std::uniform_int_distribution<long> den(1, 40);
      for (int k = 0; k < 100; ++k) {
        Rational s = make_rational(num(rng), den(rng));
        if (sgn(s) == 0) s = Rational(1, 3);
        const auto candidates = double_candidates(s);
        bool ok = candidates.size() <= 1;
        if (ok && candidates.size() == 1) {
          // the candidate must actually solve (m-1)(m+2) = 3 s via some m
          const Int n = candidates[0];
          const auto root = exact_sqrt(Int(4) * n + 1);
          ok = root.has_value();
          if (ok) {
            const Int m = (*root - 1) / 2;
            ok = Rational((m - 1) * (m + 2)) == Rational(3) * s;
          }
        }
        if (!ok) {
          r.counterexample =
              detail::counterexample("s=", fraction_string(s), " candidates=", candidates.size());
          return r;
        }
        ++r.identities;
      }
      return r;
    });
  }

  // Deterministic execution: tasks are pulled by a worker pool but results
  // land in task-order slots, so reports and the first counterexample do
  // not depend on scheduling.
  std::vector<TaskResult> results(tasks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&tasks, &results, &next]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          results[i] = tasks[i].run();
        }
      });
    for (auto& t : workers) t.join();
  }

  VerifyReport report;
  report.checks = std::move(checks);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    CheckOutcome& outcome = report.checks[tasks[i].check_index];
    outcome.units += 1;
    outcome.identities += results[i].identities;
    report.identities += results[i].identities;
    if (!results[i].counterexample.empty() && outcome.pass) {
      outcome.pass = false;
      outcome.counterexample = results[i].counterexample;
    }
  }
  for (const CheckOutcome& outcome : report.checks) {
    if (!outcome.pass) {
      report.pass = false;
      if (report.first_counterexample.empty())
        report.first_counterexample = outcome.check + ": " + outcome.counterexample;
      break;
    }
  }
  return report;
}

}  // namespace knotsig

#endif  // KNOTSIG_VERIFY_HPP
