#include "gitstab/harness.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "gitstab/connectivity.hpp"
#include "gitstab/errors.hpp"

namespace gitstab {

namespace {

// Stream tags keep the different uses of one seed independent.
constexpr std::uint64_t kGenericStream = 1;
constexpr std::uint64_t kPathStream = 2;
constexpr std::uint64_t kDegenerateStream = 3;
constexpr int kEndpointAttempts = 1000;

using Clock = std::chrono::steady_clock;

RationalMatrix random_matrix(CounterRng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  RationalMatrix m(rows, cols);
  for (auto& x : m.entries()) x = Rational(rng.uniform(-bound, bound));
  return m;
}

/// Runs body(i, report) for i in [0, count) on `workers` threads and merges.
template <class Body>
HarnessReport parallel_trials(std::uint64_t count, unsigned workers, Body body) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<HarnessReport> partial(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < count; i += workers) body(i, partial[w]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  HarnessReport out;
  for (const auto& p : partial) out += p;
  return out;
}

ModelInstance scale(const ModelInstance& x, const Rational& c) {
  return std::visit(
      [&](const auto& inst) -> ModelInstance {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, ThinQuiverRep>) {
          auto v = inst.values();
          for (auto& z : v) z *= ComplexRational(c);
          return ThinQuiverRep(inst.spec(), std::move(v));
        } else if constexpr (std::is_same_v<T, ControlInstance>) {
          return ControlInstance(inst.a() * c, inst.b() * c);
        } else {
          return DagInstance(inst.k(), inst.samples() * c);
        }
      },
      x);
}

ModelInstance sum(const ModelInstance& x, const ModelInstance& y) {
  return std::visit(
      [&](const auto& a) -> ModelInstance {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(y);
        if constexpr (std::is_same_v<T, ThinQuiverRep>) {
          auto v = a.values();
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
          return ThinQuiverRep(a.spec(), std::move(v));
        } else if constexpr (std::is_same_v<T, ControlInstance>) {
          return ControlInstance(a.a() + b.a(), a.b() + b.b());
        } else {
          return DagInstance(a.k(), a.samples() + b.samples());
        }
      },
      x);
}

ModelInstance stable_endpoint(const FamilySpec& family, CounterRng& rng, std::int64_t bound) {
  for (int attempt = 0; attempt < kEndpointAttempts; ++attempt) {
    auto x = random_instance(family, rng, bound);
    if (status(x).is_stable()) return x;
  }
  throw SamplingError("no stable endpoint found in " + std::to_string(kEndpointAttempts) +
                      " draws; the family may have no stable points");
}

}  // namespace

HarnessReport& HarnessReport::operator+=(const HarnessReport& o) {
  trials_run += o.trials_run;
  unstable_hits += o.unstable_hits;
  paths_run += o.paths_run;
  path_failures += o.path_failures;
  oracle_mismatches += o.oracle_mismatches;
  stabilized_stable += o.stabilized_stable;
  paths_skipped = paths_skipped || o.paths_skipped;
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  return *this;
}

bool HarnessReport::same_result(const HarnessReport& o) const {
  return trials_run == o.trials_run && unstable_hits == o.unstable_hits && paths_run == o.paths_run &&
         path_failures == o.path_failures && oracle_mismatches == o.oracle_mismatches &&
         stabilized_stable == o.stabilized_stable && paths_skipped == o.paths_skipped && notes == o.notes;
}

ModelInstance random_instance(const FamilySpec& family, CounterRng& rng, std::int64_t bound) {
  if (bound <= 0) throw DomainError("entry bound must be positive");
  return std::visit(
      [&](const auto& f) -> ModelInstance {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QuiverSpec>) {
          if (!f.is_thin()) throw DomainError("random quiver samples need a thin dimension vector");
          std::vector<bool> live(f.arrows().size());
          bool any_live = false;
          for (std::size_t i = 0; i < live.size(); ++i) {
            const auto& a = f.arrows()[i];
            live[i] = f.dim_vector()[a.source] == 1 && f.dim_vector()[a.target] == 1;
            any_live = any_live || live[i];
          }
          while (true) {
            std::vector<ComplexRational> values(f.arrows().size());
            bool nonzero = false;
            for (std::size_t i = 0; i < values.size(); ++i) {
              if (!live[i]) continue;
              values[i] = ComplexRational(Rational(rng.uniform(-bound, bound)), Rational(rng.uniform(-bound, bound)));
              nonzero = nonzero || !values[i].is_zero();
            }
            if (nonzero || !any_live) return ThinQuiverRep(f, std::move(values));
          }
        } else if constexpr (std::is_same_v<T, ControlSpec>) {
          if (f.n == 0 || f.m == 0) throw DomainError("control family needs n >= 1 and m >= 1");
          auto a = random_matrix(rng, f.n, f.n, bound);
          auto b = random_matrix(rng, f.n, f.m, bound);
          return ControlInstance(std::move(a), std::move(b));
        } else {
          if (f.n == 0 || f.k == 0) throw DomainError("DAG family needs n >= 1 and k >= 1");
          return DagInstance(f.k, random_matrix(rng, f.n, f.k + 1, bound));
        }
      },
      family);
}

ModelInstance quadratic_path_point(const ModelInstance& start, const ModelInstance& mid, const ModelInstance& end,
                                   const Rational& t) {
  const Rational one(1), two(2), four(4);
  const Rational l0 = (one - t) * (one - two * t);
  const Rational l1 = four * t * (one - t);
  const Rational l2 = t * (two * t - one);
  return sum(sum(scale(start, l0), scale(mid, l1)), scale(end, l2));
}

std::uint64_t count_path_failures(const ModelInstance& start, const ModelInstance& mid, const ModelInstance& end,
                                  std::uint64_t samples) {
  if (samples == 0) throw DomainError("path_samples must be positive");
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Rational t(mpz_class(std::to_string(i)), mpz_class(std::to_string(samples)));
    if (!status(quadratic_path_point(start, mid, end, t)).is_stable()) ++failures;
  }
  return failures;
}

HarnessReport sample_generic_points(const TrialConfig& cfg) {
  const auto t0 = Clock::now();
  auto report = parallel_trials(cfg.trials, cfg.workers, [&](std::uint64_t i, HarnessReport& r) {
    CounterRng rng(cfg.seed, kGenericStream, i);
    const auto x = random_instance(cfg.family, rng, cfg.entry_bound);
    ++r.trials_run;
    if (!status(x).is_stable()) ++r.unstable_hits;
  });
  if (const auto* d = std::get_if<DagSpec>(&cfg.family); d && d->n < d->k) {
    report.notes.emplace_back("n < k: no sample has a parent block of full column rank, every draw is non-stable");
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

HarnessReport sample_path_stability(const TrialConfig& cfg) {
  const auto t0 = Clock::now();
  const auto strata = enumerate_strata(cfg.family, cfg.convention);
  const auto d = d_min(strata);
  HarnessReport report;
  if (d && *d < 2) {
    report.paths_skipped = true;
    report.notes.emplace_back("path test skipped: d_min = " + std::to_string(*d) + " < 2 under the " +
                              std::string(to_string(cfg.convention)) + " convention");
  } else {
    report = parallel_trials(cfg.paths, cfg.workers, [&](std::uint64_t i, HarnessReport& r) {
      CounterRng rng(cfg.seed, kPathStream, i);
      const auto start = stable_endpoint(cfg.family, rng, cfg.entry_bound);
      const auto end = stable_endpoint(cfg.family, rng, cfg.entry_bound);
      const auto mid = random_instance(cfg.family, rng, cfg.entry_bound);
      ++r.paths_run;
      r.path_failures += count_path_failures(start, mid, end, cfg.path_samples);
    });
    report.notes.emplace_back("finite path sampling is evidence, not proof");
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

HarnessReport kronecker_oracle_check(std::int64_t grid_radius, std::vector<Weight> theta) {
  if (grid_radius < 0) throw DomainError("grid radius must be non-negative");
  const auto t0 = Clock::now();
  const QuiverSpec kronecker(2, {{0, 1}, {0, 1}}, {1, 1}, std::move(theta));
  HarnessReport report;
  const std::int64_t r = grid_radius;
  for (std::int64_t ar = -r; ar <= r; ++ar)
    for (std::int64_t ai = -r; ai <= r; ++ai)
      for (std::int64_t br = -r; br <= r; ++br)
        for (std::int64_t bi = -r; bi <= r; ++bi) {
          const ThinQuiverRep rep(kronecker, {ComplexRational(Rational(ar), Rational(ai)),
                                              ComplexRational(Rational(br), Rational(bi))});
          const bool origin = ar == 0 && ai == 0 && br == 0 && bi == 0;
          const Verdict v = quiver_thin_status(rep).verdict;
          ++report.trials_run;
          if (v != Verdict::Stable) ++report.unstable_hits;
          const Verdict expected = origin ? Verdict::Unstable : Verdict::Stable;
          if (v != expected) ++report.oracle_mismatches;
        }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

HarnessReport detect_constructed_degenerates(const TrialConfig& cfg) {
  const auto* dag = std::get_if<DagSpec>(&cfg.family);
  if (dag == nullptr) throw PreconditionError("degenerate construction needs the DAG family");
  if (dag->k < 2 || dag->n < dag->k) throw PreconditionError("degenerate construction needs n >= k >= 2");
  const auto t0 = Clock::now();
  const Rational eps(mpz_class(1), mpz_class(1000));
  auto report = parallel_trials(cfg.trials, cfg.workers, [&](std::uint64_t i, HarnessReport& r) {
    CounterRng rng(cfg.seed, kDegenerateStream, i);
    const auto u = random_matrix(rng, dag->n, dag->k - 1, cfg.entry_bound);
    const auto v = random_matrix(rng, dag->k - 1, dag->k, cfg.entry_bound);
    const auto child = random_matrix(rng, dag->n, 1, cfg.entry_bound);
    const RationalMatrix x = u * v;
    RationalMatrix y(dag->n, dag->k + 1);
    for (std::size_t row = 0; row < dag->n; ++row) {
      for (std::size_t c = 0; c < dag->k; ++c) y(row, c) = x(row, c);
      y(row, dag->k) = child(row, 0);
    }
    const DagInstance sample(dag->k, std::move(y));
    ++r.trials_run;
    const bool flagged = !dag_status(sample).is_stable();
    if (flagged) ++r.unstable_hits;
    const bool repaired = dag_status(dag_stabilize(sample, eps)).is_stable();
    if (repaired) ++r.stabilized_stable;
    if (!flagged || !repaired) ++r.oracle_mismatches;
  });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

}  // namespace gitstab
