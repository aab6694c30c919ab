#include "wdm/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <cmath>
#include <ostream>
#include <set>
#include <thread>

#include "wdm/grading.hpp"
#include "wdm/univariate.hpp"

namespace wdm {

namespace {

/// A fiber coefficient c_j(X) prepared for machine-integer evaluation.
struct CompiledPoly {
  struct Term {
    std::int64_t coeff;
    std::vector<Exponent> exps;
  };
  std::vector<Term> terms;
  bool fast = true;

  CompiledPoly(const IntPolynomial& c, std::int64_t B) {
    double magnitude = 0;
    for (const auto& [m, coeff] : c.terms()) {
      if (!coeff.fits_slong_p()) {
        fast = false;
        return;
      }
      terms.push_back({coeff.get_si(), std::vector<Exponent>(m.begin() + 1, m.end())});
      magnitude += std::fabs(coeff.get_d()) * std::pow(static_cast<double>(B), static_cast<double>(total_degree(m)));
    }
    fast = magnitude < std::ldexp(1.0, 100);
  }

  __int128 eval(const std::vector<std::int64_t>& x) const {
    __int128 acc = 0;
    for (const Term& t : terms) {
      __int128 v = t.coeff;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (Exponent k = 0; k < t.exps[i]; ++k) v *= x[i];
      acc += v;
    }
    return acc;
  }
};

struct SliceResult {
  std::uint64_t n_aff = 0;
  std::uint64_t n_cover = 0;
  std::vector<std::vector<Integer>> points;
};

class FiberCounter {
 public:
  FiberCounter(const CoverPolynomial& F, const WBox& box) : box_(box), y_bound_(box.y_bound()) {
    coeffs_ = F.fiber_coefficients();
    fast_ = y_bound_.fits_slong_p();
    for (std::uint32_t j = 0; j < F.d; ++j) {
      compiled_.emplace_back(coeffs_[j], box.B);
      fast_ = fast_ && compiled_.back().fast;
    }
  }

  /// Counts fibers with first coordinate in [lo, hi].
  SliceResult run(std::int64_t lo, std::int64_t hi, bool retain, const std::atomic<bool>& stop,
                  const std::function<bool()>& out_of_time) const {
    SliceResult res;
    const std::size_t n = box_.n;
    if (lo > hi) return res;
    std::vector<std::int64_t> x(n, -box_.B);
    if (n > 0) x[0] = lo;
    std::vector<__int128> c(compiled_.size() + 1);
    c.back() = 1;
    std::vector<std::int64_t> roots;
    std::vector<Integer> xi(n + 1);
    const std::int64_t yb = fast_ ? y_bound_.get_si() : 0;
    std::uint64_t visited = 0;
    while (true) {
      if ((++visited & 1023) == 0 && (stop.load() || out_of_time())) return res;
      bool done_fast = false;
      if (fast_) {
        for (std::size_t j = 0; j < compiled_.size(); ++j) c[j] = compiled_[j].eval(x);
        done_fast = integer_roots_monic_fast(c, yb, roots);
        if (done_fast) record(res, roots.size(), retain, [&](std::size_t k) { return Integer(static_cast<long>(roots[k])); }, x);
      }
      if (!done_fast) {
        for (std::size_t i = 0; i < n; ++i) xi[i + 1] = static_cast<long>(x[i]);
        std::vector<Integer> ci(coeffs_.size());
        for (std::size_t j = 0; j < coeffs_.size(); ++j) ci[j] = coeffs_[j].evaluate(std::span<const Integer>(xi));
        const std::vector<Integer> big = integer_roots_monic(ci, y_bound_);
        record(res, big.size(), retain, [&](std::size_t k) { return big[k]; }, x);
      }
      std::size_t i = n;
      bool finished = true;
      while (i-- > 0) {
        if (++x[i] <= (i == 0 ? hi : box_.B)) {
          finished = false;
          break;
        }
        x[i] = -box_.B;
      }
      if (finished) break;
    }
    return res;
  }

 private:
  template <class RootAt>
  static void record(SliceResult& res, std::size_t count, bool retain, RootAt root_at, const std::vector<std::int64_t>& x) {
    res.n_aff += count;
    if (count > 0) ++res.n_cover;
    if (!retain) return;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Integer> point;
      point.reserve(x.size() + 1);
      point.push_back(root_at(k));
      for (std::int64_t v : x) point.emplace_back(static_cast<long>(v));
      res.points.push_back(std::move(point));
    }
  }

  WBox box_;
  Integer y_bound_;
  std::vector<IntPolynomial> coeffs_;
  std::vector<CompiledPoly> compiled_;
  bool fast_ = true;
};

}  // namespace

CountResult count_affine(const CoverPolynomial& F, const WBox& box, const CountOptions& options) {
  if (box.B < 1) throw std::invalid_argument("box bound B must be at least 1");
  if (box.n != F.n) throw std::invalid_argument("box dimension does not match the polynomial");
  if (box.e != F.e) throw std::invalid_argument("box weight does not match the polynomial");
  if (options.node_budget != 0 && box.fiber_count() > Integer(static_cast<unsigned long>(options.node_budget)))
    throw BudgetExceeded("(2B + 1)^n = " + box.fiber_count().get_str() + " fibers exceed the node budget");

  const FiberCounter counter(F, box);
  const auto start = std::chrono::steady_clock::now();
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  const std::function<bool()> out_of_time = [&] {
    if (options.time_budget <= 0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() > options.time_budget) {
      timed_out = true;
      stop = true;
    }
    return timed_out.load();
  };

  const std::int64_t width = 2 * box.B + 1;
  const unsigned workers = box.n == 0 ? 1 : static_cast<unsigned>(std::clamp<std::int64_t>(options.threads, 1, width));
  std::vector<SliceResult> parts(workers);
  if (workers == 1) {
    parts[0] = counter.run(-box.B, box.B, options.retain, stop, out_of_time);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t lo = -box.B + width * w / workers;
      const std::int64_t hi = -box.B + width * (w + 1) / workers - 1;
      pool.emplace_back([&, w, lo, hi] { parts[w] = counter.run(lo, hi, options.retain, stop, out_of_time); });
    }
    for (auto& t : pool) t.join();
  }
  if (timed_out) throw BudgetExceeded("time budget of " + std::to_string(options.time_budget) + " s exceeded");

  CountResult out;
  out.box = box;
  for (SliceResult& part : parts) {
    out.n_aff += part.n_aff;
    out.n_cover += part.n_cover;
    std::move(part.points.begin(), part.points.end(), std::back_inserter(out.points));
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

void write_points(std::ostream& out, const std::vector<std::vector<Integer>>& points) {
  for (const auto& point : points) {
    for (std::size_t i = 0; i < point.size(); ++i) out << (i ? "\t" : "") << point[i].get_str();
    out << '\n';
  }
}

WProjPoint canonicalize(std::vector<Integer> coords, const WeightVector& w) {
  if (coords.size() != w.size()) throw std::invalid_argument("point and weights differ in length");
  Integer g = 0;
  for (const Integer& x : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::invalid_argument("the zero vector is not a weighted projective point");
  for (const Integer& q : prime_factors(g)) {
    while (true) {
      bool all = true;
      for (std::size_t i = 0; i < coords.size() && all; ++i) {
        if (coords[i] != 0) all = mpz_divisible_p(coords[i].get_mpz_t(), ipow(q, w[i]).get_mpz_t()) != 0;
      }
      if (!all) break;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) coords[i] /= ipow(q, w[i]);
      }
    }
  }
  WProjPoint out{std::move(coords), true};
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    if (out.coords[i] == 0 || w[i] % 2 == 0) continue;
    out.sign_ambiguous = false;
    if (out.coords[i] < 0) {
      for (std::size_t j = 0; j < out.coords.size(); ++j)
        if (w[j] % 2 == 1) out.coords[j] = -out.coords[j];
    }
    break;
  }
  if (out.sign_ambiguous) {
    std::vector<Integer> negated = out.coords;
    for (Integer& x : negated) x = -x;
    if (negated > out.coords) out.coords = std::move(negated);
  }
  return out;
}

WProjEnumeration enumerate_wproj_points(const IntPolynomial& f, const WeightVector& w, std::int64_t B,
                                        bool exclude_sigma, std::uint64_t budget) {
  if (B < 1) throw std::invalid_argument("height bound B must be at least 1");
  const GradingInfo info = analyze_grading(f, w);
  if (!info.is_homogeneous) throw std::invalid_argument("enumeration needs a weighted homogeneous polynomial");
  if (exclude_sigma && !w.is_cover_shape())
    throw std::invalid_argument("Sigma exclusion is only implemented for weights (e, 1, ..., 1)");
  const std::size_t k = w.size();
  std::vector<Integer> bounds(k);
  for (std::size_t i = 0; i < k; ++i) {
    bounds[i] = ipow(Integer(static_cast<long>(B)), w[i]);
    if (!bounds[i].fits_slong_p()) throw BudgetExceeded("coordinate bound too large to enumerate");
  }

  // Solve for a variable in which f is monic up to sign, if there is one.
  std::size_t solve = k;
  std::vector<IntPolynomial> in_solve;
  for (std::size_t v = 0; v < k && solve == k; ++v) {
    std::vector<IntPolynomial> cs = f.coefficients_in(v);
    const IntPolynomial& lead = cs.back();
    if (cs.size() >= 2 && lead.is_constant() && abs(lead.leading_coefficient()) == 1) {
      solve = v;
      in_solve = std::move(cs);
    }
  }
  double work = 1;
  for (std::size_t i = 0; i < k; ++i)
    if (i != solve) work *= 2 * bounds[i].get_d() + 1;
  if (work > static_cast<double>(budget)) throw BudgetExceeded("weighted box exceeds the enumeration budget");

  WProjEnumeration out;
  std::set<WProjPoint> found;
  std::vector<Integer> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = i == solve ? Integer(0) : Integer(-bounds[i]);
  auto accept = [&](const std::vector<Integer>& point) {
    if (std::all_of(point.begin(), point.end(), [](const Integer& v) { return v == 0; })) return;
    ++out.raw_solutions;
    found.insert(canonicalize(point, w));
  };
  while (true) {
    if (solve < k) {
      std::vector<Integer> coeffs(in_solve.size());
      for (std::size_t j = 0; j < in_solve.size(); ++j) coeffs[j] = in_solve[j].evaluate(std::span<const Integer>(x));
      if (coeffs.back() < 0)
        for (Integer& c : coeffs) c = -c;
      for (const Integer& r : integer_roots_monic(coeffs, bounds[solve])) {
        std::vector<Integer> point = x;
        point[solve] = r;
        accept(point);
      }
    } else if (f.evaluate(std::span<const Integer>(x)) == 0) {
      accept(x);
    }
    std::size_t i = k;
    bool finished = true;
    while (i-- > 0) {
      if (i == solve) continue;
      if (++x[i] <= bounds[i]) {
        finished = false;
        break;
      }
      x[i] = -bounds[i];
    }
    if (finished) break;
  }

  for (const WProjPoint& pt : found) {
    if (exclude_sigma && w[0] > 1 &&
        std::all_of(pt.coords.begin() + 1, pt.coords.end(), [](const Integer& v) { return v == 0; })) {
      ++out.sigma_excluded;
      continue;
    }
    bool fits = true;
    for (std::size_t i = 0; i < k && fits; ++i) fits = abs(pt.coords[i]) <= bounds[i];
    if (fits) ++out.canonical_in_box;
    out.points.push_back(pt);
  }
  return out;
}

SchwarzZippel schwarz_zippel_check(std::uint64_t d, std::uint64_t m, std::int64_t B, const Integer& observed) {
  if (d < 1 || m < 1 || B < 1) throw std::invalid_argument("Schwarz-Zippel check needs d, m, B >= 1");
  SchwarzZippel out;
  out.bound = Integer(static_cast<unsigned long>(d)) * ipow(Integer(static_cast<long>(2 * B + 1)), m);
  out.margin = out.bound - observed;
  out.holds = observed <= out.bound;
  return out;
}

}  // namespace wdm
