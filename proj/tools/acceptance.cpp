// Release checks: one PASS/FAIL line per criterion, exit status 1 if any
// fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sdepthkit/decomposition.hpp"
#include "sdepthkit/formulas.hpp"
#include "sdepthkit/homology.hpp"
#include "sdepthkit/io.hpp"
#include "sdepthkit/poset.hpp"

using namespace sdepthkit;

namespace {

MonomialIdeal ideal(std::size_t n, const std::string& text) { return parse_ideal(text, RingContext(n)); }

const char* kFourteenSpaces =
    "x1*x4 ; x1,x4,x5\n"
    "x1*x5 ; x1,x2,x5\n"
    "x2*x4 ; x1,x2,x4\n"
    "x2*x5 ; x2,x4,x5\n"
    "x3^2 ; x3,x4,x5\n"
    "x2*x3 ; x2,x3,x4\n"
    "x1*x3 ; x1,x2,x3\n"
    "x1*x3*x4 ; x1,x2,x4,x5\n"
    "x1*x3*x5 ; x1,x3,x5\n"
    "x2*x3*x5 ; x2,x3,x4,x5\n"
    "x1*x2*x4*x5 ; x1,x2,x4,x5\n"
    "x1*x3^2*x4 ; x1,x3,x4,x5\n"
    "x1*x2*x3*x5 ; x1,x2,x3,x5\n"
    "x1*x2*x3^2*x4 ; x1,x2,x3,x4,x5\n";

// Each check fills `detail` and returns whether it passed.
struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<bool(std::ostringstream&)> check;
};

std::int64_t value(const BoundReport& r) { return r.value.value_or(-1); }

// All non-zero proper irreducible ideals of n variables, exponents ≤ e.
std::vector<MonomialIdeal> irreducibles(std::size_t n, Exponent e) {
  std::vector<MonomialIdeal> out;
  std::vector<Exponent> a(n, 0);
  for (;;) {
    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] > 0) gens.push_back(Monomial::variable(n, j, a[j]));
    }
    if (!gens.empty()) out.push_back(MonomialIdeal::from_generators(RingContext(n), gens));
    std::size_t j = n;
    while (j-- > 0) {
      if (a[j] < e) {
        ++a[j];
        break;
      }
      a[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) return out;
  }
}

}  // namespace

int main() {
  const auto q = ideal(6, "x1^2, x2^2, x3^2, x4^2, x1*x2*x4, x1*x3*x4");
  const auto q2 = ideal(6, "x4^2, x5, x6");

  std::vector<Criterion> criteria{
      {1, "sdepth (x1^2,x2^2,x3^2,x1x2,x1x3) = 1", 1.0,
       [](std::ostringstream& out) {
         const auto s = sdepth_ideal(ideal(3, "x1^2, x2^2, x3^2, x1*x2, x1*x3"));
         out << "sdepth " << s;
         return s == 1;
       }},
      {2, "sdepth S/(Q∩Q') = 1 in six variables, upper bound 2", 60.0,
       [&](std::ostringstream& out) {
         const auto s = sdepth_quotient(intersect(q, q2));
         const auto up = value(thm_up(q, q2));
         out << "sdepth " << s << ", thm_up " << up;
         return s == 1 && up == 2;
       }},
      {3, "sdepth (x1^2,x2^2,x3^2) = 2 = n - floor(m/2)", 0.0,
       [](std::ostringstream& out) {
         const auto s = sdepth_ideal(ideal(3, "x1^2, x2^2, x3^2"));
         out << "sdepth " << s;
         return s == 2 && s == 3 - 3 / 2;
       }},
      {4, "sdepth (x1)∩(x1^2,x2) = 1", 0.0,
       [](std::ostringstream& out) {
         const auto s = sdepth_ideal(intersect(ideal(2, "x1"), ideal(2, "x1^2, x2")));
         out << "sdepth " << s;
         return s == 1;
       }},
      {5, "fourteen-space decomposition of (x1,x2,x3^2)∩(x3,x4,x5)", 0.0,
       [](std::ostringstream& out) {
         const auto a = ideal(5, "x1, x2, x3^2"), b = ideal(5, "x3, x4, x5");
         const auto both = intersect(a, b);
         const StanleyDecomposition d{Target::ideal(both), parse_decomposition(kFourteenSpaces, both.ring())};
         const ValidationReport r = validate(d);
         const auto lob = value(thm_lob(a, b));
         const auto exact = sdepth_ideal(both);
         out << d.spaces.size() << " spaces, valid " << r.valid << ", sdepth " << r.sdepth.value_or(0)
             << ", thm_lob " << lob << ", exact " << exact;
         return d.spaces.size() == 14 && r.valid && r.sdepth == std::optional<std::size_t>(3) && lob == 2 &&
                exact >= 3;
       }},
      {6, "maximal ideals and irreducible ideals, n <= 5", 0.0,
       [](std::ostringstream& out) {
         std::size_t cases = 0;
         double slowest = 0.0;
         bool ok = true;
         for (std::size_t n = 1; n <= 5; ++n) {
           std::string text;
           for (std::size_t j = 1; j <= n; ++j) text += (j > 1 ? ", x" : "x") + std::to_string(j);
           const auto start = std::chrono::steady_clock::now();
           ok &= sdepth_ideal(ideal(n, text)) == (n + 1) / 2;
           slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
           ++cases;
           for (const auto& i : irreducibles(n, 2)) {
             const auto t0 = std::chrono::steady_clock::now();
             const std::size_t m = i.generators().size();
             ok &= sdepth_ideal(i) == n - m / 2;
             slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
             ++cases;
           }
         }
         out << cases << " cases, slowest " << slowest << " s";
         return ok && slowest < 10.0;
       }},
      {7, "exact formula on every irreducible pair with distinct primes, n <= 4", 0.0,
       [](std::ostringstream& out) {
         std::size_t checked = 0, mismatches = 0, nested = 0;
         for (std::size_t n = 1; n <= 4; ++n) {
           const auto all = irreducibles(n, 2);
           for (std::size_t a = 0; a < all.size(); ++a) {
             for (std::size_t b = a; b < all.size(); ++b) {
               if (radical(all[a]) == radical(all[b])) continue;
               // S/(Q∩Q') is S/Q there; the formula does not claim them
               if (all[a].contains(all[b]) || all[b].contains(all[a])) {
                 ++nested;
                 continue;
               }
               ++checked;
               const BoundReport eg = cor_eg(all[a], all[b]);
               if (!eg.applicable() || static_cast<std::size_t>(*eg.value) != sdepth_quotient(intersect(all[a], all[b]))) {
                 ++mismatches;
               }
             }
           }
         }
         out << checked << " pairs, " << mismatches << " mismatches (" << nested << " nested pairs excluded)";
         return checked > 0 && mismatches == 0;
       }},
      {8, "conjecture predicates on 200 random pairs and 200 random triples", 0.0,
       [](std::ostringstream& out) {
         Rng rng(20240801);
         std::size_t failures = 0;
         for (int k = 0; k < 200; ++k) {
           const std::size_t n = rng.uniform(1, 4);
           const auto i = intersect(random_irreducible(rng, n, 2), random_irreducible(rng, n, 2));
           failures += !check_question_as(i).holds;
           failures += !check_conjecture_ideal(i).holds;
         }
         for (int k = 0; k < 200; ++k) {
           const std::size_t n = rng.uniform(1, 4);
           const auto i = intersect(intersect(random_irreducible(rng, n, 2), random_irreducible(rng, n, 2)),
                                    random_irreducible(rng, n, 2));
           failures += !check_conjecture_quotient(i).holds;
         }
         out << "600 checks, " << failures << " failures";
         return failures == 0;
       }},
      {9, "Betti numbers against the Taylor oracle, depth examples", 0.0,
       [](std::ostringstream& out) {
         Rng rng(909);
         std::size_t compared = 0, mismatches = 0;
         while (compared < 500) {
           const std::size_t n = rng.uniform(1, 4);
           const auto i = random_ideal(rng, n, 3, rng.uniform(1, 5));
           if (i.is_zero() || i.is_unit()) continue;
           mismatches += betti(i) != taylor_betti_oracle(i);
           ++compared;
         }
         bool ok = mismatches == 0;
         for (std::size_t n = 1; n <= 5; ++n) {
           std::string text;
           for (std::size_t j = 1; j <= n; ++j) text += (j > 1 ? ", x" : "x") + std::to_string(j);
           ok &= depth_quotient(ideal(n, text)) == 0;
         }
         const auto tri = depth_quotient(ideal(3, "x1*x2, x2*x3, x1*x3"));
         out << compared << " ideals, " << mismatches << " mismatches, depth of the triangle " << tri;
         return ok && tri == 1;
       }},
      {10, "layout bound against n - floor(|G|/2) at n = 8", 0.0,
       [](std::ostringstream& out) {
         const auto a1 = ideal(8, "x1"), b1 = ideal(8, "x2, x3, x4, x5, x6, x7, x8");
         const auto a2 = ideal(8, "x1, x2"), b2 = ideal(8, "x3, x4, x5, x6, x7, x8");
         const auto ea1 = value(lemma_ea(a1, b1)), ky1 = value(ky_o_bound(intersect(a1, b1)));
         const auto ea2 = value(lemma_ea(a2, b2)), ky2 = value(ky_o_bound(intersect(a2, b2)));
         out << "r=1: " << ea1 << " vs " << ky1 << "; r=2: " << ea2 << " vs " << ky2;
         return ea1 == 5 && ky1 == 5 && ea2 == 4 && ky2 == 2;
       }},
      {11, "one free variable raises sdepth and depth by one", 0.0,
       [](std::ostringstream& out) {
         Rng rng(1111);
         std::size_t tried = 0, broken = 0;
         while (tried < 50) {
           const std::size_t n = rng.uniform(1, 4);
           const auto i = random_ideal(rng, n, 2, 4);
           if (i.is_zero() || i.is_unit()) continue;
           const auto e = extend(i, 1);
           broken += sdepth_quotient(e) != sdepth_quotient(i) + 1;
           broken += sdepth_ideal(e) != sdepth_ideal(i) + 1;
           broken += depth_quotient(e) != depth_quotient(i) + 1;
           ++tried;
         }
         out << tried << " ideals, " << broken << " failures";
         return broken == 0;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && seconds >= c.limit_seconds) {
      ok = false;
      detail << " (over the " << c.limit_seconds << " s limit)";
    }
    std::printf("%s %2d  %s: %s [%.3f s]\n", ok ? "PASS" : "FAIL", c.number, c.title, detail.str().c_str(), seconds);
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
