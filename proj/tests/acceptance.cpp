// Acceptance gate: exhaustive cross-validation of the whole tower at small
// ranks.  Each criterion prints one line; the binary exits non-zero if any
// criterion fails its exact check or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kiselman/kiselman.hpp"

using namespace kiselman;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;
  std::function<std::optional<std::string>()> body;
};

std::map<int, KiselmanMonoid>& monoids() {
  static std::map<int, KiselmanMonoid> cache;
  return cache;
}

const KiselmanMonoid& monoid(int n) {
  auto it = monoids().find(n);
  if (it == monoids().end()) {
    it = monoids().try_emplace(n, n).first;
  }
  return it->second;
}

std::optional<std::string> idempotent_census() {
  for (int n = 1; n <= 3; ++n) {
    const KiselmanMonoid& k = monoid(n);
    std::size_t census = 0;
    for (const Element& e : k.elements()) {
      if (k.is_idempotent(e)) ++census;
    }
    const std::size_t expected = std::size_t{1} << n;
    if (census != expected) {
      return "n=" + std::to_string(n) + ": " + std::to_string(census) + " idempotents, expected " +
             std::to_string(expected);
    }
  }
  return std::nullopt;
}

std::optional<std::string> tfae_exhaustion() {
  for (int n = 1; n <= 4; ++n) {
    const KiselmanMonoid& k = monoid(n);
    for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
      for (std::uint32_t yb = 0; yb < (1u << n); ++yb) {
        const TfaeResult r = k.tfae_check(Subset::from_bits(xb), Subset::from_bits(yb));
        if (!r.all_agree()) {
          return "n=" + std::to_string(n) + ", X=" + Subset::from_bits(xb).to_string() +
                 ", Y=" + Subset::from_bits(yb).to_string() + ": conditions split";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> braid_exhaustion() {
  for (int n = 1; n <= 4; ++n) {
    const KiselmanMonoid& k = monoid(n);
    for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
      for (std::uint32_t yb = 0; yb < (1u << n); ++yb) {
        if (!k.braid_check(Subset::from_bits(xb), Subset::from_bits(yb)).agree()) {
          return "n=" + std::to_string(n) + ", X=" + Subset::from_bits(xb).to_string() +
                 ", Y=" + Subset::from_bits(yb).to_string() + ": sides split";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> isomorphism_census() {
  const std::map<int, std::uint64_t> pinned = {{2, 15}, {3, 330}};
  for (int n = 1; n <= 4; ++n) {
    const std::size_t end_count = brute_force_endomorphisms(monoid(n)).size();
    const std::size_t mn_count = enumerate_monotone(n).size();
    const std::uint64_t dn_count = count_dn(n);
    if (end_count != mn_count || mn_count != dn_count) {
      return "n=" + std::to_string(n) + ": |End| = " + std::to_string(end_count) + ", |M_n| = " +
             std::to_string(mn_count) + ", |D_n| = " + std::to_string(dn_count);
    }
    const auto pin = pinned.find(n);
    if (pin != pinned.end() && dn_count != pin->second) {
      return "n=" + std::to_string(n) + ": census " + std::to_string(dn_count) + ", expected " +
             std::to_string(pin->second);
    }
  }
  return std::nullopt;
}

std::optional<std::string> phi_homomorphy() {
  const auto all = endomorphisms_from_monotone(3);
  if (all.size() != 330) {
    return "End(K_3) census " + std::to_string(all.size()) + ", expected 330";
  }
  for (const Endomorphism& g : all) {
    for (const Endomorphism& f : all) {
      if (phi(compose(g, f)) != star(phi(g), phi(f))) {
        return "mismatch at g=" + phi(g).to_string() + ", f=" + phi(f).to_string();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> psi_homomorphy_round_trip() {
  for (int n = 1; n <= 3; ++n) {
    const auto mn = enumerate_monotone(n);
    for (const SetSequence& s : mn) {
      if (psi_inv(psi(s)) != s) {
        return "n=" + std::to_string(n) + ": psi_inv(psi(s)) != s at s=" + s.to_string();
      }
      for (const SetSequence& t : mn) {
        if (psi(star(s, t)) != bool_mul(psi(s), psi(t))) {
          return "n=" + std::to_string(n) + ": psi(s*t) != psi(s).psi(t) at s=" + s.to_string() +
                 ", t=" + t.to_string();
        }
      }
    }
    for (const BoolMatrix& m : enumerate_dn(n)) {
      if (psi(psi_inv(m)) != m) {
        return "n=" + std::to_string(n) + ": psi(psi_inv(M)) != M at M=" + m.to_string();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> units_trivial() {
  for (int n = 1; n <= 4; ++n) {
    const auto units = find_units(n);
    if (units.size() != 1 || units.front() != BoolMatrix::identity(n)) {
      return "n=" + std::to_string(n) + ": " + std::to_string(units.size()) +
             " invertible elements found";
    }
  }
  return std::nullopt;
}

std::optional<std::string> counting_grid() {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; m * n <= 25; ++n) {
      const BigInt closed = closed_count(m, n).value;
      const BigInt brute = brute_count(m, n, 25, 2).value;
      if (closed != brute) {
        return "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": closed " +
               closed.str() + " vs brute " + brute.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> content_epimorphism() {
  for (int n = 2; n <= 3; ++n) {
    const KiselmanMonoid& k = monoid(n);
    const auto all = k.elements();
    for (const Element& a : all) {
      for (const Element& b : all) {
        if (content(k.multiply(a, b).nf) != (content(a.nf) | content(b.nf))) {
          return "n=" + std::to_string(n) + ": c(ab) != c(a) U c(b) at a=" + word_name(a.nf) +
                 ", b=" + word_name(b.nf);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> completion_soundness() {
  for (int n = 1; n <= 4; ++n) {
    const RewriteSystem& rs = monoid(n).system();
    if (const auto cp = confluence_counterexample(rs)) {
      return "n=" + std::to_string(n) + ": unresolved critical pair from " +
             word_name(cp->origin);
    }
    for (const auto& [lhs, rhs] : defining_relations(n)) {
      if (rs.reduce(lhs) != rs.reduce(rhs)) {
        return "n=" + std::to_string(n) + ": relation " + word_name(lhs) + " = " +
               word_name(rhs) + " has split normal forms";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "idempotent census: K_n has 2^n idempotents (n = 1..3)", 10.0, idempotent_census},
      {2, "three-way equivalence over all subset pairs (n = 1..4)", 30.0, tfae_exhaustion},
      {3, "braid identity equivalence over all subset pairs (n = 1..4)", 30.0, braid_exhaustion},
      {4, "|End(K_n)| = |M_n| = |D_n| (n = 1..4; 15 and 330 pinned)", 60.0, isomorphism_census},
      {5, "phi carries composition to star on all 330^2 pairs (n = 3)", 60.0, phi_homomorphy},
      {6, "psi is a homomorphism and a bijection (n <= 3)", 60.0, psi_homomorphy_round_trip},
      {7, "the only invertible element of D_n is the identity (n = 1..4)", 60.0, units_trivial},
      {8, "closed formulas match brute counts on the m*n <= 25 grid", 300.0, counting_grid},
      {9, "content is a homomorphism onto (2^{1..n}, U) (n = 2, 3)", 60.0, content_epimorphism},
      {10, "completed systems are locally confluent and sound (n = 1..4)", 30.0,
       completion_soundness},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    std::optional<std::string> counterexample;
    try {
      counterexample = c.body();
    } catch (const std::exception& e) {
      counterexample = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_budget = elapsed <= c.budget_seconds;
    const bool pass = !counterexample && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %2d  %-62s %7.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.number,
                c.label.c_str(), elapsed, c.budget_seconds);
    if (counterexample) {
      std::printf("          counterexample: %s\n", counterexample->c_str());
    } else if (!in_budget) {
      std::printf("          over time budget\n");
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
