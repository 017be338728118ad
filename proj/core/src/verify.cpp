#include "kiselman/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "kiselman/boolmat.hpp"
#include "kiselman/monotone.hpp"
#include "kiselman/morphisms.hpp"

namespace kiselman {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Every word over {1..n} of length at most max_len, shortest first.
template <typename Fn>
void for_each_word(int n, int max_len, Fn&& fn) {
  Word w;
  fn(w);
  for (int len = 1; len <= max_len; ++len) {
    w.assign(static_cast<std::size_t>(len), Letter{1});
    for (;;) {
      fn(w);
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
        w[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
}

std::string pair_string(Subset x, Subset y) {
  return "X=" + x.to_string() + ", Y=" + y.to_string();
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : opts_(options) {}

  VerificationReport run() {
    const auto start = Clock::now();
    report_.suite = opts_.suite.empty() ? "all" : opts_.suite;
    report_.max_n = opts_.max_n;
    report_.guard_bits = opts_.guard_bits;

    check("content-well-defined", scope_words(), [this] { return content_well_defined(); });
    check("content-epimorphism", scope_upto(std::min(opts_.max_n, 4), "all element pairs"),
          [this] { return content_epimorphism(); });
    check("idempotent-census", scope_upto(std::min(opts_.max_n, 3), "all 2^n idempotents"),
          [this] { return idempotent_census(); });
    check("tfae-agreement", scope_upto(std::min(opts_.max_n, 4), "all 4^n subset pairs"),
          [this] { return tfae_agreement(); });
    check("braid-agreement", scope_upto(std::min(opts_.max_n, 4), "all 4^n subset pairs"),
          [this] { return braid_agreement(); });
    check("multiply-associative", scope_upto(std::min(opts_.max_n, 3), "all element triples"),
          [this] { return multiply_associative(); });
    check("completion-soundness", scope_upto(std::min(opts_.max_n, 4), "all critical pairs"),
          [this] { return completion_soundness(); });

    check("monotone-monoid-laws", scope_upto(std::min(opts_.max_n, 3), "unit laws; associativity"),
          [this] { return monotone_monoid_laws(); });
    check("monotone-star-closure", scope_upto(std::min(opts_.max_n, 3), "all sequence pairs"),
          [this] { return monotone_star_closure(); });
    check("cardinality-chain", scope_upto(std::min(opts_.max_n, 4), "|End| = |M_n| = |D_n|"),
          [this] { return cardinality_chain(); });

    check("dn-product-closure", scope_upto(std::min(opts_.max_n, 4), "matrix pairs"),
          [this] { return dn_product_closure(); });
    check("dn-monoid-laws", scope_upto(std::min(opts_.max_n, 3), "unit laws; sampled triples"),
          [this] { return dn_monoid_laws(); });
    check("pattern-transpose-symmetry", "all shapes with m*n <= 16, exhaustive",
          [this] { return pattern_transpose_symmetry(); });
    check("units-identity", scope_upto(std::min(opts_.max_n, 4), "permutation walk + pair search"),
          [this] { return units_identity(); });
    check("permutation-identity-filter", "n = 1..6, all n! permutation matrices",
          [this] { return permutation_identity_filter(); });

    check("phi-homomorphism", scope_upto(std::min(opts_.max_n, 3), "all endomorphism pairs"),
          [this] { return phi_homomorphism(); });
    check("psi-homomorphism", scope_upto(std::min(opts_.max_n, 3), "all sequence pairs"),
          [this] { return psi_homomorphism(); });
    check("phi-bijection", scope_upto(std::min(opts_.max_n, 4), "brute set vs monotone set"),
          [this] { return phi_bijection(); });
    check("psi-round-trip", scope_upto(std::min(opts_.max_n, 3), "both directions, exhaustive"),
          [this] { return psi_round_trip(); });
    check("compose-two-routes", scope_upto(std::min(opts_.max_n, 3), "all endomorphism pairs"),
          [this] { return compose_two_routes(); });
    check("apply-preserves-idempotents",
          scope_upto(std::min(opts_.max_n, 3), "all endomorphisms x all idempotents"),
          [this] { return apply_preserves_idempotents(); });

    check("counting-grid-agreement",
          "m = 2..5, n <= " + std::to_string(opts_.guard_bits) + "/m, closed vs brute",
          [this] { return counting_grid_agreement(); });
    check("counting-transpose-symmetry", "brute(m,n) = brute(n,m), m*n <= " +
                                             std::to_string(std::min(opts_.guard_bits, 20)),
          [this] { return counting_transpose_symmetry(); });
    check("counting-monotone-strict", "m = 2..5, n = 2..12", [this] { return counting_monotone(); });
    check("counting-integrality", "m = 2..5, n = 1..40", [this] { return counting_integrality(); });

    report_.wall_seconds = seconds_since(start);
    return std::move(report_);
  }

 private:
  static std::string scope_upto(int n, const std::string& detail) {
    return "n = 1.." + std::to_string(n) + ", " + detail;
  }

  std::string scope_words() const {
    std::string s = "n = 1.." + std::to_string(std::min(opts_.max_n, 3)) + ", all short words";
    if (opts_.max_n >= 4) s += "; n = 4 sampled";
    return s;
  }

  void check(const std::string& id, const std::string& scope,
             const std::function<std::optional<std::string>()>& body) {
    if (!opts_.suite.empty() && id.find(opts_.suite) == std::string::npos) return;
    CheckResult result;
    result.id = id;
    result.scope = scope;
    const auto start = Clock::now();
    const auto counterexample = body();
    result.seconds = seconds_since(start);
    result.pass = !counterexample.has_value();
    if (counterexample) result.counterexample = *counterexample;
    report_.checks.push_back(std::move(result));
  }

  const KiselmanMonoid& monoid(int n) {
    auto it = monoids_.find(n);
    if (it == monoids_.end()) {
      it = monoids_.try_emplace(n, n, opts_.max_rules).first;
    }
    return it->second;
  }

  const std::vector<Element>& elements(int n) {
    auto it = elements_.find(n);
    if (it == elements_.end()) {
      it = elements_.emplace(n, monoid(n).elements(opts_.max_elements)).first;
    }
    return it->second;
  }

  const std::vector<SetSequence>& monotone_list(int n) {
    auto it = monotone_.find(n);
    if (it == monotone_.end()) {
      it = monotone_.emplace(n, enumerate_monotone(n)).first;
    }
    return it->second;
  }

  const std::vector<BoolMatrix>& dn_list(int n) {
    auto it = dn_.find(n);
    if (it == dn_.end()) {
      it = dn_.emplace(n, enumerate_dn(n)).first;
    }
    return it->second;
  }

  const std::vector<Endomorphism>& endo_list(int n) {
    auto it = endos_.find(n);
    if (it == endos_.end()) {
      it = endos_.emplace(n, endomorphisms_from_monotone(n)).first;
    }
    return it->second;
  }

  const std::vector<Endomorphism>& brute_endo_list(int n) {
    auto it = brute_endos_.find(n);
    if (it == brute_endos_.end()) {
      it = brute_endos_.emplace(n, brute_force_endomorphisms(monoid(n))).first;
    }
    return it->second;
  }

  // --- kiselman_core -----------------------------------------------------

  std::optional<std::string> content_well_defined() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const KiselmanMonoid& k = monoid(n);
      std::optional<std::string> found;
      for_each_word(n, n <= 2 ? 8 : 6, [&](const Word& w) {
        if (found) return;
        if (content(w) != content(k.reduce(w).nf)) {
          found = "n=" + std::to_string(n) + ", word " + word_name(w) +
                  ": content changed under reduction";
        }
      });
      if (found) return found;
    }
    if (opts_.max_n >= 4) {
      const KiselmanMonoid& k = monoid(4);
      std::mt19937_64 rng(0x636f6e74);
      std::uniform_int_distribution<int> len(0, 10);
      std::uniform_int_distribution<int> letter(1, 4);
      for (int trial = 0; trial < 20000; ++trial) {
        Word w;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back(static_cast<Letter>(letter(rng)));
        if (content(w) != content(k.reduce(w).nf)) {
          return "n=4, word " + word_name(w) + ": content changed under reduction";
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> content_epimorphism() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const KiselmanMonoid& k = monoid(n);
      for (const Element& a : elements(n)) {
        for (const Element& b : elements(n)) {
          if (content(k.multiply(a, b).nf) != (content(a.nf) | content(b.nf))) {
            return "n=" + std::to_string(n) + ": c(" + word_name(a.nf) + " * " +
                   word_name(b.nf) + ") != c(a) U c(b)";
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> idempotent_census() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const KiselmanMonoid& k = monoid(n);
      std::set<Word> normal_forms;
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        const Subset x = Subset::from_bits(bits);
        const Element e = k.idempotent(x);
        if (!k.is_idempotent(e)) {
          return "n=" + std::to_string(n) + ": e_" + x.to_string() + " is not idempotent";
        }
        if (e.nf != idempotent_word(x)) {
          return "n=" + std::to_string(n) + ": e_" + x.to_string() +
                 " does not normalize to the descending word";
        }
        normal_forms.insert(e.nf);
      }
      if (normal_forms.size() != (std::size_t{1} << n)) {
        return "n=" + std::to_string(n) + ": idempotent words are not pairwise distinct";
      }
      std::size_t census = 0;
      for (const Element& e : elements(n)) {
        if (k.is_idempotent(e)) ++census;
      }
      if (census != (std::size_t{1} << n)) {
        return "n=" + std::to_string(n) + ": enumeration holds " + std::to_string(census) +
               " idempotents, expected " + std::to_string(std::size_t{1} << n);
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> tfae_agreement() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const KiselmanMonoid& k = monoid(n);
      for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
        for (std::uint32_t yb = 0; yb < (1u << n); ++yb) {
          const Subset x = Subset::from_bits(xb);
          const Subset y = Subset::from_bits(yb);
          const TfaeResult r = k.tfae_check(x, y);
          if (!r.all_agree()) {
            std::ostringstream os;
            os << "n=" << n << ", " << pair_string(x, y) << ": (idempotent="
               << r.product_idempotent << ", union=" << r.product_equals_union
               << ", combinatorial=" << r.combinatorial << ")";
            return os.str();
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> braid_agreement() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const KiselmanMonoid& k = monoid(n);
      for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
        for (std::uint32_t yb = 0; yb < (1u << n); ++yb) {
          const Subset x = Subset::from_bits(xb);
          const Subset y = Subset::from_bits(yb);
          const BraidResult r = k.braid_check(x, y);
          if (!r.agree()) {
            std::ostringstream os;
            os << "n=" << n << ", " << pair_string(x, y) << ": (combinatorial="
               << r.combinatorial << ", words=" << r.word_identities << ")";
            return os.str();
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> multiply_associative() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const KiselmanMonoid& k = monoid(n);
      const auto& all = elements(n);
      for (const Element& a : all) {
        for (const Element& b : all) {
          const Element ab = k.multiply(a, b);
          for (const Element& c : all) {
            if (k.multiply(ab, c) != k.multiply(a, k.multiply(b, c))) {
              return "n=" + std::to_string(n) + ": (" + word_name(a.nf) + " " + word_name(b.nf) +
                     ") " + word_name(c.nf) + " broke associativity";
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> completion_soundness() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const RewriteSystem& rs = monoid(n).system();
      if (const auto cp = confluence_counterexample(rs)) {
        return "n=" + std::to_string(n) + ": critical pair from " + word_name(cp->origin) +
               " resolves to both " + word_name(cp->left) + " and " + word_name(cp->right);
      }
      for (const auto& [lhs, rhs] : defining_relations(n)) {
        if (rs.reduce(lhs) != rs.reduce(rhs)) {
          return "n=" + std::to_string(n) + ": defining relation " + word_name(lhs) + " = " +
                 word_name(rhs) + " has split normal forms";
        }
      }
    }
    return std::nullopt;
  }

  // --- monotone_seq ------------------------------------------------------

  std::optional<std::string> monotone_monoid_laws() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const auto& all = monotone_list(n);
      const SetSequence unit = unit_sequence(n);
      for (const SetSequence& s : all) {
        if (star(s, unit) != s || star(unit, s) != s) {
          return "n=" + std::to_string(n) + ": unit laws fail for " + s.to_string();
        }
      }
      if (n <= 2) {
        for (const SetSequence& a : all) {
          for (const SetSequence& b : all) {
            const SetSequence ab = star(a, b);
            for (const SetSequence& c : all) {
              if (star(ab, c) != star(a, star(b, c))) {
                return "n=" + std::to_string(n) + ": associativity fails for " + a.to_string() +
                       ", " + b.to_string() + ", " + c.to_string();
              }
            }
          }
        }
      } else {
        std::mt19937_64 rng(0x6d6f6e6f);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 5000; ++trial) {
          const SetSequence& a = all[pick(rng)];
          const SetSequence& b = all[pick(rng)];
          const SetSequence& c = all[pick(rng)];
          if (star(star(a, b), c) != star(a, star(b, c))) {
            return "n=" + std::to_string(n) + ": associativity fails for " + a.to_string() + ", " +
                   b.to_string() + ", " + c.to_string();
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> monotone_star_closure() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const auto& all = monotone_list(n);
      for (const SetSequence& a : all) {
        for (const SetSequence& b : all) {
          if (!is_monotone(star(a, b))) {
            return "n=" + std::to_string(n) + ": star(" + a.to_string() + ", " + b.to_string() +
                   ") left M_n";
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> cardinality_chain() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const std::size_t end_count = brute_endo_list(n).size();
      const std::size_t mn_count = monotone_list(n).size();
      const std::uint64_t dn_count = count_dn(n);
      if (end_count != mn_count || mn_count != dn_count) {
        return "n=" + std::to_string(n) + ": |End| = " + std::to_string(end_count) +
               ", |M_n| = " + std::to_string(mn_count) + ", |D_n| = " + std::to_string(dn_count);
      }
    }
    return std::nullopt;
  }

  // --- boolmat -----------------------------------------------------------

  std::optional<std::string> dn_product_closure() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      for (const BoolMatrix& a : dn_list(n)) {
        for (const BoolMatrix& b : dn_list(n)) {
          if (!in_dn(bool_mul(a, b))) {
            return "n=" + std::to_string(n) + ": " + a.to_string() + " * " + b.to_string() +
                   " left D_n";
          }
        }
      }
    }
    if (opts_.max_n >= 4) {
      const auto& all = dn_list(4);
      std::mt19937_64 rng(0x646e3434);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int trial = 0; trial < 20000; ++trial) {
        const BoolMatrix& a = all[pick(rng)];
        const BoolMatrix& b = all[pick(rng)];
        if (!in_dn(bool_mul(a, b))) {
          return "n=4: " + a.to_string() + " * " + b.to_string() + " left D_n";
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> dn_monoid_laws() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const BoolMatrix id = BoolMatrix::identity(n);
      if (!in_dn(id)) {
        return "n=" + std::to_string(n) + ": identity matrix not in D_n";
      }
      for (const BoolMatrix& m : dn_list(n)) {
        if (bool_mul(id, m) != m || bool_mul(m, id) != m) {
          return "n=" + std::to_string(n) + ": unit laws fail for " + m.to_string();
        }
      }
      std::mt19937_64 rng(0x626d6174);
      const auto& all = dn_list(n);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int trial = 0; trial < 2000; ++trial) {
        const BoolMatrix& a = all[pick(rng)];
        const BoolMatrix& b = all[pick(rng)];
        const BoolMatrix& c = all[pick(rng)];
        if (bool_mul(bool_mul(a, b), c) != bool_mul(a, bool_mul(b, c))) {
          return "n=" + std::to_string(n) + ": associativity fails for " + a.to_string() + ", " +
                 b.to_string() + ", " + c.to_string();
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> pattern_transpose_symmetry() {
    for (int m = 1; m <= 16; ++m) {
      for (int n = 1; m * n <= 16; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (m * n);
        for (std::uint64_t u = 0; u < total; ++u) {
          const BoolMatrix mat = BoolMatrix::from_flat(m, n, u);
          if (avoids_pattern(mat) != avoids_pattern(mat.transpose())) {
            return std::to_string(m) + "x" + std::to_string(n) + " matrix " + mat.to_string() +
                   ": transpose disagrees";
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> units_identity() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const auto units = find_units(n);
      if (units.size() != 1 || units.front() != BoolMatrix::identity(n)) {
        return "n=" + std::to_string(n) + ": unit group has " + std::to_string(units.size()) +
               " elements";
      }
      if (n <= 3) {
        const auto slow = find_units_by_pair_search(n);
        if (slow != units) {
          return "n=" + std::to_string(n) + ": pair-search oracle disagrees with the fast path";
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> permutation_identity_filter() {
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
      do {
        BoolMatrix m(n, n);
        for (int i = 1; i <= n; ++i) m.set(perm[static_cast<std::size_t>(i - 1)], i, true);
        const bool is_id = (m == BoolMatrix::identity(n));
        if (in_dn(m) != is_id) {
          return "n=" + std::to_string(n) + ": permutation matrix " + m.to_string() +
                 (is_id ? " rejected" : " accepted") + " by the pattern filter";
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
  }

  // --- morphisms ---------------------------------------------------------

  std::optional<std::string> phi_homomorphism() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const auto& all = endo_list(n);
      for (const Endomorphism& g : all) {
        for (const Endomorphism& f : all) {
          if (phi(compose(g, f)) != star(phi(g), phi(f))) {
            return "n=" + std::to_string(n) + ": phi(g o f) != phi(g) * phi(f) for g=" +
                   phi(g).to_string() + ", f=" + phi(f).to_string();
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> psi_homomorphism() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const auto& all = monotone_list(n);
      for (const SetSequence& s : all) {
        for (const SetSequence& t : all) {
          if (psi(star(s, t)) != bool_mul(psi(s), psi(t))) {
            return "n=" + std::to_string(n) + ": psi(s * t) != psi(s) . psi(t) for s=" +
                   s.to_string() + ", t=" + t.to_string();
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> phi_bijection() {
    for (int n = 1; n <= std::min(opts_.max_n, 4); ++n) {
      const auto& brute = brute_endo_list(n);
      const auto via_monotone = endo_list(n);
      if (brute != via_monotone) {
        return "n=" + std::to_string(n) + ": brute force found " + std::to_string(brute.size()) +
               " endomorphisms, the monotone route " + std::to_string(via_monotone.size());
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> psi_round_trip() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      for (const SetSequence& s : monotone_list(n)) {
        if (psi_inv(psi(s)) != s) {
          return "n=" + std::to_string(n) + ": psi_inv(psi(s)) != s for s=" + s.to_string();
        }
      }
      for (const BoolMatrix& m : dn_list(n)) {
        if (psi(psi_inv(m)) != m) {
          return "n=" + std::to_string(n) + ": psi(psi_inv(M)) != M for M=" + m.to_string();
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> compose_two_routes() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const KiselmanMonoid& k = monoid(n);
      const auto& all = endo_list(n);
      for (const Endomorphism& g : all) {
        for (const Endomorphism& f : all) {
          const Endomorphism fast = compose(g, f);
          for (int i = 1; i <= n; ++i) {
            const Element image = apply(k, g, idempotent_word(f.image_of(i)));
            if (content(image.nf) != fast.image_of(i)) {
              return "n=" + std::to_string(n) + ": union formula and substitution disagree at i=" +
                     std::to_string(i) + " for g=" + phi(g).to_string() + ", f=" +
                     phi(f).to_string();
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> apply_preserves_idempotents() {
    for (int n = 1; n <= std::min(opts_.max_n, 3); ++n) {
      const KiselmanMonoid& k = monoid(n);
      for (const Endomorphism& f : endo_list(n)) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
          const Word w = idempotent_word(Subset::from_bits(bits));
          if (!k.is_idempotent(apply(k, f, w))) {
            return "n=" + std::to_string(n) + ": image of " + word_name(w) +
                   " under f=" + phi(f).to_string() + " is not idempotent";
          }
        }
      }
    }
    return std::nullopt;
  }

  // --- counting ----------------------------------------------------------

  std::optional<std::string> counting_grid_agreement() {
    for (int m = 2; m <= 5; ++m) {
      for (int n = 1; m * n <= opts_.guard_bits; ++n) {
        const CountResult closed = closed_count(m, n);
        const CountResult brute = brute_count(m, n, opts_.guard_bits, opts_.parallelism);
        if (closed.value != brute.value) {
          return "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": closed " +
                 closed.value.str() + " vs brute " + brute.value.str();
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> counting_transpose_symmetry() {
    const int budget = std::min(opts_.guard_bits, 20);
    for (int m = 1; m <= budget; ++m) {
      for (int n = m + 1; m * n <= budget; ++n) {
        const BigInt a = brute_count(m, n, budget, opts_.parallelism).value;
        const BigInt b = brute_count(n, m, budget, opts_.parallelism).value;
        if (a != b) {
          return "brute(" + std::to_string(m) + "," + std::to_string(n) + ") = " + a.str() +
                 " but brute(" + std::to_string(n) + "," + std::to_string(m) + ") = " + b.str();
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> counting_monotone() {
    for (int m = 2; m <= 5; ++m) {
      BigInt previous = closed_count(m, 2).value;
      for (int n = 2; n <= 12; ++n) {
        const BigInt current = closed_count(m, n).value;
        if (current < previous) {
          return "m=" + std::to_string(m) + ": count decreased from n=" + std::to_string(n - 1);
        }
        if (current >= (BigInt(1) << (static_cast<unsigned>(m) * static_cast<unsigned>(n)))) {
          return "m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                 ": count is not strictly below 2^(m*n)";
        }
        previous = current;
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> counting_integrality() {
    for (int m = 2; m <= 5; ++m) {
      for (int n = 1; n <= 40; ++n) {
        try {
          (void)closed_count(m, n);
        } catch (const NonIntegralFormula& e) {
          return e.what();
        }
      }
    }
    return std::nullopt;
  }

  VerifyOptions opts_;
  VerificationReport report_;
  std::map<int, KiselmanMonoid> monoids_;
  std::map<int, std::vector<Element>> elements_;
  std::map<int, std::vector<SetSequence>> monotone_;
  std::map<int, std::vector<BoolMatrix>> dn_;
  std::map<int, std::vector<Endomorphism>> endos_;
  std::map<int, std::vector<Endomorphism>> brute_endos_;
};

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > 5) {
    throw std::invalid_argument("verification scale must lie in 1..5");
  }
  if (options.guard_bits < 1) {
    throw std::invalid_argument("guard_bits must be positive");
  }
  Runner runner(options);
  return runner.run();
}

std::vector<std::string> verification_check_ids() {
  return {
      "content-well-defined",    "content-epimorphism",
      "idempotent-census",       "tfae-agreement",
      "braid-agreement",         "multiply-associative",
      "completion-soundness",    "monotone-monoid-laws",
      "monotone-star-closure",   "cardinality-chain",
      "dn-product-closure",      "dn-monoid-laws",
      "pattern-transpose-symmetry", "units-identity",
      "permutation-identity-filter", "phi-homomorphism",
      "psi-homomorphism",        "phi-bijection",
      "psi-round-trip",          "compose-two-routes",
      "apply-preserves-idempotents", "counting-grid-agreement",
      "counting-transpose-symmetry", "counting-monotone-strict",
      "counting-integrality",
  };
}

}  // namespace kiselman
