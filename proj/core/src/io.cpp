#include "kiselman/io.hpp"

#include <stdexcept>

namespace kiselman {

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w) {
    out.push_back(static_cast<int>(l));
  }
  return out;
}

Word word_from_json(const Json& j, int n) {
  if (!j.is_array()) {
    throw std::invalid_argument("word: expected an array of 1-based indices");
  }
  Word w;
  for (const Json& v : j) {
    const int idx = v.get<int>();
    w.push_back(static_cast<Letter>(idx));
  }
  check_letters(w, n);
  return w;
}

Json element_to_json(const Element& e) { return word_to_json(e.nf); }

Json subset_to_json(Subset x) {
  Json out = Json::array();
  for (int i : x.indices()) {
    out.push_back(i);
  }
  return out;
}

Subset subset_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("subset: expected an array of 1-based indices");
  }
  Subset x;
  for (const Json& v : j) {
    const int idx = v.get<int>();
    if (idx < 1 || idx > Subset::max_index) {
      throw std::invalid_argument("subset: index " + std::to_string(idx) + " out of range");
    }
    x = x | Subset::single(idx);
  }
  return x;
}

Json sequence_to_json(const SetSequence& s) {
  Json out = Json::array();
  for (Subset p : s.parts) {
    out.push_back(subset_to_json(p));
  }
  return out;
}

SetSequence sequence_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("sequence: expected a non-empty array of subsets");
  }
  SetSequence s;
  s.n = static_cast<int>(j.size());
  for (const Json& part : j) {
    s.parts.push_back(subset_from_json(part));
  }
  return s;
}

Json matrix_to_json(const BoolMatrix& m) {
  Json out = Json::array();
  for (int r = 1; r <= m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 1; c <= m.cols(); ++c) {
      row.push_back(m.get(r, c) ? 1 : 0);
    }
    out.push_back(std::move(row));
  }
  return out;
}

BoolMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix: expected a non-empty array of row arrays");
  }
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  BoolMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("matrix: ragged rows");
    }
    for (int c = 0; c < cols; ++c) {
      const int v = row[static_cast<std::size_t>(c)].get<int>();
      if (v != 0 && v != 1) {
        throw std::invalid_argument("matrix: entries must be 0 or 1");
      }
      m.set(r + 1, c + 1, v == 1);
    }
  }
  return m;
}

Json endomorphism_to_json(const Endomorphism& f) {
  Json images = Json::array();
  for (Subset x : f.images) {
    images.push_back(subset_to_json(x));
  }
  return Json{{"n", f.n}, {"images", std::move(images)}};
}

Endomorphism endomorphism_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const Json& images = j.at("images");
  if (!images.is_array() || static_cast<int>(images.size()) != n) {
    throw std::invalid_argument("endomorphism: expected exactly n image sets");
  }
  SetSequence s;
  s.n = n;
  for (const Json& part : images) {
    s.parts.push_back(subset_from_json(part));
  }
  return endo_from_sequence(s);
}

Json rewrite_system_to_json(const RewriteSystem& rs) {
  Json rules = Json::array();
  for (const RewriteRule& r : rs.rules()) {
    rules.push_back(Json{{"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}});
  }
  return Json{{"n", rs.alphabet_size()}, {"complete", rs.is_complete()}, {"rules", std::move(rules)}};
}

Json count_to_json(const CountResult& r) {
  return Json{{"m", r.m}, {"n", r.n}, {"value", r.value.str()}, {"source", to_string(r.source)}};
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry{{"id", c.id}, {"scope", c.scope}, {"pass", c.pass}, {"seconds", c.seconds}};
    entry["counterexample"] = c.pass ? Json(nullptr) : Json(c.counterexample);
    checks.push_back(std::move(entry));
  }
  return Json{{"suite", report.suite},
              {"max_n", report.max_n},
              {"guard_bits", report.guard_bits},
              {"pass", report.all_passed()},
              {"wall_seconds", report.wall_seconds},
              {"checks", std::move(checks)}};
}

}  // namespace kiselman
