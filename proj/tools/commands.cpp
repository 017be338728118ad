#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "kiselman/kiselman.hpp"

namespace kiselman::cli {

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(Json& j, const RunConfig& cfg) {
  if (!cfg.no_timestamp) {
    j["generated_at"] = utc_timestamp();
  }
}

int write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(cfg.output_path);
  if (!out) {
    std::cerr << "cannot write to " << cfg.output_path << "\n";
    return kExitVerificationFailure;
  }
  out << text;
  return kExitOk;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool format_is(const RunConfig& cfg, const char* name) { return cfg.format == name; }

std::string images_display(const Endomorphism& f) {
  std::string out = "(";
  for (int i = 1; i <= f.n; ++i) {
    if (i > 1) out += ",";
    out += f.image_of(i).to_string();
  }
  out += ")";
  return out;
}

std::string sequence_csv(const Endomorphism& f) {
  std::string out;
  for (int i = 1; i <= f.n; ++i) {
    if (i > 1) out += ",";
    out += word_csv(idempotent_word(f.image_of(i)));
  }
  return out;
}

}  // namespace

int cmd_elements(const RunConfig& cfg) {
  const KiselmanMonoid monoid(cfg.n, cfg.max_rules);
  std::vector<Element> all = monoid.elements(cfg.max_elements);
  if (cfg.idempotents_only) {
    std::erase_if(all, [&](const Element& e) { return !monoid.is_idempotent(e); });
  }

  if (format_is(cfg, "json")) {
    Json j;
    j["n"] = cfg.n;
    j["idempotents_only"] = cfg.idempotents_only;
    Json list = Json::array();
    for (const Element& e : all) {
      list.push_back(element_to_json(e));
    }
    j["elements"] = std::move(list);
    j["count"] = all.size();
    stamp(j, cfg);
    return write_output(cfg, dump(j));
  }
  if (format_is(cfg, "csv")) {
    std::string out = "word\n";
    for (const Element& e : all) {
      out += word_csv(e.nf) + "\n";
    }
    return write_output(cfg, out);
  }
  std::string out;
  for (const Element& e : all) {
    out += word_name(e.nf) + "\n";
  }
  out += "count: " + std::to_string(all.size()) + "\n";
  return write_output(cfg, out);
}

int cmd_endos(const RunConfig& cfg) {
  if (cfg.n > kDefaultEndoGuard) {
    throw GuardExceeded("endos: n = " + std::to_string(cfg.n) + " exceeds the guard of " +
                        std::to_string(kDefaultEndoGuard));
  }
  const std::vector<Endomorphism> via_monotone = endomorphisms_from_monotone(cfg.n);
  std::vector<Endomorphism> listing;
  if (cfg.method == "brute") {
    const KiselmanMonoid monoid(cfg.n, cfg.max_rules);
    listing = brute_force_endomorphisms(monoid);
  } else {
    listing = via_monotone;
  }
  // The two discovery paths must agree, whichever one was displayed.
  if (listing != via_monotone) {
    std::cerr << "discovery paths disagree: brute force found " << listing.size()
              << " endomorphisms, the monotone route " << via_monotone.size() << "\n";
    return kExitVerificationFailure;
  }

  if (format_is(cfg, "json")) {
    Json j;
    j["n"] = cfg.n;
    j["method"] = cfg.method;
    Json list = Json::array();
    for (const Endomorphism& f : listing) {
      Json entry;
      entry["endomorphism"] = endomorphism_to_json(f);
      entry["sequence"] = sequence_to_json(phi(f));
      entry["matrix"] = matrix_to_json(psi(phi(f)));
      list.push_back(std::move(entry));
    }
    j["endomorphisms"] = std::move(list);
    j["count"] = listing.size();
    stamp(j, cfg);
    return write_output(cfg, dump(j));
  }
  if (format_is(cfg, "csv")) {
    std::string out;
    for (int i = 1; i <= cfg.n; ++i) {
      out += "img" + std::to_string(i) + ",";
    }
    out += "matrix_flat\n";
    for (const Endomorphism& f : listing) {
      out += sequence_csv(f) + "," + std::to_string(psi(phi(f)).to_flat()) + "\n";
    }
    return write_output(cfg, out);
  }
  std::string out;
  std::size_t index = 0;
  for (const Endomorphism& f : listing) {
    std::ostringstream line;
    line << index++ << "\t" << images_display(f) << "\t" << sequence_to_json(phi(f)).dump()
         << "\t" << psi(phi(f)).to_string();
    out += line.str() + "\n";
  }
  out += "count: " + std::to_string(listing.size()) + "\n";
  return write_output(cfg, out);
}

namespace {

struct CountRow {
  int m;
  int n;
  std::optional<CountResult> closed;
  std::optional<CountResult> brute;
  bool agree_known = false;
  bool agree = true;
};

CountRow count_row(int m, int n, const RunConfig& cfg) {
  CountRow row{m, n, std::nullopt, std::nullopt, false, true};
  if (!cfg.brute_only && m >= 2 && m <= 5) {
    row.closed = closed_count(m, n);
  }
  if (m * n <= cfg.guard_bits) {
    row.brute = brute_count(m, n, cfg.guard_bits, cfg.parallelism);
  }
  if (row.closed && row.brute) {
    row.agree_known = true;
    row.agree = row.closed->value == row.brute->value;
  }
  return row;
}

std::string value_or_dash(const std::optional<CountResult>& r) {
  return r ? r->value.str() : "-";
}

std::string agree_label(const CountRow& row) {
  if (!row.agree_known) return "n/a";
  return row.agree ? "yes" : "NO";
}

}  // namespace

int cmd_count(const RunConfig& cfg) {
  std::vector<CountRow> rows;
  if (cfg.grid) {
    for (int m = 2; m <= 5; ++m) {
      for (int n = 1; m * n <= cfg.guard_bits; ++n) {
        rows.push_back(count_row(m, n, cfg));
      }
    }
  } else {
    if (!cfg.brute_only && (cfg.m < 2 || cfg.m > 5)) {
      std::cerr << "closed formulas cover m = 2..5; pass --brute-only for other row counts\n";
      return kExitUsage;
    }
    rows.push_back(count_row(cfg.m, cfg.n, cfg));
  }

  bool disagreement = false;
  for (const CountRow& row : rows) {
    if (row.agree_known && !row.agree) disagreement = true;
  }

  int write_rc = kExitOk;
  if (format_is(cfg, "json")) {
    Json j;
    Json list = Json::array();
    for (const CountRow& row : rows) {
      Json entry{{"m", row.m}, {"n", row.n}};
      entry["closed"] = row.closed ? count_to_json(*row.closed) : Json(nullptr);
      entry["brute"] = row.brute ? count_to_json(*row.brute) : Json(nullptr);
      entry["agree"] = row.agree_known ? Json(row.agree) : Json(nullptr);
      list.push_back(std::move(entry));
    }
    j["results"] = std::move(list);
    stamp(j, cfg);
    write_rc = write_output(cfg, dump(j));
  } else if (format_is(cfg, "csv")) {
    std::string out = "m,n,closed,brute,agree\n";
    for (const CountRow& row : rows) {
      out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
             (row.closed ? row.closed->value.str() : "") + "," +
             (row.brute ? row.brute->value.str() : "") + "," + agree_label(row) + "\n";
    }
    write_rc = write_output(cfg, out);
  } else {
    std::string out;
    for (const CountRow& row : rows) {
      std::ostringstream line;
      line << "m=" << row.m << " n=" << row.n << "  closed=" << value_or_dash(row.closed)
           << "  brute=" << value_or_dash(row.brute) << "  agree=" << agree_label(row);
      out += line.str() + "\n";
    }
    write_rc = write_output(cfg, out);
  }
  if (write_rc != kExitOk) return write_rc;
  return disagreement ? kExitVerificationFailure : kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions options;
  options.max_n = cfg.n;
  options.guard_bits = cfg.guard_bits;
  options.parallelism = cfg.parallelism;
  options.suite = cfg.suite;
  options.max_rules = cfg.max_rules;
  options.max_elements = cfg.max_elements;
  const VerificationReport report = run_verification(options);

  int write_rc;
  if (format_is(cfg, "json")) {
    Json j = report_to_json(report);
    stamp(j, cfg);
    write_rc = write_output(cfg, dump(j));
  } else {
    std::string out;
    for (const CheckResult& c : report.checks) {
      char line[256];
      std::snprintf(line, sizeof(line), "[%s] %-28s %-46s %6.2fs\n", c.pass ? "PASS" : "FAIL",
                    c.id.c_str(), c.scope.c_str(), c.seconds);
      out += line;
      if (!c.pass) {
        out += "       counterexample: " + c.counterexample + "\n";
      }
    }
    std::size_t passed = 0;
    for (const CheckResult& c : report.checks) {
      if (c.pass) ++passed;
    }
    std::ostringstream tail;
    tail << passed << "/" << report.checks.size() << " checks passed in " << report.wall_seconds
         << "s\n";
    out += tail.str();
    write_rc = write_output(cfg, out);
  }
  if (write_rc != kExitOk) return write_rc;
  return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

namespace {

inline constexpr std::size_t kTableExportCap = 2000;

int export_kn_table(const RunConfig& cfg) {
  const KiselmanMonoid monoid(cfg.n, cfg.max_rules);
  const std::vector<Element> all = monoid.elements(cfg.max_elements);
  if (all.size() > kTableExportCap) {
    throw GuardExceeded("kn-table: " + std::to_string(all.size()) +
                        " elements exceed the table cap of " + std::to_string(kTableExportCap));
  }
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[all[i].nf] = i;
  }
  std::vector<std::vector<std::size_t>> table(all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    table[a].reserve(all.size());
    for (std::size_t b = 0; b < all.size(); ++b) {
      const Element product = monoid.multiply(all[a], all[b]);
      const auto hit = index.find(product.nf);
      if (hit == index.end()) {
        std::cerr << "closure violation: " << word_name(all[a].nf) << " * "
                  << word_name(all[b].nf) << " fell outside the listing\n";
        return kExitVerificationFailure;
      }
      table[a].push_back(hit->second);
    }
  }
  if (format_is(cfg, "csv")) {
    std::string out = "lhs";
    for (const Element& e : all) {
      out += "," + word_csv(e.nf);
    }
    out += "\n";
    for (std::size_t a = 0; a < all.size(); ++a) {
      out += word_csv(all[a].nf);
      for (std::size_t b = 0; b < all.size(); ++b) {
        out += "," + word_csv(all[table[a][b]].nf);
      }
      out += "\n";
    }
    return write_output(cfg, out);
  }
  Json j;
  j["n"] = cfg.n;
  Json elements = Json::array();
  for (const Element& e : all) {
    elements.push_back(element_to_json(e));
  }
  j["elements"] = std::move(elements);
  j["table"] = table;
  stamp(j, cfg);
  return write_output(cfg, dump(j));
}

int export_dn_table(const RunConfig& cfg) {
  const std::vector<BoolMatrix> all = enumerate_dn(cfg.n);
  if (all.size() > kTableExportCap) {
    throw GuardExceeded("dn-table: " + std::to_string(all.size()) +
                        " matrices exceed the table cap of " + std::to_string(kTableExportCap));
  }
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) {
    index[all[i].to_flat()] = i;
  }
  std::vector<std::vector<std::size_t>> table(all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    table[a].reserve(all.size());
    for (std::size_t b = 0; b < all.size(); ++b) {
      const BoolMatrix product = bool_mul(all[a], all[b]);
      const auto hit = index.find(product.to_flat());
      if (hit == index.end()) {
        std::cerr << "closure violation: " << all[a].to_string() << " * " << all[b].to_string()
                  << " fell outside D_n\n";
        return kExitVerificationFailure;
      }
      table[a].push_back(hit->second);
    }
  }
  if (format_is(cfg, "csv")) {
    std::string out = "lhs";
    for (const BoolMatrix& m : all) {
      out += "," + std::to_string(m.to_flat());
    }
    out += "\n";
    for (std::size_t a = 0; a < all.size(); ++a) {
      out += std::to_string(all[a].to_flat());
      for (std::size_t b = 0; b < all.size(); ++b) {
        out += "," + std::to_string(all[table[a][b]].to_flat());
      }
      out += "\n";
    }
    return write_output(cfg, out);
  }
  Json j;
  j["n"] = cfg.n;
  Json elements = Json::array();
  for (const BoolMatrix& m : all) {
    elements.push_back(matrix_to_json(m));
  }
  j["elements"] = std::move(elements);
  j["table"] = table;
  stamp(j, cfg);
  return write_output(cfg, dump(j));
}

int export_dn_list(const RunConfig& cfg) {
  const std::vector<BoolMatrix> all = enumerate_dn(cfg.n);
  if (format_is(cfg, "csv")) {
    std::string out;
    for (int r = 1; r <= cfg.n; ++r) {
      for (int c = 1; c <= cfg.n; ++c) {
        if (r != 1 || c != 1) out += ",";
        out += "m" + std::to_string(r) + std::to_string(c);
      }
    }
    out += "\n";
    for (const BoolMatrix& m : all) {
      std::string line;
      for (int r = 1; r <= cfg.n; ++r) {
        for (int c = 1; c <= cfg.n; ++c) {
          if (r != 1 || c != 1) line += ",";
          line += m.get(r, c) ? "1" : "0";
        }
      }
      out += line + "\n";
    }
    return write_output(cfg, out);
  }
  Json j;
  j["n"] = cfg.n;
  Json list = Json::array();
  for (const BoolMatrix& m : all) {
    list.push_back(matrix_to_json(m));
  }
  j["matrices"] = std::move(list);
  j["count"] = all.size();
  stamp(j, cfg);
  return write_output(cfg, dump(j));
}

int export_endos(const RunConfig& cfg) {
  RunConfig inner = cfg;
  inner.format = cfg.format == "csv" ? "csv" : "json";
  return cmd_endos(inner);
}

int export_rules(const RunConfig& cfg) {
  if (format_is(cfg, "csv")) {
    std::cerr << "rules export is JSON only\n";
    return kExitUsage;
  }
  const RewriteSystem rs = complete(make_presentation(cfg.n), cfg.max_rules);
  Json j = rewrite_system_to_json(rs);
  stamp(j, cfg);
  return write_output(cfg, dump(j));
}

}  // namespace

int cmd_export(const RunConfig& cfg) {
  if (cfg.what == "kn-table") return export_kn_table(cfg);
  if (cfg.what == "dn-table") return export_dn_table(cfg);
  if (cfg.what == "dn-list") return export_dn_list(cfg);
  if (cfg.what == "endos") return export_endos(cfg);
  if (cfg.what == "elements") {
    RunConfig inner = cfg;
    inner.format = cfg.format == "csv" ? "csv" : "json";
    return cmd_elements(inner);
  }
  if (cfg.what == "rules") return export_rules(cfg);
  std::cerr << "unknown export target '" << cfg.what
            << "' (expected kn-table, dn-table, dn-list, endos, elements or rules)\n";
  return kExitUsage;
}

}  // namespace kiselman::cli
