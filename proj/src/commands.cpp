#include "jetbound/commands.hpp"

#include <iomanip>
#include <sstream>

#include "jetbound/errors.hpp"

namespace jetbound {

std::optional<OutputFormat> parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  return std::nullopt;
}

namespace {

void require_dims(const RunConfig& cfg) {
  if (cfg.n < 2) throw InputError("--dim must be at least 2");
  if (cfg.k < 1) throw InputError("--order must be at least 1");
  if (cfg.weights && cfg.weights->size() != static_cast<std::size_t>(cfg.k))
    throw InputError("--weights must have exactly " + std::to_string(cfg.k) + " entries");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string threshold_text(const std::optional<Integer>& t) { return t ? t->get_str() : "none"; }

void print_report(const MorseReport& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json:
      out << report_to_json(r).dump(2) << '\n';
      break;
    case OutputFormat::csv: {
      out << "dim,order,geometry,weights,total_dim,leading_coeff,threshold,polynomial\n";
      std::string coeffs;
      for (const auto& c : r.morse_poly.coefficients()) coeffs += (coeffs.empty() ? "" : " ") + c.get_str();
      out << r.n << ',' << r.k << ',' << to_string(r.geometry) << ',' << csv_field(r.weights.to_string()) << ','
          << r.total_dim << ',' << r.leading_coeff.get_str() << ',' << (r.threshold ? r.threshold->get_str() : "")
          << ',' << coeffs << '\n';
      break;
    }
    case OutputFormat::text:
      out << "order " << r.k << " jets, " << (r.geometry == GeometryKind::logarithmic_pair ? "log pair (P^" : "hypersurface (dim ")
          << r.n << (r.geometry == GeometryKind::logarithmic_pair ? ", D)" : ")") << '\n'
          << "weights      " << r.weights.to_string() << '\n'
          << "dim X_k      " << r.total_dim << '\n'
          << "P(d)         " << r.morse_poly.poly().to_string() << '\n'
          << "leading      " << r.leading_coeff.get_str() << '\n'
          << "threshold    " << threshold_text(r.threshold) << '\n'
          << "elapsed_ms   " << r.elapsed.count() << '\n';
      break;
  }
}

}  // namespace

MorseReport cached_report(const RunConfig& cfg, int n, int k, const WeightVector& a) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.cache_dir) {
    const ReportCache cache(*cfg.cache_dir);
    if (auto hit = cache.load(n, k, a, cfg.geometry)) {
      hit->elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      return *hit;
    }
    MorseReport fresh = compute_report(n, k, a, cfg.geometry);
    cache.store(fresh);
    return fresh;
  }
  return compute_report(n, k, a, cfg.geometry);
}

CommandResult run_bound(const RunConfig& cfg, std::ostream& out) {
  require_dims(cfg);
  const MorseReport report = cached_report(cfg, cfg.n, cfg.k, cfg.effective_weights());
  print_report(report, cfg.format, out);
  return {report.threshold ? kExitOk : kExitNoThreshold};
}

CommandResult run_poly(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw InputError("--dim must be positive");
  if (cfg.weights && cfg.weights->size() != static_cast<std::size_t>(cfg.k))
    throw InputError("--weights must have exactly " + std::to_string(cfg.k) + " entries");
  const MorseReport report = cached_report(cfg, cfg.n, cfg.k, cfg.effective_weights());
  switch (cfg.format) {
    case OutputFormat::text:
      out << report.morse_poly.poly().to_string() << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["polynomial_text"] = report.morse_poly.poly().to_string();
      j["report"] = report_to_json(report);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "power,coefficient\n";
      const auto coeffs = report.morse_poly.coefficients();
      for (std::size_t e = 0; e < coeffs.size(); ++e) out << e << ',' << coeffs[e].get_str() << '\n';
      break;
    }
  }
  return {kExitOk};
}

// ---------------------------------------------------------------- table

std::vector<TableCell> compute_table(const RunConfig& cfg) {
  if (cfg.table_max < 2 || cfg.table_max > kMaxOrder) throw InputError("table size out of range");
  std::vector<std::pair<int, int>> cells;
  for (int n = 2; n <= cfg.table_max; ++n)
    for (int k = n; k <= cfg.table_max; ++k) cells.emplace_back(n, k);
  return parallel_map<TableCell>(cells.size(), cfg.threads, [&](std::size_t i) {
    const auto [n, k] = cells[i];
    const MorseReport r = cached_report(cfg, n, k, default_weights(k));
    return TableCell{n, k, r.threshold};
  });
}

CommandResult run_table(const RunConfig& cfg, std::ostream& out) {
  const auto cells = compute_table(cfg);
  switch (cfg.format) {
    case OutputFormat::csv:
      out << "dim,order,threshold\n";
      for (const auto& c : cells) out << c.n << ',' << c.k << ',' << (c.threshold ? c.threshold->get_str() : "") << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& c : cells) {
        nlohmann::ordered_json row;
        row["dim"] = c.n;
        row["order"] = c.k;
        if (c.threshold) {
          row["threshold"] = c.threshold->get_si();
        } else {
          row["threshold"] = nullptr;
        }
        rows.push_back(std::move(row));
      }
      out << rows.dump(2) << '\n';
      break;
    }
    case OutputFormat::text: {
      constexpr int kWidth = 8;
      out << "geometry " << to_string(cfg.geometry) << ", default weights\n";
      out << std::setw(4) << "n\\k";
      for (int k = 1; k <= cfg.table_max; ++k) out << std::setw(kWidth) << k;
      out << '\n';
      for (int n = 2; n <= cfg.table_max; ++n) {
        out << std::setw(4) << n;
        for (int k = 1; k <= cfg.table_max; ++k) {
          std::string cell;
          for (const auto& c : cells)
            if (c.n == n && c.k == k) cell = threshold_text(c.threshold);
          out << std::setw(kWidth) << cell;
        }
        out << '\n';
      }
      break;
    }
  }
  return {kExitOk};
}

// ---------------------------------------------------------------- sweep

namespace {

// Smallest possible a_1 + ... + a_j given a_{j+1} = next (chain minimum).
std::int64_t min_prefix_sum(int j, std::int64_t next, int k) {
  std::int64_t sum = 0;
  std::int64_t value = next;
  for (int i = j; i >= 1; --i) {
    value *= (i == k - 1) ? 2 : 3;
    sum += value;
  }
  return sum;
}

// Fills a[0..j-1] (1-based positions 1..j) given a[j] and the remaining sum.
void fill_prefix(std::vector<std::int64_t>& a, int j, std::int64_t remaining, int k,
                 std::vector<std::vector<std::int64_t>>& out) {
  if (j == 0) {
    if (remaining == 0) out.push_back(a);
    return;
  }
  const std::int64_t lower = a[j] * ((j == k - 1) ? 2 : 3);
  if (j == 1) {
    if (remaining >= lower) {
      a[0] = remaining;
      out.push_back(a);
    }
    return;
  }
  for (std::int64_t v = lower; v + min_prefix_sum(j - 1, v, k) <= remaining; ++v) {
    a[j - 1] = v;
    fill_prefix(a, j - 1, remaining - v, k, out);
  }
}

std::vector<std::vector<std::int64_t>> admissible_with_total(int k, std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> a(static_cast<std::size_t>(k));
  if (k == 1) {
    out.push_back({total});
    return out;
  }
  for (std::int64_t last = 1; last + min_prefix_sum(k - 1, last, k) <= total; ++last) {
    a[k - 1] = last;
    fill_prefix(a, k - 1, total - last, k, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<WeightVector> enumerate_weights(int k, std::size_t limit) {
  if (k < 1 || k > kMaxOrder) throw InputError("jet order out of range: " + std::to_string(k));
  std::vector<WeightVector> out;
  for (std::int64_t total = default_weights(k).total(); out.size() < limit; ++total)
    for (auto& a : admissible_with_total(k, total)) {
      if (out.size() == limit) break;
      out.emplace_back(std::move(a));
    }
  return out;
}

SweepResult sweep(const RunConfig& cfg) {
  require_dims(cfg);
  if (cfg.sweep_budget < 1) throw InputError("sweep budget must be at least 1");
  const auto candidates = enumerate_weights(cfg.k, cfg.sweep_budget);
  const auto reports = parallel_map<MorseReport>(candidates.size(), cfg.threads, [&](std::size_t i) {
    return cached_report(cfg, cfg.n, cfg.k, candidates[i]);
  });
  SweepResult result;
  result.evaluated = reports.size();
  // Candidates arrive in (|a|, lex) order, so strict improvement keeps the
  // tie-break.
  for (const auto& r : reports) {
    if (!r.threshold) continue;
    if (!result.best || *r.threshold < *result.best->threshold) result.best = r;
  }
  return result;
}

CommandResult run_sweep(const RunConfig& cfg, std::ostream& out) {
  const SweepResult result = sweep(cfg);
  if (!result.best) {
    out << "no candidate among " << result.evaluated << " has a threshold\n";
    return {kExitNoThreshold};
  }
  const MorseReport& best = *result.best;
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["evaluated"] = result.evaluated;
      j["best"] = report_to_json(best);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "dim,order,geometry,evaluated,weights,threshold\n"
          << best.n << ',' << best.k << ',' << to_string(best.geometry) << ',' << result.evaluated << ','
          << csv_field(best.weights.to_string()) << ',' << best.threshold->get_str() << '\n';
      break;
    case OutputFormat::text:
      out << "evaluated " << result.evaluated << " admissible weight vectors\n"
          << "best weights " << best.weights.to_string() << '\n'
          << "threshold    " << best.threshold->get_str() << '\n';
      break;
  }
  return {kExitOk};
}

// ---------------------------------------------------------------- verify

namespace {

void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                  const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (unsigned first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts, cur, visit);
    cur.pop_back();
  }
}

std::string describe(const std::vector<unsigned>& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

}  // namespace

std::vector<CheckResult> verification_suite(int max_n) {
  std::vector<CheckResult> results;
  const auto top = [](const Polynomial& cls, int n) {
    return evaluate_in_degree(cls, GeometrySpec{GeometryKind::compact_hypersurface, n})
        .coefficient(static_cast<unsigned>(n + 1));
  };

  for (int n = 2; n <= max_n; ++n) {
    // c_1^{[j]} = c_1 + (n-1)(u_1 + ... + u_j)
    {
      CheckResult r{"c1-identity", n, true, ""};
      for (int k = 1; k <= max_n + 2 && r.passed; ++k) {
        const TowerContext ctx(n, k);
        const RelationSet rels(ctx);
        for (int j = 0; j < k; ++j) {
          Polynomial expected = Polynomial::variable(ctx.c(1));
          for (int s = 1; s <= j; ++s) expected += Polynomial::variable(ctx.u(s)) * Integer(n - 1);
          if (rels.lifted_chern(j, 1) != expected) {
            r.passed = false;
            r.detail = "k=" + std::to_string(k) + " level " + std::to_string(j);
            break;
          }
        }
      }
      results.push_back(r);
    }
    // k < n: every u-monomial of top degree has vanishing d^{n+1} coefficient.
    {
      CheckResult r{"top-coefficient-vanishing", n, true, ""};
      std::size_t checked = 0;
      for (int k = 1; k < n && r.passed; ++k) {
        const RelationSet rels{TowerContext(n, k)};
        std::vector<unsigned> cur;
        compositions(static_cast<unsigned>(rels.context().total_dim()), static_cast<std::size_t>(k), cur,
                     [&](const std::vector<unsigned>& e) {
                       ++checked;
                       const Integer c = top(intersect(rels, e), n);
                       if (c != 0 && r.passed) {
                         r.passed = false;
                         r.detail = "k=" + std::to_string(k) + " e=" + describe(e) + " gives " + c.get_str();
                       }
                     });
      }
      if (r.passed) r.detail = std::to_string(checked) + " tuples";
      results.push_back(r);
    }
    // Same with c_1^i on X_{n-i-1}, i = 1..n-2.
    if (n >= 3) {
      CheckResult r{"c1-power-vanishing", n, true, ""};
      std::size_t checked = 0;
      for (int i = 1; i <= n - 2 && r.passed; ++i) {
        const int k = n - i - 1;
        const RelationSet rels{TowerContext(n, k)};
        const Polynomial c1_power = pow(Polynomial::variable(VariableId::c(1)), static_cast<unsigned>(i));
        std::vector<unsigned> cur;
        compositions(static_cast<unsigned>(k * n + 1), static_cast<std::size_t>(k), cur,
                     [&](const std::vector<unsigned>& e) {
                       ++checked;
                       const Integer c = top(intersect(rels, e, c1_power), n);
                       if (c != 0 && r.passed) {
                         r.passed = false;
                         r.detail = "i=" + std::to_string(i) + " e=" + describe(e) + " gives " + c.get_str();
                       }
                     });
      }
      if (r.passed) r.detail = std::to_string(checked) + " tuples";
      results.push_back(r);
    }
    // u_1^n ... u_n^n has d^{n+1} coefficient 1.
    {
      const RelationSet rels{TowerContext(n, n)};
      const std::vector<unsigned> e(static_cast<std::size_t>(n), static_cast<unsigned>(n));
      const Integer c = top(intersect(rels, e), n);
      results.push_back({"diagonal-intersection", n, c == 1, "d^" + std::to_string(n + 1) + " coefficient " + c.get_str()});
    }
    // k < n: O(a)^N has no d^{n+1} term for any admissible a.
    {
      CheckResult r{"leading-vanishing", n, true, ""};
      for (int k = 1; k < n && r.passed; ++k) {
        const RelationSet rels{TowerContext(n, k)};
        for (const auto& a : enumerate_weights(k, 4)) {
          for (auto kind : {GeometryKind::compact_hypersurface, GeometryKind::logarithmic_pair}) {
            const Integer c = leading_degree_coefficient(rels, a, GeometrySpec{kind, n});
            if (c != 0) {
              r.passed = false;
              r.detail = "k=" + std::to_string(k) + " a=" + a.to_string() + " gives " + c.get_str();
            }
          }
        }
      }
      results.push_back(r);
    }
    // k = n, default weights: positive d^{n+1} coefficient of the Morse polynomial.
    {
      const RelationSet rels{TowerContext(n, n)};
      const auto p = morse_polynomial(rels, default_weights(n), GeometrySpec{GeometryKind::compact_hypersurface, n});
      const Integer c = p.coefficient(static_cast<unsigned>(n + 1));
      results.push_back({"existence", n, c > 0, "d^" + std::to_string(n + 1) + " coefficient " + c.get_str()});
    }
  }
  return results;
}

CommandResult run_verify(const RunConfig& cfg, std::ostream& out) {
  const int max_n = std::clamp(cfg.n, 2, 3);
  const auto results = verification_suite(max_n);
  bool all = true;
  if (cfg.format == OutputFormat::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      rows.push_back({{"check", r.name}, {"dim", r.n}, {"passed", r.passed}, {"detail", r.detail}});
      all = all && r.passed;
    }
    out << rows.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::csv) {
    out << "check,dim,status,detail\n";
    for (const auto& r : results) {
      out << r.name << ',' << r.n << ',' << (r.passed ? "pass" : "FAIL") << ',' << csv_field(r.detail) << '\n';
      all = all && r.passed;
    }
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(27) << r.name << "n=" << r.n << "  " << (r.passed ? "pass" : "FAIL") << "  "
          << r.detail << '\n';
      all = all && r.passed;
    }
  }
  return {all ? kExitOk : kExitInternal};
}

}  // namespace jetbound
