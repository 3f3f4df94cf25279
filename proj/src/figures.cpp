#include "primrt/figures.hpp"

#include <algorithm>

#include "primrt/conjectures.hpp"
#include "primrt/error.hpp"
#include "primrt/matrix_io.hpp"

namespace primrt {

void CsvTable::add(std::size_t n, std::optional<std::size_t> k, std::string quantity,
                   std::optional<Rational> value) {
  rows_.push_back(Row{n, k, std::move(quantity), std::move(value)});
}

std::string CsvTable::render() const {
  std::string out(header);
  out += '\n';
  for (const Row& r : rows_) {
    out += std::to_string(r.n);
    out += ',';
    if (r.k) out += std::to_string(*r.k);
    out += ',';
    out += r.quantity;
    out += ',';
    if (r.value) {
      out += r.value->to_string();
      out += ',';
      out += r.value->ceil().get_str();
    } else {
      out += "NA,NA";
    }
    out += '\n';
  }
  return out;
}

namespace {

SearchLimits limits_for(std::size_t n, const FigureOptions& o) {
  SearchLimits l = SearchLimits::defaults(n);
  if (o.max_depth) l.max_depth = *o.max_depth;
  if (o.max_states) l.max_states = *o.max_states;
  return l;
}

std::optional<Rational> count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

void append_exact(CsvTable& t, const MatrixSet& set, const FigureOptions& o) {
  const SearchResult r = explore(set, limits_for(set.n(), o));
  for (std::size_t k = 2; k <= set.n(); ++k) {
    const FirstReach& fr = r.rt(k);
    t.add(set.n(), k, "rt_exact", fr.found() ? count(fr.length) : std::nullopt);
  }
}

void append_heuristic(CsvTable& t, const MatrixSet& set, const FigureOptions& o) {
  const HeuristicTrace tr = run_heuristic(set, o.mode);
  const std::string name = "eppstein_" + std::string(to_string(o.mode));
  for (std::size_t k = 2; k <= set.n(); ++k) t.add(set.n(), k, name, count(tr.per_k_length[k]));
}

const std::vector<MatrixSet>& require_sets(std::string_view name, const FigureOptions& o) {
  if (o.sets.empty()) {
    throw Error(ErrorKind::usage, std::string(name) + " needs at least one --file or --builtin");
  }
  return o.sets;
}

CsvTable builtin_exact(std::string_view builtin, const FigureOptions& o) {
  CsvTable t;
  const MatrixSet set = *builtin_set(builtin);
  append_exact(t, set, o);
  append_bounds(t, set.n(), 2, set.n(), o.rule);
  return t;
}

CsvTable fixed_k(const FigureOptions& o) {
  std::vector<std::size_t> ks{10, 20, 30, 40, 50, 100};
  if (o.k) ks = {*o.k};
  const std::size_t n_max = o.n_max.value_or(1000);
  CsvTable t;
  for (std::size_t k : ks) {
    for (std::size_t n = std::max<std::size_t>(k, 2); n <= n_max; ++n) append_bounds(t, n, k, k, o.rule);
  }
  return t;
}

CsvTable fixed_n(const FigureOptions& o) {
  std::vector<std::size_t> ns{10, 50, 100, 200, 500, 1000};
  if (o.n) ns = {*o.n};
  CsvTable t;
  for (std::size_t n : ns) append_bounds(t, n, 2, std::min(n, o.k_max.value_or(n)), o.rule);
  return t;
}

CsvTable thresholds(const FigureOptions& o) {
  const std::size_t n_max = o.n_max.value_or(1000);
  const std::size_t k_lo = o.k.value_or(7);
  const std::size_t k_hi = o.k_max.value_or(50);
  if (k_lo > k_hi || k_hi > n_max) throw Error(ErrorKind::usage, "need k <= k-max <= n-max");
  const ScanReport r = scan_conjectures({2, n_max}, {k_lo, k_hi});
  CsvTable t;
  for (const ScanThreshold& th : r.thresholds) {
    t.add(n_max, th.k, "threshold",
          th.threshold ? count(*th.threshold) : std::nullopt);
    t.add(n_max, th.k, "n_k", count(th.predicted));
  }
  return t;
}

CsvTable nrt(const FigureOptions& o) {
  const std::size_t n_max = o.n_max.value_or(300);
  CsvTable t;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto b = bk_row(n, n, o.rule);
    const auto N = static_cast<std::int64_t>(n);
    t.add(n, n, "F", f_bound(n, n, b).value);
    t.add(n, n, "B", b[n]);
    t.add(n, n, "szykula", szykula_bound(n));
    t.add(n, n, "n3_over_3", Rational(N * N * N, 3));
  }
  return t;
}

}  // namespace

void append_bounds(CsvTable& t, std::size_t n, std::size_t k_lo, std::size_t k_hi,
                   MidrangeRule rule) {
  const auto b = bk_row(n, k_hi, rule);
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    const FBound f = f_bound(n, k, b);
    t.add(n, k, "B", b[k]);
    t.add(n, k, "F", f.value);
    t.add(n, k, "F_argmin_h", count(f.argmin_h));
  }
}

std::vector<std::string> figure_names() {
  return {"fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
}

CsvTable figure(std::string_view name, const FigureOptions& o) {
  if (name == "fig2a") return builtin_exact("cpr", o);
  if (name == "fig2b") return builtin_exact("kari", o);
  if (name == "fig3") {
    // Bounds against the heuristic on each supplied set.
    CsvTable t;
    for (const MatrixSet& set : require_sets(name, o)) {
      append_bounds(t, set.n(), 2, set.n(), o.rule);
      append_heuristic(t, set, o);
    }
    return t;
  }
  if (name == "fig4") {
    // Fixed k over a band of n; heuristic rows for every supplied set in the band.
    const std::size_t k = o.k.value_or(4);
    const std::size_t lo = std::max(o.n.value_or(21), k);
    const std::size_t hi = o.n_max.value_or(30);
    CsvTable t;
    for (std::size_t n = lo; n <= hi; ++n) {
      append_bounds(t, n, k, k, o.rule);
      for (const MatrixSet& set : o.sets) {
        if (set.n() != n) continue;
        const HeuristicTrace tr = run_heuristic(set, o.mode);
        t.add(n, k, "eppstein_" + std::string(to_string(o.mode)), count(tr.per_k_length[k]));
      }
    }
    return t;
  }
  if (name == "fig5") {
    CsvTable t;
    for (const MatrixSet& set : require_sets(name, o)) {
      append_exact(t, set, o);
      append_bounds(t, set.n(), 2, set.n(), o.rule);
    }
    return t;
  }
  if (name == "fig6") return fixed_k(o);
  if (name == "fig7") return fixed_n(o);
  if (name == "fig8") return thresholds(o);
  if (name == "fig9") return nrt(o);
  throw Error(ErrorKind::usage, "unknown figure '" + std::string(name) + "'");
}

}  // namespace primrt
