#include "primrt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "primrt/akn.hpp"
#include "primrt/automata.hpp"
#include "primrt/bounds.hpp"
#include "primrt/conjectures.hpp"
#include "primrt/figures.hpp"
#include "primrt/heuristic.hpp"
#include "primrt/matrix_io.hpp"
#include "primrt/pair_digraph.hpp"
#include "primrt/semigroup.hpp"

namespace primrt {

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage: return 2;
    case ErrorKind::parse: return 3;
    case ErrorKind::dimension: return 4;
    case ErrorKind::not_nz: return 5;
    case ErrorKind::out_of_range: return 6;
    case ErrorKind::cap_exceeded: return 7;
    case ErrorKind::limit_exhausted: return 8;
    case ErrorKind::not_primitive: return 9;
    case ErrorKind::no_path: return 10;
  }
  return 1;
}

namespace {

struct Flags {
  std::vector<std::string> builtins;
  std::vector<std::string> files;
  std::optional<std::size_t> k, k_max, n, n_max;
  std::optional<std::size_t> max_depth, max_states;
  std::size_t letter_cap = default_letter_cap;
  std::string mode = "specific";
  bool ceil_variant = false;
  std::string figure_name;
};

std::vector<MatrixSet> load_sets(const Flags& f) {
  std::vector<MatrixSet> sets;
  for (const auto& b : f.builtins) {
    auto s = builtin_set(b);
    if (!s) throw Error(ErrorKind::usage, "unknown builtin '" + b + "'");
    sets.push_back(std::move(*s));
  }
  for (const auto& path : f.files) sets.push_back(parse_set_file(path));
  return sets;
}

MatrixSet one_set(const Flags& f) {
  auto sets = load_sets(f);
  if (sets.size() != 1) {
    throw Error(ErrorKind::usage, "expected exactly one --builtin or --file, got " +
                                      std::to_string(sets.size()));
  }
  return std::move(sets.front());
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::usage, std::string("missing ") + flag);
  return *v;
}

SearchLimits search_limits(const Flags& f, std::size_t n) {
  SearchLimits l = SearchLimits::defaults(n);
  if (f.max_depth) l.max_depth = *f.max_depth;
  if (f.max_states) l.max_states = *f.max_states;
  return l;
}

AutomataLimits automata_limits(const Flags& f, std::size_t n) {
  AutomataLimits l = AutomataLimits::defaults(n);
  l.letter_cap = f.letter_cap;
  l.search = search_limits(f, n);
  if (f.max_states) l.subset_states = *f.max_states;
  return l;
}

MidrangeRule rule(const Flags& f) {
  return f.ceil_variant ? MidrangeRule::ceiling : MidrangeRule::quotient;
}

HeuristicMode mode(const Flags& f) {
  return f.mode == "any" ? HeuristicMode::any : HeuristicMode::specific;
}

std::string word_text(const MatrixSet& set, const std::vector<std::size_t>& word) {
  std::string s;
  for (std::size_t g : word) {
    if (!s.empty()) s += ' ';
    s += set.label(g);
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string compact(const BoolMatrix& m) {
  std::string s = m.to_string();
  std::replace(s.begin(), s.end(), '\n', '/');
  if (!s.empty()) s.pop_back();
  return s;
}

void require_primitive(const MatrixSet& set) {
  const PrimitivityReport r = is_primitive(set);
  if (r.primitive) return;
  if (r.unreachable) {
    throw Error(ErrorKind::not_primitive,
                "reducible: state " + std::to_string(r.unreachable->second + 1) +
                    " unreachable from state " + std::to_string(r.unreachable->first + 1));
  }
  throw Error(ErrorKind::not_primitive, "pair (" + std::to_string(r.failing_vertex->i + 1) + "," +
                                            std::to_string(r.failing_vertex->j + 1) +
                                            ") reaches no singleton");
}

void cmd_check(const Flags& f, std::ostream& out) {
  const MatrixSet set = one_set(f);
  out << "n: " << set.n() << "\ngenerators: " << set.size() << '\n';
  try {
    set.require_nz();
  } catch (const Error& e) {
    out << "nz: no (" << e.what() << ")\n";
    return;
  }
  out << "nz: yes\n";
  const PrimitivityReport r = is_primitive(set);
  out << "irreducible: " << yes_no(r.irreducible) << '\n';
  if (r.unreachable) {
    out << "certificate: state " << r.unreachable->second + 1 << " unreachable from state "
        << r.unreachable->first + 1 << '\n';
  }
  out << "primitive: " << yes_no(r.primitive) << '\n';
  if (r.failing_vertex) {
    out << "certificate: pair (" << r.failing_vertex->i + 1 << "," << r.failing_vertex->j + 1
        << ") reaches no singleton\n";
  }
}

void cmd_exponent(const Flags& f, std::ostream& out) {
  const MatrixSet set = one_set(f);
  require_primitive(set);
  const SearchResult r = explore(set, search_limits(f, set.n()));
  if (!r.exponent.found()) {
    throw Error(ErrorKind::limit_exhausted, "search stopped at depth " +
                                                std::to_string(r.depth_reached) + " after " +
                                                std::to_string(r.explored) + " products");
  }
  out << r.exponent.length << '\n';
}

void cmd_krt(const Flags& f, std::ostream& out) {
  const MatrixSet set = one_set(f);
  const SearchResult r = explore(set, search_limits(f, set.n()));
  out << "k,rt,witness\n";
  for (std::size_t k = 2; k <= set.n(); ++k) {
    const FirstReach& fr = r.rt(k);
    out << k << ',';
    if (fr.found()) out << fr.length << ',' << word_text(set, fr.witness) << '\n';
    else out << "NA," << (fr.status == ReachStatus::limit_reached ? "limit" : "unreachable") << '\n';
  }
}

void print_automaton(std::ostream& out, const char* title, const Automaton& aut) {
  out << title << ": " << aut.size() << '\n';
  for (std::size_t a = 0; a < aut.size(); ++a) {
    out << "  " << aut.label(a) << ' ' << compact(aut.letter(a)) << '\n';
  }
}

void cmd_automata(const Flags& f, std::ostream& out) {
  const MatrixSet set = one_set(f);
  const AutomataLimits lim = automata_limits(f, set.n());
  print_automaton(out, "letters", associated_automaton(set, lim.letter_cap));
  print_automaton(out, "transposed letters", associated_automaton(transpose_set(set), lim.letter_cap));
  const SandwichReport s = verify_theorem_sandwich(set, lim);
  out << "reset_threshold: " << s.rt_aut << '\n'
      << "reset_threshold_transposed: " << s.rt_aut_transposed << '\n'
      << "exponent: " << s.exponent << '\n'
      << "sandwich: " << s.rt_aut << " <= " << s.exponent << " <= " << s.upper << " ("
      << (s.holds() ? "holds" : "VIOLATED") << (s.lower_tight ? ", lower tight" : "")
      << (s.upper_tight ? ", upper tight" : "") << ")\n";
  out << "k,rt_set,rt_aut,rt_aut_transposed,equal\n";
  for (const auto& r : verify_krt_equality_profile(set, lim)) {
    out << r.k << ',' << r.rt_set << ',' << r.rt_aut << ',' << r.rt_aut_transposed << ','
        << yes_no(r.holds) << '\n';
  }
}

void cmd_bounds(const Flags& f, std::ostream& out) {
  const std::size_t n = need(f.n, "--n");
  const std::size_t kmax = f.k_max.value_or(n);
  const BoundTable t = bound_table(n, kmax, true, rule(f));
  CsvTable csv;
  for (std::size_t k = 2; k <= kmax; ++k) {
    csv.add(n, k, "B", t.values.at({BoundKind::b, k}));
    csv.add(n, k, "F", t.values.at({BoundKind::f, k}));
    csv.add(n, k, "F_argmin_h",
            Rational(static_cast<std::int64_t>(t.f_argmin.at({BoundKind::f, k}))));
    for (std::size_t h = 2; h < k; ++h) {
      csv.add(n, k, "tilde_u_h" + std::to_string(h), t.values.at({BoundKind::tilde_u, k, h}));
    }
    if (k < n) {
      csv.add(n, k, "akn_lower", Rational(static_cast<std::int64_t>(akn_lower(n, k))));
      csv.add(n, k, "akn_upper", Rational(static_cast<std::int64_t>(akn_upper(n, k))));
      if (n >= 3) {
        for (std::size_t p = 1; p <= std::min(k, n - k); ++p) {
          csv.add(n, k, "a_hat_p" + std::to_string(p),
                  Rational(static_cast<std::int64_t>(akp_hat(n, k, p))));
        }
      }
    }
  }
  csv.add(n, std::nullopt, "szykula", szykula_bound(n));
  out << csv.render();
}

void cmd_witness(const Flags& f, std::ostream& out) {
  const std::size_t n = need(f.n, "--n");
  const std::size_t k = need(f.k, "--k");
  const WitnessMatrix w = build_witness(n, k);
  const AknEvaluation ev = evaluate_akn(w.matrix, k);
  out << "kind: " << (w.kind == WitnessKind::hat ? "hat" : "tilde") << '\n'
      << "member: " << yes_no(ev.member()) << '\n'
      << "akn_lower: " << akn_lower(n, k) << '\n'
      << "akn_upper: " << akn_upper(n, k) << '\n'
      << "claimed: " << w.claimed_a << '\n'
      << "evaluated: " << ev.value << '\n'
      << "verified: " << yes_no(ev.member() && ev.value == w.claimed_a) << '\n'
      << w.matrix.to_string();
}

void cmd_heuristic(const Flags& f, std::ostream& out) {
  const MatrixSet set = one_set(f);
  const HeuristicTrace t = run_heuristic(set, mode(f));
  out << "mode: " << to_string(mode(f)) << '\n'
      << "length: " << t.word.size() << '\n'
      << "column: " << t.column_index + 1 << '\n'
      << "iterations: " << t.iterations << '\n'
      << "word: " << word_text(set, t.word) << '\n'
      << "k,length\n";
  for (std::size_t k = 2; k <= set.n(); ++k) out << k << ',' << t.per_k_length[k] << '\n';
}

void cmd_scan(const Flags& f, std::ostream& out) {
  const std::size_t n_max = need(f.n_max, "--n-max");
  const IntRange ns{f.n.value_or(2), n_max};
  const IntRange ks{f.k.value_or(2), f.k_max.value_or(std::min<std::size_t>(n_max, 20))};
  const ScanReport r = scan_conjectures(ns, ks);
  out << "n,k,F,B,argmin_h,equal\n";
  for (const ScanCell& c : r.cells) {
    out << c.n << ',' << c.k << ',' << c.f << ',' << c.b << ',' << c.argmin_h << ','
        << yes_no(c.f_equals_b()) << '\n';
  }
  out << "\nk,threshold,n_k,within\n";
  for (const ScanThreshold& t : r.thresholds) {
    out << t.k << ',' << (t.threshold ? std::to_string(*t.threshold) : "NA") << ','
        << t.predicted << ',' << yes_no(t.within_prediction()) << '\n';
  }
}

void cmd_figure(const Flags& f, std::ostream& out) {
  FigureOptions o;
  o.sets = load_sets(f);
  o.n = f.n;
  o.n_max = f.n_max;
  o.k = f.k;
  o.k_max = f.k_max;
  o.rule = rule(f);
  o.mode = mode(f);
  o.max_depth = f.max_depth;
  o.max_states = f.max_states;
  out << figure(f.figure_name, o).render();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for primitive sets of NZ boolean matrices", "primrt"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--builtin", f.builtins, "Builtin set: example, cpr, kari");
  app.add_option("--file", f.files, "Matrix-set file (repeatable)");
  app.add_option("--k", f.k, "k, or the low end of a k range");
  app.add_option("--k-max", f.k_max, "High end of a k range");
  app.add_option("--n", f.n, "n, or the low end of an n range");
  app.add_option("--n-max", f.n_max, "High end of an n range");
  app.add_option("--max-depth", f.max_depth, "Product-search depth limit");
  app.add_option("--max-states", f.max_states, "Search state limit");
  app.add_option("--letter-cap", f.letter_cap, "Associated-automaton letter cap")
      ->capture_default_str();
  app.add_option("--mode", f.mode, "Heuristic target: specific or any")
      ->check(CLI::IsMember({"specific", "any"}))
      ->capture_default_str();
  app.add_flag("--ceil-variant", f.ceil_variant, "Use the ceiling in the midrange B step");

  using Handler = void (*)(const Flags&, std::ostream&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"check", "NZ, irreducibility and primitivity with certificates", cmd_check},
      {"exponent", "Length of the shortest all-ones product", cmd_exponent},
      {"krt", "Exact k-rendezvous times with witnesses", cmd_krt},
      {"automata", "Associated automata, reset thresholds, sandwich and k-RT equality",
       cmd_automata},
      {"bounds", "B, F, U~, a-hat and Szykula tables as CSV", cmd_bounds},
      {"witness", "Build and verify the extremal a_k^n witness", cmd_witness},
      {"heuristic", "Eppstein-style heuristic trace", cmd_heuristic},
      {"scan", "F = B and argmin-h report over an (n, k) range", cmd_scan},
      {"figure", "CSV data for a named figure", cmd_figure},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : commands) subs.emplace_back(app.add_subcommand(name, help), handler);
  subs.back().first->add_option("name", f.figure_name, "fig2a, fig2b, fig3 .. fig9")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return exit_code(ErrorKind::usage);
  }

  try {
    for (const auto& [sub, handler] : subs) {
      if (sub->parsed()) handler(f, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace primrt
