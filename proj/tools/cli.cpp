#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pairset/pairset.hpp"

namespace pairset::cli {
namespace {

using nlohmann::json;

enum class Format { Table, Json };

struct Globals {
  std::string format = "table";
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
  std::uint64_t spectrum_cap = Limits{}.spectrum_cap;
  std::string window = "at-most";
  bool no_capacity = false;

  Format fmt() const { return format == "json" ? Format::Json : Format::Table; }

  Limits limits() const {
    Limits l;
    l.jobs = std::max(1u, jobs);
    l.spectrum_cap = spectrum_cap;
    return l;
  }

  RealizabilityRules rules() const {
    RealizabilityRules r;
    r.window = window == "strict" ? Window::Strict : Window::AtMost;
    r.vertex_capacity = !no_capacity;
    return r;
  }

  OracleOptions oracle(bool dedup) const {
    OracleOptions o = oracle_options_from_env();
    if (budget) o.budget = *budget;
    o.dedup = dedup;
    o.limits = limits();
    return o;
  }
};

std::string join(const std::vector<Int>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + "}";
}

// Compresses runs of consecutive integers: {0..7,9}.
std::string join_ranges(const std::vector<Int>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    if (i) s += ",";
    s += std::to_string(values[i]);
    if (j > i + 1)
      s += ".." + std::to_string(values[j]);
    else if (j == i + 1)
      s += "," + std::to_string(values[j]);
    i = j + 1;
  }
  return s + "}";
}

void print_check(std::ostream& out, const std::string& name, const RealizabilityCheck& check) {
  out << "  " << name << " [" << to_string(check.kind) << ", f=" << check.pair.f() << "]: ";
  if (check.witness) {
    out << "realizable with x=" << check.witness->x << ", h=" << check.witness->h << "\n";
  } else {
    out << "absent (" << check.rejected.size() << " clique orders rejected)\n";
  }
}

void print_certificate(std::ostream& out, const AvoidabilityCertificate& cert) {
  out << "case: " << to_string(cert.kind) << "\n";
  out << "k_f: " << (cert.k_f ? std::to_string(*cert.k_f) : "-") << "\n";
  out << "k_fbar: " << (cert.k_fbar ? std::to_string(*cert.k_fbar) : "-") << "\n";
  out << "trace:\n";
  for (const auto& ineq : cert.trace) out << "  " << ineq.str() << (ineq.holds() ? "" : "  [FAILS]") << "\n";
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

void write_graph(std::ostream& out, const std::string& path, const Hypergraph& g) {
  if (path.empty() || path == "-")
    out << serialize(g);
  else
    write_hypergraph(path, g);
}

void log_generator(std::ostream& err, const GeneratorLog& log) {
  std::ostringstream s;
  s.precision(6);
  s << "generator: p=" << log.probability << " sampled=" << log.sampled_edges << " repairs=" << log.repairs
    << " final=" << log.final_edges << " target=" << log.theoretical_target << "\n";
  err << s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Avoidability and density of order-size pairs in r-uniform hypergraphs", "pairset"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs", g.jobs, "Worker thread cap")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", g.budget, "Oracle budget in elementary checks (overrides PAIRSET_BUDGET)");
  app.add_option("--spectrum-cap", g.spectrum_cap, "Max number of m-subsets a spectrum may visit");

  std::function<int()> action;

  // avoid
  Int r = 3, m = 0, f = 0;
  auto* avoid = app.add_subcommand("avoid", "Certify absolute avoidability of (m, f)");
  avoid->add_option("--r", r)->default_val(3);
  avoid->add_option("--m", m)->required();
  avoid->add_option("--f", f)->required();
  avoid->add_option("--window", g.window)->check(CLI::IsMember({"at-most", "strict"}));
  avoid->add_flag("--no-capacity", g.no_capacity, "Drop the vertex-capacity constraint on A");
  avoid->callback([&] {
    action = [&] {
      const PairQuery pair(r, m, f);
      const auto cert = absolutely_avoidable(m, f, r, g.rules());
      if (g.fmt() == Format::Json) {
        emit(out, certificate_document(pair, cert, g.rules()));
        return 0;
      }
      const auto checks = four_checks(m, f, r, g.rules());
      out << "pair: (m=" << m << ", f=" << f << ", r=" << r << "), C(m,r)=" << pair.total() << "\n";
      out << "checks:\n";
      print_check(out, "A(f)", checks.a_f);
      print_check(out, "A(fbar)", checks.a_fbar);
      print_check(out, "B(f)", checks.b_f);
      print_check(out, "B(fbar)", checks.b_fbar);
      if (cert) {
        out << "conclusion: absolutely avoidable\n";
        print_certificate(out, *cert);
      } else {
        out << "conclusion: not certified\n";
      }
      return 0;
    };
  });

  // theorem-main
  auto* thm = app.add_subcommand("theorem-main", "Certify the half-size pair for m");
  thm->add_option("--r", r)->default_val(3);
  Int up_to = 0;
  auto* thm_m = thm->add_option("--m", m);
  auto* thm_up = thm->add_option("--up-to", up_to, "Report the smallest m0 certified for every m in [m0, up-to]");
  thm_m->excludes(thm_up);
  thm->callback([&] {
    action = [&] {
      if (up_to > 0) {
        const auto t = theorem_main_threshold(r, up_to);
        if (g.fmt() == Format::Json) {
          emit(out, json{{"schema", "pairset.threshold/1"},
                         {"r", r},
                         {"up_to", up_to},
                         {"m0", t ? json(*t) : json(nullptr)}});
        } else {
          out << "r=" << r << ": " << (t ? "m0=" + std::to_string(*t) : std::string("no threshold")) << " (checked to "
              << up_to << ")\n";
        }
        return 0;
      }
      if (m == 0) throw DomainError("theorem-main needs --m or --up-to");
      const auto res = theorem_main_pair(m, r);
      if (g.fmt() == Format::Json) {
        emit(out, to_json(res));
        return 0;
      }
      out << "certified: (" << m << "," << res.f << "), case " << to_string(res.kind) << "\n";
      out << "f0: " << res.f0 << "\n";
      out << "x: " << res.x << "\n";
      print_certificate(out, res.certificate);
      return 0;
    };
  });

  // classify
  Int m_min = 0, m_max = 0;
  auto* classify = app.add_subcommand("classify", "List pairs passing all four realizability checks");
  classify->add_option("--r", r)->default_val(3);
  classify->add_option("--m-max", m_max)->required();
  classify->add_option("--m-min", m_min, "Defaults to r + 1");
  classify->add_option("--window", g.window)->check(CLI::IsMember({"at-most", "strict"}));
  classify->add_flag("--no-capacity", g.no_capacity);
  classify->callback([&] {
    action = [&] {
      const Int lo = m_min > 0 ? m_min : r + 1;
      if (lo <= r) throw DomainError("classify needs m > r");
      json rows = json::array();
      std::vector<std::pair<Int, Int>> survivors;
      for (Int mm = lo; mm <= m_max; ++mm) {
        const auto cands = enumerate_candidates(mm, r, g.rules());
        for (Int ff : cands) survivors.emplace_back(mm, ff);
        if (g.fmt() == Format::Json)
          rows.push_back(json{{"m", mm}, {"candidates", cands}});
        else
          out << "m=" << mm << ": " << join(cands) << "\n";
      }
      if (g.fmt() == Format::Json) {
        json surv = json::array();
        for (auto [mm, ff] : survivors) surv.push_back(json{mm, ff});
        emit(out, json{{"schema", "pairset.classification/1"},
                       {"r", r},
                       {"window", g.window},
                       {"vertex_capacity", !g.no_capacity},
                       {"rows", rows},
                       {"survivors", surv}});
        return 0;
      }
      out << "survivors:";
      if (survivors.empty()) out << " none";
      for (auto [mm, ff] : survivors) out << " (" << mm << "," << ff << ")";
      out << "\n";
      return 0;
    };
  });

  // bounds
  std::optional<Int> bf;
  auto* bounds = app.add_subcommand("bounds", "Density upper bounds");
  bounds->add_option("--r", r)->default_val(3);
  bounds->add_option("--m", m);
  bounds->add_option("--f", bf);
  bounds->add_option("--window", g.window)->check(CLI::IsMember({"at-most", "strict"}));
  bounds->callback([&] {
    action = [&] {
      if (bf) {
        if (m == 0) throw DomainError("bounds --f needs --m");
        const auto b = sigma_upper(m, *bf, r, g.rules());
        if (g.fmt() == Format::Json) {
          emit(out, to_json(b));
          return 0;
        }
        out << "sigma_" << r << "(" << m << "," << *bf << ") <= " << b.bound.str_with_decimal() << "\n";
        out << "case: " << to_string(b.kind) << "\n";
        if (b.l_used) out << "l: " << b.l_used << "\n";
        if (b.failing_check) out << "absent: " << *b.failing_check << "\n";
        out << "justification: " << b.justification << "\n";
        return 0;
      }
      const auto rows = corollary_table(r);
      std::optional<Int> lm;
      if (m > r) lm = l_max(m, r);
      if (g.fmt() == Format::Json) {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(to_json(row));
        json doc{{"schema", "pairset.bounds/1"}, {"r", r}, {"rows", arr}};
        if (lm) {
          doc["m"] = m;
          doc["l_max"] = *lm;
        }
        emit(out, doc);
        return 0;
      }
      if (lm) out << "l_max(" << m << "," << r << ") = " << *lm << "\n";
      for (const auto& row : rows) {
        out << row.condition << ": sigma <= " << row.bound.str_with_decimal() << "  (l=" << row.l
            << (row.two_sided ? ", two-sided" : "");
        if (row.m_from) out << ", m >= " << *row.m_from;
        out << ")";
        if (lm && row.m_from && m >= *row.m_from) out << "  applies";
        out << "\n";
      }
      return 0;
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a hypergraph and write it in text format");
  construct->require_subcommand(1);
  std::string out_path;
  int n = 0, l = 0, depth = 1, ir = 3, im = 0;
  Int e = 0;
  std::uint64_t seed = 1;
  std::string base = "k3", density_c = "1/4";
  bool complement_type = false;

  auto* c_turan = construct->add_subcommand("turan", "Complete balanced l-partite r-graph T_r(n, l)");
  c_turan->add_option("--n", n)->required();
  c_turan->add_option("--l", l)->required();
  c_turan->add_option("--r", ir)->default_val(3);
  c_turan->add_option("--out", out_path);
  c_turan->callback([&] {
    action = [&] {
      write_graph(out, out_path, turan_graph(n, l, ir));
      return 0;
    };
  });

  auto* c_blowup = construct->add_subcommand("blowup", "Iterated blow-up of K3 or tight C5");
  c_blowup->add_option("--base", base)->check(CLI::IsMember({"k3", "c5"}));
  c_blowup->add_option("--depth", depth)->required();
  c_blowup->add_option("--out", out_path);
  c_blowup->callback([&] {
    action = [&] {
      write_graph(out, out_path, iterated_blowup({blowup_base_from_string(base), depth}));
      return 0;
    };
  });

  auto* c_sparse = construct->add_subcommand("sparse", "Random m-sparse r-graph");
  c_sparse->add_option("--n", n)->required();
  c_sparse->add_option("--r", ir)->default_val(3);
  c_sparse->add_option("--m", im)->required();
  c_sparse->add_option("--seed", seed);
  c_sparse->add_option("--c", density_c, "Density constant as p/q");
  c_sparse->add_option("--out", out_path);
  c_sparse->callback([&] {
    action = [&] {
      SparseGenConfig cfg{n, ir, im, seed, Rational::parse(density_c), g.limits()};
      auto res = random_sparse(cfg);
      log_generator(err, res.log);
      write_graph(out, out_path, res.graph);
      return 0;
    };
  });

  auto* c_realize = construct->add_subcommand("realize", "Clique plus m-sparse graph with exactly e edges");
  c_realize->add_option("--n", n)->required();
  c_realize->add_option("--e", e)->required();
  c_realize->add_option("--r", ir)->default_val(3);
  c_realize->add_option("--m", im)->required();
  c_realize->add_option("--seed", seed);
  c_realize->add_option("--c", density_c, "Initial density constant as p/q");
  c_realize->add_flag("--complement", complement_type, "Complement of a clique-plus-sparse graph instead");
  c_realize->add_option("--out", out_path);
  c_realize->callback([&] {
    action = [&] {
      RealizeOptions opts;
      opts.seed = seed;
      opts.density_constant = Rational::parse(density_c);
      opts.limits = g.limits();
      const auto res = complement_type ? realize_complement_sparse(n, e, ir, im, opts)
                                       : realize_clique_plus_sparse(n, e, ir, im, opts);
      err << "realization: k=" << res.clique_order << " sparse_edges=" << res.sparse_edges << "\n";
      if (res.generator.final_edges || res.generator.sampled_edges) log_generator(err, res.generator);
      write_graph(out, out_path, res.graph);
      return 0;
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground truth");
  oracle->require_subcommand(1);
  bool dedup = false;
  auto* o_arrows = oracle->add_subcommand("arrows", "Decide (n, e) -> (m, f)");
  o_arrows->add_option("--n", n)->required();
  o_arrows->add_option("--e", e)->required();
  o_arrows->add_option("--r", ir)->default_val(3);
  o_arrows->add_option("--m", im)->required();
  o_arrows->add_option("--f", f)->required();
  o_arrows->add_flag("--dedup", dedup, "Skip isomorphic graphs");
  o_arrows->callback([&] {
    action = [&] {
      const auto v = pair_arrows(n, e, ir, im, f, g.oracle(dedup));
      if (g.fmt() == Format::Json) {
        emit(out, to_json(v));
        return 0;
      }
      out << "(" << n << "," << e << ") " << (v.arrows ? "->" : "-/->") << " (" << im << "," << f << ")\n";
      out << "graphs examined: " << v.graphs_examined << "\n";
      if (v.counterexample) out << "counterexample:\n" << serialize(*v.counterexample);
      return 0;
    };
  });

  auto* o_sizes = oracle->add_subcommand("sizes", "All e for which (n, e) arrows (m, f)");
  o_sizes->add_option("--n", n)->required();
  o_sizes->add_option("--r", ir)->default_val(3);
  o_sizes->add_option("--m", im)->required();
  o_sizes->add_option("--f", f)->required();
  o_sizes->add_flag("--dedup", dedup);
  o_sizes->callback([&] {
    action = [&] {
      const auto non = non_arrowing_sizes(n, ir, im, f, g.oracle(dedup));
      const Int cap = binomial(n, ir);
      std::vector<Int> arrowing;
      for (Int x = 0; x <= cap; ++x)
        if (!std::binary_search(non.begin(), non.end(), x)) arrowing.push_back(x);
      if (g.fmt() == Format::Json) {
        emit(out, json{{"schema", "pairset.sizes/1"},
                       {"n", n},
                       {"r", ir},
                       {"m", im},
                       {"f", f},
                       {"arrowing", arrowing},
                       {"non_arrowing", non}});
        return 0;
      }
      out << "arrowing: " << join_ranges(arrowing) << "\n";
      out << "non-arrowing: " << join_ranges(non) << "\n";
      return 0;
    };
  });

  auto* o_blowup = oracle->add_subcommand("blowup-verify", "Check the blow-up avoids (6, 10)");
  o_blowup->add_option("--depth", depth)->required();
  o_blowup->add_option("--base", base)->check(CLI::IsMember({"k3", "c5"}));
  o_blowup->callback([&] {
    action = [&] {
      const auto rep = verify_blowup_claims(depth, blowup_base_from_string(base), g.limits());
      if (g.fmt() == Format::Json) {
        emit(out, to_json(rep));
        return 0;
      }
      out << "base: " << to_string(rep.base) << ", depth " << rep.depth << "\n";
      out << "vertices: " << rep.vertices << "\n";
      out << "edges: " << rep.edges << " (recurrence " << rep.recurrence_edges << ")\n";
      out << "density: " << rep.density.str_with_decimal() << "\n";
      if (rep.vacuous) {
        out << "fewer than 6 vertices: claim vacuous\n";
      } else {
        out << "max edges on a 6-set: " << rep.max_six_set << "\n";
        out << "min complement edges on a 6-set: " << rep.min_six_set_complement << "\n";
      }
      out << "non-arrowing sizes: [" << rep.low_interval.first << "," << rep.low_interval.second << "] u ["
          << rep.high_interval.first << "," << rep.high_interval.second << "]\n";
      out << "covered: " << rep.covered_sizes << " of " << rep.possible_sizes << "\n";
      out << "avoids (6,10): " << (rep.avoids_6_10 ? "yes" : "no") << "\n";
      return 0;
    };
  });

  // spectrum
  std::string in_path;
  auto* spec = app.add_subcommand("spectrum", "Induced edge counts over all m-subsets");
  spec->add_option("--in", in_path)->required();
  spec->add_option("--m", im)->required();
  spec->callback([&] {
    action = [&] {
      const auto hg = read_hypergraph(in_path);
      const auto s = spectrum(hg, im, g.limits());
      if (g.fmt() == Format::Json) {
        emit(out, to_json(s));
        return 0;
      }
      out << "m=" << im << " subsets=" << s.total() << "\n";
      for (auto [ff, count] : s.counts) out << ff << "\t" << count << "\n";
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kDomainError;
  }

  try {
    return action ? action() : kDomainError;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const BelowThreshold& e) {
    err << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace pairset::cli
