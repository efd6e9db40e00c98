#include "mdtree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "mdtree/bijections.hpp"
#include "mdtree/counts.hpp"
#include "mdtree/enumerate.hpp"
#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/text.hpp"
#include "mdtree/verify.hpp"

namespace mdtree {

namespace {

// Upper bound for --max-m; the power sums stay exact regardless, this only
// keeps the output a sensible size.
constexpr unsigned kMaxM = 64;
constexpr unsigned kMaxJobs = 256;
// Largest n for the forest enumerations in `identities`.
constexpr unsigned kForestCheckMaxN = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;

  std::string map_name;
  bool inverse = false;
  std::optional<unsigned> k;
  bool trace = false;

  std::string prufer_action;
  std::string alphabet;

  std::string direction;
  unsigned n = 0;
  bool as_word = false;

  unsigned max_n = 0;
  unsigned max_m = 0;
  unsigned jobs = 1;
  std::string out_file;
  std::string format = "text";
};

using LineHandler = std::function<void(const std::string& line, std::ostream& out)>;

void print_trace(const Trace& trace, std::ostream& out) {
  for (const TraceLine& line : trace) {
    out << '[' << line.stage << ']';
    if (!line.text.empty()) out << ' ' << line.text;
    out << '\n';
  }
}

unsigned need_k(const Options& o) {
  if (!o.k) throw UsageError("--k is required for map " + o.map_name);
  return *o.k;
}

unsigned label_count(std::span<const OrderedForest> seq) {
  std::size_t total = 0;
  for (const OrderedForest& f : seq) total += f.vertex_count();
  return static_cast<unsigned>(total);
}

LineHandler map_handler(const Options& o) {
  const std::string& name = o.map_name;
  if (name == "alpha" || name == "beta" || name == "gamma" || name == "zeta") {
    const bool needs_k = (name == "beta" && o.inverse) || name == "gamma" || name == "zeta";
    const unsigned k = needs_k ? need_k(o) : 0;
    return [&o, name, k](const std::string& line, std::ostream& out) {
      Trace trace;
      Trace* tp = o.trace ? &trace : nullptr;
      std::string result;
      if (name == "alpha") {
        result = o.inverse ? to_string(alpha_inv(AnkCycle::classify(parse_cycle(line)), tp).tree())
                           : to_string(alpha(TnkTree::classify(parse_tree(line)), tp).cycle());
      } else if (name == "beta") {
        if (o.inverse) {
          OrderedForest f = parse_forest(line);
          const auto n = static_cast<unsigned>(f.vertex_count());
          result = to_string(beta_inv(BnkForest(std::move(f), n, k), tp).cycle());
        } else {
          result = to_string(beta(AnkCycle::classify(parse_cycle(line)), tp).forest());
        }
      } else if (name == "gamma") {
        if (o.inverse) {
          std::vector<OrderedForest> seq = parse_sequence(line);
          const unsigned n = label_count(seq);
          result = to_string(gamma_inv(CnkSequence(std::move(seq), n, k), tp).forest());
        } else {
          OrderedForest f = parse_forest(line);
          const auto n = static_cast<unsigned>(f.vertex_count());
          result = to_string(gamma(BnkForest(std::move(f), n, k), tp).forests());
        }
      } else {
        if (o.inverse) {
          RootedTree t = parse_tree(line);
          const auto n = static_cast<unsigned>(t.size() - 1);
          result = to_string(zeta_inv(FnkTree(std::move(t), n, k), tp).forests());
        } else {
          std::vector<OrderedForest> seq = parse_sequence(line);
          const unsigned n = label_count(seq);
          result = to_string(zeta(CnkSequence(std::move(seq), n, k), tp).tree());
        }
      }
      print_trace(trace, out);
      out << result << '\n';
    };
  }
  if (name == "phi") {
    return [&o](const std::string& line, std::ostream& out) {
      const RootedTree t = parse_tree(line);
      out << to_string(o.inverse ? phi_inv(t) : phi(t)) << '\n';
    };
  }
  if (name == "rho") {
    return [&o](const std::string& line, std::ostream& out) {
      if (o.inverse) {
        const OrderedForest f = parse_forest(line);
        const std::vector<Label> labels = f.labels();
        const Label top = labels.empty() ? 1 : labels.back() + 1;
        out << to_string(rho_inv(f, top)) << '\n';
      } else {
        out << to_string(rho(parse_tree(line))) << '\n';
      }
    };
  }
  const unsigned k = need_k(o);
  return [&o, k](const std::string& line, std::ostream& out) {
    if (o.inverse) {
      out << to_string(psi_inv(parse_tree(line), k).forest()) << '\n';
    } else {
      out << to_string(psi(KGoodForest(parse_forest(line), k))) << '\n';
    }
  };
}

LineHandler prufer_handler(const Options& o) {
  const std::vector<Label> alphabet = parse_label_list(o.alphabet);
  if (o.prufer_action == "encode") {
    return [alphabet](const std::string& line, std::ostream& out) {
      const RootedTree t = parse_tree(line);
      if (label_set(alphabet) != std::vector<Label>(t.labels().begin(), t.labels().end()))
        throw ValidationError("tree labels differ from the alphabet");
      out << format_label_list(encode(t).letters()) << '\n';
    };
  }
  return [alphabet](const std::string& line, std::ostream& out) {
    out << to_string(decode(PruferWord(alphabet, parse_label_list(line)))) << '\n';
  };
}

LineHandler pipeline_handler(const Options& o) {
  if (o.k && *o.k > o.n) throw UsageError("--k must not exceed --n");
  return [&o](const std::string& line, std::ostream& out) {
    const unsigned k = *o.k;
    Trace trace;
    Trace* tp = o.trace ? &trace : nullptr;
    if (o.direction == "t2f") {
      const FnkTree image = compose_t_to_f(TnkTree(parse_tree(line), o.n, k), tp);
      print_trace(trace, out);
      out << to_string(image.tree()) << '\n';
      if (o.as_word) out << format_label_list(word_of_fnk_tree(image.tree(), o.n, k)) << '\n';
    } else {
      RootedTree source = o.as_word ? fnk_tree_of_word(parse_label_list(line), o.n, k) : parse_tree(line);
      const TnkTree image = compose_f_to_t(FnkTree(std::move(source), o.n, k), tp);
      print_trace(trace, out);
      out << to_string(image.tree()) << '\n';
    }
  };
}

// Applies `handle` to each input line; a trailing newline does not start an
// extra record. Stops at the first failing line.
int run_lines(std::istream& in, std::ostream& out, std::ostream& err, const LineHandler& handle) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      handle(line, out);
    } catch (const ParseError& e) {
      err << "line " << number << ": parse error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const ValidationError& e) {
      err << "line " << number << ": invalid input: " << e.what() << '\n';
      return kExitInvalid;
    }
  }
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const VerifyReport report = verify_sweep(o.max_n, o.jobs);
  out << report.text();
  if (!o.out_file.empty()) {
    std::ofstream csv(o.out_file);
    if (!csv) {
      err << "cannot open " << o.out_file << " for writing\n";
      return kExitUsage;
    }
    csv << report.csv();
  }
  return report.ok() ? kExitOk : kExitInvalid;
}

int run_count(const Options& o, std::ostream& out) {
  const CountTable table = count_tnk_table(o.max_n);
  if (o.format == "csv") {
    out << to_csv(table);
  } else {
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
      out << "n=" << n << ':';
      for (std::uint64_t a : table.rows[n]) out << ' ' << a;
      out << '\n';
    }
  }
  return kExitOk;
}

void print_report(const IdentityReport& r, std::ostream& out) {
  out << r.name << ',' << r.n << ',' << r.param << ',' << r.lhs << ',' << r.rhs << ','
      << (r.pass ? "PASS" : "FAIL") << '\n';
}

int run_identities(const Options& o, std::ostream& out) {
  const CountTable table = count_tnk_table(o.max_n);
  out << to_csv(table);
  out << "identity,n,param,lhs,rhs,result\n";
  bool ok = true;
  auto emit = [&](const IdentityReport& r) {
    ok = ok && r.pass;
    print_report(r, out);
  };
  for (unsigned n = 0; n <= o.max_n; ++n)
    for (unsigned m = 0; m <= o.max_m; ++m) emit(check_power_identity(table.rows[n], n, m));
  for (unsigned n = 1; n <= o.max_n; ++n) emit(check_harmonic_identity(table.rows[n], n));
  for (unsigned n = 1; n <= std::min(o.max_n, kForestCheckMaxN); ++n) {
    emit(check_forest_count(n));
    for (const IdentityReport& r : check_forest_split(table.rows[n], n)) emit(r);
  }
  return ok ? kExitOk : kExitInvalid;
}

int run_refined(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<RefinedCell> cells;
  bool ok = true;
  for (unsigned n = 1; n <= o.max_n; ++n) {
    const std::vector<RefinedCell> row = count_refined(n);
    cells.insert(cells.end(), row.begin(), row.end());
    for (const RefinedCell& c : row)
      if (c.a != c.b) {
        ok = false;
        err << "FAIL n=" << c.n << " l=" << c.l << " k=" << c.k << " A=" << c.a << " B=" << c.b << '\n';
      }
    for (const IdentityReport& r : check_refined_marginals(row, n))
      if (!r.pass) {
        ok = false;
        err << "FAIL marginal n=" << r.n << " l=" << r.param << " count=" << r.lhs << " expected=" << r.rhs << '\n';
      }
  }
  out << to_csv(cells);
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maximal decreasing subtrees: bijections, codecs and exhaustive checks", "mdtree"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--input", o.input, "Read objects from FILE instead of stdin");
  app.add_option("--output", o.output, "Write results to FILE instead of stdout");

  const auto sweep_range = CLI::Range(0u, kMaxSweepN);

  CLI::App* map = app.add_subcommand("map", "Apply one bijection to each input line");
  map->add_option("--name", o.map_name, "Map name")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "gamma", "zeta", "phi", "rho", "psi"}));
  map->add_flag("--inverse", o.inverse, "Apply the inverse map");
  map->add_option("--k", o.k, "Number of special labels")->check(CLI::Range(0u, 1u << 20));
  map->add_flag("--trace", o.trace, "Print intermediate stages");

  CLI::App* prufer = app.add_subcommand("prufer", "Rooted Prufer code");
  prufer->add_option("action", o.prufer_action, "encode or decode")
      ->required()
      ->check(CLI::IsMember({"encode", "decode"}));
  prufer->add_option("--alphabet", o.alphabet, "Comma-separated label set")->required();

  CLI::App* pipeline = app.add_subcommand("pipeline", "Composite map between T(n,k) and F(n,k)");
  pipeline->add_option("--direction", o.direction, "t2f or f2t")->required()->check(CLI::IsMember({"t2f", "f2t"}));
  pipeline->add_option("--n", o.n, "n")->required()->check(CLI::Range(0u, 1u << 20));
  pipeline->add_option("--k", o.k, "k")->required()->check(CLI::Range(0u, 1u << 20));
  pipeline->add_flag("--as-word", o.as_word, "t2f: also print the word; f2t: read words");
  pipeline->add_flag("--trace", o.trace, "Print intermediate stages");

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive sweep over all n <= max-n");
  verify->add_option("--max-n", o.max_n, "Largest n")->required()->check(sweep_range);
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, kMaxJobs));
  verify->add_option("--out", o.out_file, "Write CSV tables to FILE");

  CLI::App* count = app.add_subcommand("count", "Table of a(n,k)");
  count->add_option("--max-n", o.max_n, "Largest n")->required()->check(sweep_range);
  count->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  CLI::App* identities = app.add_subcommand("identities", "Check the counting identities");
  identities->add_option("--max-n", o.max_n, "Largest n")->required()->check(sweep_range);
  identities->add_option("--max-m", o.max_m, "Largest m")->required()->check(CLI::Range(0u, kMaxM));

  CLI::App* refined = app.add_subcommand("refined", "Refined A/B table");
  refined->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::Range(1u, kMaxSweepN));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ofstream output_file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    output_file.open(o.output);
    if (!output_file) {
      err << "cannot open " << o.output << " for writing\n";
      return kExitUsage;
    }
    sink = &output_file;
  }
  std::ifstream input_file;
  std::istream* source = &in;
  if (!o.input.empty()) {
    input_file.open(o.input);
    if (!input_file) {
      err << "cannot open " << o.input << " for reading\n";
      return kExitUsage;
    }
    source = &input_file;
  }

  try {
    if (map->parsed()) return run_lines(*source, *sink, err, map_handler(o));
    if (prufer->parsed()) return run_lines(*source, *sink, err, prufer_handler(o));
    if (pipeline->parsed()) return run_lines(*source, *sink, err, pipeline_handler(o));
    if (verify->parsed()) return run_verify(o, *sink, err);
    if (count->parsed()) return run_count(o, *sink);
    if (identities->parsed()) return run_identities(o, *sink);
    return run_refined(o, *sink, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace mdtree
