#include "mis/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "mis/canon.hpp"
#include "mis/codec.hpp"
#include "mis/enumerate.hpp"
#include "mis/extremal.hpp"

namespace mis::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string join(const std::vector<Count>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

/// Owns the input stream for --input (file or stdin).
struct Input {
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = nullptr;
  std::string name;

  Input(const std::string& path, std::istream& stdin_stream) {
    if (path.empty() || path == "-") {
      stream = &stdin_stream;
      name = "stdin";
      return;
    }
    file = std::make_unique<std::ifstream>(path);
    if (!*file) throw UsageError("cannot open input file '" + path + "'");
    stream = file.get();
    name = path;
  }
};

GraphFormat format_or_throw(const std::string& name) {
  auto f = parse_graph_format(name);
  if (!f) throw UsageError("unknown format '" + name + "' (expected graph6 or edgelist)");
  return *f;
}

struct CountArgs {
  std::string input;
  std::string format = "graph6";
  bool csv = false;
};

int cmd_count(const CountArgs& a, std::istream& in, std::ostream& out) {
  Input input(a.input, in);
  GraphStream stream(*input.stream, format_or_throw(a.format), input.name);
  if (a.csv) out << "index,n,counts,total,polynomial\n";
  std::size_t index = 0;
  while (auto g = stream.next()) {
    const auto poly = maximal_independence_polynomial(*g);
    const Count total = mis_size_profile(*g).total();
    if (a.csv) {
      out << index << ',' << g->order() << ",\"" << join(poly, ',') << "\"," << total << ','
          << polynomial_string(poly) << '\n';
    } else {
      out << "index=" << index << " n=" << g->order() << " counts=" << join(poly, ',') << " total=" << total
          << " polynomial=" << polynomial_string(poly) << '\n';
    }
    ++index;
  }
  return kExitOk;
}

struct BoundArgs {
  int n = 0;
  std::string t;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const auto ts = parse_size_list(a.t, a.n);
  if (!ts) throw UsageError("malformed --t '" + a.t + "' (expected T, A..B or all)");
  out << "n,t,q,r,f\n";
  for (int t : *ts) {
    const auto d = bound_f(a.n, t);
    out << d.n << ',' << d.t << ',' << d.q << ',' << d.r << ',' << d.f << '\n';
  }
  return kExitOk;
}

struct ExtremalArgs {
  int n = 0;
  int t = 0;
  std::string which = "H";
  std::string format = "graph6";
};

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  const GraphFormat format = format_or_throw(a.format);
  Graph g;
  if (a.which == "H") {
    g = build_H(a.n, a.t);
  } else if (a.which == "turan") {
    g = build_turan(a.n, a.t);
  } else {
    throw UsageError("unknown --which '" + a.which + "' (expected H or turan)");
  }
  if (format == GraphFormat::kGraph6) {
    out << graph6_encode(g) << '\n';
  } else {
    out << write_edge_list(g);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::optional<int> n;
  std::string input;
  std::string format = "graph6";
  std::string t;
  bool all_t = false;
  std::string side = "mis";
  bool n8_opt_in = false;
  int workers = 1;
  bool csv = false;
};

std::string attainer_list(const ExtremalReport& r) {
  if (!r.attainers_canonicalized) return "uncanonicalized";
  std::string out;
  for (std::size_t i = 0; i < r.attainers.size(); ++i) {
    if (i > 0) out += ';';
    out += to_string(r.attainers[i]);
  }
  return out.empty() ? "none" : out;
}

void write_report(const ExtremalReport& r, bool csv, std::ostream& out) {
  const std::string expected = r.expected ? to_string(*r.expected) : "uncanonicalized";
  if (csv) {
    out << r.n << ',' << r.t << ',' << to_string(r.side) << ',' << r.bound.q << ',' << r.bound.r << ',' << r.bound.f
        << ',' << r.max_observed << ',' << flag(r.bound_holds) << ',' << flag(r.unique_attainer) << ','
        << r.attainer_graphs << ',' << '"' << attainer_list(r) << "\"," << '"' << expected << "\","
        << r.graphs_examined << ',' << r.coverage << '\n';
    return;
  }
  out << "n=" << r.n << " t=" << r.t << " side=" << to_string(r.side) << " q=" << r.bound.q << " r=" << r.bound.r
      << " f=" << r.bound.f << " max_observed=" << r.max_observed << " bound_holds=" << flag(r.bound_holds)
      << " unique_attainer=" << flag(r.unique_attainer) << " attainer_graphs=" << r.attainer_graphs
      << " attainers=" << attainer_list(r) << " expected=" << expected << " graphs_examined=" << r.graphs_examined
      << " coverage=" << r.coverage << '\n';
}

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  const auto side = parse_side(a.side);
  if (!side) throw UsageError("unknown --side '" + a.side + "' (expected mis or clique)");
  if (a.n.has_value() == !a.input.empty()) throw UsageError("verify needs exactly one of --n or --input");
  if (a.all_t == !a.t.empty()) throw UsageError("verify needs exactly one of --t or --all-t");
  if (a.workers < 1) throw UsageError("--workers must be at least 1");
  const VerifyOptions options{*side, a.workers};

  auto sizes_for = [&](int n) {
    const auto ts = parse_size_list(a.all_t ? "all" : a.t, n);
    if (!ts) throw UsageError("malformed --t '" + a.t + "' (expected T, A..B or all)");
    return *ts;
  };

  std::vector<ExtremalReport> reports;
  if (a.n) {
    const LabeledGraphs source(*a.n, a.n8_opt_in);
    const auto ts = sizes_for(*a.n);
    reports = verify_bound(source, default_targets(*a.n, ts, *side), options);
  } else {
    Input input(a.input, in);
    GraphStream stream(*input.stream, format_or_throw(a.format), input.name);
    reports = verify_bound(
        stream, [&](int n) { return default_targets(n, sizes_for(n), *side); }, options);
  }

  if (a.csv) {
    out << "n,t,side,q,r,f,max_observed,bound_holds,unique_attainer,attainer_graphs,attainers,expected,"
           "graphs_examined,coverage\n";
  }
  bool pass = true;
  for (const auto& r : reports) {
    write_report(r, a.csv, out);
    pass = pass && r.bound_holds && (!r.exhaustive || r.unique_attainer);
  }
  if (!a.csv) out << "verdict=" << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitCounterexample;
}

struct TraceArgs {
  std::string input;
  std::string format = "graph6";
  int t = 0;
  std::string v = "auto";
  bool csv = false;
};

int cmd_trace(const TraceArgs& a, std::istream& in, std::ostream& out) {
  Input input(a.input, in);
  GraphStream stream(*input.stream, format_or_throw(a.format), input.name);
  const auto g = stream.next();
  if (!g) throw UsageError("trace needs one input graph, got none");
  std::optional<Vertex> v;
  if (a.v != "auto") {
    v = parse_int(a.v);
    if (!v) throw UsageError("malformed --v '" + a.v + "' (expected a vertex index or auto)");
    if (*v < 0 || *v >= g->order()) {
      throw UsageError("vertex " + a.v + " out of range for order " + std::to_string(g->order()));
    }
  }
  if (g->order() == 0) throw UsageError("trace needs a graph with at least one vertex");
  const SplitReport s = induction_split(*g, a.t, v);
  const Subcase subcase = classify_subcase(*g, a.t);
  const BoundDecomposition d = bound_f(g->order(), a.t);
  if (a.csv) {
    out << "n,t,v,subcase,min_degree,a_count,b_count,nbhd_count,gminus_count,total,f\n";
    out << g->order() << ',' << s.t << ',' << s.v << ',' << to_string(subcase) << ',' << g->min_degree() << ','
        << s.a_count << ',' << s.b_count << ',' << s.nbhd_count << ',' << s.gminus_count << ',' << s.total << ','
        << d.f << '\n';
  } else {
    out << "n=" << g->order() << " t=" << s.t << " v=" << s.v << " subcase=" << to_string(subcase)
        << " min_degree=" << g->min_degree() << " a_count=" << s.a_count << " b_count=" << s.b_count
        << " nbhd_count=" << s.nbhd_count << " gminus_count=" << s.gminus_count << " total=" << s.total
        << " f=" << d.f << '\n';
  }
  return kExitOk;
}

}  // namespace

std::optional<std::vector<int>> parse_size_list(std::string_view text, int n) {
  std::vector<int> out;
  if (text == "all") {
    for (int t = 1; t <= n; ++t) out.push_back(t);
    return out;
  }
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    auto t = parse_int(text);
    if (!t) return std::nullopt;
    out.push_back(*t);
    return out;
  }
  auto lo = parse_int(text.substr(0, dots));
  auto hi = parse_int(text.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  for (int t = *lo; t <= *hi; ++t) out.push_back(t);
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count maximal independent sets by size and verify the extremal bound on their number."};
  app.name("mis-tool");
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Print wall time to stderr");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Per-graph maximal independent set counts by size");
  count_cmd->add_option("--input,-i", count.input, "Input file ('-' or omitted for stdin)");
  count_cmd->add_option("--format,-f", count.format, "graph6 or edgelist");
  count_cmd->add_flag("--csv", count.csv, "CSV output");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Tabulate the bound q^(t-r) (q+1)^r");
  bound_cmd->add_option("--n", bound.n, "Graph order")->required();
  bound_cmd->add_option("--t", bound.t, "Size: T, A..B or all")->required();

  ExtremalArgs extremal;
  auto* extremal_cmd = app.add_subcommand("extremal", "Emit the extremal graph H(n,t) or the Turan graph T(n,t)");
  extremal_cmd->add_option("--n", extremal.n, "Graph order")->required();
  extremal_cmd->add_option("--t", extremal.t, "Size / number of parts")->required();
  extremal_cmd->add_option("--which", extremal.which, "H or turan");
  extremal_cmd->add_option("--format,-f", extremal.format, "graph6 or edgelist");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the bound and uniqueness of the extremal graph");
  verify_cmd->add_option("--n", verify.n, "Scan every labeled graph of this order");
  verify_cmd->add_option("--input,-i", verify.input, "Scan graphs from a file ('-' for stdin)");
  verify_cmd->add_option("--format,-f", verify.format, "graph6 or edgelist");
  verify_cmd->add_option("--t", verify.t, "Size: T, A..B or all");
  verify_cmd->add_flag("--all-t", verify.all_t, "Every size 1..n");
  verify_cmd->add_option("--side", verify.side, "mis (default) or clique");
  verify_cmd->add_flag("--n8-opt-in", verify.n8_opt_in, "Allow the order-8 exhaustive scan");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads");
  verify_cmd->add_flag("--csv", verify.csv, "CSV output");

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "Split the t-maximal cliques of a graph at one vertex");
  trace_cmd->add_option("--input,-i", trace.input, "Input file ('-' or omitted for stdin)");
  trace_cmd->add_option("--format,-f", trace.format, "graph6 or edgelist");
  trace_cmd->add_option("--t", trace.t, "Clique size")->required();
  trace_cmd->add_option("--v", trace.v, "Split vertex or auto");
  trace_cmd->add_flag("--csv", trace.csv, "CSV output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (*count_cmd) code = cmd_count(count, in, out);
    if (*bound_cmd) code = cmd_bound(bound, out);
    if (*extremal_cmd) code = cmd_extremal(extremal, out);
    if (*verify_cmd) code = cmd_verify(verify, in, out);
    if (*trace_cmd) code = cmd_trace(trace, in, out);
  } catch (const SplitIdentityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCounterexample;
  } catch (const CodecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (timing) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    err << "wall_time_s=" << elapsed << '\n';
  }
  return code;
}

}  // namespace mis::cli
