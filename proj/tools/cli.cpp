#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "frank/certificate.hpp"
#include "frank/connectivity.hpp"
#include "frank/graph_io.hpp"
#include "frank/group_flow.hpp"
#include "frank/json.hpp"
#include "frank/oracle.hpp"
#include "frank/random_graph.hpp"
#include "frank/superpose.hpp"

namespace frank::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string input = "-";
  std::string certificate_path;
  GraphFormat format = GraphFormat::graph6;
  std::vector<std::string> schedules;
  bool no_shrink = false;
  bool allow_4ec = false;
  bool dump_circuits = false;
  bool oracle_flow = false;
  std::size_t max_edges = 16;
  std::size_t k_max = 7;
  std::size_t max_dimension = 10;
  std::uint64_t seed = 1;
  std::string batch_op = "certify";
  std::size_t random_order = 0;
  std::size_t random_count = 0;
  std::string out_path;
};

// Thrown for command-level failures that are not library errors.
struct Failure {
  int status;
  std::string message;
  json detail = json::object();
};

struct Outcome {
  int status = kOk;
  json result;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kUsage, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions options;
  options.shrink = !cfg.no_shrink;
  if (!cfg.schedules.empty()) {
    if (cfg.schedules.size() > kMaxOrientations) {
      throw Failure{kUsage, "at most " + std::to_string(kMaxOrientations) +
                                " --schedule values are allowed"};
    }
    options.schedules.clear();
    for (const std::string& text : cfg.schedules) {
      ValueSchedule s = parse_schedule(text);
      if (!is_admissible(s)) {
        throw Failure{kUsage, "schedule " + text +
                                  " is not admissible: a signed sum of its "
                                  "values is zero"};
      }
      options.schedules.push_back(std::move(s));
    }
  }
  return options;
}

OracleOptions oracle_options(const RunConfig& cfg) {
  OracleOptions options;
  options.max_edges = cfg.max_edges;
  options.k_max = cfg.k_max;
  return options;
}

Outcome do_certify(const Graph& g, const RunConfig& cfg, std::ostream& err) {
  const CertifyOptions options = certify_options(cfg);
  const EdgeCut cut = minimum_edge_cut(g);
  if (cut.size < 3) {
    throw ConnectivityError("graph has edge connectivity " +
                                std::to_string(cut.size) +
                                "; no certificate exists below 3",
                            cut.size, cut.edges);
  }
  if (cut.size > 3) {
    if (!cfg.allow_4ec) {
      throw ConnectivityError("graph has edge connectivity " +
                                  std::to_string(cut.size) +
                                  "; certify expects exactly 3 "
                                  "(pass --allow-4ec for the F(G)=1 verdict)",
                              cut.size, cut.edges);
    }
    return {kOk, {{"lambda", cut.size}, {"frank_number", 1}}};
  }
  CertificateTrace trace;
  const Certificate cert = build_certificate(g, options, &trace);
  if (cfg.dump_circuits) {
    err << json{{"circuits", circuits_to_json(g, trace.reference)}}.dump() << '\n';
  }
  return {kOk, certificate_to_json(cert)};
}

Outcome do_exact(const Graph& g, const RunConfig& cfg) {
  return {kOk, frank_result_to_json(frank_number(g, oracle_options(cfg)))};
}

Outcome do_flow(const Graph& g, const RunConfig& cfg, std::ostream& err) {
  CoverSearchOptions cover;
  cover.max_dimension = cfg.max_dimension;
  const GroupFlow f = cfg.oracle_flow ? cover_search_flow(g, cover) : jaeger_flow(g);
  if (cfg.dump_circuits) {
    err << json{{"circuits",
                 circuits_to_json(g, build_reference_orientations(g, f))}}.dump()
        << '\n';
  }
  return {kOk, group_flow_to_json(g, f)};
}

Outcome do_econn(const Graph& g) {
  return {kOk, {{"lambda", edge_connectivity(g)}}};
}

Outcome dispatch(const std::string& op, const Graph& g, const RunConfig& cfg,
                 std::ostream& err) {
  if (op == "certify") return do_certify(g, cfg, err);
  if (op == "exact") return do_exact(g, cfg);
  if (op == "flow") return do_flow(g, cfg, err);
  if (op == "econn") return do_econn(g);
  throw Failure{kUsage, "unknown operation '" + op + "'"};
}

// Maps any failure to (status, error JSON).
std::pair<int, json> describe_current_exception() {
  try {
    throw;
  } catch (const Failure& f) {
    json j = {{"error", f.message}, {"status", f.status}};
    j.update(f.detail);
    return {f.status, j};
  } catch (const ConnectivityError& e) {
    return {kPrecondition,
            {{"error", e.what()}, {"status", int(kPrecondition)},
             {"lambda", e.lambda()}, {"cut", e.cut()}}};
  } catch (const ParseError& e) {
    return {kUsage,
            {{"error", e.what()}, {"status", int(kUsage)}, {"offset", e.offset()}}};
  } catch (const GraphError& e) {
    return {kUsage, {{"error", e.what()}, {"status", int(kUsage)}}};
  } catch (const ScheduleError& e) {
    return {kUsage, {{"error", e.what()}, {"status", int(kUsage)}}};
  } catch (const LimitError& e) {
    return {kPrecondition, {{"error", e.what()}, {"status", int(kPrecondition)}}};
  } catch (const UncoveredEdgeError& e) {
    return {kPrecondition,
            {{"error", e.what()}, {"status", int(kPrecondition)}, {"edges", e.edges()}}};
  } catch (const std::exception& e) {
    return {kInternal, {{"error", e.what()}, {"status", int(kInternal)}}};
  }
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Failure{kUsage, "cannot write '" + path + "'"};
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int run_batch(const RunConfig& cfg, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> lines;
  const bool random = cfg.random_count > 0;
  if (random) {
    if (cfg.random_order == 0) throw Failure{kUsage, "--random-count needs --random-order"};
  } else {
    std::istringstream text(read_all(cfg.input, in));
    for (std::string line; std::getline(text, line);) lines.push_back(line);
  }
  const std::size_t count = random ? cfg.random_count : lines.size();

  Output sink(cfg.out_path, out);
  int worst = kOk;
  for (std::size_t i = 0; i < count; ++i) {
    json record = {{"line", i + 1}};
    try {
      Graph g;
      if (random) {
        // Round-trip so edge ids follow the emitted graph6 string.
        const std::string text = to_graph6(random_cubic_3ec(cfg.random_order, cfg.seed + i));
        g = parse_graph6(text);
        record["graph6"] = text;
      } else {
        g = parse_graph6(lines[i]);
      }
      Outcome o = dispatch(cfg.batch_op, g, cfg, err);
      record["status"] = o.status;
      record["result"] = std::move(o.result);
    } catch (...) {
      auto [status, detail] = describe_current_exception();
      worst = std::max(worst, status);
      record["status"] = status;
      record["error"] = detail["error"];
    }
    sink.stream() << record.dump() << '\n';
  }
  return worst;
}

int run_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(read_all(cfg.input, in), cfg.format);
  const Certificate cert = parse_certificate(read_all(cfg.certificate_path, in));
  const Report report = validate_certificate(g, cert);
  Output sink(cfg.out_path, out);
  sink.stream() << report_to_json(report).dump() << '\n';
  return report.pass ? kOk : kPrecondition;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_input = true) {
  if (with_input) {
    cmd->add_option("input", cfg.input, "Graph file, '-' for stdin")
        ->capture_default_str();
  }
  cmd->add_option("--format", cfg.format, "Input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GraphFormat>{{"graph6", GraphFormat::graph6},
                                             {"edgelist", GraphFormat::edge_list}},
          CLI::ignore_case))
      ->option_text("graph6|edgelist [graph6]");
  cmd->add_option("--out", cfg.out_path, "Write JSON here instead of stdout");
}

void add_certify_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--schedule", cfg.schedules,
                  "Value schedule v1,v2,v3[,r1r2r3]; repeat to replace the "
                  "standard five")
      ->allow_extra_args(false);
  cmd->add_flag("--no-shrink", cfg.no_shrink,
                "Keep all orientations (skip the deletability shrink pass)");
  cmd->add_flag("--allow-4ec", cfg.allow_4ec,
                "Report F(G)=1 for 4-edge-connected input instead of failing");
  cmd->add_flag("--dump-circuits", cfg.dump_circuits,
                "Print reference circuits as JSON on stderr");
}

void add_oracle_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-edges", cfg.max_edges, "Edge bound for exhaustive search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--k-max", cfg.k_max, "Largest cover size tried")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Strongly connected orientation certificates for 3-edge-connected graphs",
               "frankcert"};
  app.require_subcommand(1);

  auto* certify = app.add_subcommand("certify", "Build a certificate of at most 5 orientations");
  add_common(certify, cfg);
  add_certify_flags(certify, cfg);

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  add_common(verify, cfg);
  verify->add_option("certificate", cfg.certificate_path, "Certificate JSON file")
      ->required();

  auto* exact = app.add_subcommand("exact", "Exact Frank number by exhaustive search");
  add_common(exact, cfg);
  add_oracle_flags(exact, cfg);

  auto* flow = app.add_subcommand("flow", "Nowhere-zero Z2^3 flow");
  add_common(flow, cfg);
  flow->add_flag("--oracle", cfg.oracle_flow, "Use the exhaustive cycle-space search");
  flow->add_option("--max-dimension", cfg.max_dimension, "Cycle-space bound for --oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  flow->add_flag("--dump-circuits", cfg.dump_circuits,
                 "Print reference circuits as JSON on stderr");

  auto* econn = app.add_subcommand("econn", "Edge connectivity");
  add_common(econn, cfg);

  auto* batch = app.add_subcommand("batch", "Run an operation on every graph6 line");
  add_common(batch, cfg);
  batch->add_option("--op", cfg.batch_op, "Operation per line")
      ->check(CLI::IsMember({"certify", "exact", "flow", "econn"}))
      ->capture_default_str();
  add_certify_flags(batch, cfg);
  add_oracle_flags(batch, cfg);
  batch->add_option("--random-order", cfg.random_order,
                    "Generate random cubic 3-edge-connected graphs of this order")
      ->check(CLI::PositiveNumber);
  batch->add_option("--random-count", cfg.random_count, "Number of graphs to generate");
  batch->add_option("--seed", cfg.seed, "Seed of the first generated graph")
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(cfg, in, out);
    if (*batch) {
      if (cfg.format != GraphFormat::graph6) {
        throw Failure{kUsage, "batch reads one graph6 graph per line"};
      }
      return run_batch(cfg, in, out, err);
    }
    std::string command = certify->parsed() ? "certify"
                          : exact->parsed() ? "exact"
                          : flow->parsed()  ? "flow"
                                            : "econn";
    const Graph g = parse_graph(read_all(cfg.input, in), cfg.format);
    Outcome o = dispatch(command, g, cfg, err);
    Output sink(cfg.out_path, out);
    sink.stream() << o.result.dump() << '\n';
    return o.status;
  } catch (...) {
    auto [status, detail] = describe_current_exception();
    err << detail.dump() << '\n';
    return status;
  }
}

}  // namespace frank::cli
