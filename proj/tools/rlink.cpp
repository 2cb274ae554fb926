// rlink: link distance, diameter and radius of rectilinear domains.
//
// Exit status: 0 success, 1 bad input, 2 engines disagree (verify/bench).

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rlink/generator.hpp"
#include "rlink/instance.hpp"
#include "rlink/oracle.hpp"
#include "rlink/report.hpp"
#include "rlink/samples.hpp"
#include "rlink/svg.hpp"
#include "rlink/verify.hpp"

namespace {

using namespace rlink;

constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

std::string read_source(const std::string& src) {
  if (auto s = samples::by_name(src)) return *s;
  if (src == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(src);
  if (!in) throw input_error("cannot open " + src);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load(const std::string& src) { return analyze(parse_domain(read_source(src))); }

// "x,y" in input units; halves allowed.
Point parse_point(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw input_error("point must be x,y: " + s);
  auto coord = [&](const std::string& t) {
    std::size_t used = 0;
    double      v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw input_error("bad coordinate: " + t);
    }
    if (used != t.size()) throw input_error("bad coordinate: " + t);
    const double twice = 2 * v;
    if (twice != std::floor(twice)) throw input_error("coordinates must be multiples of 0.5: " + t);
    if (std::fabs(v) > static_cast<double>(kMaxInputCoord)) throw input_error("coordinate overflow");
    return static_cast<Coord>(twice);
  };
  return {coord(s.substr(0, comma)), coord(s.substr(comma + 1))};
}

void emit(const nlohmann::json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw input_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw input_error("cannot write " + out);
  f << text;
}

DiameterResult diameter_of(const Instance& inst, Engine e) {
  if (e == Engine::oracle) return oracle_diameter(build_grid(inst.domain));
  return compute_diameter(inst.graph, inst.dm, inst.summary, e);
}

RadiusResult radius_of(const Instance& inst, Engine e) {
  if (e == Engine::oracle) return oracle_radius(build_grid(inst.domain));
  return compute_radius(inst.graph, inst.dm, inst.summary, e);
}

const char* kBenchHeader =
    "instance,n,h,m,chi,ordiam,orrad,diameter,radius,routed_diameter,routed_radius,"
    "analyze_s,diameter_edge_scan_s,diameter_matmul_s,diameter_fast_s,radius_edge_scan_s,"
    "radius_matmul_s,oracle_s,verdict\n";

// One row per instance; each timing is the minimum over `repeat` runs.
int run_bench(const GenParams& base, int count, int repeat, const std::string& format,
              bool with_oracle, const std::string& out) {
  std::ostringstream csv;
  nlohmann::json     rows = nlohmann::json::array();
  csv << kBenchHeader;
  bool agree = true;
  for (int k = 0; k < count; ++k) {
    GenParams p = base;
    p.seed = base.seed + static_cast<std::uint64_t>(k);
    const Domain d = gen_domain(p);
    Instance     inst;
    double       analyze_s = detail::timed([&] { inst = analyze(d); });
    RunReport    rep = run_verify(inst, with_oracle);
    for (int r = 1; r < repeat; ++r) {
      analyze_s = std::min(analyze_s, detail::timed([&] { inst = analyze(d); }));
      const auto again = run_verify(inst, with_oracle);
      for (std::size_t i = 0; i < rep.runs.size(); ++i)
        rep.runs[i].seconds = std::min(rep.runs[i].seconds, again.runs[i].seconds);
    }
    agree = agree && rep.agree && rep.witnesses_ok;

    const auto& runs = rep.runs;  // edge-scan, matmul, fast; edge-scan, matmul; [oracle x2]
    csv << p.seed << ',' << rep.n << ',' << rep.h << ',' << rep.m << ',' << rep.chi << ','
        << rep.ordiam << ',' << rep.orrad << ',' << runs[0].value << ',' << runs[3].value << ','
        << (runs[0].routed_to_fallback ? 1 : 0) << ',' << (runs[3].routed_to_fallback ? 1 : 0)
        << ',' << analyze_s;
    for (std::size_t i = 0; i < 5; ++i) csv << ',' << runs[i].seconds;
    csv << ',';
    if (with_oracle) csv << runs[5].seconds;
    csv << ',' << rep.verdict() << '\n';

    auto j = to_json(rep);
    j["instance"] = p.seed;
    j["analyze_seconds"] = analyze_s;
    rows.push_back(std::move(j));
  }
  if (format == "csv") {
    emit_text(csv.str(), out);
  } else {
    emit(rows, out);
  }
  return agree ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rectilinear link distance, diameter and radius"};
  app.require_subcommand(1);

  std::string src;
  std::string out;
  auto add_source = [&](CLI::App* c) {
    c->add_option("domain", src, "JSON file, '-' for stdin, or square|lshape|donut")->required();
    c->add_option("-o,--out", out, "output file (default stdout)");
  };

  auto* decompose = app.add_subcommand("decompose", "slab decompositions and the oriented graph");
  add_source(decompose);

  std::string p_str;
  std::string q_str;
  bool        use_oracle = false;
  bool        text = false;
  auto*       dist = app.add_subcommand("dist", "link distance between two points");
  add_source(dist);
  dist->add_option("--p", p_str, "first point x,y")->required();
  dist->add_option("--q", q_str, "second point x,y")->required();
  dist->add_flag("--oracle", use_oracle, "use the grid search");
  dist->add_flag("--text", text, "print only the number");

  std::string algo = "edge-scan";
  auto*       diameter = app.add_subcommand("diameter", "link diameter");
  add_source(diameter);
  diameter->add_option("--algo", algo)
      ->check(CLI::IsMember({"edge-scan", "matmul", "fast", "fallback", "oracle"}));

  auto* radius = app.add_subcommand("radius", "link radius");
  add_source(radius);
  radius->add_option("--algo", algo)
      ->check(CLI::IsMember({"edge-scan", "matmul", "fallback", "oracle"}));

  GenParams gp;
  auto add_gen = [&](CLI::App* c) {
    c->add_option("--width", gp.width);
    c->add_option("--height", gp.height);
    c->add_option("--cells", gp.cells);
    c->add_option("--holes", gp.holes);
    c->add_option("--max-hole-cells", gp.max_hole_cells);
    c->add_option("--sparsity", gp.sparsity, "percent, 0-100; higher gives thinner shapes")
        ->check(CLI::Range(0, 100));
    c->add_option("--scale", gp.scale, "coordinate spacing per grid line, 0 = auto");
    c->add_option("--seed", gp.seed);
  };
  auto* gen = app.add_subcommand("gen", "random domain");
  add_gen(gen);
  gen->add_option("-o,--out", out, "output file (default stdout)");

  bool  no_oracle = false;
  auto* verify = app.add_subcommand("verify", "run every engine and compare");
  add_source(verify);
  verify->add_flag("--no-oracle", no_oracle, "skip the grid search and witness checks");

  int         count = 10;
  int         repeat = 1;
  std::string format = "json";
  auto*       bench = app.add_subcommand("bench", "verify a batch of generated domains");
  add_gen(bench);
  bench->add_option("--count", count)->check(CLI::PositiveNumber);
  bench->add_option("--repeat", repeat, "timing repetitions, minimum reported")->check(CLI::PositiveNumber);
  bench->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  bench->add_flag("--no-oracle", no_oracle, "skip the grid search and witness checks");
  bench->add_option("-o,--out", out, "output file (default stdout)");

  std::string dec = "none";
  std::string witness = "none";
  auto*       render = app.add_subcommand("render", "SVG picture");
  add_source(render);
  render->add_option("--dec", dec)->check(CLI::IsMember({"none", "h", "v", "both"}));
  render->add_option("--witness", witness)->check(CLI::IsMember({"none", "diameter", "radius"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*decompose) {
      emit(decomposition_json(load(src)), out);
    } else if (*dist) {
      const auto  inst = load(src);
      const Point p = parse_point(p_str);
      const Point q = parse_point(q_str);
      const int   d = use_oracle ? oracle_distance(inst.domain, p, q)
                                 : point_distance(inst.graph, inst.dm, p, q);
      if (text) {
        emit_text(std::to_string(d) + "\n", out);
      } else {
        emit({{"distance", d},
              {"p", point_json(p)},
              {"q", point_json(q)},
              {"engine", use_oracle ? "oracle" : "graph"}},
             out);
      }
    } else if (*diameter) {
      emit(to_json(diameter_of(load(src), parse_engine(algo))), out);
    } else if (*radius) {
      emit(to_json(radius_of(load(src), parse_engine(algo))), out);
    } else if (*gen) {
      emit(to_json(gen_domain(gp)), out);
    } else if (*verify) {
      const auto rep = run_verify(load(src), !no_oracle);
      emit(to_json(rep), out);
      return std::string(rep.verdict()) == "ok" ? 0 : kExitMismatch;
    } else if (*bench) {
      return run_bench(gp, count, repeat, format, !no_oracle, out);
    } else if (*render) {
      const auto inst = load(src);
      SvgLayers  layers;
      if (dec == "h" || dec == "both") layers.decompositions.push_back(inst.horizontal);
      if (dec == "v" || dec == "both") layers.decompositions.push_back(inst.vertical);
      if (witness == "diameter") {
        const auto r = compute_diameter(inst.graph, inst.dm, inst.summary, Engine::edge_scan);
        layers.points = {r.p, r.q};
      } else if (witness == "radius") {
        layers.points = {compute_radius(inst.graph, inst.dm, inst.summary, Engine::edge_scan).center};
      }
      emit_text(render_svg(inst.domain, layers), out);
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const infeasible_params& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
