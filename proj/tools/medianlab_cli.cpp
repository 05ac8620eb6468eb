#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "medianlab/circle.hpp"
#include "medianlab/cocycle.hpp"
#include "medianlab/error.hpp"
#include "medianlab/experiments.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/median.hpp"
#include "medianlab/presentation.hpp"
#include "medianlab/reports.hpp"

namespace ml = medianlab;

namespace {

// Shared command state: global flags plus the pending exit code. Analyses
// that finish but answer "no" (failed --expect, non-median input to the
// hyperplane pass) exit 1; resource caps exit 3; usage errors exit 2.
struct Cli {
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out_dir;
  std::string format = "json";
  std::optional<std::size_t> cap;
  int exit_code = 0;

  ml::Caps caps() const {
    ml::Caps caps = ml::default_caps();
    if (cap) {
      caps.ball_cap = *cap;
      caps.vertex_cap = *cap;
    }
    return caps;
  }

  void emit(const ml::Json& report, const std::string& dot = "") {
    std::string text, ext = format;
    if (format == "json") {
      text = report.dump(2) + "\n";
    } else if (format == "csv") {
      text = ml::report_csv(report);
    } else if (format == "dot") {
      if (dot.empty())
        throw ml::Error(ml::ErrorKind::Usage,
                        "dot output is not available for this command");
      text = dot;
    } else {
      throw ml::Error(ml::ErrorKind::Usage, "unknown format '" + format + "'");
    }
    write(report.value("kind", "report") + "." + ext, text);
  }

  void write(const std::string& filename, const std::string& text) {
    if (out_dir.empty()) {
      std::cout << text;
      return;
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / filename, std::ios::binary);
    out << text;
  }

  void expect(bool ok) {
    if (!ok) exit_code = 1;
  }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ml::Error(ml::ErrorKind::Usage, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_graph_commands(CLI::App& app, Cli& cli) {
  CLI::App* graph = app.add_subcommand("graph", "median-graph analyses");
  graph->require_subcommand(1);

  struct GenOpts {
    std::string kind = "hypercube";
    int k = 3, rows = 3, cols = 3, n = 10, extra = 2, lambda = 2, lo = 0, hi = 10;
  };
  auto gen = std::make_shared<GenOpts>();
  CLI::App* g = graph->add_subcommand("gen", "generate a named graph");
  g->add_option("--kind", gen->kind, "hypercube|grid|path|cycle|tree|quasi-line|random")
      ->capture_default_str();
  g->add_option("--k", gen->k, "hypercube dimension")->capture_default_str();
  g->add_option("--rows", gen->rows)->capture_default_str();
  g->add_option("--cols", gen->cols)->capture_default_str();
  g->add_option("--n", gen->n, "vertex count (path/cycle/tree/random)")->capture_default_str();
  g->add_option("--extra", gen->extra, "extra edges (random)")->capture_default_str();
  g->add_option("--lambda", gen->lambda, "quasi-line parameter")->capture_default_str();
  g->add_option("--lo", gen->lo, "quasi-line window start")->capture_default_str();
  g->add_option("--hi", gen->hi, "quasi-line window end")->capture_default_str();
  g->callback([gen, &cli] {
    ml::Graph graph = [&] {
      const auto& o = *gen;
      if (o.kind == "hypercube") return ml::hypercube(o.k);
      if (o.kind == "grid") return ml::grid(o.rows, o.cols);
      if (o.kind == "path") return ml::path(o.n);
      if (o.kind == "cycle") return ml::cycle(o.n);
      if (o.kind == "tree") return ml::random_tree(o.n, cli.seed);
      if (o.kind == "quasi-line") return ml::quasi_line(o.lambda, o.lo, o.hi);
      if (o.kind == "random") return ml::random_connected(o.n, o.extra, cli.seed);
      throw ml::Error(ml::ErrorKind::Usage, "unknown graph kind '" + o.kind + "'");
    }();
    ml::GraphFormat fmt = cli.format == "json"  ? ml::GraphFormat::Json
                          : cli.format == "dot" ? ml::GraphFormat::Dot
                                                : ml::GraphFormat::EdgeList;
    cli.write("graph." + (cli.format == "csv" ? std::string("txt") : cli.format),
              ml::serialize(graph, fmt));
  });

  struct AnOpts {
    std::string in, expect;
    bool median = false;
    int frontier = -1;
  };
  auto an = std::make_shared<AnOpts>();
  CLI::App* a = graph->add_subcommand("analyze", "unique-median check / (delta, Delta) frontier");
  a->add_option("--in", an->in, "graph file (default: stdin)");
  a->add_flag("--median", an->median, "triple-median certification (default)");
  a->add_option("--frontier", an->frontier, "frontier up to the given delta");
  a->add_option("--expect", an->expect, "exit 1 unless the result is 'median'");
  a->callback([an, &cli] {
    ml::Graph graph = ml::parse_graph(read_input(an->in));
    if (static_cast<std::size_t>(graph.vertex_count()) > cli.caps().vertex_cap)
      throw ml::Error(ml::ErrorKind::CapExceeded, "graph exceeds the vertex cap");
    ml::DistanceMatrix dm(graph, cli.workers);
    if (an->frontier >= 0) {
      auto frontier = ml::almost_median_frontier(graph, dm, an->frontier, cli.workers);
      cli.emit(ml::report_frontier(graph.name, frontier));
      if (an->expect == "median")
        cli.expect(frontier.entries[0].feasible && frontier.entries[0].max_diameter == 0);
      return;
    }
    ml::MedianReport report = ml::check_median(graph, dm, cli.workers);
    cli.emit(ml::report_median(graph.name, report));
    if (an->expect == "median") cli.expect(report.is_median);
  });

  struct HpOpts { std::string in;
  };
  auto hp = std::make_shared<HpOpts>();
  CLI::App* h = graph->add_subcommand("hyperplanes", "wall classes and cubical dimension");
  h->add_option("--in", hp->in, "graph file (default: stdin)");
  h->callback([hp, &cli] {
    ml::Graph graph = ml::parse_graph(read_input(hp->in));
    if (static_cast<std::size_t>(graph.vertex_count()) > cli.caps().vertex_cap)
      throw ml::Error(ml::ErrorKind::CapExceeded, "graph exceeds the vertex cap");
    ml::DistanceMatrix dm(graph, cli.workers);
    auto hs = ml::hyperplanes(graph, dm);
    int dim = ml::cubical_dimension(hs, graph, cli.caps());
    cli.emit(ml::report_hyperplanes(graph.name, hs, dim));
  });
}

void add_group_commands(CLI::App& app, Cli& cli) {
  CLI::App* group = app.add_subcommand("group", "word-metric experiments");
  group->require_subcommand(1);

  struct BallOpts {
    std::string model = "zk:2";
    int radius = 2;
  };
  auto ball = std::make_shared<BallOpts>();
  CLI::App* b = group->add_subcommand("ball", "exact Cayley ball");
  b->add_option("--model", ball->model, "group registry spec")->capture_default_str();
  b->add_option("--radius", ball->radius)->capture_default_str();
  b->callback([ball, &cli] {
    auto g = ml::make_group(ball->model);
    ml::CayleyBall result = ml::cayley_ball(*g, ball->radius, cli.caps(), cli.workers);
    cli.emit(ml::report_ball(result), cli.format == "dot" ? ml::ball_dot(result, *g) : "");
  });

  struct DistOpts {
    std::string model = "heisenberg", central = "(0,0,1)";
    int radius = 8;
  };
  auto dist = std::make_shared<DistOpts>();
  CLI::App* d = group->add_subcommand("distortion", "central-power length profile");
  d->add_option("--model", dist->model)->capture_default_str();
  d->add_option("--central", dist->central, "central element text")->capture_default_str();
  d->add_option("--radius", dist->radius)->capture_default_str();
  d->callback([dist, &cli] {
    auto g = ml::make_group(dist->model);
    auto profile =
        ml::distortion_profile(*g, g->parse(dist->central), dist->radius, cli.caps(), cli.workers);
    cli.emit(ml::report_distortion(profile));
  });

  struct EmbOpts {
    std::string cocycle = "trivial";
    int radius = 6;
  };
  auto emb = std::make_shared<EmbOpts>();
  CLI::App* e = group->add_subcommand("embedding", "coarse-embedding envelopes of an extension");
  e->add_option("--cocycle", emb->cocycle, "registered cocycle name")->capture_default_str();
  e->add_option("--radius", emb->radius)->capture_default_str();
  e->callback([emb, &cli] {
    ml::ExtensionGroup ext(ml::make_cocycle(emb->cocycle));
    cli.emit(ml::report_coarse(ml::coarse_embedding_report(ext, emb->radius, cli.caps(), cli.workers)));
  });

  struct OrdOpts {
    std::string model = "T", element = "rot:1/2";
    long long bound = 1024;
  };
  auto ord = std::make_shared<OrdOpts>();
  CLI::App* o = group->add_subcommand("order", "least k with e^k = 1, up to a bound");
  o->add_option("--model", ord->model)->capture_default_str();
  o->add_option("--element", ord->element)->capture_default_str();
  o->add_option("--bound", ord->bound)->capture_default_str();
  o->callback([ord, &cli] {
    auto g = ml::make_group(ord->model);
    auto result = ml::order_of(*g, g->parse(ord->element), ord->bound);
    cli.emit(ml::report_order(ord->model, ord->element, result, ord->bound));
  });
}

void add_cocycle_commands(CLI::App& app, Cli& cli) {
  CLI::App* co = app.add_subcommand("cocycle", "2-cocycles and central extensions");
  co->require_subcommand(1);

  struct ChkOpts {
    std::string name = "trivial", expect;
    std::size_t samples = 1000;
  };
  auto chk = std::make_shared<ChkOpts>();
  CLI::App* c = co->add_subcommand("check", "cocycle identity over sampled triples");
  c->add_option("--name", chk->name, "registered cocycle name")->capture_default_str();
  c->add_option("--samples", chk->samples)->capture_default_str();
  c->add_option("--expect", chk->expect, "exit 1 unless the result is 'pass'");
  c->callback([chk, &cli] {
    ml::Cocycle cocycle = ml::make_cocycle(chk->name);
    auto report = ml::check_cocycle(cocycle, chk->samples, cli.seed);
    cli.emit(ml::report_cocycle_check(report));
    if (chk->expect == "pass") cli.expect(report.pass);
  });

  struct EuOpts { std::string g = "rot:1/2", h = "rot:1/2";
  };
  auto eu = std::make_shared<EuOpts>();
  CLI::App* e = co->add_subcommand("euler", "euler cocycle value on two circle maps");
  e->set_help_flag("--help", "print help");  // frees -h / "h" for the map option below
  e->add_option("--g", eu->g)->capture_default_str();
  e->add_option("--h", eu->h)->capture_default_str();
  e->callback([eu, &cli] {
    ml::TGroup t;
    int value = ml::euler_value(t.parse(eu->g).as<ml::CircleElement>().map(),
                                t.parse(eu->h).as<ml::CircleElement>().map());
    cli.emit(ml::report_euler(eu->g, eu->h, value));
  });

  struct DfOpts {
    std::string name = "heisenberg";
    int radius = -1;
    std::size_t samples = 1000;
  };
  auto df = std::make_shared<DfOpts>();
  CLI::App* d = co->add_subcommand("defect", "max |phi(gh) - phi(g) - phi(h)|");
  d->add_option("--name", df->name, "registered cocycle name")->capture_default_str();
  d->add_option("--radius", df->radius, "exhaustive over the ball when >= 0");
  d->add_option("--samples", df->samples, "random pairs otherwise")->capture_default_str();
  d->callback([df, &cli] {
    ml::ExtensionGroup ext(ml::make_cocycle(df->name));
    ml::DefectReport report = df->radius >= 0
                                  ? ml::defect_over_ball(ext, df->radius, cli.caps())
                                  : ml::defect_sampled(ext, df->samples, cli.seed);
    cli.emit(ml::report_defect(ext.name(), report));
  });

  struct TrOpts {
    std::string name = "euler:T", element = "z^0 | rot:1/2";
    long long n = 64;
    std::optional<long long> defect;
  };
  auto tr = std::make_shared<TrOpts>();
  CLI::App* t = co->add_subcommand("translation", "phi(e^n)/n with optional defect window");
  t->add_option("--name", tr->name, "registered cocycle name")->capture_default_str();
  t->add_option("--element", tr->element, "extension element text")->capture_default_str();
  t->add_option("--n", tr->n)->capture_default_str();
  t->add_option("--defect", tr->defect, "known defect bound for the +-defect/n window");
  t->callback([tr, &cli] {
    ml::ExtensionGroup ext(ml::make_cocycle(tr->name));
    auto report = ml::translation_number(ext, ext.parse(tr->element), tr->n, tr->defect);
    cli.emit(ml::report_translation(ext.name(), tr->element, report));
  });
}

void add_present_commands(CLI::App& app, Cli& cli) {
  CLI::App* pr = app.add_subcommand("present", "presentations, relators, hom counting");
  pr->require_subcommand(1);

  struct ChkOpts {
    std::string presentation = "lamplighter", model = "lamplighter", expect;
    long long nbound = 20;
    std::vector<std::string> assign;
  };
  auto chk = std::make_shared<ChkOpts>();
  CLI::App* c = pr->add_subcommand("check", "evaluate relators in a concrete model");
  c->add_option("--presentation", chk->presentation, "builtin name or inline text")
      ->capture_default_str();
  c->add_option("--model", chk->model, "group registry spec")->capture_default_str();
  c->add_option("--nbound", chk->nbound, "family truncation")->capture_default_str();
  c->add_option("--assign", chk->assign, "generator override, name=element (repeatable)");
  c->add_option("--expect", chk->expect, "exit 1 unless the result is 'pass'");
  c->callback([chk, &cli] {
    ml::FinitePresentation p = ml::resolve_presentation(chk->presentation);
    auto model = ml::make_group(chk->model);
    std::map<std::string, ml::Element> assignment;
    for (const std::string& name : p.gens) assignment.emplace(name, model->generator_by_name(name));
    for (const std::string& item : chk->assign) {
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw ml::Error(ml::ErrorKind::Usage, "--assign expects name=element");
      assignment.insert_or_assign(item.substr(0, eq), model->parse(item.substr(eq + 1)));
    }
    auto report = ml::check_relators(p, *model, assignment, chk->nbound);
    cli.emit(ml::report_relators(p.name, chk->model, chk->nbound, report));
    if (chk->expect == "pass") cli.expect(report.pass);
  });

  struct HcOpts {
    std::string presentation = "GI:I={}", target = "Z2";
    bool naive = false;
  };
  auto hc = std::make_shared<HcOpts>();
  CLI::App* h = pr->add_subcommand("homcount", "exact homomorphism count into a finite target");
  h->add_option("--presentation", hc->presentation)->capture_default_str();
  h->add_option("--target", hc->target, "Z1..Z16, D4, Q8, S3, S4")->capture_default_str();
  h->add_flag("--naive", hc->naive, "no-pruning oracle");
  h->callback([hc, &cli] {
    ml::FinitePresentation p = ml::resolve_presentation(hc->presentation);
    ml::FiniteGroupTable target = ml::make_target(hc->target);
    auto report = hc->naive ? ml::count_homs_naive(p, target, cli.caps())
                            : ml::count_homs(p, target, cli.caps(), cli.workers);
    cli.emit(ml::report_homcount(report));
  });

  struct SpOpts {
    std::string a = "GI:I={}", b = "GI:I=all", expect;
    std::vector<std::string> targets{"Z2"};
  };
  auto sp = std::make_shared<SpOpts>();
  CLI::App* s = pr->add_subcommand("separate", "hom-count separation of two presentations");
  s->add_option("--a", sp->a)->capture_default_str();
  s->add_option("--b", sp->b)->capture_default_str();
  s->add_option("--targets", sp->targets, "target names, or upto:N for all of order <= N")
      ->delimiter(',')
      ->capture_default_str();
  s->add_option("--expect", sp->expect, "exit 1 unless the result is 'separated'");
  s->callback([sp, &cli] {
    std::vector<ml::FiniteGroupTable> targets;
    for (const std::string& name : sp->targets) {
      if (name.rfind("upto:", 0) == 0) {
        for (auto& t : ml::targets_up_to_order(std::stoi(name.substr(5)))) targets.push_back(t);
      } else {
        targets.push_back(ml::make_target(name));
      }
    }
    ml::FinitePresentation a = ml::resolve_presentation(sp->a);
    ml::FinitePresentation b = ml::resolve_presentation(sp->b);
    ml::SeparationVerdict verdict = ml::separate(a, b, targets, cli.caps());
    std::vector<std::string> names;
    for (const auto& t : targets) names.push_back(t.name());
    cli.emit(ml::report_separation(a.name, b.name, names, verdict));
    if (sp->expect == "separated") cli.expect(verdict.separated);
  });
}

void add_report_command(CLI::App& app, Cli& cli) {
  struct RpOpts { std::string in;
  };
  auto rp = std::make_shared<RpOpts>();
  CLI::App* r = app.add_subcommand("report", "convert a JSON report to CSV");
  r->add_option("--in", rp->in, "report file (default: stdin)");
  r->callback([rp, &cli] {
    ml::Json report = ml::Json::parse(read_input(rp->in));
    cli.write(report.value("kind", "report") + ".csv", ml::report_csv(report));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for median graphs, marked groups and central extensions"};
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  app.add_option("--seed", cli.seed, "seed for randomized corpora and sampling")
      ->capture_default_str();
  app.add_option("--workers", cli.workers, "worker threads (results are identical)")
      ->capture_default_str();
  app.add_option("--out", cli.out_dir, "write artifacts into this directory instead of stdout");
  app.add_option("--format", cli.format, "json|csv|dot")->capture_default_str();
  app.add_option("--cap", cli.cap, "override the element caps");

  add_graph_commands(app, cli);
  add_group_commands(app, cli);
  add_cocycle_commands(app, cli);
  add_present_commands(app, cli);
  add_report_command(app, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ml::ErrorKind::CapExceeded:
      case ml::ErrorKind::BudgetExceeded:
      case ml::ErrorKind::TooManyHyperplanes:
      case ml::ErrorKind::SizeOverflow:
        return 3;
      case ml::ErrorKind::NotMedian:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return cli.exit_code;
}
