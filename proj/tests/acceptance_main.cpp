// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 0 only when
// every criterion holds within its stated runtime budget.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "medianlab/circle.hpp"
#include "medianlab/cocycle.hpp"
#include "medianlab/error.hpp"
#include "medianlab/experiments.hpp"
#include "medianlab/graph.hpp"
#include "medianlab/group.hpp"
#include "medianlab/lamplighter.hpp"
#include "medianlab/median.hpp"
#include "medianlab/presentation.hpp"

using namespace medianlab;
using Clock = std::chrono::steady_clock;

namespace {

std::string cli_path;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string triple_text(const std::optional<Triple>& t) {
  if (!t) return "(none)";
  return "(" + std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," +
         std::to_string((*t)[2]) + ")";
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

// ---- criteria; each returns "" on pass, otherwise the reason ----

std::string median_certification(std::string& detail) {
  auto timed_check = [](const Graph& g, MedianReport& out) {
    auto start = Clock::now();
    DistanceMatrix dm(g);
    out = check_median(g, dm);
    return ms_since(start);
  };

  Graph q4 = hypercube(4);
  MedianReport mq;
  long long tq = timed_check(q4, mq);
  if (!mq.is_median) return "Q4 flagged non-median";
  if (tq >= 1000) return "Q4 took " + std::to_string(tq) + " ms";

  MedianReport mc;
  long long tc = timed_check(cycle(6), mc);
  if (mc.is_median || mc.witness != Triple{0, 2, 4})
    return "C6 witness " + triple_text(mc.witness) + ", expected (0,2,4)";
  if (tc >= 1000) return "C6 took " + std::to_string(tc) + " ms";

  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  MedianReport mk;
  long long tk = timed_check(k3, mk);
  if (mk.is_median || mk.witness != Triple{0, 1, 2})
    return "K3 witness " + triple_text(mk.witness) + ", expected (0,1,2)";
  if (mk.witness_medians.size() == 1) return "K3 witness medians unexpectedly a singleton";
  // the triple's three points are exactly the distance-sum medians
  DistanceMatrix dk(k3);
  std::vector<int> sum_medians;
  int best = 1 << 20;
  for (int m = 0; m < 3; ++m) {
    int s = dk(0, m) + dk(1, m) + dk(2, m);
    if (s < best) {
      best = s;
      sum_medians.clear();
    }
    if (s == best) sum_medians.push_back(m);
  }
  if (sum_medians != std::vector<int>{0, 1, 2}) return "K3 sum-median set is not {0,1,2}";
  if (tk >= 1000) return "K3 took " + std::to_string(tk) + " ms";

  detail = "Q4 unique medians (" + std::to_string(tq) + " ms); C6 witness (0,2,4); K3 witness "
           "(0,1,2), interval medians empty, sum medians {0,1,2}";
  return "";
}

std::string frontier_equivalence(std::string& detail) {
  std::vector<Graph> corpus;
  for (int k = 1; k <= 4; ++k) corpus.push_back(hypercube(k));
  for (int r = 1; r <= 4; ++r)
    for (int c = r; c <= 4; ++c) corpus.push_back(grid(r, c));
  for (int n = 2; n <= 8; ++n) corpus.push_back(path(n));
  for (int n = 3; n <= 10; ++n) corpus.push_back(cycle(n));
  for (int n : {5, 10, 15, 20, 25, 30})
    for (std::uint64_t seed : {1, 2}) corpus.push_back(random_tree(n, seed));
  for (int n : {8, 12, 16, 20})
    for (int extra : {3, 6}) corpus.push_back(random_connected(n, extra, 1));
  corpus.push_back(quasi_line(2, 0, 10));
  corpus.push_back(quasi_line(2, 0, 20));
  corpus.push_back(l1_product(path(3), path(4)));
  corpus.push_back(l1_product(cycle(4), path(3)));
  corpus.push_back(l1_product(hypercube(2), hypercube(2)));
  if (corpus.size() < 50) return "corpus too small: " + std::to_string(corpus.size());

  int median_count = 0;
  for (const Graph& g : corpus) {
    DistanceMatrix dm(g);
    MedianReport mr = check_median(g, dm);
    FrontierEntry e0 = almost_median_frontier(g, dm, 0).entries.at(0);
    bool frontier_median = e0.feasible && e0.max_diameter == 0;
    if (frontier_median != mr.is_median)
      return "discrepancy on graph '" + g.name + "'";
    median_count += mr.is_median ? 1 : 0;
  }
  detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(median_count) +
           " median, zero discrepancies";
  return "";
}

std::string quasi_line_frontier(std::string& detail) {
  Graph l2 = quasi_line(2, 0, 40);
  DistanceMatrix dm(l2);
  AlmostMedianFrontier f = almost_median_frontier(l2, dm, 1);
  const FrontierEntry& e0 = f.entries.at(0);
  const FrontierEntry& e1 = f.entries.at(1);
  if (e0.feasible) return "delta=0 unexpectedly feasible";
  if (!e1.feasible) return "delta=1 infeasible";
  if (e1.max_diameter > 2)
    return "Delta(1) = " + std::to_string(e1.max_diameter) + ", expected <= 2";
  if (e1.max_diameter != 1)  // exact value from an independent brute force
    return "Delta(1) = " + std::to_string(e1.max_diameter) + ", brute force says 1";
  detail = "window [0,40]: delta=0 infeasible at witness " + triple_text(e0.witness) +
           ", delta=1 feasible with Delta = " + std::to_string(e1.max_diameter) + " (<= 2)";
  return "";
}

std::string hyperplane_dimensions(std::string& detail) {
  Graph q3 = hypercube(3);
  DistanceMatrix d3(q3);
  auto h3 = hyperplanes(q3, d3);
  int dim3 = cubical_dimension(h3, q3);
  if (h3.size() != 3 || dim3 != 3)
    return "Q3: " + std::to_string(h3.size()) + " classes, dimension " + std::to_string(dim3);

  Graph g33 = grid(3, 3);
  DistanceMatrix dg(g33);
  auto hg = hyperplanes(g33, dg);
  int dimg = cubical_dimension(hg, g33);
  if (hg.size() != 4 || dimg != 2)
    return "grid 3x3: " + std::to_string(hg.size()) + " classes, dimension " +
           std::to_string(dimg);

  Graph tree = random_tree(20, 11);
  DistanceMatrix dt(tree);
  auto ht = hyperplanes(tree, dt);
  int dimt = cubical_dimension(ht, tree);
  if (ht.size() != 19 || dimt != 1)
    return "tree n=20: " + std::to_string(ht.size()) + " classes, dimension " +
           std::to_string(dimt);

  detail = "Q3: 3 classes dim 3; grid 3x3: 4 classes dim 2; tree n=20: 19 classes dim 1";
  return "";
}

std::string cocycle_identities(std::string& detail) {
  std::size_t total = 0;
  for (const std::string& name :
       {"trivial", "heisenberg", "euler:T", "twist:I={}", "twist:I={1,3}", "twist:I=all"}) {
    CocycleCheckReport r = check_cocycle(make_cocycle(name), 1000, 0xACCE5);
    if (!r.pass) return name + " failed at (" + (r.witness.empty() ? "" : r.witness[0]) + ",...)";
    if (!r.bound_ok) return name + " exceeded its claimed bound";
    total += r.samples;
  }
  CocycleCheckReport bad = check_cocycle(make_cocycle("corrupted"), 1000, 0xACCE5);
  if (bad.pass) return "corrupted cocycle passed";
  if (bad.witness.size() != 3) return "corrupted cocycle failed without a witness triple";
  detail = "6 cocycles pass (" + std::to_string(total) +
           " triples); corrupted fails with a witness";
  return "";
}

std::string euler_torsion(std::string& detail) {
  CircleMap half = CircleMap::rotation(Dyadic(BigInt(1), 1));
  if (euler_value(half, half) != 1) return "c(r_1/2, r_1/2) != 1";

  TGroup t;
  Element rot = t.parse("rot:1/2");
  auto order = order_of(t, rot, 16);
  if (!order || *order != 2) return "order(r_1/2) != 2 in T";

  LineMap l = lift(half);
  LineMap p = LineMap::identity();
  for (int k = 1; k <= 64; ++k) {
    p = LineMap::compose(l, p);
    if (p == LineMap::identity())
      return "lift returned to identity at iteration " + std::to_string(k);
  }

  ExtensionGroup ext(make_cocycle("euler:T"));
  TranslationReport tr = translation_number(ext, ext.make(0, rot), 64);
  if (tr.value != Rational(1, 2)) return "translation number != 1/2";
  detail = "c(r,r) = 1; order 2 in T; lift torsion-free through 64 iterations; "
           "translation number 1/2";
  return "";
}

std::string distortion_contrast(std::string& detail) {
  auto h = make_group("heisenberg");
  DistortionProfile hp = distortion_profile(*h, h->parse("(0,0,1)"), 12);
  if (hp.points.empty() || hp.points[0].k != 1 || hp.points[0].length != 4)
    return "d(1,z) != 4 in the Heisenberg model";
  if (!hp.fit_ok) return "Heisenberg fit has too few points";
  if (hp.exponent < 0.35 || hp.exponent > 0.65)
    return "Heisenberg exponent " + std::to_string(hp.exponent) + " outside [0.35, 0.65]";

  ExtensionGroup split(make_cocycle("trivial"));
  DistortionProfile sp = distortion_profile(split, split.generator_by_name("z"), 8);
  for (const DistortionPoint& pt : sp.points)
    if (pt.length != pt.k)
      return "split model length(z^" + std::to_string(pt.k) + ") = " +
             std::to_string(pt.length);
  if (!sp.fit_ok) return "split-model fit has too few points";
  if (std::abs(sp.exponent - 1.0) > 0.02)
    return "split exponent " + std::to_string(sp.exponent) + " outside 1.00 +- 0.02";

  std::ostringstream os;
  os.precision(3);
  os << "Heisenberg: d(1,z) = 4, exponent " << std::fixed << hp.exponent << " ("
     << hp.points.size() << " powers in B(12)); split model exponent " << sp.exponent;
  detail = os.str();
  return "";
}

std::string presentation_soundness(std::string& detail) {
  auto associative = [](const Group& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) {
      Element x = g.random_element(rng, 6), y = g.random_element(rng, 6),
              z = g.random_element(rng, 6);
      if (!(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)))) return false;
    }
    return true;
  };

  LamplighterGroup lamp;
  std::map<std::string, Element> la{{"a", lamp.generator_by_name("a")},
                                    {"t", lamp.generator_by_name("t")}};
  if (!check_relators(builtin_presentation("lamplighter"), lamp, la, 20).pass)
    return "lamplighter relators fail";
  if (!associative(lamp, 901)) return "lamplighter associativity fails";

  std::uint64_t seed = 902;
  for (const std::string& set : {"{}", "{1}", "{2}", "{1,3}", "all"}) {
    TwistedGroup tg(TwistSet::parse(set));
    std::map<std::string, Element> ta{{"a", tg.generator_by_name("a")},
                                      {"t", tg.generator_by_name("t")},
                                      {"z", tg.generator_by_name("z")}};
    if (!check_relators(builtin_presentation("GI:I=" + set), tg, ta, 20).pass)
      return "G_I relators fail for I = " + set;
    if (!associative(tg, seed++)) return "associativity fails for I = " + set;
  }

  TwistedGroup empty_set{TwistSet::finite({})};
  if (!(empty_set.evaluate_word("t a T a t a T a") == empty_set.generator_by_name("z")))
    return "[tat^-1, a] != z for I = {}";
  detail = "lamplighter + 5 twisted models pass relators at n <= 20; [tat^-1,a] = z for "
           "I = {}; associativity on 1000 seeded triples per model";
  return "";
}

std::string hom_counting(std::string& detail) {
  FiniteGroupTable z2 = make_target("Z2");
  struct Case {
    const char* spec;
    long long expected;
  };
  for (const Case& c : {Case{"GI:I={}", 4}, Case{"GI:I=all", 8}, Case{"vondyck:2,3,7", 1}}) {
    FinitePresentation p = resolve_presentation(c.spec);
    long long naive = count_homs_naive(p, z2).count;  // oracle first
    if (naive != c.expected)
      return std::string(c.spec) + ": naive oracle counted " + std::to_string(naive);
    long long fast = count_homs(p, z2).count;
    if (fast != naive)
      return std::string(c.spec) + ": pruned search disagrees with the oracle";
  }
  SeparationVerdict v = separate(resolve_presentation("GI:I={}"),
                                 resolve_presentation("GI:I=all"), {z2});
  if (!v.separated || v.count_a != 4 || v.count_b != 8)
    return "separation verdict: " + v.text();
  detail = "counts 4 / 8 / 1, each matching the no-pruning oracle; " + v.text();
  return "";
}

std::string surface_words(std::string& detail) {
  auto g = make_group("surface:2");
  if (!(g->evaluate_word("a1 b1 A1 B1 a2 b2 A2 B2") == g->identity()))
    return "the genus-2 relator does not reduce to the identity";

  std::vector<Element> gens;
  for (const char* name : {"a1", "A1", "b1", "B1", "a2", "A2", "b2", "B2"})
    gens.push_back(g->evaluate_word(name));
  struct Node {
    Element e;
    int last;
  };
  std::vector<Node> level{{g->identity(), -1}};
  std::size_t words = 0;
  for (int len = 1; len <= 4; ++len) {
    std::vector<Node> next;
    next.reserve(level.size() * 7);
    for (const Node& node : level)
      for (int j = 0; j < 8; ++j) {
        if (node.last >= 0 && j == (node.last ^ 1)) continue;  // cancellation
        next.push_back({g->mul(node.e, gens[j]), j});
        if (next.back().e == g->identity())
          return "a freely reduced word of length " + std::to_string(len) + " is trivial";
      }
    words += next.size();
    level = std::move(next);
  }
  if (words != 3200) return "enumerated " + std::to_string(words) + " words, expected 3200";

  std::size_t ball2 = cayley_ball(*g, 2).size();
  if (ball2 != 65) return "|B(2)| = " + std::to_string(ball2) + ", expected 65";
  detail = "relator reduces to identity; 3200 reduced words of length <= 4 all nontrivial; "
           "|B(2)| = 65";
  return "";
}

std::string cli_determinism(std::string& detail) {
  if (cli_path.empty()) return "CLI binary path not provided (argv[1])";

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "medianlab-acceptance";
  fs::create_directories(dir);
  fs::path graph_file = dir / "quasi-line.txt";
  {
    std::ofstream out(graph_file, std::ios::binary);
    out << serialize(quasi_line(2, 0, 40), GraphFormat::EdgeList);
  }

  // worker-sensitive and seed-sensitive invocations
  const std::vector<std::string> tails{
      "graph analyze --frontier 2 --in \"" + graph_file.string() + "\"",
      "present homcount --presentation triangle:2,3,7 --target S4",
      "group ball --model lamplighter --radius 4",
      "cocycle check --name euler:T --samples 500"};
  std::vector<std::vector<std::string>> batches;
  for (const std::string& tail : tails) {
    std::vector<std::string> batch;
    for (const char* workers : {"1", "4"})
      for (int run = 0; run < 2; ++run)
        batch.push_back("--seed 7 --workers " + std::string(workers) + " " + tail);
    batches.push_back(std::move(batch));
  }
  batches.push_back({"--seed 5 graph gen --kind tree --n 20",
                     "--seed 5 graph gen --kind tree --n 20"});

  int invocations = 0;
  for (const auto& batch : batches) {
    std::string reference;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      RunResult r = run_cli(batch[i]);
      ++invocations;
      if (r.exit_code != 0)
        return "exit " + std::to_string(r.exit_code) + " from: " + batch[i];
      if (r.out.empty()) return "empty output from: " + batch[i];
      if (i == 0)
        reference = r.out;
      else if (r.out != reference)
        return "byte mismatch between runs of: " + batch[i];
    }
  }
  detail = std::to_string(invocations) +
           " CLI invocations over 5 commands, byte-identical across runs and workers {1,4}";
  return "";
}

struct Criterion {
  int number;
  const char* label;
  long long limit_ms;  // 0 = no stated budget
  std::function<std::string(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];

  const std::vector<Criterion> criteria{
      {1, "median certification", 0, median_certification},
      {2, "delta=0 frontier equivalence", 0, frontier_equivalence},
      {3, "quasi-line frontier", 5000, quasi_line_frontier},
      {4, "hyperplanes and dimension", 0, hyperplane_dimensions},
      {5, "cocycle identities", 0, cocycle_identities},
      {6, "euler value and torsion", 0, euler_torsion},
      {7, "distortion contrast", 120000, distortion_contrast},
      {8, "presentation soundness", 0, presentation_soundness},
      {9, "hom counting", 10000, hom_counting},
      {10, "surface group words", 30000, surface_words},
      {11, "CLI determinism", 0, cli_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = Clock::now();
    std::string detail, reason;
    try {
      reason = c.run(detail);
    } catch (const Error& e) {
      reason = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    long long elapsed = ms_since(start);
    if (reason.empty() && c.limit_ms > 0 && elapsed > c.limit_ms)
      reason = "exceeded the " + std::to_string(c.limit_ms) + " ms budget";
    bool ok = reason.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.label << " ("
              << elapsed << " ms): " << (ok ? detail : reason) << "\n";
  }
  std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failures)) << "/"
            << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
