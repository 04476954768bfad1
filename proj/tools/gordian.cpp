#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gordian/families.hpp"
#include "gordian/invariants.hpp"
#include "gordian/moves.hpp"
#include "gordian/tangle.hpp"
#include "gordian/verify.hpp"
#include "json_io.hpp"

using namespace gordian;
using io::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kFail = 3 };

struct Globals {
  std::string format = "text";
  std::uint64_t seed = VerifyOptions{}.seed;
  int max_bruteforce = BracketOptions{}.max_crossings;

  bool as_json() const { return format == "json"; }
  BracketOptions bracket() const {
    BracketOptions o;
    o.max_crossings = max_bruteforce;
    return o;
  }
};

struct InputArgs {
  CLI::Option* gauss_opt = nullptr;
  std::string gauss;
  std::string pd;
  std::string family;
  int n = 0;

  void attach(CLI::App* sub) {
    gauss_opt = sub->add_option("--gauss", gauss, "signed Gauss code, e.g. O1+,U2-,...");
    auto* p = sub->add_option("--pd", pd, "planar diagram file");
    auto* f = sub->add_option("--family", family, "km, vkn or d1..d9");
    sub->add_option("--n", n, "family parameter");
    gauss_opt->excludes(p)->excludes(f);
    p->excludes(f);
  }
};

struct Loaded {
  std::optional<GaussCode> gauss;
  std::optional<PlanarDiagram> planar;
  // Maps the edge numbers a user sees (PD labels) to edge ids.
  std::map<long, int> edge_of_label;

  GaussCode knot() const {
    if (gauss) return *gauss;
    if (planar->component_count() != 1) throw ValidationError("input is a link, not a knot");
    return to_gauss(*planar);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void label_by_walk(Loaded& l) {
  auto labels = pd_labels(*l.planar);
  for (int e = 0; e < static_cast<int>(labels.size()); ++e) l.edge_of_label[labels[static_cast<std::size_t>(e)]] = e;
}

PlanarDiagram family_diagram(const FamilyId& id) {
  switch (id.kind) {
    case FamilyKind::KM:
      return km(id.param);
    case FamilyKind::VKN:
      return vkn_planar(id.param);
    case FamilyKind::D_LINK:
      return d_link(id.param);
    default:
      throw ValidationError("tangles have no closed diagram; use the family subcommand");
  }
}

Loaded load(const InputArgs& a) {
  Loaded l;
  if (a.gauss_opt->count()) {
    l.gauss = parse_gauss(a.gauss);
  } else if (!a.pd.empty()) {
    l.planar = parse_pd(read_file(a.pd), l.edge_of_label);
  } else if (!a.family.empty()) {
    l.planar = family_diagram(parse_family(a.family, a.n));
    label_by_walk(l);
  } else {
    throw CLI::ValidationError("input", "one of --gauss, --pd or --family is required");
  }
  return l;
}

GaussCode parse_target(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("--expect wants family:n, got '" + spec + "'");
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("--expect wants family:n, got '" + spec + "'");
  }
  FamilyId id = parse_family(spec.substr(0, colon), n);
  if (id.kind == FamilyKind::VKN) return vkn(n);
  PlanarDiagram d = family_diagram(id);
  if (d.component_count() != 1) throw ValidationError(spec + " is a link, not a knot");
  return to_gauss(d);
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "range must look like 3 or 1..10");
  }
}

void print_poly(const Globals& g, const LaurentPoly& p) {
  if (g.as_json())
    std::cout << io::poly_to_json(p).dump() << "\n";
  else
    std::cout << p.str() << "\n";
}

void print_code(const Globals& g, const GaussCode& c) {
  if (g.as_json())
    std::cout << json{{"gauss", c.str()}}.dump() << "\n";
  else
    std::cout << c.str() << "\n";
}

int cmd_parse(const Globals& g, const InputArgs& a) {
  Loaded l = load(a);
  json j;
  if (l.planar) {
    const auto& d = *l.planar;
    j = {{"classical", d.classical_count()}, {"virtual", d.virtual_count()}, {"components", d.component_count()},
         {"planar", is_planar(d)}};
    j["gauss"] = d.component_count() == 1 ? json(to_gauss(d).str()) : json(nullptr);
  } else {
    j = {{"gauss", l.gauss->str()}, {"classical", l.gauss->crossing_count()}, {"components", 1}};
  }
  if (g.as_json()) {
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << (j["gauss"].is_null() ? std::string("(link)") : j["gauss"].get<std::string>()) << "\n";
  std::cout << "classical " << j["classical"].get<int>();
  if (j.contains("virtual")) std::cout << ", virtual " << j["virtual"].get<int>();
  std::cout << ", components " << j["components"].get<int>() << "\n";
  return kOk;
}

int cmd_invariant(const Globals& g, const InputArgs& a, const std::string& which) {
  Loaded l = load(a);
  const BracketOptions opt = g.bracket();
  if (which == "bracket") {
    print_poly(g, l.planar ? bracket(*l.planar, opt) : bracket(*l.gauss, opt));
  } else if (which == "fpoly") {
    print_poly(g, l.planar ? f_polynomial(*l.planar, opt) : f_polynomial(*l.gauss, opt));
  } else if (which == "writhe") {
    int w = l.planar ? writhe(*l.planar) : writhe(*l.gauss);
    if (g.as_json())
      std::cout << json{{"writhe", w}}.dump() << "\n";
    else
      std::cout << w << "\n";
  } else {
    print_poly(g, affine_index(l.knot()));
  }
  return kOk;
}

int cmd_family(const Globals& g, const std::string& name, int n, bool want_pd) {
  FamilyId id = parse_family(name, n);
  if (id.kind == FamilyKind::TANGLE_T || id.kind == FamilyKind::TANGLE_S) {
    TangleDiagram t = id.kind == FamilyKind::TANGLE_T ? tangle_T() : tangle_S(n);
    BracketVector v = bracket_vector(t, g.bracket());
    if (g.as_json()) {
      std::cout << json{{"family", name}, {"n", n}, {"classical", t.classical_count()},
                        {"bracket_vector", {{"D", io::poly_to_json(v.d)}, {"N", io::poly_to_json(v.n)}, {"X", io::poly_to_json(v.x)}}}}
                       .dump()
                << "\n";
    } else {
      std::cout << "D: " << v.d.str() << "\nN: " << v.n.str() << "\nX: " << v.x.str() << "\n";
    }
    return kOk;
  }
  PlanarDiagram d = family_diagram(id);
  std::vector<std::pair<int, std::pair<int, int>>> arcs;
  if (id.kind == FamilyKind::VKN) {
    auto labels = pd_labels(d);
    for (int j = 1; j <= n; ++j) {
      ArcSpec s = vkn_block_arc(n, j);
      arcs.push_back({j, {labels[static_cast<std::size_t>(s.first)], labels[static_cast<std::size_t>(s.last)]}});
    }
  }
  const bool knot = d.component_count() == 1;
  if (g.as_json()) {
    json j{{"family", name}, {"n", id.param}, {"pd", write_pd(d)}};
    j["gauss"] = knot ? json(to_gauss(d).str()) : json(nullptr);
    json ja = json::array();
    for (const auto& [blk, ab] : arcs) ja.push_back({{"block", blk}, {"arc", {ab.first, ab.second}}});
    if (!arcs.empty()) j["arcs"] = ja;
    std::cout << j.dump() << "\n";
  } else if (want_pd) {
    std::cout << write_pd(d);
    for (const auto& [blk, ab] : arcs) std::cout << "# arc c" << blk << " " << ab.first << "," << ab.second << "\n";
  } else {
    std::cout << (knot ? to_gauss(d).str() : std::string("(link; use --pd)")) << "\n";
  }
  return kOk;
}

int cmd_move(const Globals& g, const InputArgs& a, const std::vector<std::string>& rccs, const std::string& arc,
             const std::string& expect, bool want_pd) {
  if (rccs.empty() == arc.empty()) throw CLI::ValidationError("move", "give --rcc (repeatable) or --arc-shift");
  Loaded l = load(a);
  if (l.gauss) {
    l.planar = to_planar(*l.gauss);
    label_by_walk(l);
  }
  std::vector<MoveDescriptor> moves;
  std::vector<std::string> shown;  // moves as the user wrote them
  for (const auto& r : rccs) {
    moves.push_back(RccMove{r});
    shown.push_back("rcc " + r);
  }
  if (!arc.empty()) {
    auto comma = arc.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--arc-shift", "expects two edge labels a,b");
    long x = 0, y = 0;
    try {
      x = std::stol(arc.substr(0, comma));
      y = std::stol(arc.substr(comma + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--arc-shift", "expects two edge labels a,b");
    }
    auto edge = [&](long lab) {
      auto it = l.edge_of_label.find(lab);
      if (it == l.edge_of_label.end()) throw ValidationError("no edge labelled " + std::to_string(lab));
      return it->second;
    };
    moves.push_back(ArcShiftMove{{edge(x), edge(y)}});
    shown.push_back("arc-shift " + std::to_string(x) + "," + std::to_string(y));
  }
  std::optional<GaussCode> target;
  if (!expect.empty()) target = parse_target(expect);
  MoveReport rep = run_moves(*l.planar, moves, target, g.bracket());
  PlanarDiagram moved = *l.planar;
  for (const auto& m : moves) moved = apply_move(moved, m);

  if (g.as_json()) {
    json j = io::move_report_to_json(rep);
    j["moves"] = shown;
    if (!expect.empty()) j["expect"] = expect;
    if (want_pd) j["pd"] = write_pd(moved);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "before:     " << rep.before.str() << "\n";
  for (const auto& m : shown) std::cout << "move:       " << m << "\n";
  std::cout << "after:      " << rep.after.str() << "\n";
  std::cout << "simplified: " << rep.simplified.str() << "\n";
  for (const auto& c : rep.checks)
    std::cout << c.name << ": " << c.moved << (c.match ? " == " : " != ") << c.target << "\n";
  if (target) std::cout << (rep.match ? "match" : "mismatch") << " (" << expect << ")\n";
  if (want_pd) std::cout << write_pd(moved);
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& claim, const std::string& range) {
  std::vector<std::string> claims;
  if (claim == "all")
    claims = claim_names();
  else if (known_claim(claim))
    claims = {claim};
  else
    throw CLI::ValidationError("claim", "unknown claim '" + claim + "'");
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.bracket = g.bracket();
  if (!range.empty()) std::tie(opt.lo, opt.hi) = parse_range(range);
  bool all_pass = true;
  json out = json::array();
  for (const auto& c : claims) {
    VerifyResult r = run_claim(c, opt);
    all_pass = all_pass && r.pass;
    if (g.as_json()) {
      out.push_back(io::verify_to_json(r));
      continue;
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.claim << " [" << r.parameters << "]\n";
    for (const auto& d : r.details) std::cout << "  " << d << "\n";
    for (const auto& s : r.skipped) std::cout << "  skipped " << s << "\n";
    if (!r.pass) std::cout << "  counterexample: " << r.counterexample << "\n";
  }
  if (g.as_json()) std::cout << (claims.size() == 1 ? out[0] : out).dump() << "\n";
  return all_pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gordian: knot and virtual knot invariants, moves and families"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--max-bruteforce", g.max_bruteforce, "largest classical crossing count for the state sum")
      ->check(CLI::Range(0, 62));

  std::function<int()> run;

  InputArgs parse_in;
  auto* parse = app.add_subcommand("parse", "validate an input and print its canonical form");
  parse_in.attach(parse);
  parse->callback([&] { run = [&] { return cmd_parse(g, parse_in); }; });

  std::map<std::string, InputArgs> inv_in;
  for (const char* name : {"bracket", "fpoly", "writhe", "affine-index"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of a knot diagram");
    inv_in[name].attach(sub);
    sub->callback([&, name] { run = [&, name] { return cmd_invariant(g, inv_in[name], name); }; });
  }

  std::string fam_name;
  int fam_n = 0;
  bool fam_pd = false;
  auto* family = app.add_subcommand("family", "generate km, vkn, tangle-t, tangle-s or d1..d9");
  family->add_option("name", fam_name)->required();
  family->add_option("--n", fam_n, "block count");
  family->add_flag("--pd", fam_pd, "print the planar diagram text");
  family->callback([&] { run = [&] { return cmd_family(g, fam_name, fam_n, fam_pd); }; });

  InputArgs move_in;
  std::vector<std::string> rccs;
  std::string arc, expect;
  bool move_pd = false;
  auto* move = app.add_subcommand("move", "apply region crossing changes or an arc shift");
  move_in.attach(move);
  move->add_option("--rcc", rccs, "region name or face index (repeatable)");
  move->add_option("--arc-shift", arc, "arc given by its first and last edge labels, a,b");
  move->add_option("--expect", expect, "target family:n to compare against");
  move->add_flag("--emit-pd", move_pd, "also print the moved diagram");
  move->callback([&] { run = [&] { return cmd_move(g, move_in, rccs, arc, expect, move_pd); }; });

  InputArgs simp_in;
  auto* simp = app.add_subcommand("simplify", "remove RI and RII configurations");
  simp_in.attach(simp);
  simp->callback([&] { run = [&] { print_code(g, simplify(load(simp_in).knot())); return int(kOk); }; });

  std::vector<std::string> parts;
  auto* connect = app.add_subcommand("connect", "connected sum of two Gauss codes");
  connect->add_option("--gauss", parts, "a Gauss code; give exactly two")->expected(2)->required();
  connect->callback([&] {
    run = [&] { return print_code(g, connected_sum(parse_gauss(parts[0]), parse_gauss(parts[1]))), int(kOk); };
  });

  std::string claim = "all", range;
  auto* verify = app.add_subcommand("verify", "check a claim over a parameter range");
  verify->add_option("claim", claim, "claim id or 'all'");
  verify->add_option("--n,--m", range, "parameter range lo..hi");
  verify->callback([&] { run = [&] { return cmd_verify(g, claim, range); }; });

  try {
    app.parse(argc, argv);
    return run();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const BruteforceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {  // ParseError, ValidationError
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
