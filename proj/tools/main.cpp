// Command-line front end: every subcommand prints one deterministic report,
// as aligned text by default or as canonical JSON with --json.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rp2braid/acceptance.hpp"
#include "rp2braid/artin.hpp"
#include "rp2braid/coset_enum.hpp"
#include "rp2braid/kernel_action.hpp"
#include "rp2braid/p3_model.hpp"
#include "rp2braid/torsion.hpp"
#include "rp2braid/vc_classify.hpp"

using nlohmann::json;
using namespace rp2braid;

namespace {

struct Report {
  std::string command;
  json config = json::object();
  json result = json::object();

  json to_json() const {
    json out = json::object();
    out["command"] = command;
    out["config"] = config;
    out["result"] = result;
    return out;
  }
};

void render_human(std::ostream& os, const json& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << pad << it.key() << ":\n";
        render_human(os, it.value(), indent + 1);
      } else {
        os << pad << it.key() << ": " << (it.value().is_string()
                                              ? it.value().get<std::string>()
                                              : it.value().dump())
           << '\n';
      }
    }
  } else if (node.is_array()) {
    for (const auto& item : node) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        render_human(os, item, indent + 1);
      } else {
        os << pad << "- "
           << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
      }
    }
  }
}

int emit(const Report& rep, bool as_json, int exit_code) {
  if (as_json) {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    std::cout << "command: " << rep.command << '\n';
    if (!rep.config.empty()) {
      std::cout << "config:\n";
      render_human(std::cout, rep.config, 1);
    }
    std::cout << "result:\n";
    render_human(std::cout, rep.result, 1);
  }
  return exit_code;
}

long long env_or(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

json word_json(const Word& w) { return format_word(w); }

json profile_json(const GroupProfile& p) {
  json hist = json::object();
  for (const auto& [ord, count] : p.order_histogram) hist[std::to_string(ord)] = count;
  return json{{"order", p.order},
              {"order_histogram", hist},
              {"center_size", p.center_size},
              {"unique_involution", p.unique_involution}};
}

json candidate_json(const VCCandidate& c) {
  json out = json::object();
  out["group"] = c.group_name;
  if (c.is_type1()) {
    const auto& s = std::get<TypeISpec>(c.shape);
    out["type"] = "I";
    out["finite_part"] = finite_group_name(s.f);
    out["action_order"] = s.action_order;
  } else {
    const auto& s = std::get<TypeIISpec>(c.shape);
    out["type"] = "II";
    out["factors"] = json::array({finite_group_name(s.g1), finite_group_name(s.g2)});
    out["amalgamated_over"] = finite_group_name(s.f);
  }
  switch (c.status) {
    case CandidateStatus::Realized: out["status"] = "realized"; break;
    case CandidateStatus::Excluded: out["status"] = "excluded"; break;
    case CandidateStatus::NotApplicable: out["status"] = "not-applicable"; break;
    case CandidateStatus::Pending: out["status"] = "pending"; break;
  }
  json chain = json::array();
  for (FactId id : c.fact_chain) chain.push_back(fact_id_name(id));
  out["fact_chain"] = chain;
  if (!c.witness.empty()) out["witness"] = c.witness;
  return out;
}

// --- subcommand handlers ------------------------------------------------------

int cmd_word(const std::string& op, int n, const std::vector<std::string>& words, bool as_json) {
  Report rep;
  rep.command = "word " + op;
  rep.config["n"] = n;
  if (op == "mul") {
    Word u = parse_word(n, words.at(0)), v = parse_word(n, words.at(1));
    rep.result["product"] = word_json(multiply(u, v));
  } else {
    Word w = parse_word(n, words.at(0));
    if (op == "reduce") {
      rep.result["reduced"] = word_json(freely_reduce(w));
    } else if (op == "inv") {
      rep.result["inverse"] = word_json(invert(w));
    } else if (op == "perm") {
      Permutation p = permutation_of(w);
      rep.result["cycles"] = p.cycle_string();
      rep.result["order"] = p.order();
      json images = json::array();
      for (int i = 1; i <= p.size(); ++i) images.push_back(p.image_of(i));
      rep.result["images"] = images;
    } else if (op == "abel") {
      AbelianImage a = abelianize(w);
      rep.result["eps_sigma"] = a.eps_sigma;
      rep.result["eps_rho"] = a.eps_rho;
    }
  }
  return emit(rep, as_json, 0);
}

int cmd_prove_eq(int n, const std::string& pres_file, const std::string& utext,
                 const std::string& vtext, SearchBudget budget, bool as_json) {
  Presentation pres = pres_file.empty() ? van_buskirk_presentation(n) : [&] {
    std::ifstream in(pres_file);
    if (!in) throw std::invalid_argument("cannot open presentation file " + pres_file);
    return parse_presentation(in);
  }();
  Word u = parse_word(pres.strands, utext), v = parse_word(pres.strands, vtext);
  ProveResult pr = prove_equal(pres, u, v, budget);

  Report rep;
  rep.command = "prove-eq";
  rep.config["n"] = pres.strands;
  rep.config["max_edits"] = budget.max_edits;
  rep.config["max_states"] = budget.max_states;
  rep.config["max_slack"] = budget.max_slack;
  rep.result["u"] = word_json(u);
  rep.result["v"] = word_json(v);
  rep.result["states_visited"] = pr.stats.states_visited;
  rep.result["corridors_tried"] = pr.stats.corridors_tried;
  if (pr.trace) {
    rep.result["status"] = "proved";
    rep.result["edits"] = pr.trace->steps.size();
    json steps = json::array();
    for (const TraceStep& s : pr.trace->steps) {
      json st = json::object();
      st["position"] = s.position;
      st["relator"] = s.relator;
      st["inverse"] = s.use_inverse;
      st["edit"] = s.deletion ? "delete" : "insert";
      steps.push_back(st);
    }
    rep.result["trace"] = steps;
    rep.result["trace_checked"] = check_trace(pres, *pr.trace);
    return emit(rep, as_json, 0);
  }
  rep.result["status"] = pr.stats.budget_exhausted ? "budget-exhausted" : "not-found";
  return emit(rep, as_json, 1);
}

int cmd_artin_eq(int m, const std::string& ut, const std::string& vt, bool as_json) {
  Word u = parse_word(m, ut), v = parse_word(m, vt);
  GarsideNF nu = left_normal_form(u, m), nv = left_normal_form(v, m);
  Report rep;
  rep.command = "artin-eq";
  rep.config["m"] = m;
  rep.result["equal"] = nu == nv;
  rep.result["nf_left"] = format_nf(nu);
  rep.result["nf_right"] = format_nf(nv);
  return emit(rep, as_json, nu == nv ? 0 : 1);
}

int cmd_torsion_list(int n, bool as_json) {
  Report rep;
  rep.command = "torsion list";
  rep.config["n"] = n;
  json rows = json::array();
  for (const CatalogEntry& e : canonical_torsion_reps(n)) {
    Word w = murasugi_element(e.spec);
    json row = json::object();
    row["family"] = e.spec.family;
    row["r"] = e.spec.r;
    row["s"] = e.spec.s;
    row["q"] = e.spec.q;
    row["order"] = e.order;
    row["word"] = format_word(w);
    row["permutation"] = permutation_of(w).cycle_string();
    AbelianImage a = abelianize(w);
    row["abelian_image"] = "(" + std::to_string(a.eps_sigma) + ", " +
                           std::to_string(a.eps_rho) + ")";
    rows.push_back(row);
  }
  rep.result["rows"] = rows;
  return emit(rep, as_json, 0);
}

int cmd_torsion_order(int family, int n, int r, bool as_json) {
  Report rep;
  rep.command = "torsion order";
  rep.config["family"] = family;
  rep.config["n"] = n;
  rep.config["r"] = r;
  int p = family == 1 ? n - r : n - r - 1;
  int l = std::gcd(p, 2 * r);
  TorsionSpec spec{family, n, r, l ? 2 * r / l : 0, l ? p / l : 0};
  rep.result["order"] = torsion_order(spec);
  rep.result["s"] = spec.s;
  rep.result["q"] = spec.q;
  return emit(rep, as_json, 0);
}

int cmd_torsion_element(int family, int n, int r, bool as_json) {
  Report rep;
  rep.command = "torsion element";
  rep.config["family"] = family;
  rep.config["n"] = n;
  rep.config["r"] = r;
  int p = family == 1 ? n - r : n - r - 1;
  int l = std::gcd(p, 2 * r);
  TorsionSpec spec{family, n, r, l ? 2 * r / l : 0, l ? p / l : 0};
  Word w = murasugi_element(spec);
  rep.result["word"] = format_word(w);
  rep.result["order"] = torsion_order(spec);
  rep.result["permutation"] = permutation_of(w).cycle_string();
  return emit(rep, as_json, 0);
}

int cmd_enumerate(int n, const std::string& subgroup, long long max_cosets, bool dump_table,
                  bool as_json) {
  Presentation p = van_buskirk_presentation(n);
  std::vector<Word> subgens;
  if (subgroup == "pure")
    subgens = pure_subgroup_generators(n);
  else if (subgroup != "trivial")
    throw CLI::ValidationError("--subgroup must be pure or trivial");
  CosetTable t = todd_coxeter(p, subgens, max_cosets);

  Report rep;
  rep.command = "enumerate";
  rep.config["n"] = n;
  rep.config["subgroup"] = subgroup;
  rep.config["max_cosets"] = max_cosets;
  if (!t.complete()) {
    rep.result["status"] = "overflow";
    rep.result["cosets_defined"] = t.cosets_defined();
    return emit(rep, as_json, 1);
  }
  rep.result["status"] = "complete";
  rep.result["index"] = t.index();
  rep.result["cosets_defined"] = t.cosets_defined();
  rep.result["verified"] = t.verify();
  if (subgens.empty()) {
    CayleyTable cay = cayley_from(t);
    GroupProfile prof = cay.profile();
    rep.result["profile"] = profile_json(prof);
    rep.result["identified"] = identify_group(prof).str();
    auto pure = cay.pure_elements();
    GroupProfile pprof = cay.profile_of(pure);
    rep.result["pure_profile"] = profile_json(pprof);
    rep.result["pure_identified"] = identify_group(pprof).str();
  }
  if (dump_table) {
    json rows = json::array();
    int ncols = 2 * static_cast<int>(p.generators.size());
    for (int c = 1; c <= t.index(); ++c) {
      json row = json::array();
      for (int x = 0; x < ncols; ++x) row.push_back(t.entry(c, x));
      rows.push_back(row);
    }
    rep.result["table"] = rows;
  }
  return emit(rep, as_json, 0);
}

int cmd_p3(const std::string& op, const std::vector<std::string>& args, int radius,
           bool as_json) {
  Report rep;
  rep.command = "p3 " + op;
  if (op == "mul") {
    P3Element a = parse_p3(args.at(0)), b = parse_p3(args.at(1));
    rep.result["product"] = format_p3(p3_multiply(a, b));
  } else if (op == "inv") {
    rep.result["inverse"] = format_p3(p3_invert(parse_p3(args.at(0))));
  } else if (op == "order") {
    auto ord = p3_order(parse_p3(args.at(0)));
    rep.result["order"] = ord ? json(*ord) : json("infinite");
  } else if (op == "centralizer") {
    rep.config["radius"] = radius;
    auto ball = centralizer_ball(parse_p3(args.at(0)), radius);
    json items = json::array();
    for (const P3Element& e : ball) items.push_back(format_p3(e));
    rep.result["count"] = ball.size();
    rep.result["elements"] = items;
  } else if (op == "fix") {
    rep.config["radius"] = radius;
    auto q = Q8::parse(args.at(0));
    if (!q) throw CLI::ValidationError("bad Q8 element '" + args.at(0) + "'");
    auto fixed = fixed_words_ball(*q, radius);
    json items = json::array();
    for (const F2Word& w : fixed) items.push_back(w.str());
    rep.result["count"] = fixed.size();
    rep.result["fixed_words"] = items;
  }
  return emit(rep, as_json, 0);
}

FreeAut kernel_aut(const std::string& name, int n) {
  if (name == "alpha") return conj_alpha_inv(n);
  if (name == "beta") return conj_beta_inv(n);
  if (name == "phi") return phi(n);
  throw CLI::ValidationError("--aut must be alpha, beta or phi");
}

int cmd_kernel_fix(int n, const std::string& aut_name, int radius, bool as_json) {
  FreeAut aut = kernel_aut(aut_name, n);
  auto fixed = fixed_points_ball(aut, radius);
  Report rep;
  rep.command = "kernel fix";
  rep.config["n"] = n;
  rep.config["aut"] = aut_name;
  rep.config["radius"] = radius;
  json items = json::array();
  for (const FreeWord& w : fixed) items.push_back(format_kernel_word(w));
  rep.result["count"] = fixed.size();
  rep.result["fixed_words"] = items;
  return emit(rep, as_json, 0);
}

int cmd_kernel_apply(int n, const std::string& aut_name, const std::string& text, bool as_json) {
  FreeAut aut = kernel_aut(aut_name, n);
  FreeWord w = parse_kernel_word(n, text);
  Report rep;
  rep.command = "kernel apply";
  rep.config["n"] = n;
  rep.config["aut"] = aut_name;
  rep.result["word"] = format_kernel_word(w);
  rep.result["image"] = format_kernel_word(aut.apply(w));
  return emit(rep, as_json, 0);
}

int cmd_kernel_syllables(int n, const std::string& gen, const std::string& text, bool as_json) {
  FreeWord w = parse_kernel_word(n, text);
  int g = 0;
  if (gen == "r") {
    g = 0;
  } else if (gen.size() >= 2 && gen[0] == 'B') {
    g = std::stoi(gen.substr(1));
    if (g < 1 || g > n - 1) throw CLI::ValidationError("generator index out of range");
  } else {
    throw CLI::ValidationError("--gen must be r or B<i>");
  }
  SyllableDecomposition d = syllable_decompose(w, g);
  Report rep;
  rep.command = "kernel syllables";
  rep.config["n"] = n;
  rep.config["gen"] = gen;
  rep.result["word"] = format_kernel_word(w);
  rep.result["k"] = d.syllable_count();
  json exps = json::array();
  for (long long e : d.exponents) exps.push_back(e);
  rep.result["exponents"] = exps;
  json mids = json::array();
  for (const FreeWord& m : d.middles) mids.push_back(format_kernel_word(m));
  rep.result["middles"] = mids;
  rep.result["round_trip"] = d.reassemble(n) == w;
  return emit(rep, as_json, 0);
}

int cmd_classify(int n, bool as_json) {
  ClassificationReport r = classify(n);
  FactSet facts = gather_facts(n);
  Report rep;
  rep.command = "classify";
  rep.config["n"] = n;
  json cands = json::array();
  bool replay_ok = true;
  for (const VCCandidate& c : r.candidates) {
    cands.push_back(candidate_json(c));
    replay_ok = replay_ok && replay_fact_chain(c, facts);
  }
  rep.result["candidates"] = cands;
  json realized = json::array();
  for (const std::string& name : r.realized) realized.push_back(name);
  rep.result["realized"] = realized;
  json factlist = json::array();
  for (const Fact& f : facts.facts) {
    json fj = json::object();
    fj["id"] = fact_id_name(f.id);
    fj["statement"] = f.statement;
    fj["evidence"] = f.evidence;
    factlist.push_back(fj);
  }
  rep.result["facts"] = factlist;
  rep.result["chains_replayed"] = replay_ok;
  return emit(rep, as_json, replay_ok ? 0 : 1);
}

int cmd_reproduce(const std::string& suite, bool as_json) {
  auto results = run_suite(suite);
  Report rep;
  rep.command = "reproduce " + suite;
  json lines = json::array();
  bool all_ok = true;
  for (const CriterionResult& r : results) {
    json item = json::object();
    item["criterion"] = r.id;
    item["name"] = r.name;
    item["passed"] = r.passed;
    if (!r.passed) item["detail"] = r.detail;
    lines.push_back(item);
    all_ok = all_ok && r.passed;
  }
  rep.result["criteria"] = lines;
  rep.result["passed"] = all_ok;
  if (as_json) return emit(rep, true, all_ok ? 0 : 1);
  for (const CriterionResult& r : results) std::cout << format_criterion_line(r) << '\n';
  std::cout << (all_ok ? "reproduce: all criteria passed" : "reproduce: FAILURES present")
            << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the braid groups of the projective plane"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the canonical JSON report");

  // word
  auto* word = app.add_subcommand("word", "free-word utilities");
  word->require_subcommand(1);
  int word_n = 3;
  std::vector<std::string> word_args;
  for (const char* op : {"reduce", "mul", "inv", "perm", "abel"}) {
    auto* sub = word->add_subcommand(op);
    sub->add_option("--n", word_n, "strand count")->required();
    sub->add_option("words", word_args)->expected(std::string(op) == "mul" ? 2 : 1);
  }

  // prove-eq
  auto* prove = app.add_subcommand("prove-eq", "bounded equality search over a presentation");
  int prove_n = 2;
  std::string prove_pres;
  std::string prove_u, prove_v;
  SearchBudget budget;
  budget.max_edits = static_cast<int>(env_or("RP2B_PROOF_DEPTH", budget.max_edits));
  prove->add_option("--n", prove_n, "strand count (Van Buskirk presentation)");
  prove->add_option("--presentation", prove_pres, "presentation file overriding --n");
  prove->add_option("--max-edits", budget.max_edits);
  prove->add_option("--max-states", budget.max_states);
  prove->add_option("--max-slack", budget.max_slack);
  prove->add_option("u", prove_u)->required();
  prove->add_option("v", prove_v)->required();

  // artin-eq
  auto* artin = app.add_subcommand("artin-eq", "Garside normal-form equality for sigma words");
  int artin_m = 3;
  std::string artin_u, artin_v;
  artin->add_option("m", artin_m)->required();
  artin->add_option("u", artin_u)->required();
  artin->add_option("v", artin_v)->required();

  // torsion
  auto* torsion = app.add_subcommand("torsion", "torsion catalog");
  torsion->require_subcommand(1);
  int tor_n = 4, tor_family = 1, tor_r = 0;
  auto* tlist = torsion->add_subcommand("list");
  tlist->add_option("n", tor_n)->required();
  auto* torder = torsion->add_subcommand("order");
  torder->add_option("family", tor_family)->required();
  torder->add_option("n", tor_n)->required();
  torder->add_option("r", tor_r)->required();
  auto* telement = torsion->add_subcommand("element");
  telement->add_option("family", tor_family)->required();
  telement->add_option("n", tor_n)->required();
  telement->add_option("r", tor_r)->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  int enum_n = 2;
  std::string enum_subgroup = "trivial";
  long long enum_max = env_or("RP2B_MAX_COSETS", 1'000'000);
  bool enum_table = false;
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_option("--subgroup", enum_subgroup, "pure or trivial");
  enumerate->add_option("--max-cosets", enum_max);
  enumerate->add_flag("--table", enum_table, "dump the coset table rows");

  // p3
  auto* p3 = app.add_subcommand("p3", "exact arithmetic in the 3-strand pure group model");
  p3->require_subcommand(1);
  int p3_radius = static_cast<int>(env_or("RP2B_BALL_RADIUS", 6));
  std::vector<std::string> p3_args;
  for (const char* op : {"mul", "inv", "order", "centralizer", "fix"}) {
    auto* sub = p3->add_subcommand(op);
    sub->add_option("args", p3_args)->expected(std::string(op) == "mul" ? 2 : 1);
    if (std::string(op) == "centralizer" || std::string(op) == "fix")
      sub->add_option("--radius", p3_radius);
  }

  // kernel
  auto* kernel = app.add_subcommand("kernel", "free-group kernel machinery");
  kernel->require_subcommand(1);
  int ker_n = 3, ker_radius = static_cast<int>(env_or("RP2B_BALL_RADIUS", 6));
  std::string ker_aut = "alpha", ker_gen = "r", ker_word;
  auto* kfix = kernel->add_subcommand("fix");
  kfix->add_option("--n", ker_n)->required();
  kfix->add_option("--aut", ker_aut)->required();
  kfix->add_option("--radius", ker_radius);
  auto* kapply = kernel->add_subcommand("apply");
  kapply->add_option("--n", ker_n)->required();
  kapply->add_option("--aut", ker_aut)->required();
  kapply->add_option("word", ker_word)->required();
  auto* ksyl = kernel->add_subcommand("syllables");
  ksyl->add_option("--n", ker_n)->required();
  ksyl->add_option("--gen", ker_gen, "distinguished generator: r or B<i>");
  ksyl->add_option("word", ker_word)->required();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "virtually cyclic subgroup classification");
  int cls_n = 3;
  classify_cmd->add_option("--n", cls_n)->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run an acceptance suite");
  std::string suite = "all";
  reproduce->add_option("suite", suite, "orders, finite-cases, p3, kernel, classify or all");

  // let --json given after a subcommand reach the top-level flag
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
      s->fallthrough();
      enable_fallthrough(s);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (word->parsed()) {
      for (const char* op : {"reduce", "mul", "inv", "perm", "abel"})
        if (word->get_subcommand(op)->parsed()) return cmd_word(op, word_n, word_args, as_json);
    } else if (prove->parsed()) {
      return cmd_prove_eq(prove_n, prove_pres, prove_u, prove_v, budget, as_json);
    } else if (artin->parsed()) {
      return cmd_artin_eq(artin_m, artin_u, artin_v, as_json);
    } else if (torsion->parsed()) {
      if (tlist->parsed()) return cmd_torsion_list(tor_n, as_json);
      if (torder->parsed()) return cmd_torsion_order(tor_family, tor_n, tor_r, as_json);
      if (telement->parsed()) return cmd_torsion_element(tor_family, tor_n, tor_r, as_json);
    } else if (enumerate->parsed()) {
      return cmd_enumerate(enum_n, enum_subgroup, enum_max, enum_table, as_json);
    } else if (p3->parsed()) {
      for (const char* op : {"mul", "inv", "order", "centralizer", "fix"})
        if (p3->get_subcommand(op)->parsed()) return cmd_p3(op, p3_args, p3_radius, as_json);
    } else if (kernel->parsed()) {
      if (kfix->parsed()) return cmd_kernel_fix(ker_n, ker_aut, ker_radius, as_json);
      if (kapply->parsed()) return cmd_kernel_apply(ker_n, ker_aut, ker_word, as_json);
      if (ksyl->parsed()) return cmd_kernel_syllables(ker_n, ker_gen, ker_word, as_json);
    } else if (classify_cmd->parsed()) {
      return cmd_classify(cls_n, as_json);
    } else if (reproduce->parsed()) {
      return cmd_reproduce(suite, as_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
