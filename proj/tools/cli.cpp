#include "cli.hpp"

#include <CLI11.hpp>

#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "ifol/concepts.hpp"
#include "ifol/error.hpp"
#include "ifol/generator.hpp"
#include "ifol/io.hpp"
#include "ifol/semantics.hpp"
#include "ifol/sweep.hpp"
#include "ifol/syntax.hpp"
#include "ifol/worlds.hpp"

namespace ifol::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string sig_path;
  std::string world_path;
  std::string worlds_path;
  bool enumerate = false;
  std::string domain;
  std::vector<std::string> consts;
  std::uint64_t limit = kDefaultWorldLimit;
  std::string format = "text";
  std::string assign;
  std::string at_world;

  std::string text1;
  std::string text2;

  std::string corpus;
  std::size_t random = 0;
  std::size_t depth = 3;
  double abstraction_prob = 0.2;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool corrupt = false;

  bool strong = false;
  bool weak = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i].to_string();
  return out + ")";
}

std::string tuples_text(const Relation& r) {
  std::string out;
  for (const Tuple& t : r.tuples()) out += (out.empty() ? "" : " ") + tuple_text(t);
  return out;
}

// key=value, quoting values that would not survive splitting on spaces.
std::string field(const std::string& key, const std::string& value) {
  if (!value.empty() && value.find_first_of(" \t\"=\\") == std::string::npos) return key + "=" + value;
  std::string q = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return key + "=" + q + "\"";
}

// Everything a semantic command works against.
struct Session {
  explicit Session(const Options& o) : opts(o) {
    if (!o.sig_path.empty()) {
      sig = Signature::load(o.sig_path);
      fixed_sig = true;
    }
  }

  const Options& opts;
  ConceptRegistry reg;
  Signature sig;
  bool fixed_sig = false;
  std::unique_ptr<WorldSet> worlds;

  FormulaPtr formula(const std::string& text) {
    return fixed_sig ? parse_formula(text, sig) : parse_formula_inferring(text, sig);
  }

  Term term(const std::string& text) {
    return fixed_sig ? parse_term(text, sig) : parse_term_inferring(text, sig);
  }

  Abstraction abstraction(const std::string& text) {
    Term t = term(text);
    if (auto* a = std::get_if<Abstraction>(&t)) return *a;
    throw UsageError("'" + text + "' is not an abstraction term");
  }

  // Loads --world / --worlds. Enumeration waits until the formulas are
  // parsed, since without --sig they are what declares the predicates.
  void load_world_files() {
    const int sources = !opts.world_path.empty() + !opts.worlds_path.empty() + opts.enumerate;
    if (sources != 1) throw UsageError("give exactly one of --world, --worlds or --enumerate");
    const Signature* s = fixed_sig ? &sig : nullptr;
    if (!opts.world_path.empty()) {
      std::vector<World> one{load_world(opts.world_path, reg, s)};
      worlds = std::make_unique<WorldSet>(std::move(one));
    } else if (!opts.worlds_path.empty()) {
      worlds = std::make_unique<WorldSet>(load_world_set(opts.worlds_path, reg, s));
    }
    if (worlds && !fixed_sig) sig = signature_of((*worlds)[0]);
  }

  void enumerate_if_requested() {
    if (!opts.enumerate) return;
    if (opts.domain.empty()) throw UsageError("--enumerate needs --domain");
    std::vector<DomainElement> dom;
    for (const std::string& name : split_list(opts.domain)) dom.push_back(DomainElement::particular(name));
    std::map<std::string, DomainElement> consts;
    for (const std::string& item : opts.consts) {
      for (const std::string& c : split_list(item)) {
        const auto eq = c.find('=');
        if (eq == std::string::npos) throw UsageError("--const expects name=element, got '" + c + "'");
        consts[c.substr(0, eq)] = DomainElement::particular(c.substr(eq + 1));
      }
    }
    worlds = std::make_unique<WorldSet>(enumerate_worlds(sig, dom, consts, opts.limit));
  }

  std::vector<std::size_t> selected_worlds() const {
    if (opts.at_world.empty()) {
      std::vector<std::size_t> all(worlds->size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }
    auto i = worlds->index_of(opts.at_world);
    if (!i) throw UsageError("no world named '" + opts.at_world + "'");
    return {*i};
  }

  DomainElement element(const std::string& name) const {
    if (!name.empty() && name[0] == '@') {
      std::uint32_t id = 0;
      try {
        id = static_cast<std::uint32_t>(std::stoul(name.substr(1)));
      } catch (const std::exception&) {
        throw UsageError("bad concept handle '" + name + "'");
      }
      return DomainElement::concept_handle(reg.by_id(id).id());
    }
    DomainElement e = DomainElement::particular(name);
    if (worlds && !(*worlds)[0].in_domain(e)) throw DomainError("'" + name + "' is not in the domain");
    return e;
  }

  std::optional<Assignment> assignment() const {
    if (opts.assign.empty()) return std::nullopt;
    Assignment g;
    for (const std::string& item : split_list(opts.assign)) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--assign expects var=element pairs");
      g[item.substr(0, eq)] = element(item.substr(eq + 1));
    }
    return g;
  }
};

struct ParsedInput {
  std::optional<FormulaPtr> formula;
  std::optional<Term> term;
};

// A command argument may be a formula or, failing that, a term.
ParsedInput parse_input(Session& s, const std::string& text) {
  try {
    return {s.formula(text), std::nullopt};
  } catch (const SyntaxError&) {
    try {
      return {std::nullopt, s.term(text)};
    } catch (const SyntaxError&) {
    }
    throw;
  }
}

bool records(const Options& o) { return o.format == "records"; }

// ---------------------------------------------------------------------------

int cmd_parse(const Options& o, std::ostream& out) {
  Session s(o);
  ParsedInput in = parse_input(s, o.text1);
  if (in.formula) {
    const Formula& f = **in.formula;
    if (records(o)) {
      out << field("kind", "formula") << ' ' << field("formula", to_string(f)) << ' '
          << field("free", to_string(free_vars(f))) << '\n';
    } else {
      out << "formula: " << to_string(f) << '\n'
          << "free: " << to_string(free_vars(f)) << '\n'
          << dump_tree(f);
    }
    return kOk;
  }
  const Term& t = *in.term;
  std::string alpha = "()", beta = "()";
  if (const auto* a = std::get_if<Abstraction>(&t)) {
    alpha = to_string(a->alpha);
    beta = to_string(a->beta);
  }
  if (records(o)) {
    out << field("kind", "term") << ' ' << field("term", to_string(t)) << ' ' << field("alpha", alpha)
        << ' ' << field("beta", beta) << ' ' << field("free", to_string(free_vars(t))) << '\n';
  } else {
    out << "term: " << to_string(t) << '\n';
    if (std::holds_alternative<Abstraction>(t)) out << "alpha: " << alpha << '\n' << "beta: " << beta << '\n';
    out << "free: " << to_string(free_vars(t)) << '\n';
    if (const auto* a = std::get_if<Abstraction>(&t)) out << "body:\n" << dump_tree(*a->body);
  }
  return kOk;
}

int cmd_intension(const Options& o, std::ostream& out) {
  Session s(o);
  ParsedInput in = parse_input(s, o.text1);
  Concept u = s.reg.truth();
  if (in.formula) {
    u = interpret(**in.formula, s.reg);
  } else {
    const auto* a = std::get_if<Abstraction>(&*in.term);
    if (!a) throw UsageError("intension expects a formula or an abstraction term");
    if (!a->beta.empty()) {
      // the union over D^beta needs a domain
      s.load_world_files();
      s.enumerate_if_requested();
      u = interpret_abstraction(*a, (*s.worlds)[0], s.reg);
    } else {
      u = interpret(*a->body, s.reg);
    }
  }
  if (records(o)) {
    out << field("concept", to_sexpr(u)) << ' ' << field("id", std::to_string(u.id())) << ' '
        << field("degree", std::to_string(u.degree())) << '\n';
  } else {
    out << "concept: " << to_sexpr(u) << '\n'
        << "id: " << u.id() << '\n'
        << "degree: " << u.degree() << '\n';
  }
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  Session s(o);
  s.load_world_files();
  ParsedInput in = parse_input(s, o.text1);
  s.enumerate_if_requested();
  const std::optional<Assignment> g = s.assignment();
  const std::vector<std::size_t> chosen = s.selected_worlds();
  const bool many = chosen.size() > 1;

  for (std::size_t wi : chosen) {
    const World& w = (*s.worlds)[wi];
    EvalContext ctx(s.reg, w, s.worlds.get());
    std::optional<bool> truth;
    std::optional<Relation> rel;

    if (in.formula) {
      if (g) {
        truth = ctx.extension(interpret(*ground(*in.formula, *g), s.reg)).is_truth();
      } else {
        rel = ctx.extension(interpret(**in.formula, s.reg)).with_attrs(free_vars(**in.formula));
      }
    } else {
      const auto* a = std::get_if<Abstraction>(&*in.term);
      if (!a) {
        // a plain term evaluates to its denotation
        const DomainElement e = assignment_extend(*in.term, g.value_or(Assignment{}), w, s.reg);
        if (records(o)) {
          out << field("world", w.name()) << ' ' << field("element", e.to_string()) << '\n';
        } else {
          out << (many ? "world " + w.name() + ": " : "") << e.to_string() << '\n';
        }
        continue;
      }
      Concept u = s.reg.truth();
      FormulaPtr body = a->body;
      if (g && !a->beta.empty()) {
        Tuple values;
        for (const std::string& v : a->beta) {
          auto it = g->find(v);
          if (it == g->end()) throw AssignmentError("assignment does not bind beta variable '" + v + "'");
          values.push_back(it->second);
        }
        body = substitute_elements(a->body, a->beta, values);
        u = interpret(*body, s.reg);
      } else {
        u = interpret_abstraction(*a, w, s.reg);
      }
      VarTuple labels;
      for (const std::string& v : free_vars(*a->body)) {
        if (std::find(a->beta.begin(), a->beta.end(), v) == a->beta.end()) labels.push_back(v);
      }
      rel = ctx.extension(u).with_attrs(labels);
    }
    if (rel && rel->arity() == 0) {
      truth = rel->is_truth();
      rel.reset();
    }

    if (records(o)) {
      out << field("world", w.name()) << ' ';
      if (truth) {
        out << field("value", *truth ? "t" : "f") << '\n';
      } else {
        out << field("arity", std::to_string(rel->arity())) << ' '
            << field("attrs", to_string(rel->attrs().value_or(VarTuple{}))) << ' '
            << field("tuples", tuples_text(*rel)) << '\n';
      }
    } else {
      if (many) out << "world " << w.name() << ":\n";
      if (truth) {
        out << (*truth ? "t" : "f") << '\n';
      } else {
        out << format_relation(*rel);
      }
    }
  }
  if (!records(o) && (many || s.worlds->size() > 1)) {
    out << "relative to " << s.worlds->size() << " worlds\n";
  }
  return kOk;
}

struct Corpus {
  std::vector<FormulaPtr> formulas;
  std::vector<std::string> texts;
};

Corpus load_corpus(Session& s) {
  const Options& o = s.opts;
  Corpus c;
  if (!o.corpus.empty()) {
    std::istringstream in(read_file(o.corpus));
    std::size_t number = 0;
    for (std::string line; std::getline(in, line);) {
      ++number;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
      // `#` followed by a space (or alone) starts a comment; `#a` is an element
      if (line == "#" || line.rfind("# ", 0) == 0) continue;
      try {
        c.formulas.push_back(s.formula(line));
      } catch (const Error& e) {
        throw Error(o.corpus + ":" + std::to_string(number) + ": " + e.what());
      }
      c.texts.push_back(line);
    }
  }
  return c;
}

void add_random(Session& s, Corpus& c) {
  const Options& o = s.opts;
  if (o.random == 0) return;
  GeneratorOptions gen;
  gen.max_depth = o.depth;
  gen.abstraction_prob = o.abstraction_prob;
  for (const DomainElement& e : s.worlds->domain()) {
    if (e.is_particular()) gen.elements.push_back(e.name());
  }
  for (const auto& [name, value] : (*s.worlds)[0].constants()) gen.constants.push_back(name);
  Signature pool;
  for (const PredicateSymbol& p : s.sig.predicates()) pool.add_predicate(p.name, p.arity);
  for (const std::string& k : gen.constants) pool.add_constant(k);
  for (FormulaPtr& f : random_formulas(pool, gen, o.seed, o.random)) {
    c.texts.push_back(to_string(*f));
    c.formulas.push_back(std::move(f));
  }
}

Relation toggle_first_tuple(const Relation& r, const std::vector<DomainElement>& domain) {
  const Tuple first = all_tuples(domain, r.arity()).front();
  Relation out(r.arity(), r.attrs());
  for (const Tuple& t : r.tuples()) {
    if (t != first) out.insert(t);
  }
  if (!r.contains(first)) out.insert(first);
  return out;
}

int run_sweep(const Options& o, std::ostream& out, bool diagram) {
  Session s(o);
  s.load_world_files();
  Corpus c = load_corpus(s);
  s.enumerate_if_requested();
  add_random(s, c);
  if (c.formulas.empty()) throw UsageError("no formulas: give a corpus file and/or --random N");

  SweepOptions sweep;
  sweep.threads = o.threads;
  if (o.corrupt) {
    const std::vector<DomainElement> dom = s.worlds->domain();
    sweep.tamper = [dom](const Relation& r) { return toggle_first_tuple(r, dom); };
  }
  const SweepReport report = diagram ? diagram_sweep(c.formulas, *s.worlds, s.reg, sweep)
                                     : constraint_sweep(c.formulas, *s.worlds, s.reg, sweep);
  const char* name = diagram ? "diagram" : "constraint";

  for (std::size_t i = 0; i < c.formulas.size(); ++i) {
    const FormulaOutcome& fo = report.formulas[i];
    std::string witness;
    if (fo.failure) {
      if (diagram) {
        witness = fo.failure->arity_mismatch ? "arity" : tuple_text(fo.failure->witness);
      } else {
        const VarTuple fv = free_vars(*c.formulas[i]);
        for (std::size_t k = 0; k < fv.size(); ++k) {
          witness += (k ? "," : "") + fv[k] + "=" + fo.failure->witness[k].to_string();
        }
        witness = "{" + witness + "}";
      }
    }
    const std::string world = fo.failure ? (*s.worlds)[fo.failure->world].name() : "";
    if (records(o)) {
      out << field("check", name) << ' ' << field("index", std::to_string(i)) << ' '
          << field("status", fo.failure ? "fail" : "pass") << ' ' << field("checks", std::to_string(fo.checks));
      if (fo.failure) {
        out << ' ' << field("world", world) << ' ' << field("witness", witness) << ' '
            << field("failed_worlds", std::to_string(fo.failed_worlds));
        if (diagram && !fo.failure->arity_mismatch) {
          out << ' ' << field("side", fo.failure->witness_in_tarski ? "tarski" : "algebraic");
        }
      }
      out << ' ' << field("formula", c.texts[i]) << '\n';
    } else if (fo.failure) {
      out << "FAIL [" << i << "] " << c.texts[i] << "\n  world " << world << ", witness " << witness;
      if (diagram && !fo.failure->arity_mismatch) {
        out << (fo.failure->witness_in_tarski ? " (only in the Tarski extension)"
                                              : " (only in the algebraic extension)");
      }
      out << ", failing in " << fo.failed_worlds << " of " << s.worlds->size() << " worlds\n";
    }
  }

  if (records(o)) {
    out << field("summary", name) << ' ' << field("formulas", std::to_string(c.formulas.size())) << ' '
        << field("worlds", std::to_string(s.worlds->size())) << ' '
        << field("checks", std::to_string(report.checks)) << ' '
        << field("failures", std::to_string(report.failures)) << '\n';
  } else {
    out << name << ": " << c.formulas.size() << " formulas x " << s.worlds->size() << " worlds, "
        << report.checks << " checks, " << report.failures << " failures\n";
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  if (o.strong && o.weak) throw UsageError("give at most one of --strong and --weak");
  Session s(o);
  s.load_world_files();
  Abstraction t1 = s.abstraction(o.text1);
  Abstraction t2 = s.abstraction(o.text2);
  s.enumerate_if_requested();
  const Assignment g = s.assignment().value_or(Assignment{});
  const bool weak = o.weak;
  const EquivalenceResult r = weak ? weak_equiv(t1, t2, g, *s.worlds, s.reg)
                                   : strong_equiv(t1, t2, g, *s.worlds, s.reg);
  const std::string mode = weak ? "weak" : "strong";
  const std::string concepts = r.concepts_identical ? "identical" : "distinct";

  if (records(o)) {
    out << field("verdict", r.equivalent ? "equivalent" : "not-equivalent") << ' ' << field("mode", mode) << ' '
        << field("concepts", concepts) << ' ' << field("worlds", std::to_string(s.worlds->size()));
    if (r.witness_world) out << ' ' << field("witness_world", *r.witness_world);
    if (r.witness_tuple) out << ' ' << field("witness_tuple", tuple_text(*r.witness_tuple));
    out << '\n';
  } else {
    if (r.equivalent) {
      out << "equivalent (" << mode << ")";
    } else {
      std::string witness;
      if (r.witness_world) witness = "world " + *r.witness_world + ", ";
      if (r.witness_tuple) witness += "tuple " + tuple_text(*r.witness_tuple);
      out << "not equivalent (" << mode << "; witness: " << witness << ")";
    }
    out << "; concepts " << concepts << '\n' << "relative to " << s.worlds->size() << " worlds\n";
  }
  return r.equivalent ? kOk : kCheckFailed;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.sig_path.empty()) throw UsageError("worlds enumerate needs --sig");
  if (o.domain.empty()) throw UsageError("worlds enumerate needs --domain");
  Options e = o;
  e.enumerate = true;
  Session s(e);
  s.load_world_files();
  s.enumerate_if_requested();
  if (records(o)) {
    for (const World& w : s.worlds->worlds()) {
      out << field("world", w.name());
      for (const auto& [p, r] : w.relations()) out << ' ' << field(p.to_string(), tuples_text(r));
      out << '\n';
    }
  } else {
    out << "# " << s.worlds->size() << " worlds\n" << format_world_set(*s.worlds);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

void add_sig(CLI::App* app, Options& o) {
  app->add_option("--sig", o.sig_path, "Signature file (pred p/n, const c, var v); inferred when absent")
      ->check(CLI::ExistingFile);
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();
}

void add_worlds(CLI::App* app, Options& o) {
  app->add_option("--world", o.world_path, "World file")->check(CLI::ExistingFile);
  app->add_option("--worlds", o.worlds_path, "World-set file")->check(CLI::ExistingFile);
  app->add_flag("--enumerate", o.enumerate, "Use every world over --domain for the signature");
  app->add_option("--domain", o.domain, "Particulars for --enumerate, e.g. a,b");
  app->add_option("--const", o.consts, "Constant denotation for --enumerate, e.g. c=a");
  app->add_option("--limit", o.limit, "Maximum number of enumerated worlds")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Intensional first-order logic with the abstraction operator", "ifol"};
  app.require_subcommand(1);

  auto* parse = app.add_subcommand("parse", "Parse and print the desugared formula and its free variables");
  parse->add_option("formula", o.text1, "Formula or term")->required();
  add_sig(parse, o);
  add_format(parse, o);

  auto* intension = app.add_subcommand("intension", "Compile a formula to its concept");
  intension->add_option("formula", o.text1, "Formula or abstraction term")->required();
  add_sig(intension, o);
  add_format(intension, o);
  add_worlds(intension, o);

  auto* eval = app.add_subcommand("eval", "Evaluate a formula or term in a world");
  eval->add_option("formula", o.text1, "Formula or term")->required();
  add_sig(eval, o);
  add_format(eval, o);
  add_worlds(eval, o);
  eval->add_option("--assign", o.assign, "Variable assignment, e.g. x=a,y=b");
  eval->add_option("--at", o.at_world, "Only this world of the set");

  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("corpus", o.corpus, "Formula file, one per line")->check(CLI::ExistingFile);
    add_sig(sub, o);
    add_format(sub, o);
    add_worlds(sub, o);
    sub->add_option("--random", o.random, "Also check N random formulas");
    sub->add_option("--depth", o.depth, "Maximum depth of random formulas")->capture_default_str();
    sub->add_option("--abstraction-prob", o.abstraction_prob, "Chance that an argument is an abstraction")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Random generator seed")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
    sub->add_flag("--corrupt-evaluator", o.corrupt)->group("");
  };
  auto* diagram = app.add_subcommand("check-diagram", "Compare Tarski and algebraic extensions");
  add_sweep(diagram);
  auto* constraint = app.add_subcommand("check-constraint", "Check h(I(phi/g)) = t iff g(x) in h(I(phi))");
  add_sweep(constraint);

  auto* equiv = app.add_subcommand("equiv", "Decide intensional equivalence of two abstraction terms");
  equiv->add_option("term1", o.text1, "First abstraction term")->required();
  equiv->add_option("term2", o.text2, "Second abstraction term")->required();
  add_sig(equiv, o);
  add_format(equiv, o);
  add_worlds(equiv, o);
  equiv->add_option("--assign", o.assign, "Values for the beta variables, e.g. y=a");
  equiv->add_flag("--strong", o.strong, "Equal extensions in every world (default)");
  equiv->add_flag("--weak", o.weak, "Equal diamond extensions");

  auto* worlds = app.add_subcommand("worlds", "World-set utilities");
  worlds->require_subcommand(1);
  auto* enumerate = worlds->add_subcommand("enumerate", "Print every world over a domain");
  add_sig(enumerate, o);
  add_format(enumerate, o);
  enumerate->add_option("--domain", o.domain, "Particulars, e.g. a,b");
  enumerate->add_option("--const", o.consts, "Constant denotation, e.g. c=a");
  enumerate->add_option("--limit", o.limit, "Maximum number of worlds")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*parse) return cmd_parse(o, out);
    if (*intension) return cmd_intension(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*diagram) return run_sweep(o, out, true);
    if (*constraint) return run_sweep(o, out, false);
    if (*equiv) return cmd_equiv(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ifol::cli
