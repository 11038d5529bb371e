#include "ifol/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ifol/error.hpp"

namespace ifol {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error("world file line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Everything a world file may declare before (or outside) its relations.
struct Preamble {
  std::optional<std::vector<DomainElement>> domain;
  std::map<std::string, DomainElement> names;  // particulars and reify aliases
  std::map<std::string, DomainElement> constants;
  std::vector<DomainElement> reified;
};

struct Reader {
  ConceptRegistry& reg;
  const Signature* sig;
  Signature inferred;

  DomainElement element(const Preamble& pre, const std::string& token, std::size_t line) {
    if (auto it = pre.names.find(token); it != pre.names.end()) return it->second;
    if (token.size() > 1 && token[0] == '@' &&
        std::all_of(token.begin() + 1, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const auto id = static_cast<std::uint32_t>(std::stoul(token.substr(1)));
      try {
        return DomainElement::concept_handle(reg.by_id(id).id());
      } catch (const Error& e) {
        fail(line, e.what());
      }
    }
    fail(line, "unknown element '" + token + "'");
  }

  // Returns true when the line was a preamble line.
  bool preamble_line(Preamble& pre, const std::string& keyword, const std::string& rest,
                     std::size_t line) {
    if (keyword == "domain") {
      std::vector<DomainElement> dom;
      for (const std::string& w : words(rest)) {
        if (w[0] == '@') {
          dom.push_back(element(pre, w, line));
          continue;
        }
        if (w == "<>" || w[0] == '#' || w.find_first_of("(),=") != std::string::npos) {
          fail(line, "invalid particular name '" + w + "'");
        }
        DomainElement e = DomainElement::particular(w);
        dom.push_back(e);
        pre.names[w] = e;
      }
      if (dom.empty()) fail(line, "domain must not be empty");
      if (pre.domain) {
        std::vector<DomainElement> a = *pre.domain, b = dom;
        // domain lines after the first must agree with it
        auto canonical = [](std::vector<DomainElement> v) {
          std::sort(v.begin(), v.end());
          v.erase(std::unique(v.begin(), v.end()), v.end());
          return v;
        };
        if (canonical(a) != canonical(b)) fail(line, "domain differs from the shared domain");
        return true;
      }
      pre.domain = dom;
      return true;
    }
    if (keyword == "reify") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) fail(line, "expected 'reify <name> = <abstraction>'");
      const std::string name = trim(std::string_view(rest).substr(0, eq));
      if (name.empty() || words(name).size() != 1) fail(line, "bad reify name");
      if (pre.names.count(name)) fail(line, "name '" + name + "' is already defined");
      Term t = sig ? parse_term(rest.substr(eq + 1), *sig) : parse_term_inferring(rest.substr(eq + 1), inferred);
      const auto* abs = std::get_if<Abstraction>(&t);
      if (!abs) fail(line, "reify expects an abstraction term");
      if (!abs->beta.empty()) fail(line, "reified abstraction must have no beta variables");
      DomainElement e = DomainElement::concept_handle(interpret(*abs->body, reg).id());
      pre.names[name] = e;
      pre.reified.push_back(e);
      return true;
    }
    if (keyword == "const") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) fail(line, "expected 'const <name> = <element>'");
      const std::string name = trim(std::string_view(rest).substr(0, eq));
      const std::string value = trim(std::string_view(rest).substr(eq + 1));
      if (name.empty() || value.empty()) fail(line, "expected 'const <name> = <element>'");
      if (sig && !sig->is_constant(name)) fail(line, "constant '" + name + "' is not declared in the signature");
      if (pre.constants.count(name)) fail(line, "constant '" + name + "' defined twice");
      pre.constants[name] = element(pre, value, line);
      return true;
    }
    return false;
  }

  void rel_line(const Preamble& pre, std::map<PredicateSymbol, Relation>& rels, const std::string& rest,
                std::size_t line) {
    // the name may itself contain '=' (as in ==/2), so look after the slash
    const auto eq = rest.find('=', std::min(rest.find('/'), rest.size()));
    if (eq == std::string::npos) fail(line, "expected 'rel <name>/<arity> = (..) ..'");
    const std::string head = trim(std::string_view(rest).substr(0, eq));
    const auto slash = head.rfind('/');
    if (slash == std::string::npos || slash == 0) fail(line, "expected '<name>/<arity>' in rel line");
    PredicateSymbol p{head.substr(0, slash), 0};
    try {
      std::size_t used = 0;
      p.arity = std::stoul(head.substr(slash + 1), &used);
      if (used != head.size() - slash - 1) throw std::invalid_argument("arity");
    } catch (const std::exception&) {
      fail(line, "bad arity in '" + head + "'");
    }
    if (is_builtin(p)) fail(line, "predicate " + p.to_string() + " is built in and must not be declared");
    if (sig && !sig->has_predicate(p.name, p.arity)) {
      fail(line, "predicate " + p.to_string() + " is not declared in the signature");
    }
    if (rels.count(p)) fail(line, "relation " + p.to_string() + " defined twice");

    Relation r(p.arity);
    std::string_view body = std::string_view(rest).substr(eq + 1);
    std::size_t i = 0;
    while (true) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i == body.size()) break;
      if (body[i] != '(') fail(line, "expected '(' to start a tuple");
      const auto close = body.find(')', i);
      if (close == std::string_view::npos) fail(line, "unterminated tuple");
      const std::string inner = trim(body.substr(i + 1, close - i - 1));
      Tuple t;
      if (!inner.empty()) {
        std::stringstream parts(inner);
        for (std::string item; std::getline(parts, item, ',');) t.push_back(element(pre, trim(item), line));
      }
      if (t.size() != p.arity) {
        fail(line, "tuple of length " + std::to_string(t.size()) + " for " + p.to_string());
      }
      r.insert(std::move(t));
      i = close + 1;
    }
    rels.emplace(p, std::move(r));
  }

  World build(const Preamble& pre, std::map<PredicateSymbol, Relation> rels, std::string name,
              std::size_t line) {
    if (!pre.domain) fail(line, "missing 'domain' line");
    if (sig) {
      for (const PredicateSymbol& p : sig->predicates()) rels.try_emplace(p, Relation(p.arity));
    }
    std::vector<DomainElement> dom = *pre.domain;
    dom.insert(dom.end(), pre.reified.begin(), pre.reified.end());
    try {
      return World(std::move(name), std::move(dom), pre.constants, std::move(rels));
    } catch (const Error& e) {
      fail(line, e.what());
    }
  }
};

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      // `#` inside a reify formula is an element literal, not a comment
      const std::string head = trim(raw);
      if (head.rfind("reify", 0) != 0 || trim(raw.substr(0, hash)).empty()) raw = raw.substr(0, hash);
    }
    std::string content = trim(raw);
    if (!content.empty()) {
      const auto sp = content.find_first_of(" \t");
      Line l{number, content.substr(0, sp), sp == std::string::npos ? "" : trim(std::string_view(content).substr(sp))};
      out.push_back(std::move(l));
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace

World parse_world(std::string_view text, ConceptRegistry& reg, const Signature* sig, std::string name) {
  Reader reader{reg, sig, {}};
  Preamble pre;
  std::map<PredicateSymbol, Relation> rels;
  std::size_t last = 0;
  for (const Line& l : split_lines(text)) {
    last = l.number;
    if (reader.preamble_line(pre, l.keyword, l.rest, l.number)) continue;
    if (l.keyword == "rel") {
      if (!pre.domain) fail(l.number, "'domain' must come before relations");
      reader.rel_line(pre, rels, l.rest, l.number);
      continue;
    }
    fail(l.number, "unknown directive '" + l.keyword + "'");
  }
  return reader.build(pre, std::move(rels), std::move(name), last);
}

WorldSet parse_world_set(std::string_view text, ConceptRegistry& reg, const Signature* sig) {
  Reader reader{reg, sig, {}};
  Preamble shared;
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines.front().keyword != "worlds" || !lines.front().rest.empty()) {
    fail(lines.empty() ? 1 : lines.front().number, "world-set file must start with 'worlds'");
  }

  std::vector<World> worlds;
  std::optional<std::string> current;
  std::size_t start = 0;
  std::map<PredicateSymbol, Relation> rels;
  Preamble local;
  auto finish = [&] {
    if (current) worlds.push_back(reader.build(local, std::move(rels), *current, start));
    rels.clear();
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.keyword == "world") {
      finish();
      if (l.rest.empty() || words(l.rest).size() != 1) fail(l.number, "expected 'world <name>'");
      if (!shared.domain) fail(l.number, "the shared 'domain' line must precede the worlds");
      current = l.rest;
      start = l.number;
      local = shared;
      continue;
    }
    if (!current) {
      if (reader.preamble_line(shared, l.keyword, l.rest, l.number)) continue;
      if (l.keyword == "rel") fail(l.number, "relations belong inside a 'world' block");
      fail(l.number, "unknown directive '" + l.keyword + "'");
    }
    if (l.keyword == "domain") {
      reader.preamble_line(local, l.keyword, l.rest, l.number);
      continue;
    }
    if (l.keyword == "const" || l.keyword == "reify") {
      fail(l.number, "'" + l.keyword + "' must appear in the shared preamble");
    }
    if (l.keyword == "rel") {
      reader.rel_line(local, rels, l.rest, l.number);
      continue;
    }
    fail(l.number, "unknown directive '" + l.keyword + "'");
  }
  finish();
  if (worlds.empty()) fail(lines.back().number, "world-set file declares no worlds");
  return WorldSet(std::move(worlds));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

World load_world(const std::string& path, ConceptRegistry& reg, const Signature* sig) {
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.find('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_world(read_file(path), reg, sig, name);
}

WorldSet load_world_set(const std::string& path, ConceptRegistry& reg, const Signature* sig) {
  return parse_world_set(read_file(path), reg, sig);
}

namespace {

std::string preamble_text(const World& w) {
  std::string out = "domain";
  for (const DomainElement& e : w.domain()) out += " " + e.to_string();
  out += "\n";
  for (const auto& [name, value] : w.constants()) out += "const " + name + " = " + value.to_string() + "\n";
  return out;
}

std::string relations_text(const World& w) {
  std::string out;
  for (const auto& [p, r] : w.relations()) {
    out += "rel " + p.to_string() + " =";
    for (const Tuple& t : r.tuples()) {
      out += " (";
      for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i].to_string();
      out += ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string format_world(const World& w, bool with_preamble) {
  return (with_preamble ? preamble_text(w) : std::string()) + relations_text(w);
}

std::string format_world_set(const WorldSet& ws) {
  std::string out = "worlds\n" + preamble_text(ws[0]);
  for (const World& w : ws.worlds()) out += "world " + w.name() + "\n" + relations_text(w);
  return out;
}

Signature signature_of(const World& w) {
  Signature sig;
  for (const auto& [p, r] : w.relations()) sig.add_predicate(p.name, p.arity);
  for (const auto& [name, value] : w.constants()) sig.add_constant(name);
  return sig;
}

}  // namespace ifol
