#include "ifol/relalg.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "ifol/error.hpp"

namespace ifol {

DomainElement DomainElement::particular(std::string name) {
  DomainElement e;
  e.kind_ = Kind::Particular;
  e.name_ = std::move(name);
  return e;
}

DomainElement DomainElement::concept_handle(std::uint32_t id) {
  DomainElement e;
  e.kind_ = Kind::Concept;
  e.concept_id_ = id;
  return e;
}

std::string DomainElement::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "<>";
    case Kind::Particular:
      return name_;
    case Kind::Concept:
      return "@" + std::to_string(concept_id_);
  }
  return {};
}

std::strong_ordering operator<=>(const DomainElement& a, const DomainElement& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case DomainElement::Kind::Empty:
      return std::strong_ordering::equal;
    case DomainElement::Kind::Particular:
      return a.name_.compare(b.name_) <=> 0;
    case DomainElement::Kind::Concept:
      return a.concept_id_ <=> b.concept_id_;
  }
  return std::strong_ordering::equal;
}

namespace {

void check_labels(const VarTuple& attrs, std::size_t arity) {
  if (attrs.size() != arity) {
    throw Error("relation has arity " + std::to_string(arity) + " but " +
                std::to_string(attrs.size()) + " attribute labels");
  }
  VarTuple sorted = attrs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("relation attribute labels must be distinct");
  }
}

bool labels_distinct(const VarTuple& attrs) {
  VarTuple sorted = attrs;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

Relation::Relation(std::size_t arity, std::optional<VarTuple> attrs)
    : arity_(arity), attrs_(std::move(attrs)) {
  if (attrs_) check_labels(*attrs_, arity_);
  // a truth value has no columns to label
  if (arity_ == 0) attrs_.reset();
}

Relation Relation::falsity() { return Relation(0); }

Relation Relation::truth() {
  Relation r(0);
  r.insert({});
  return r;
}

void Relation::insert(Tuple t) {
  if (t.size() != arity_) {
    throw Error("tuple of length " + std::to_string(t.size()) + " inserted into relation of arity " +
                std::to_string(arity_));
  }
  tuples_.insert(std::move(t));
}

Relation Relation::with_attrs(VarTuple attrs) const {
  check_labels(attrs, arity_);
  Relation r = *this;
  if (arity_ > 0) r.attrs_ = std::move(attrs);
  return r;
}

Relation Relation::without_attrs() const {
  Relation r = *this;
  r.attrs_.reset();
  return r;
}

bool same_extension(const Relation& a, const Relation& b) {
  return a.arity() == b.arity() && a.tuples() == b.tuples();
}

std::vector<Tuple> all_tuples(std::span<const DomainElement> domain, std::size_t k) {
  std::vector<DomainElement> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<Tuple> out;
  if (k > 0 && sorted.empty()) return out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Tuple t;
    t.reserve(k);
    for (std::size_t i : idx) t.push_back(sorted[i]);
    out.push_back(std::move(t));
    // odometer, last column fastest
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < sorted.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

bool join_pairs_valid(const ColumnPairs& s, std::size_t k, std::size_t j) {
  if (s.empty()) return false;
  std::set<std::size_t> right;
  for (const auto& [i1, i2] : s) {
    if (i1 < 1 || i1 > k || i2 < 1 || i2 > j) return false;
    if (!right.insert(i2).second) return false;
  }
  return true;
}

std::size_t joined_arity(const ColumnPairs& s, std::size_t k, std::size_t j) {
  return join_pairs_valid(s, k, j) ? k + j - s.size() : k + j;
}

Relation natural_join(const Relation& r1, const Relation& r2, const ColumnPairs& s) {
  const std::size_t k = r1.arity();
  const std::size_t j = r2.arity();
  const bool valid = join_pairs_valid(s, k, j);

  std::vector<bool> joined_right(j, false);
  if (valid) {
    for (const auto& [i1, i2] : s) joined_right[i2 - 1] = true;
  }
  std::vector<std::size_t> kept_right;
  for (std::size_t c = 0; c < j; ++c) {
    if (!joined_right[c]) kept_right.push_back(c);
  }

  std::optional<VarTuple> attrs;
  if (r1.attrs() && r2.attrs()) {
    VarTuple labels = *r1.attrs();
    for (std::size_t c : kept_right) labels.push_back((*r2.attrs())[c]);
    if (labels_distinct(labels)) attrs = std::move(labels);
  }

  Relation out(k + kept_right.size(), std::move(attrs));
  if (r1.empty() || r2.empty()) return out;

  if (!valid) {
    for (const Tuple& a : r1.tuples()) {
      for (const Tuple& b : r2.tuples()) {
        Tuple t = a;
        t.insert(t.end(), b.begin(), b.end());
        out.insert(std::move(t));
      }
    }
    return out;
  }

  // hash-free join: bucket r2 by its joined key
  std::vector<std::pair<std::size_t, std::size_t>> pairs(s.begin(), s.end());
  std::map<Tuple, std::vector<const Tuple*>> buckets;
  for (const Tuple& b : r2.tuples()) {
    Tuple key;
    key.reserve(pairs.size());
    for (const auto& p : pairs) key.push_back(b[p.second - 1]);
    buckets[std::move(key)].push_back(&b);
  }
  for (const Tuple& a : r1.tuples()) {
    Tuple key;
    key.reserve(pairs.size());
    for (const auto& p : pairs) key.push_back(a[p.first - 1]);
    auto it = buckets.find(key);
    if (it == buckets.end()) continue;
    for (const Tuple* b : it->second) {
      Tuple t = a;
      for (std::size_t c : kept_right) t.push_back((*b)[c]);
      out.insert(std::move(t));
    }
  }
  return out;
}

Relation complement(const Relation& r, std::span<const DomainElement> domain) {
  std::set<DomainElement> members(domain.begin(), domain.end());
  for (const Tuple& t : r.tuples()) {
    for (const DomainElement& e : t) {
      if (!members.count(e)) {
        throw DomainError("complement: element '" + e.to_string() + "' is outside the domain");
      }
    }
  }
  Relation out(r.arity(), r.attrs());
  for (Tuple& t : all_tuples(domain, r.arity())) {
    if (!r.contains(t)) out.insert(std::move(t));
  }
  return out;
}

Relation f_truth(const Relation& r) {
  std::optional<VarTuple> attrs;
  if (r.attrs()) attrs = VarTuple{};
  Relation out(0, std::move(attrs));
  if (!r.empty()) out.insert({});
  return out;
}

Relation project_out(const Relation& r, std::size_t m) {
  const std::size_t k = r.arity();
  if (m == 1 && k == 1) return f_truth(r);
  if (m < 1 || m > k || k < 2) return r;

  std::optional<VarTuple> attrs;
  if (r.attrs()) {
    VarTuple labels = *r.attrs();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(m - 1));
    attrs = std::move(labels);
  }
  Relation out(k - 1, std::move(attrs));
  for (const Tuple& t : r.tuples()) {
    Tuple reduced = t;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(m - 1));
    out.insert(std::move(reduced));
  }
  return out;
}

Relation project_out_many(const Relation& r, std::span<const std::string> beta) {
  if (beta.empty()) return r;
  if (!r.attrs()) throw Error("project_out_many needs a labelled relation");
  const VarTuple& labels = *r.attrs();

  std::vector<bool> drop(labels.size(), false);
  for (const std::string& name : beta) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) {
      throw Error("project_out_many: no column labelled '" + name + "'");
    }
    drop[static_cast<std::size_t>(it - labels.begin())] = true;
  }

  std::vector<std::size_t> keep;
  VarTuple kept_labels;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    if (!drop[c]) {
      keep.push_back(c);
      kept_labels.push_back(labels[c]);
    }
  }
  if (keep.empty()) return f_truth(r);

  Relation out(keep.size(), std::move(kept_labels));
  for (const Tuple& t : r.tuples()) {
    Tuple reduced;
    reduced.reserve(keep.size());
    for (std::size_t c : keep) reduced.push_back(t[c]);
    out.insert(std::move(reduced));
  }
  return out;
}

Relation identity_relation(std::span<const DomainElement> domain) {
  Relation out(2);
  for (const DomainElement& d : domain) out.insert({d, d});
  return out;
}

Relation permute_to(const Relation& r, std::span<const std::string> order) {
  if (r.arity() == 0 && order.empty()) return r;
  if (!r.attrs()) throw Error("permute_to needs a labelled relation");
  const VarTuple& labels = *r.attrs();
  if (order.size() != labels.size()) {
    throw Error("permute_to: label count differs from arity");
  }
  std::vector<std::size_t> source;
  for (const std::string& name : order) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw Error("permute_to: no column labelled '" + name + "'");
    source.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  Relation out(r.arity(), VarTuple(order.begin(), order.end()));
  for (const Tuple& t : r.tuples()) {
    Tuple p;
    p.reserve(source.size());
    for (std::size_t c : source) p.push_back(t[c]);
    out.insert(std::move(p));
  }
  return out;
}

bool rel_equiv(const Relation& r1, const Relation& r2) {
  if (r1.arity() == 0 && r2.arity() == 0) return r1.tuples() == r2.tuples();
  if (!r1.attrs() || !r2.attrs()) throw Error("rel_equiv needs labelled relations");
  VarTuple a = *r1.attrs();
  VarTuple b = *r2.attrs();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error("rel_equiv: relations are labelled by different variable sets");
  return permute_to(r2, *r1.attrs()).tuples() == r1.tuples();
}

Relation set_union(const Relation& a, const Relation& b) {
  if (a.arity() != b.arity()) throw Error("set_union: arity mismatch");
  Relation out = a;
  for (const Tuple& t : b.tuples()) out.insert(t);
  return out;
}

Relation set_intersection(const Relation& a, const Relation& b) {
  if (a.arity() != b.arity()) throw Error("set_intersection: arity mismatch");
  Relation out(a.arity(), a.attrs());
  for (const Tuple& t : a.tuples()) {
    if (b.contains(t)) out.insert(t);
  }
  return out;
}

std::string format_relation(const Relation& r) {
  std::ostringstream os;
  os << "rel " << r.arity();
  if (r.attrs()) {
    for (const std::string& a : *r.attrs()) os << ' ' << a;
  }
  os << '\n';
  for (const Tuple& t : r.tuples()) {
    if (t.empty()) {
      os << "()\n";
      continue;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) os << ' ';
      os << t[i].to_string();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string word;
  while (is >> word) out.push_back(word);
  return out;
}

DomainElement parse_element(const std::string& word) {
  if (word.size() > 1 && word[0] == '@') {
    std::uint32_t id = 0;
    auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(), id);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw Error("bad concept handle '" + word + "'");
    }
    return DomainElement::concept_handle(id);
  }
  if (word == "<>") return DomainElement::empty();
  return DomainElement::particular(word);
}

}  // namespace

Relation parse_relation(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<Relation> out;
  while (std::getline(is, line)) {
    auto words = split_ws(line);
    if (words.empty()) continue;
    if (!out) {
      if (words[0] != "rel" || words.size() < 2) throw Error("relation text must start with 'rel <arity>'");
      std::size_t arity = 0;
      auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), arity);
      if (ec != std::errc() || ptr != words[1].data() + words[1].size()) {
        throw Error("bad arity '" + words[1] + "'");
      }
      std::optional<VarTuple> attrs;
      if (words.size() > 2) attrs = VarTuple(words.begin() + 2, words.end());
      out.emplace(arity, std::move(attrs));
      continue;
    }
    if (words.size() == 1 && words[0] == "()") {
      out->insert({});
      continue;
    }
    Tuple t;
    for (const std::string& w : words) t.push_back(parse_element(w));
    out->insert(std::move(t));
  }
  if (!out) throw Error("empty relation text");
  return *out;
}

}  // namespace ifol
