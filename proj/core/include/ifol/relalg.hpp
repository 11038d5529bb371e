#pragma once

// Finite relations over a domain of particulars and reified concepts, and the
// relational operators used to extensionalize concepts: natural join on
// column pairs, complement w.r.t. D^k, column elimination and the truth
// collapse f_<>.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ifol {

/// An element of the domain: the distinguished empty tuple <>, a named
/// particular, or a handle to an interned concept.
///
/// Ordering is canonical: <> first, then particulars by name, then concept
/// handles by id.
class DomainElement {
 public:
  enum class Kind : std::uint8_t { Empty = 0, Particular = 1, Concept = 2 };

  DomainElement() = default;

  static DomainElement empty() { return DomainElement(); }
  static DomainElement particular(std::string name);
  static DomainElement concept_handle(std::uint32_t id);

  Kind kind() const noexcept { return kind_; }
  bool is_particular() const noexcept { return kind_ == Kind::Particular; }
  bool is_concept() const noexcept { return kind_ == Kind::Concept; }

  const std::string& name() const noexcept { return name_; }
  std::uint32_t concept_id() const noexcept { return concept_id_; }

  /// `a` for particulars, `@17` for concept handles, `<>` for the empty tuple.
  std::string to_string() const;

  friend bool operator==(const DomainElement&, const DomainElement&) = default;
  friend std::strong_ordering operator<=>(const DomainElement& a, const DomainElement& b);

 private:
  Kind kind_ = Kind::Empty;
  std::string name_;
  std::uint32_t concept_id_ = 0;
};

using Tuple = std::vector<DomainElement>;
using VarTuple = std::vector<std::string>;

/// Pairs (i1, i2) of 1-based column indices joined by natural_join.
using ColumnPairs = std::set<std::pair<std::size_t, std::size_t>>;

class Relation {
 public:
  explicit Relation(std::size_t arity = 0, std::optional<VarTuple> attrs = std::nullopt);

  /// f = {} and t = {<>}.
  static Relation falsity();
  static Relation truth();

  std::size_t arity() const noexcept { return arity_; }
  const std::set<Tuple>& tuples() const noexcept { return tuples_; }
  const std::optional<VarTuple>& attrs() const noexcept { return attrs_; }

  bool empty() const noexcept { return tuples_.empty(); }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool contains(const Tuple& t) const { return tuples_.count(t) != 0; }
  bool is_truth() const noexcept { return arity_ == 0 && !tuples_.empty(); }

  void insert(Tuple t);

  Relation with_attrs(VarTuple attrs) const;
  Relation without_attrs() const;

  /// Arity, tuples and attribute labels all equal. 0-ary relations are
  /// never labelled, so t and f compare equal however they were built.
  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t arity_;
  std::set<Tuple> tuples_;
  std::optional<VarTuple> attrs_;
};

/// Same arity and same tuple set, ignoring labels.
bool same_extension(const Relation& a, const Relation& b);

/// D^k in canonical lexicographic order. D^0 = {<>}.
std::vector<Tuple> all_tuples(std::span<const DomainElement> domain, std::size_t k);

/// True when `s` is non-empty, every pair is in range for arities k and j,
/// and no column of the right relation is joined twice.
bool join_pairs_valid(const ColumnPairs& s, std::size_t k, std::size_t j);
std::size_t joined_arity(const ColumnPairs& s, std::size_t k, std::size_t j);

/// R1 join_S R2. Columns: all of r1, then the unjoined columns of r2. Falls
/// back to the cartesian product when `s` is not valid.
Relation natural_join(const Relation& r1, const Relation& r2, const ColumnPairs& s);

/// D^k \ r. Throws DomainError if r mentions an element outside `domain`.
Relation complement(const Relation& r, std::span<const DomainElement> domain);

/// pi_{-m}: drops column m (1-based) when 1 <= m <= k and k >= 2, collapses to
/// f_<>(r) when m = k = 1, otherwise returns r.
Relation project_out(const Relation& r, std::size_t m);

/// f_<>(r) = t if r is non-empty, f otherwise.
Relation f_truth(const Relation& r);

/// Removes every column labelled by a name in `beta`. Removing all columns
/// yields f_truth(r); an empty `beta` is the identity.
Relation project_out_many(const Relation& r, std::span<const std::string> beta);

/// R_= = {(d, d) | d in domain}.
Relation identity_relation(std::span<const DomainElement> domain);

/// r1 ~= r2: equal after permuting r2's columns to match r1's labels.
/// Throws Error when the label sets differ. Two 0-ary relations need no labels.
bool rel_equiv(const Relation& r1, const Relation& r2);

/// Reorders columns so that the labels read `order`.
Relation permute_to(const Relation& r, std::span<const std::string> order);

Relation set_union(const Relation& a, const Relation& b);
Relation set_intersection(const Relation& a, const Relation& b);

/// Text form: `rel <arity> [attrs...]` then one tuple per line; the empty
/// tuple is written `()`.
std::string format_relation(const Relation& r);
Relation parse_relation(std::string_view text);

}  // namespace ifol
