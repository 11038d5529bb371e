#pragma once

// Textual world and world-set files.
//
//   # comment
//   domain a b c
//   reify k = << p(x) >>_{x}
//   const c = a
//   rel p/2 = (a,b) (b,b)
//   rel r/0 = ()
//
// A world-set file starts with a `worlds` line, then the shared `domain`,
// `reify` and `const` lines, then one `world <name>` block per world holding
// its `rel` lines.

#include <string>
#include <string_view>

#include "ifol/concepts.hpp"
#include "ifol/semantics.hpp"
#include "ifol/syntax.hpp"
#include "ifol/worlds.hpp"

namespace ifol {

/// When `sig` is given, `rel` lines must use declared predicates and the
/// predicates not mentioned get an empty extension. Without it reified terms
/// are parsed with an inferred signature.
World parse_world(std::string_view text, ConceptRegistry& reg, const Signature* sig = nullptr,
                  std::string name = "w");
World load_world(const std::string& path, ConceptRegistry& reg, const Signature* sig = nullptr);

WorldSet parse_world_set(std::string_view text, ConceptRegistry& reg,
                         const Signature* sig = nullptr);
WorldSet load_world_set(const std::string& path, ConceptRegistry& reg,
                        const Signature* sig = nullptr);

/// Writes world-file syntax. Reified concept handles print as `@id`, which
/// the reader accepts back (in `domain` lines too) for ids already interned.
std::string format_world(const World& w, bool with_preamble = true);
std::string format_world_set(const WorldSet& ws);

/// The predicates and constants a world interprets, minus the builtins.
Signature signature_of(const World& w);

std::string read_file(const std::string& path);

}  // namespace ifol
