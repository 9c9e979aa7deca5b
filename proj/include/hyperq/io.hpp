#ifndef HYPERQ_IO_HPP
#define HYPERQ_IO_HPP

#include <string>
#include <string_view>
#include <utility>

#include "hyperq/fundamental.hpp"
#include "hyperq/ifs.hpp"

namespace hyperq {

// Text formats. UTF-8, LF line endings, `#` starts a comment anywhere on a
// line, blank lines ignored. Indices are 0-based. serialize_* emit the
// canonical form (row-major, cells ascending) and round-trip byte-exactly
// through the parsers. All parsers are total: any input yields a value or
// a ParseError with line/column, never a crash.

/// `hqg <n>` then exactly n^2 lines `i j : k1 k2 ...`, each cell once.
Hypergroupoid parse_hqg(std::string_view text);
std::string serialize_hqg(const Hypergroupoid &h);

/// `ifs <n>` then n lines `i : <mu> <lambda>` with grades as "p/q" or "p".
/// Returns the raw pair; the sum constraint is checked by ifs_validate so
/// violations surface as semantic errors, not parse errors.
std::pair<FuzzySet, FuzzySet> parse_ifs(std::string_view text);
std::string serialize_ifs(const IntuitionisticFuzzySet &a);

/// `qsg <m>` then three m x m blocks labeled `mult`, `ldiv`, `rdiv`.
Quasigroup parse_quasigroup(std::string_view text);
std::string serialize_quasigroup(const Quasigroup &q);

}  // namespace hyperq

#endif
