#pragma once

#include "mckay/chartable.hpp"

#include <string>
#include <string_view>

namespace mckay {

/// Reads a table from its JSON exchange document:
///
///   { "name": str, "order": int, "characteristic": int?,
///     "lie": {"n", "q", "epsilon": "+"|"-", "rank"}?,
///     "classes": [{"name", "size", "order", "central"?, "support"?,
///                  "image"?, "transvection"?}],
///     "characters": [{"name", "values": [cyclotomic literal, ...]}] }
///
/// Classes missing the "central" flag get it derived from the values. The
/// result is validated unless `validate` is false; failures throw
/// ValidationError, malformed input throws ParseError.
CharacterTable import_table(std::string_view text, bool validate = true);

/// Canonical document for `t`; export_table(import_table(export_table(t)))
/// reproduces the same bytes.
std::string export_table(const CharacterTable& t);

}  // namespace mckay
