#pragma once

#include <filesystem>
#include <iosfwd>

#include "gsb/core.hpp"
#include "json.hpp"

namespace gsb {

enum class CodeFormat { text, json };

/// Text form: first non-comment line "q n M", then M rows of n integers.
/// Lines starting with '#' are comments; "# seed: S" and
/// "# construction: NAME" comments populate the metadata.
Code read_code_text(std::istream& in);
void write_code_text(std::ostream& out, const Code& c);

nlohmann::json code_to_json(const Code& c);
Code code_from_json(const nlohmann::json& j);

/// Detects the format from the first non-blank character ('{' means json).
Code load_code(const std::filesystem::path& path);
void save_code(const Code& c, const std::filesystem::path& path, CodeFormat format = CodeFormat::text);

}  // namespace gsb
