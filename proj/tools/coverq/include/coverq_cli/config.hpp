#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace coverq::cli {

enum class Format { Text, Json, Tsv };

Format parse_format(std::string_view name);
std::string_view format_name(Format f);

/// The configurable knobs: size guard, worker count, output format.
struct Settings {
  std::uint64_t max_pairs;
  std::size_t jobs;
  Format format;
};

Settings default_settings();

/// Raw values from one source, unparsed so that errors can name the source.
struct SettingLayer {
  std::optional<std::string> max_pairs;
  std::optional<std::string> jobs;
  std::optional<std::string> format;
};

/// `key = value` lines with keys max_pairs, jobs, format; `#` comments.
/// Throws ParseError on unknown keys or malformed lines.
SettingLayer parse_config(std::string_view text);
SettingLayer read_config_file(const std::filesystem::path& path);

/// COVERQ_MAX_PAIRS, COVERQ_JOBS, COVERQ_FORMAT.
SettingLayer read_environment();

/// Flags win over the environment, which wins over the config file.
/// Throws ParseError naming the offending source for bad values.
Settings resolve_settings(const SettingLayer& flags, const SettingLayer& env,
                          const SettingLayer& file);

}  // namespace coverq::cli
