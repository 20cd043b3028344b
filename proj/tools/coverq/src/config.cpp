#include "coverq_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "coverq/error.hpp"
#include "coverq/power.hpp"

namespace coverq::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_count(const std::string& value, const char* key, const char* source) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw ParseError(0, std::string(source) + ": " + key + " must be a non-negative integer, got '" +
                            value + "'");
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  throw ParseError(0, "unknown format '" + std::string(name) + "' (text, json, tsv)");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Text:
      return "text";
    case Format::Json:
      return "json";
    case Format::Tsv:
      return "tsv";
  }
  return "text";
}

Settings default_settings() {
  return {kDefaultMaxPairOps, std::max(1u, std::thread::hardware_concurrency()), Format::Text};
}

SettingLayer parse_config(std::string_view text) {
  SettingLayer out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(number, "expected key = value");
    const auto key = trim(std::string_view(line).substr(0, eq));
    auto value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "max_pairs") {
      out.max_pairs = value;
    } else if (key == "jobs") {
      out.jobs = value;
    } else if (key == "format") {
      out.format = value;
    } else {
      throw ParseError(number, "unknown key '" + key + "' (max_pairs, jobs, format)");
    }
  }
  return out;
}

SettingLayer read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

SettingLayer read_environment() {
  auto get = [](const char* name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name)) return std::string(v);
    return std::nullopt;
  };
  return {get("COVERQ_MAX_PAIRS"), get("COVERQ_JOBS"), get("COVERQ_FORMAT")};
}

Settings resolve_settings(const SettingLayer& flags, const SettingLayer& env,
                          const SettingLayer& file) {
  Settings out = default_settings();
  // Lowest precedence first so later layers overwrite.
  const std::pair<const SettingLayer*, const char*> layers[] = {
      {&file, "config file"}, {&env, "environment"}, {&flags, "command line"}};
  for (const auto& [layer, source] : layers) {
    if (layer->max_pairs) out.max_pairs = parse_count(*layer->max_pairs, "max_pairs", source);
    if (layer->jobs) {
      out.jobs = parse_count(*layer->jobs, "jobs", source);
      if (out.jobs == 0) throw ParseError(0, std::string(source) + ": jobs must be at least 1");
    }
    if (layer->format) {
      try {
        out.format = parse_format(*layer->format);
      } catch (const ParseError& e) {
        throw ParseError(0, std::string(source) + ": " + e.what());
      }
    }
  }
  return out;
}

}  // namespace coverq::cli
