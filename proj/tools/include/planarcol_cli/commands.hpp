#pragma once

// Subcommands of the planarcol tool, callable without a process so the
// test suite can exercise them directly.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace planarcol::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_contradiction = 3;

struct Report {
    std::string command;
    std::string input_digest;  // sha256 of the input bytes (or of the scan parameters)
    std::string verdict;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    int exit_code = exit_ok;
    std::vector<std::string> lines;  // text rendering body
};

enum class Format { Text, Machine };

auto render(const Report& report, Format format) -> std::string;

struct Input {
    std::string name;
    std::string content;
};

/// Reads a file; throws planarcol::Error(InvalidArgument) when unreadable.
auto load_input(const std::string& path) -> Input;

auto sha256_hex(const std::string& bytes) -> std::string;

struct CommonOptions {
    std::optional<int> d;  // must match the file header when set
    int cap = 24;          // vertex cap for cut and matching enumeration
};

auto cmd_check(const Input& in, const CommonOptions& opt) -> Report;
auto cmd_classify(const Input& in, const CommonOptions& opt) -> Report;
auto cmd_discharge(const Input& in, const CommonOptions& opt) -> Report;
auto cmd_colour(const Input& in, const CommonOptions& opt) -> Report;

struct SwitchOptions {
    std::vector<int> square;  // u v w x
    std::vector<int> path;    // x u v y
    std::optional<std::string> out;
};

auto cmd_switch(const Input& in, const CommonOptions& opt, const SwitchOptions& sw) -> Report;

struct ScanOptions {
    std::vector<std::string> bases;       // empty means all standard bases
    std::vector<std::string> extra_files; // user targets whose graphs join the bases
    bool require_oddly_connected = true;
    int threads = 0;                      // 0 picks hardware concurrency
};

auto cmd_scan(const CommonOptions& opt, const ScanOptions& scan) -> Report;

}  // namespace planarcol::cli
