#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace kadv::cli {

/// Inconsistent or unusable configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Command-line tokens with the contents of a `--config FILE` spliced in.
///
/// The file holds flat `key=value` lines (`#` starts a comment). Every line
/// becomes `--key=value`, placed right after the subcommand path and before
/// the user's own flags, so flags given on the command line win.
std::vector<std::string> expand_config(int argc, char** argv);

/// Writes `key=value` for every option of `command` (explicit values and
/// defaults), preceded by a comment naming the subcommand path. Feeding the
/// file back through `--config` reproduces the run.
void write_config_echo(const CLI::App& command, const std::filesystem::path& file);

/// "40,80,160" -> {40, 80, 160}.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

/// "5/2" -> {5, 2}; a plain integer k is k/1.
std::pair<int, int> parse_ratio(const std::string& text);

} // namespace kadv::cli
