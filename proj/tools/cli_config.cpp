#include "cli_config.hpp"

#include <fstream>
#include <sstream>

namespace kadv::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

std::vector<std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::vector<std::string> tokens;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError(path + ":" + std::to_string(number) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        if (key == "config") throw ConfigError(path + ": nested config files are not supported");
        tokens.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
    }
    return tokens;
}

} // namespace

std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            path = args[k + 1];
        } else if (args[k].rfind("--config=", 0) == 0) {
            path = args[k].substr(9);
        }
    }
    if (path.empty()) return args;

    std::size_t insert_at = 0;
    while (insert_at < args.size() && !args[insert_at].empty() && args[insert_at][0] != '-') {
        ++insert_at;
    }
    const auto tokens = read_config(path);
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(insert_at), tokens.begin(), tokens.end());
    return args;
}

void write_config_echo(const CLI::App& command, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw ConfigError("cannot write " + file.string());
    std::string path;
    for (const CLI::App* app = &command; app->get_parent() != nullptr; app = app->get_parent()) {
        path = app->get_name() + (path.empty() ? "" : " " + path);
    }
    out << "# kadv " << path << '\n';
    for (const CLI::Option* opt : command.get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "config" || name == "out") continue;
        if (opt->get_expected_min() == 0) {
            const bool on = opt->count() > 0 && opt->as<bool>();
            out << name << '=' << (on ? "true" : "false") << '\n';
            continue;
        }
        out << name << '=' << (opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str())
            << '\n';
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const auto& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ConfigError("not an integer: '" + part + "'");
        }
    }
    if (values.empty()) throw ConfigError("empty list");
    return values;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ConfigError("not a number: '" + part + "'");
        }
    }
    if (values.empty()) throw ConfigError("empty list");
    return values;
}

std::pair<int, int> parse_ratio(const std::string& text) {
    const auto slash = text.find('/');
    const auto num = parse_int_list(text.substr(0, slash));
    const auto den = slash == std::string::npos ? std::vector<int>{1}
                                                : parse_int_list(text.substr(slash + 1));
    if (num.size() != 1 || den.size() != 1 || num[0] <= 0 || den[0] <= 0) {
        throw ConfigError("expected a positive ratio p/q, got '" + text + "'");
    }
    return {num[0], den[0]};
}

} // namespace kadv::cli
