#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace irumap {

// Flat `key=value` text: one pair per line, `#` starts a comment line, blank
// lines ignored, keys unique. Emission preserves insertion order so output
// files are byte-deterministic.
class KeyValueDoc {
public:
    KeyValueDoc() = default;
    explicit KeyValueDoc(std::string origin) : origin_(std::move(origin)) {}

    static KeyValueDoc parse(std::string_view text, const std::string& origin);
    static KeyValueDoc load(const std::filesystem::path& path);

    bool has(std::string_view key) const;
    const std::string& get(std::string_view key) const;  // ParseError when absent
    std::string get_or(std::string_view key, std::string fallback) const;
    double get_double(std::string_view key) const;
    double get_double_or(std::string_view key, double fallback) const;
    std::size_t get_index_or(std::string_view key, std::size_t fallback) const;

    void set(std::string key, std::string value);  // insert or overwrite in place
    void set_double(std::string key, double value);
    void set_index(std::string key, std::size_t value);

    std::string to_text() const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    const std::string& origin() const { return origin_; }

private:
    const std::string* find(std::string_view key) const;
    double parse_double_value(std::string_view key, const std::string& raw) const;

    std::vector<std::pair<std::string, std::string>> entries_;
    std::string origin_ = "key-value";
};

}  // namespace irumap
