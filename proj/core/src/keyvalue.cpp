#include "irumap/keyvalue.hpp"

#include "irumap/errors.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

KeyValueDoc KeyValueDoc::parse(std::string_view text, const std::string& origin) {
    KeyValueDoc doc(origin);
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(origin + ":" + std::to_string(line_no) +
                             ": expected 'key=value', got '" + std::string(line) + "'");
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty())
            throw ParseError(origin + ":" + std::to_string(line_no) + ": empty key");
        if (doc.has(key))
            throw ParseError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key +
                             "'");
        doc.entries_.emplace_back(key, std::string(trim(line.substr(eq + 1))));
    }
    return doc;
}

KeyValueDoc KeyValueDoc::load(const std::filesystem::path& path) {
    return parse(read_text_file(path), path.string());
}

const std::string* KeyValueDoc::find(std::string_view key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

bool KeyValueDoc::has(std::string_view key) const { return find(key) != nullptr; }

const std::string& KeyValueDoc::get(std::string_view key) const {
    const std::string* v = find(key);
    if (!v)
        throw ParseError(origin_ + ": missing required key '" + std::string(key) + "'");
    return *v;
}

std::string KeyValueDoc::get_or(std::string_view key, std::string fallback) const {
    const std::string* v = find(key);
    return v ? *v : std::move(fallback);
}

double KeyValueDoc::parse_double_value(std::string_view key, const std::string& raw) const {
    double out = 0.0;
    if (!parse_double(raw, out))
        throw ParseError(origin_ + ": key '" + std::string(key) + "': invalid number '" + raw +
                         "'");
    return out;
}

double KeyValueDoc::get_double(std::string_view key) const {
    return parse_double_value(key, get(key));
}

double KeyValueDoc::get_double_or(std::string_view key, double fallback) const {
    const std::string* v = find(key);
    return v ? parse_double_value(key, *v) : fallback;
}

std::size_t KeyValueDoc::get_index_or(std::string_view key, std::size_t fallback) const {
    const std::string* v = find(key);
    if (!v) return fallback;
    std::size_t out = 0;
    if (!parse_index(*v, out))
        throw ParseError(origin_ + ": key '" + std::string(key) + "': invalid count '" + *v +
                         "'");
    return out;
}

void KeyValueDoc::set(std::string key, std::string value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

void KeyValueDoc::set_double(std::string key, double value) {
    set(std::move(key), format_double(value));
}

void KeyValueDoc::set_index(std::string key, std::size_t value) {
    set(std::move(key), std::to_string(value));
}

std::string KeyValueDoc::to_text() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

}  // namespace irumap
