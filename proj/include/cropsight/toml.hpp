#pragma once

// Minimal TOML subset: [tables], key = value with strings, integers, floats,
// booleans and (possibly nested) arrays, plus # comments. Covers the three
// config files the CLI reads; not a general TOML implementation.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cropsight::toml {

struct Value;
using Array = std::vector<Value>;

struct Value {
    std::variant<std::int64_t, double, bool, std::string, Array> v;

    bool is_int() const { return std::holds_alternative<std::int64_t>(v); }
    bool is_float() const { return std::holds_alternative<double>(v); }
    bool is_bool() const { return std::holds_alternative<bool>(v); }
    bool is_string() const { return std::holds_alternative<std::string>(v); }
    bool is_array() const { return std::holds_alternative<Array>(v); }

    std::int64_t as_int() const {
        if (is_int()) return std::get<std::int64_t>(v);
        throw std::runtime_error("toml: expected integer");
    }
    double as_float() const {
        if (is_float()) return std::get<double>(v);
        if (is_int()) return static_cast<double>(std::get<std::int64_t>(v));
        throw std::runtime_error("toml: expected number");
    }
    bool as_bool() const {
        if (is_bool()) return std::get<bool>(v);
        throw std::runtime_error("toml: expected boolean");
    }
    const std::string& as_string() const {
        if (is_string()) return std::get<std::string>(v);
        throw std::runtime_error("toml: expected string");
    }
    const Array& as_array() const {
        if (is_array()) return std::get<Array>(v);
        throw std::runtime_error("toml: expected array");
    }
};

using Table = std::map<std::string, Value>;

class Document {
  public:
    Table root;
    std::map<std::string, Table> tables;

    const Table* table(const std::string& name) const {
        if (name.empty()) return &root;
        auto it = tables.find(name);
        return it == tables.end() ? nullptr : &it->second;
    }

    const Value* find(const std::string& table_name, const std::string& key) const {
        const Table* t = table(table_name);
        if (!t) return nullptr;
        auto it = t->find(key);
        return it == t->end() ? nullptr : &it->second;
    }

    std::int64_t get_int(const std::string& t, const std::string& k, std::int64_t dflt) const {
        const Value* v = find(t, k);
        return v ? v->as_int() : dflt;
    }
    double get_float(const std::string& t, const std::string& k, double dflt) const {
        const Value* v = find(t, k);
        return v ? v->as_float() : dflt;
    }
    bool get_bool(const std::string& t, const std::string& k, bool dflt) const {
        const Value* v = find(t, k);
        return v ? v->as_bool() : dflt;
    }
    std::string get_string(const std::string& t, const std::string& k, std::string dflt) const {
        const Value* v = find(t, k);
        return v ? v->as_string() : dflt;
    }
};

namespace detail {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t line = 1;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    char take() {
        char c = s[pos++];
        if (c == '\n') ++line;
        return c;
    }
    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("toml line " + std::to_string(line) + ": " + msg);
    }
};

inline Value parse_value(Cursor& c);

inline Value parse_array(Cursor& c) {
    Array arr;
    c.take(); // '['
    for (;;) {
        c.skip_ws();
        while (!c.done() && (c.peek() == '\n' || c.peek() == '\r')) {
            c.take();
            c.skip_ws();
        }
        if (c.done()) c.fail("unterminated array");
        if (c.peek() == ']') {
            c.take();
            break;
        }
        arr.push_back(parse_value(c));
        c.skip_ws();
        while (!c.done() && (c.peek() == '\n' || c.peek() == '\r')) {
            c.take();
            c.skip_ws();
        }
        if (!c.done() && c.peek() == ',') c.take();
    }
    return Value{std::move(arr)};
}

inline Value parse_value(Cursor& c) {
    c.skip_ws();
    if (c.done()) c.fail("expected value");
    const char first = c.peek();
    if (first == '[') return parse_array(c);
    if (first == '"') {
        c.take();
        std::string out;
        while (!c.done() && c.peek() != '"') {
            char ch = c.take();
            if (ch == '\\' && !c.done()) {
                char esc = c.take();
                switch (esc) {
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    default: c.fail("unsupported escape");
                }
            } else {
                out += ch;
            }
        }
        if (c.done()) c.fail("unterminated string");
        c.take();
        return Value{std::move(out)};
    }
    std::string tok;
    while (!c.done() && c.peek() != ',' && c.peek() != ']' && c.peek() != '\n' &&
           c.peek() != '\r' && c.peek() != '#' && c.peek() != ' ' && c.peek() != '\t')
        tok += c.take();
    if (tok == "true") return Value{true};
    if (tok == "false") return Value{false};
    if (tok.empty()) c.fail("empty value");
    const bool floaty = tok.find_first_of(".eE") != std::string::npos &&
                        tok.find("0x") != 0;
    try {
        if (!floaty) return Value{static_cast<std::int64_t>(std::stoll(tok))};
    } catch (...) {
        // fall through to float
    }
    try {
        return Value{std::stod(tok)};
    } catch (...) {
        c.fail("cannot parse value '" + tok + "'");
    }
}

} // namespace detail

inline Document parse(std::string_view text) {
    Document doc;
    detail::Cursor c{text};
    Table* current = &doc.root;
    while (!c.done()) {
        c.skip_ws();
        if (c.done()) break;
        const char ch = c.peek();
        if (ch == '\n' || ch == '\r') {
            c.take();
            continue;
        }
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') c.take();
            continue;
        }
        if (ch == '[') {
            c.take();
            std::string name;
            while (!c.done() && c.peek() != ']') name += c.take();
            if (c.done()) c.fail("unterminated table header");
            c.take();
            current = &doc.tables[name];
            continue;
        }
        std::string key;
        while (!c.done() && c.peek() != '=' && c.peek() != '\n') key += c.take();
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
        c.take();
        Value v = detail::parse_value(c);
        c.skip_ws();
        if (!c.done() && c.peek() == '#')
            while (!c.done() && c.peek() != '\n') c.take();
        (*current)[key] = std::move(v);
    }
    return doc;
}

inline Document read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace cropsight::toml
