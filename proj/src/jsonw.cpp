#include "skeweig/jsonw.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace skeweig {

std::string format_real17(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("JSON reals must be finite");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    std::string s = buf;
    // keep a decimal form so parsers read a double back (and -0 stays -0.0)
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

JsonValue& JsonValue::operator[](const std::string& key) {
    if (kind_ == Kind::null) kind_ = Kind::object;
    if (kind_ != Kind::object) throw std::logic_error("JsonValue: not an object");
    for (auto& kv : obj_)
        if (kv.first == key) return kv.second;
    obj_.emplace_back(key, JsonValue());
    return obj_.back().second;
}

void JsonValue::push_back(JsonValue v) {
    if (kind_ == Kind::null) kind_ = Kind::array;
    if (kind_ != Kind::array) throw std::logic_error("JsonValue: not an array");
    arr_.push_back(std::move(v));
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

void JsonValue::write(std::string& out) const {
    switch (kind_) {
        case Kind::null: out += "null"; break;
        case Kind::boolean: out += bool_ ? "true" : "false"; break;
        case Kind::integer: out += std::to_string(int_); break;
        case Kind::real: out += format_real17(real_); break;
        case Kind::string: write_escaped(out, str_); break;
        case Kind::array: {
            out += '[';
            for (std::size_t i = 0; i < arr_.size(); ++i) {
                if (i) out += ',';
                arr_[i].write(out);
            }
            out += ']';
            break;
        }
        case Kind::object: {
            out += '{';
            for (std::size_t i = 0; i < obj_.size(); ++i) {
                if (i) out += ',';
                write_escaped(out, obj_[i].first);
                out += ':';
                obj_[i].second.write(out);
            }
            out += '}';
            break;
        }
    }
}

std::string JsonValue::dump() const {
    std::string out;
    write(out);
    return out;
}

}  // namespace skeweig
