#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace skeweig {

/// Minimal JSON document builder: keys keep insertion order and reals are
/// printed with 17 significant digits, so ordering and bit-exact round-trips
/// are under our control rather than a library's formatting policy.
class JsonValue {
public:
    enum class Kind { null, boolean, integer, real, string, array, object };

    JsonValue() : kind_(Kind::null) {}
    JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
    JsonValue(int i) : kind_(Kind::integer), int_(i) {}
    JsonValue(long i) : kind_(Kind::integer), int_(i) {}
    JsonValue(long long i) : kind_(Kind::integer), int_(i) {}
    JsonValue(std::uint64_t i) : kind_(Kind::integer), int_(static_cast<long long>(i)) {}
    JsonValue(double d) : kind_(Kind::real), real_(d) {}
    JsonValue(const char* s) : kind_(Kind::string), str_(s) {}
    JsonValue(std::string s) : kind_(Kind::string), str_(std::move(s)) {}

    static JsonValue array() {
        JsonValue v;
        v.kind_ = Kind::array;
        return v;
    }
    static JsonValue object() {
        JsonValue v;
        v.kind_ = Kind::object;
        return v;
    }

    Kind kind() const { return kind_; }

    /// Object access; inserts the key (null value) if missing.
    JsonValue& operator[](const std::string& key);
    void push_back(JsonValue v);

    /// Compact single-line document.
    std::string dump() const;

private:
    void write(std::string& out) const;

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double real_ = 0.0;
    std::string str_;
    std::vector<JsonValue> arr_;
    std::vector<std::pair<std::string, JsonValue>> obj_;
};

/// "%.17g" rendering used for every real in the JSON output.
std::string format_real17(double d);

}  // namespace skeweig
