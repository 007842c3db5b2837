#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace sl2lab {

/// Minimal insertion-ordered JSON value for record output. Doubles are
/// rendered with 17 significant digits so that equal values serialize to
/// identical bytes on every run.
class JsonValue {
public:
  using Array = std::vector<JsonValue>;
  using Object = std::vector<std::pair<std::string, JsonValue>>;

  JsonValue() : v_(nullptr) {}
  JsonValue(std::nullptr_t) : v_(nullptr) {}
  JsonValue(bool b) : v_(b) {}
  JsonValue(int i) : v_((int64_t)i) {}
  JsonValue(uint32_t i) : v_((uint64_t)i) {}
  JsonValue(int64_t i) : v_(i) {}
  JsonValue(uint64_t i) : v_(i) {}
  JsonValue(double d) : v_(d) {}
  JsonValue(const char* s) : v_(std::string(s)) {}
  JsonValue(std::string s) : v_(std::move(s)) {}
  JsonValue(Array a) : v_(std::move(a)) {}
  JsonValue(Object o) : v_(std::move(o)) {}

  static JsonValue object() { return JsonValue(Object{}); }
  static JsonValue array() { return JsonValue(Array{}); }

  JsonValue& set(const std::string& key, JsonValue value) {
    std::get<Object>(v_).emplace_back(key, std::move(value));
    return *this;
  }
  JsonValue& push(JsonValue value) {
    std::get<Array>(v_).push_back(std::move(value));
    return *this;
  }

  bool is_object() const { return std::holds_alternative<Object>(v_); }

  std::string dump() const {
    std::string out;
    dump_to(out);
    return out;
  }

private:
  void dump_to(std::string& out) const {
    struct Visitor {
      std::string& out;
      void operator()(std::nullptr_t) const { out += "null"; }
      void operator()(bool b) const { out += b ? "true" : "false"; }
      void operator()(int64_t i) const { out += std::to_string(i); }
      void operator()(uint64_t i) const { out += std::to_string(i); }
      void operator()(double d) const {
        if (d != d || d > 1.7e308 || d < -1.7e308) {
          out += "null";
          return;
        }
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", d);
        out += buf;
      }
      void operator()(const std::string& s) const {
        out += '"';
        for (const char c : s) {
          switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
              if ((unsigned char)c < 0x20) {
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
      void operator()(const Array& a) const {
        out += '[';
        for (size_t i = 0; i < a.size(); ++i) {
          if (i) out += ',';
          a[i].dump_to(out);
        }
        out += ']';
      }
      void operator()(const Object& o) const {
        out += '{';
        for (size_t i = 0; i < o.size(); ++i) {
          if (i) out += ',';
          Visitor{out}(o[i].first);
          out += ':';
          o[i].second.dump_to(out);
        }
        out += '}';
      }
    };
    std::visit(Visitor{out}, v_);
  }

  std::variant<std::nullptr_t, bool, int64_t, uint64_t, double, std::string, Array, Object> v_;
};

}  // namespace sl2lab
