#include "cam/model_loader.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include <algorithm>
#include <optional>

#include <rapidjson/error/en.h>
#include <rapidjson/reader.h>

namespace cam {
namespace {

// Minimal DOM that remembers where each value and key starts in the text.
struct JsonValue;

struct JsonMember {
  std::string key;
  std::size_t key_offset = 0;
  std::unique_ptr<JsonValue> value;
};

struct JsonValue {
  enum class Type { Null, Bool, Integer, Number, String, Array, Object };

  Type type = Type::Null;
  bool boolean = false;
  bool integer_overflow = false;  // integer beyond int64 range
  std::int64_t integer = 0;
  std::string string;
  std::vector<JsonValue> items;
  std::vector<JsonMember> members;
  std::size_t offset = 0;
};

std::string_view type_name(JsonValue::Type t) {
  switch (t) {
    case JsonValue::Type::Null:
      return "null";
    case JsonValue::Type::Bool:
      return "boolean";
    case JsonValue::Type::Integer:
    case JsonValue::Type::Number:
      return "number";
    case JsonValue::Type::String:
      return "string";
    case JsonValue::Type::Array:
      return "array";
    case JsonValue::Type::Object:
      return "object";
  }
  return "value";
}

constexpr int kMaxDepth = 64;

// Read-only input stream for rapidjson. Unlike rapidjson's own string
// stream it is not copied into parser-local state, so Tell() is current
// whenever a handler runs.
class TrackingStream {
 public:
  using Ch = char;

  explicit TrackingStream(std::string_view text) : text_(text) {}

  Ch Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  Ch Take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  std::size_t Tell() const { return pos_; }

  Ch* PutBegin() { return nullptr; }
  void Put(Ch) {}
  void Flush() {}
  std::size_t PutEnd(Ch*) { return 0; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class DomBuilder : public rapidjson::BaseReaderHandler<rapidjson::UTF8<>, DomBuilder> {
 public:
  DomBuilder(std::string_view text, const TrackingStream& stream)
      : text_(text), stream_(stream) {}

  bool Null() { return scalar(JsonValue{}); }
  bool Bool(bool b) {
    JsonValue v;
    v.type = JsonValue::Type::Bool;
    v.boolean = b;
    return scalar(std::move(v));
  }
  bool Int(int i) { return Int64(i); }
  bool Uint(unsigned u) { return Int64(u); }
  bool Int64(std::int64_t i) {
    JsonValue v;
    v.type = JsonValue::Type::Integer;
    v.integer = i;
    return scalar(std::move(v));
  }
  bool Uint64(std::uint64_t u) {
    JsonValue v;
    v.type = JsonValue::Type::Integer;
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      v.integer_overflow = true;
    } else {
      v.integer = static_cast<std::int64_t>(u);
    }
    return scalar(std::move(v));
  }
  bool Double(double) {
    JsonValue v;
    v.type = JsonValue::Type::Number;
    return scalar(std::move(v));
  }
  bool String(const char* str, rapidjson::SizeType length, bool) {
    JsonValue v;
    v.type = JsonValue::Type::String;
    v.string.assign(str, length);
    return scalar(std::move(v), string_start());
  }
  bool StartObject() { return open(JsonValue::Type::Object); }
  bool StartArray() { return open(JsonValue::Type::Array); }
  bool EndObject(rapidjson::SizeType) { return close(); }
  bool EndArray(rapidjson::SizeType) { return close(); }
  bool Key(const char* str, rapidjson::SizeType length, bool) {
    JsonValue* obj = stack_.back();
    obj->members.push_back(JsonMember{std::string(str, length), string_start(), nullptr});
    return true;
  }

  bool too_deep() const { return too_deep_; }
  JsonValue take_root() { return std::move(root_); }

 private:
  // Walks back from the reader's position to the opening quote of the
  // string just consumed.
  std::size_t string_start() const {
    std::size_t i = stream_.Tell();
    if (i == 0) return 0;
    --i;  // closing quote
    while (i > 0) {
      --i;
      if (text_[i] != '"') continue;
      std::size_t backslashes = 0;
      for (std::size_t j = i; j > 0 && text_[j - 1] == '\\'; --j) ++backslashes;
      if (backslashes % 2 == 0) return i;
    }
    return i;
  }

  // Start of the number or literal just consumed.
  std::size_t bare_start() const {
    std::size_t i = stream_.Tell();
    while (i > 0) {
      const char c = text_[i - 1];
      const bool part = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        c == '.' || c == '+' || c == '-';
      if (!part) break;
      --i;
    }
    return i;
  }

  JsonValue* place(JsonValue v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return &root_;
    }
    JsonValue* parent = stack_.back();
    if (parent->type == JsonValue::Type::Array) {
      parent->items.push_back(std::move(v));
      return &parent->items.back();
    }
    parent->members.back().value = std::make_unique<JsonValue>(std::move(v));
    return parent->members.back().value.get();
  }

  bool scalar(JsonValue v) { return scalar(std::move(v), bare_start()); }
  bool scalar(JsonValue v, std::size_t offset) {
    v.offset = offset;
    place(std::move(v));
    return true;
  }

  bool open(JsonValue::Type type) {
    if (static_cast<int>(stack_.size()) >= kMaxDepth) {
      too_deep_ = true;
      return false;
    }
    JsonValue v;
    v.type = type;
    // The iterative reader announces a container before consuming its
    // opening bracket.
    const std::size_t at = stream_.Tell();
    v.offset = at < text_.size() && (text_[at] == '{' || text_[at] == '[') ? at : at - 1;
    stack_.push_back(place(std::move(v)));
    return true;
  }

  bool close() {
    stack_.pop_back();
    return true;
  }

  std::string_view text_;
  const TrackingStream& stream_;
  JsonValue root_;
  std::vector<JsonValue*> stack_;
  bool too_deep_ = false;
};

class ModelReader {
 public:
  ModelReader(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {
    // Line starts for offset -> line/column conversion.
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  ParseResult run() {
    TrackingStream stream(text_);
    DomBuilder builder(text_, stream);
    rapidjson::Reader reader;
    constexpr unsigned kFlags = rapidjson::kParseIterativeFlag | rapidjson::kParseValidateEncodingFlag;
    const rapidjson::ParseResult ok = reader.Parse<kFlags>(stream, builder);
    if (!ok) {
      const std::string message = builder.too_deep()
                                      ? "JSON nesting is too deep"
                                      : std::string("invalid JSON: ") + rapidjson::GetParseError_En(ok.Code());
      diagnose(Severity::Error, ok.Offset(), message);
      return std::move(result_);
    }
    // rapidjson reads NUL as end of input.
    if (const auto nul = text_.find('\0'); nul != std::string_view::npos) {
      diagnose(Severity::Error, nul, "invalid JSON: embedded NUL byte");
      return std::move(result_);
    }
    const JsonValue root = builder.take_root();
    read_document(root);
    return std::move(result_);
  }

 private:
  struct Position {
    int line;
    int column;
  };

  Position position(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line_index = static_cast<std::size_t>(it - line_starts_.begin()) - 1;
    return {static_cast<int>(line_index + 1),
            static_cast<int>(offset - line_starts_[line_index] + 1)};
  }

  void diagnose(Severity severity, std::size_t offset, std::string message) {
    const Position p = position(offset);
    result_.diagnostics.push_back(Diagnostic{severity, std::move(message), file_, p.line, p.column});
  }

  // Collects object members by key, reporting duplicates and unknown keys.
  struct Fields {
    std::vector<const JsonMember*> found;
    bool ok = true;
    const JsonMember* get(std::string_view key) const {
      for (const JsonMember* m : found) {
        if (m->key == key) return m;
      }
      return nullptr;
    }
  };

  Fields fields(const JsonValue& obj, const std::string& path,
                std::initializer_list<std::string_view> known) {
    Fields out;
    std::set<std::string> seen;
    for (const JsonMember& m : obj.members) {
      if (!seen.insert(m.key).second) {
        diagnose(Severity::Error, m.key_offset, prefix(path) + "duplicate key '" + m.key + "'");
        out.ok = false;
        continue;
      }
      bool is_known = false;
      for (auto k : known) is_known = is_known || k == m.key;
      if (!is_known) {
        diagnose(Severity::Warning, m.key_offset, prefix(path) + "unknown key '" + m.key + "' ignored");
        continue;
      }
      out.found.push_back(&m);
    }
    return out;
  }

  static std::string prefix(const std::string& path) { return path.empty() ? "" : path + ": "; }

  std::string join(const std::string& path, std::string_view key) const {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }

  bool expect_type(const JsonMember& m, const std::string& path, JsonValue::Type type) {
    if (m.value->type == type) return true;
    diagnose(Severity::Error, m.key_offset,
             join(path, m.key) + ": expected " + std::string(type_name(type)) + ", found " +
                 std::string(type_name(m.value->type)));
    return false;
  }

  // Reads a required enumerated string field.
  template <typename T, typename Parse>
  std::optional<T> read_enum(const Fields& f, const JsonValue& obj, const std::string& path,
                             std::string_view key, Parse parse, std::string_view allowed) {
    const JsonMember* m = f.get(key);
    if (!m) {
      diagnose(Severity::Error, obj.offset, prefix(path) + "missing required key '" + std::string(key) + "'");
      return std::nullopt;
    }
    if (!expect_type(*m, path, JsonValue::Type::String)) return std::nullopt;
    auto v = parse(m->value->string);
    if (!v) {
      diagnose(Severity::Error, m->key_offset,
               join(path, key) + ": invalid value '" + m->value->string + "' (expected " +
                   std::string(allowed) + ")");
    }
    return v;
  }

  std::optional<std::string> read_name(const Fields& f, const JsonValue& obj, const std::string& path,
                                       bool (*valid)(std::string_view), std::string_view what) {
    const JsonMember* m = f.get("name");
    if (!m) {
      diagnose(Severity::Error, obj.offset, prefix(path) + "missing required key 'name'");
      return std::nullopt;
    }
    if (!expect_type(*m, path, JsonValue::Type::String)) return std::nullopt;
    if (!valid(m->value->string)) {
      diagnose(Severity::Error, m->key_offset,
               join(path, "name") + ": '" + m->value->string + "' is not a valid " + std::string(what));
      return std::nullopt;
    }
    return m->value->string;
  }

  void read_document(const JsonValue& root) {
    if (root.type != JsonValue::Type::Object) {
      diagnose(Severity::Error, root.offset, "document root must be an object");
      return;
    }
    Fields f = fields(root, "", {"classes"});
    const JsonMember* classes = f.get("classes");
    if (!classes) {
      diagnose(Severity::Error, root.offset, "missing required key 'classes'");
      return;
    }
    if (!expect_type(*classes, "", JsonValue::Type::Array)) return;

    std::set<std::string> seen;
    for (std::size_t i = 0; i < classes->value->items.size(); ++i) {
      read_class(classes->value->items[i], "classes[" + std::to_string(i) + "]", seen);
    }
  }

  void read_class(const JsonValue& obj, const std::string& path, std::set<std::string>& seen) {
    if (obj.type != JsonValue::Type::Object) {
      diagnose(Severity::Error, obj.offset, path + ": expected object, found " +
                                                std::string(type_name(obj.type)));
      return;
    }
    const std::size_t errors_before = error_count();
    Fields f = fields(obj, path, {"name", "members", "bases", "friend_count"});

    ClassDecl decl;
    const Position where = position(obj.offset);
    decl.location = SourceLocation{file_, where.line, where.column};
    const auto name = read_name(f, obj, path, &is_identifier, "class name");
    if (name) decl.name = *name;

    if (const JsonMember* m = f.get("members"); m && expect_type(*m, path, JsonValue::Type::Array)) {
      for (std::size_t i = 0; i < m->value->items.size(); ++i) {
        read_member(m->value->items[i], join(path, "members[" + std::to_string(i) + "]"), decl);
      }
    }
    if (const JsonMember* m = f.get("bases"); m && expect_type(*m, path, JsonValue::Type::Array)) {
      for (std::size_t i = 0; i < m->value->items.size(); ++i) {
        read_base(m->value->items[i], join(path, "bases[" + std::to_string(i) + "]"), decl);
      }
    }
    if (const JsonMember* m = f.get("friend_count");
        m && expect_type(*m, path, JsonValue::Type::Integer)) {
      if (m->value->integer_overflow || m->value->integer < 0) {
        diagnose(Severity::Error, m->key_offset,
                 join(path, "friend_count") + ": must be a non-negative 64-bit integer");
      } else {
        decl.friend_count = m->value->integer;
      }
    }

    if (error_count() != errors_before || !f.ok) return;
    if (!seen.insert(decl.name).second) {
      diagnose(Severity::Error, f.get("name")->key_offset,
               join(path, "name") + ": duplicate class '" + decl.name + "'");
      return;
    }
    if (auto problem = validate(decl)) {
      diagnose(Severity::Error, obj.offset, path + ": " + *problem);
      return;
    }
    result_.classes.push_back(std::move(decl));
  }

  void read_member(const JsonValue& obj, const std::string& path, ClassDecl& decl) {
    if (obj.type != JsonValue::Type::Object) {
      diagnose(Severity::Error, obj.offset, path + ": expected object");
      return;
    }
    Fields f = fields(obj, path, {"name", "kind", "visibility"});
    const auto name = read_name(f, obj, path, &is_member_name, "member name");
    const auto kind = read_enum<MemberKind>(f, obj, path, "kind", parse_member_kind,
                                            "variable or function");
    const auto vis = read_enum<Visibility>(f, obj, path, "visibility", parse_visibility,
                                           "public, private or protected");
    if (name && kind && vis) decl.members.push_back(Member{*name, *kind, *vis});
  }

  void read_base(const JsonValue& obj, const std::string& path, ClassDecl& decl) {
    if (obj.type != JsonValue::Type::Object) {
      diagnose(Severity::Error, obj.offset, path + ": expected object");
      return;
    }
    Fields f = fields(obj, path, {"name", "mode"});
    const auto name = read_name(f, obj, path, &is_identifier, "base class name");
    const auto mode = read_enum<Visibility>(f, obj, path, "mode", parse_visibility,
                                            "public, private or protected");
    if (name && mode) decl.bases.push_back(BaseSpec{*name, *mode});
  }

  std::size_t error_count() const {
    std::size_t n = 0;
    for (const auto& d : result_.diagnostics) n += d.severity == Severity::Error ? 1 : 0;
    return n;
  }

  std::string_view text_;
  std::string file_;
  std::vector<std::size_t> line_starts_;
  ParseResult result_;
};

}  // namespace

ParseResult load_model(std::string_view text, const std::string& file) {
  return ModelReader(text, file).run();
}

}  // namespace cam
