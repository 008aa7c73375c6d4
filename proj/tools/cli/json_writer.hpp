#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gboson::cli {

/// Minimal streaming JSON writer. Doubles are printed with 17 significant
/// digits; non-finite values become null.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  /// Emits a key inside an object; the next call writes its value.
  JsonWriter& key(std::string_view name);

  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();

  template <class T>
  JsonWriter& field(std::string_view name, const T& v) {
    key(name);
    return value(v);
  }

  /// The document with a trailing newline; all scopes must be closed.
  std::string str() const;

  static std::string format_double(double v);
  static std::string escape(std::string_view s);

 private:
  void before_value();
  void newline();

  std::string out_;
  // Per open scope: number of items written so far.
  std::vector<int> counts_;
  bool after_key_ = false;
};

}  // namespace gboson::cli
