#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rcyclic::cli {

/// Line-oriented report: `key: value` lines grouped under optional `[section]` headers.
/// Rendering is deterministic; the order of insertion is the order of output.
class RunReport {
 public:
  void section(std::string name);
  void add(std::string key, std::string value);
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  void note(std::string line);

  std::string render() const;

 private:
  struct Line {
    enum class Kind { Section, Field, Note } kind;
    std::string key;
    std::string value;
  };
  std::vector<Line> lines_;
};

}  // namespace rcyclic::cli
