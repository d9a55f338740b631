#include "report.hpp"

namespace rcyclic::cli {

void RunReport::section(std::string name) { lines_.push_back({Line::Kind::Section, std::move(name), {}}); }

void RunReport::add(std::string key, std::string value) {
  lines_.push_back({Line::Kind::Field, std::move(key), std::move(value)});
}

void RunReport::note(std::string line) { lines_.push_back({Line::Kind::Note, std::move(line), {}}); }

std::string RunReport::render() const {
  std::string out;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto& line = lines_[i];
    switch (line.kind) {
      case Line::Kind::Section:
        if (i) out += '\n';
        out += "[" + line.key + "]\n";
        break;
      case Line::Kind::Field: out += line.key + ": " + line.value + "\n"; break;
      case Line::Kind::Note: out += line.key + "\n"; break;
    }
  }
  return out;
}

}  // namespace rcyclic::cli
